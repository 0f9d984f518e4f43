from fastrs import main

main()
