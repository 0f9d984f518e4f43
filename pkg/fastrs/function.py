import re

from fastrs.errors import FormatError
from fastrs.models import ErrorPattern

HEADER = re.compile(rb'^RSFD1 m=(\d+) mu=(\d+) len=(\d+)$')


def symbol_width(m):
    return 1 if m <= 8 else 2


def dump_symbols(m, mu, symbols):
    """Serialize a word as a SymbolFile: header line, then raw little-endian symbols."""
    width = symbol_width(m)
    body = bytearray()
    for value in symbols:
        if value >> m:
            raise FormatError('symbol %#x does not fit in %d bits' % (value, m))
        body += value.to_bytes(width, 'little')
    return b'RSFD1 m=%d mu=%d len=%d\n' % (m, mu, len(symbols)) + bytes(body)


def load_symbols(blob):
    """Parse a SymbolFile; returns (m, mu, symbols)."""
    head, sep, body = blob.partition(b'\n')
    match = HEADER.match(head.strip())
    if not sep or match is None:
        raise FormatError('missing or malformed RSFD1 header')
    m, mu, count = (int(g) for g in match.groups())
    if not 2 <= m <= 16:
        raise FormatError('header declares unsupported m=%d' % m)
    width = symbol_width(m)
    if len(body) != count * width:
        raise FormatError('header says %d symbols, body holds %d bytes' % (count, len(body)))
    symbols = [int.from_bytes(body[i:i + width], 'little') for i in range(0, len(body), width)]
    if any(value >> m for value in symbols):
        raise FormatError('symbol out of range for m=%d' % m)
    return m, mu, symbols


def dump_pattern(pattern):
    return ''.join('%d %x\n' % (index, value) for index, value in sorted(pattern.entries.items()))


def load_pattern(text):
    entries = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        try:
            index, value = line.split()
            index, value = int(index), int(value, 16)
        except ValueError:
            raise FormatError('line %d: expected "<index> <value-hex>"' % lineno)
        if index in entries:
            raise FormatError('line %d: index %d repeated' % (lineno, index))
        if value == 0:
            raise FormatError('line %d: error value must be nonzero' % lineno)
        entries[index] = value
    return ErrorPattern(entries)
