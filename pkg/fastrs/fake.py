import random

from fastrs.engine.codec import corrupt, encode_systematic
from fastrs.models import ErrorPattern


def make_rng(seed=None):
    """Every generator below takes a random.Random so seeds stay reproducible."""
    return random.Random(seed)


def fake_symbol(code, rng, nonzero=False):
    low = 1 if nonzero else 0
    return rng.randint(low, code.field.size - 1)


def fake_data(code, rng):
    return [fake_symbol(code, rng) for i in range(code.params.k)]


def fake_positions(code, count, rng, unsafe=False):
    params = code.params
    low = 0 if unsafe else 2 * params.t
    return rng.sample(range(low, params.n), count)


def fake_pattern(code, count, rng, unsafe=False, positions=None):
    if positions is None:
        positions = fake_positions(code, count, rng, unsafe)
    return ErrorPattern({i: fake_symbol(code, rng, nonzero=True) for i in positions})


def fake_instance(code, count, rng, unsafe=False):
    """A random codeword, an error pattern of ``count`` symbols, and their sum."""
    codeword = encode_systematic(code, fake_data(code, rng))
    pattern = fake_pattern(code, count, rng, unsafe)
    return codeword, pattern, corrupt(code, codeword, pattern, unsafe=unsafe)
