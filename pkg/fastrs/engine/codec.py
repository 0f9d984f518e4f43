import logging

from fastrs.engine.gf2m import FieldCtx, gf_add, gf_mul, omega
from fastrs.engine.lch import XbarCtx, lch_fft, lch_ifft
from fastrs.errors import LengthMismatch, MalformedInput
from fastrs.models import CodeParams

logger = logging.getLogger(__name__)


class RSCode:
    """An (n = 2^m, k = n - 2^mu) code with its field and LCH contexts."""

    def __init__(self, params, reduction_poly=None, basis=None, config=None):
        self.params = params
        self.field = FieldCtx(params.m, reduction_poly, basis)
        self.xctx = XbarCtx(self.field)
        self.config = dict(config or {})
        self.xctx.mono_rows(params.T)
        self.xctx.lch_rows(params.t + 1)

    @classmethod
    def from_sizes(cls, m, mu, t0=None, **kwargs):
        return cls(CodeParams(m, mu, t0), **kwargs)

    def __repr__(self):
        p = self.params
        return '<RSCode (%d,%d) t=%d t0=%d>' % (p.n, p.k, p.t, p.t0)


def _check_word(params, word):
    if len(word) != params.n:
        raise LengthMismatch('expected %d symbols, got %d' % (params.n, len(word)))


def encode_systematic(code, data, ctr=None):
    params = code.params
    if len(data) != params.k:
        raise LengthMismatch('expected %d data symbols, got %d' % (params.k, len(data)))
    T, mu = params.T, params.mu
    acc = [0] * T
    for c in range(1, params.block_count):
        block = data[(c - 1) * T:c * T]
        coeffs = lch_ifft(code.xctx, block, mu, omega(code.field, c * T), ctr)
        acc = [gf_add(a, b, ctr) for a, b in zip(acc, coeffs)]
    parity = lch_fft(code.xctx, acc, mu, 0, ctr)
    return parity + list(data)


def corrupt(code, codeword, pattern, unsafe=False):
    params = code.params
    _check_word(params, codeword)
    pattern.validate(params, unsafe=unsafe)
    received = list(codeword)
    for index, value in pattern.entries.items():
        received[index] ^= value
    return received


def accumulate_powers(code, word, count, ctr=None):
    """Σ_j word_j·ω_j^i for i < count, one running power per position."""
    field = code.field
    sums = [0] * count
    for j, symbol in enumerate(word):
        term = symbol
        point = omega(field, j)
        for i in range(count):
            if i:
                term = gf_mul(field, term, point, ctr)
            sums[i] = gf_add(sums[i], term, ctr)
    return sums


def parity_check(code, word):
    params = code.params
    _check_word(params, word)
    return not any(accumulate_powers(code, word, params.n - params.k))


def shorten(code, codeword):
    """Drop the pinned leading data positions of a full-length codeword."""
    params = code.params
    _check_word(params, codeword)
    cut = params.deleted
    if any(codeword[params.T:params.T + cut]):
        raise MalformedInput('pinned positions of a shortened codeword must be zero')
    return codeword[:params.T] + codeword[params.T + cut:]


def lengthen(code, word):
    params = code.params
    expected = params.n - params.deleted
    if len(word) != expected:
        raise LengthMismatch('expected %d symbols, got %d' % (expected, len(word)))
    return list(word[:params.T]) + [0] * params.deleted + list(word[params.T:])


def encode_shortened(code, data, ctr=None):
    params = code.params
    if len(data) != params.k - params.deleted:
        raise LengthMismatch('expected %d data symbols, got %d' % (params.k - params.deleted, len(data)))
    return shorten(code, encode_systematic(code, [0] * params.deleted + list(data), ctr))
