"""
    Counted arithmetic over GF(2^m).

    Elements are m-bit integers. Every multiplication goes through gf_mul so
    the caller's OpCounter sees it; callers skip the call altogether when one
    operand is a fixed table constant 0 or 1.
"""
import logging

from fastrs.errors import IndexOutOfRange, MalformedInput, UnknownField, ZeroInversion

logger = logging.getLogger(__name__)

REDUCTION_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


def clmul(a, b):
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a, modulus):
    deg = modulus.bit_length() - 1
    while a.bit_length() - 1 >= deg:
        a ^= modulus << (a.bit_length() - 1 - deg)
    return a


def is_irreducible(poly):
    """Trial division by every polynomial of degree 1 .. deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for divisor in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


class FieldCtx:

    def __init__(self, m, reduction_poly=None, basis=None):
        if not 2 <= m <= 16:
            raise UnknownField('m must lie in [2, 16], got %d' % m)
        if reduction_poly is None:
            reduction_poly = REDUCTION_POLYS[m]
        if reduction_poly.bit_length() - 1 != m:
            raise MalformedInput('reduction polynomial %#x has degree != %d' % (reduction_poly, m))
        if not is_irreducible(reduction_poly):
            raise MalformedInput('reduction polynomial %#x is reducible' % reduction_poly)
        self.m = m
        self.size = 1 << m
        self.reduction_poly = reduction_poly
        self._build_tables()

        if basis is None:
            self.basis = tuple(1 << j for j in range(m))
            self._index = None
        else:
            self.basis = tuple(basis)
            if len(self.basis) != m:
                raise MalformedInput('basis needs %d elements' % m)
            self._index = [None] * self.size
            for i in range(self.size):
                value = self._span(i)
                if self._index[value] is not None:
                    raise MalformedInput('basis is not linearly independent over GF(2)')
                self._index[value] = i

        # s_j(v_j), j = 0 .. m-1
        norms = []
        for j in range(m):
            norms.append(self._subspace(j, self.basis[j], norms))
        if not all(norms):
            raise MalformedInput('subspace normalizer vanished')
        self.subspace_norms = tuple(norms)
        logger.debug('GF(2^%d) ready, poly=%#x generator=%#x', m, reduction_poly, self.generator)

    def _build_tables(self):
        order = self.size - 1
        for candidate in range(2, self.size):
            exp = [0] * (2 * order)
            x = 1
            seen = True
            for i in range(order):
                exp[i] = x
                x = poly_mod(clmul(x, candidate), self.reduction_poly)
                if x == 1 and i < order - 1:
                    seen = False
                    break
            if seen:
                break
        else:  # m >= 2 always has a generator
            raise UnknownField('no primitive element found')
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        log = [0] * self.size
        for i in range(order):
            log[exp[i]] = i
        self.generator = candidate
        self.order = order
        self.exp = exp
        self.log = log

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def _span(self, i):
        value = 0
        j = 0
        while i:
            if i & 1:
                value ^= self.basis[j]
            i >>= 1
            j += 1
        return value

    def _subspace(self, j, x, norms):
        s = x
        for level in range(j):
            s = self._mul(s, s ^ norms[level])
        return s


def gf_add(a, b, ctr=None):
    if ctr is not None:
        ctr.add += 1
    return a ^ b


def gf_mul(ctx, a, b, ctr=None):
    if ctr is not None:
        ctr.mul += 1
    if a == 0 or b == 0:
        return 0
    return ctx.exp[ctx.log[a] + ctx.log[b]]


def gf_inv(ctx, a, ctr=None):
    if a == 0:
        raise ZeroInversion('zero has no inverse')
    if ctr is not None:
        ctr.inv += 1
    return ctx.exp[(ctx.order - ctx.log[a]) % ctx.order]


def gf_div(ctx, a, b, ctr=None):
    """a / b by log subtraction, tallied as one inversion."""
    if b == 0:
        raise ZeroInversion('division by zero')
    if ctr is not None:
        ctr.inv += 1
    if a == 0:
        return 0
    return ctx.exp[(ctx.log[a] - ctx.log[b]) % ctx.order]


def omega(ctx, i):
    if not 0 <= i < ctx.size:
        raise IndexOutOfRange('index %d outside [0, %d)' % (i, ctx.size))
    if ctx._index is None:
        return i
    return ctx._span(i)


def omega_index(ctx, value):
    if not 0 <= value < ctx.size:
        raise IndexOutOfRange('element %#x is not in GF(2^%d)' % (value, ctx.m))
    if ctx._index is None:
        return value
    return ctx._index[value]


def subspace_eval(ctx, j, x, ctr=None):
    if not 0 <= j <= ctx.m:
        raise IndexOutOfRange('subspace level %d outside [0, %d]' % (j, ctx.m))
    s = x
    for level in range(j):
        s = gf_mul(ctx, s, gf_add(s, ctx.subspace_norms[level], ctr), ctr)
    return s
