"""
    LCH polynomial basis and its additive FFT.

    X̄_i(x) is the product of the normalized subspace polynomials ŝ_j(x) over
    the set bits j of i.  Each ŝ_j is GF(2)-linear, so its value anywhere is
    the XOR of its values on the basis; that table is built once per context
    and reads are not counted.  The monomial expansion matrix and its inverse
    are likewise precomputed on demand.
"""
import logging

from fastrs.engine.gf2m import gf_add, gf_inv, gf_mul, omega, omega_index
from fastrs.errors import IndexOutOfRange, LengthMismatch

logger = logging.getLogger(__name__)


class XbarCtx:

    def __init__(self, field):
        self.field = field
        m = field.m
        self.norms = field.subspace_norms
        self.norm_inv = tuple(gf_inv(field, c) for c in self.norms)
        # twiddle_rows[j][b] = ŝ_j(v_b)
        self.twiddle_rows = []
        for j in range(m):
            row = []
            for b in range(m):
                raw = field._subspace(j, field.basis[b], self.norms)
                row.append(field._mul(raw, self.norm_inv[j]))
            self.twiddle_rows.append(tuple(row))
        self._linearized = [(1,)]
        self._mono_rows = [[1]]
        self._lch_rows = [[1]]
        self._p = {0: 1}

    def twiddle(self, j, x):
        """ŝ_j(x), read from the linear table."""
        row = self.twiddle_rows[j]
        idx = omega_index(self.field, x)
        value = 0
        b = 0
        while idx:
            if idx & 1:
                value ^= row[b]
            idx >>= 1
            b += 1
        return value

    def p(self, i):
        if i not in self._p:
            value = 1
            for j in range(self.field.m):
                if i >> j & 1:
                    value = self.field._mul(value, self.norms[j])
            self._p[i] = value
        return self._p[i]

    def linearized(self, j):
        """Monomial coefficients of s_j at x^(2^b), b = 0 .. j (unnormalized)."""
        field = self.field
        while len(self._linearized) <= j:
            level = len(self._linearized) - 1
            prev = self._linearized[level]
            c = self.norms[level]
            nxt = [0] * (level + 2)
            for b, coef in enumerate(prev):
                nxt[b + 1] ^= field._mul(coef, coef)
                nxt[b] ^= field._mul(c, coef)
            self._linearized.append(tuple(nxt))
        return self._linearized[j]

    def mono_rows(self, size):
        """Rows i < size: monomial coefficients of X̄_i."""
        field = self.field
        while len(self._mono_rows) < size:
            i = len(self._mono_rows)
            top = i.bit_length() - 1
            base = self._mono_rows[i - (1 << top)]
            scale = self.norm_inv[top]
            row = [0] * (i + 1)
            for b, coef in enumerate(self.linearized(top)):
                coef = field._mul(coef, scale)
                if coef == 0:
                    continue
                shift = 1 << b
                for d, value in enumerate(base):
                    row[d + shift] ^= field._mul(value, coef)
            self._mono_rows.append(row)
        return self._mono_rows[:size]

    def lch_rows(self, size):
        """Rows a < size: X̄ coefficients of x^a (the inverse of mono_rows)."""
        field = self.field
        while len(self._lch_rows) < size:
            a = len(self._lch_rows)
            rows = self.mono_rows(a + 1)
            target = [0] * (a + 1)
            target[a] = 1
            out = [0] * (a + 1)
            for b in range(a, -1, -1):
                if target[b] == 0:
                    continue
                coef = field._mul(target[b], self.p(b))
                out[b] = coef
                for d, value in enumerate(rows[b]):
                    target[d] ^= field._mul(coef, value)
            self._lch_rows.append(out)
        return self._lch_rows[:size]


def _check_length(values, k, extra=0):
    if len(values) != (1 << k) + extra:
        raise LengthMismatch('expected %d values, got %d' % ((1 << k) + extra, len(values)))


def xbar_eval(xctx, i, x, ctr=None):
    if not 0 <= i < xctx.field.size:
        raise IndexOutOfRange('basis index %d out of range' % i)
    value = None
    j = 0
    while i:
        if i & 1:
            tw = xctx.twiddle(j, x)
            value = tw if value is None else gf_mul(xctx.field, value, tw, ctr)
        i >>= 1
        j += 1
    return 1 if value is None else value


def xbar_values(xctx, x, count, ctr=None):
    """X̄_0(x) .. X̄_{count-1}(x) by subset products."""
    values = [1]
    j = 0
    while len(values) < count:
        tw = xctx.twiddle(j, x)
        values.append(tw)
        for v in values[1:1 << j]:
            if len(values) == count:
                break
            values.append(gf_mul(xctx.field, v, tw, ctr))
        j += 1
    return values[:count]


def lch_eval(xctx, f, x, ctr=None):
    values = xbar_values(xctx, x, len(f), ctr)
    acc = f[0]
    for coef, value in zip(f[1:], values[1:]):
        acc = gf_add(acc, gf_mul(xctx.field, coef, value, ctr), ctr)
    return acc


def lch_fft(xctx, f, k, beta, ctr=None):
    _check_length(f, k)
    field = xctx.field
    a = list(f)
    for level in range(k, 0, -1):
        half = 1 << (level - 1)
        for offset in range(0, 1 << k, 2 * half):
            tau = xctx.twiddle(level - 1, beta ^ omega(field, offset))
            for i in range(offset, offset + half):
                hi = a[i + half]
                g0 = gf_add(a[i], gf_mul(field, tau, hi, ctr), ctr)
                a[i] = g0
                a[i + half] = gf_add(g0, hi, ctr)
    return a


def lch_ifft(xctx, d, k, beta, ctr=None):
    _check_length(d, k)
    field = xctx.field
    a = list(d)
    for level in range(1, k + 1):
        half = 1 << (level - 1)
        for offset in range(0, 1 << k, 2 * half):
            tau = xctx.twiddle(level - 1, beta ^ omega(field, offset))
            for i in range(offset, offset + half):
                hi = gf_add(a[i], a[i + half], ctr)
                a[i] = gf_add(a[i], gf_mul(field, tau, hi, ctr), ctr)
                a[i + half] = hi
    return a


def lch_extended_ifft(xctx, d, k, beta, ctr=None):
    field = xctx.field
    if k >= field.m:
        raise IndexOutOfRange('extended transform needs k < m')
    _check_length(d, k, extra=1)
    head = lch_ifft(xctx, d[:-1], k, beta, ctr)
    extra_point = omega(field, 1 << k) ^ beta
    delta = gf_add(d[-1], lch_eval(xctx, head, extra_point, ctr), ctr)
    head[0] = gf_add(head[0], gf_mul(field, xctx.twiddle(k, beta), delta, ctr), ctr)
    head.append(delta)
    return head


def _convert(field, p, rows, ctr):
    """out[b] = sum over a of p[a]*rows[a][b], skipping table zeros and ones."""
    out = [0] * len(p)
    touched = [False] * len(p)
    for a, value in enumerate(p):
        row = rows[a]
        for b in range(len(row)):
            c = row[b]
            if c == 0:
                continue
            term = value if c == 1 else gf_mul(field, value, c, ctr)
            if touched[b]:
                out[b] = gf_add(out[b], term, ctr)
            else:
                out[b] = term
                touched[b] = True
    return out


def mono_to_lch(xctx, p, ctr=None):
    if len(p) > xctx.field.size:
        raise LengthMismatch('polynomial longer than the field')
    return _convert(xctx.field, p, xctx.lch_rows(len(p)), ctr)


def lch_to_mono(xctx, f, ctr=None):
    if len(f) > xctx.field.size:
        raise LengthMismatch('polynomial longer than the field')
    return _convert(xctx.field, f, xctx.mono_rows(len(f)), ctr)


def mono_eval(field, p, x, ctr=None):
    acc = p[-1]
    for coef in reversed(p[:-1]):
        acc = gf_add(gf_mul(field, acc, x, ctr), coef, ctr)
    return acc
