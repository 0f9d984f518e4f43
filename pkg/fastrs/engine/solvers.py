"""
    Key-equation solvers.

    All of them drive the same 2x2 update: at step r the pair (d_i, g_i) and
    the locator rows (W_i, V_i) at every tracked point ω_i become

        d' = g_r·d_i + d_r·g_i
        g' = (ω_i + ω_r)·g_i     when the step keeps w   (R1 += 2)
        g' = (ω_i + ω_r)·d_i     otherwise               (R0, R1 swap)

    which costs three multiplications and two additions per pair.
"""
import logging

from fastrs.engine.gf2m import gf_add, gf_div, gf_mul, omega
from fastrs.errors import (DegenerateInput, MalformedInput, OddT0, SolverInvariantError,
                           Undecodable)
from fastrs.models import CountEstimate, EsbmState, LocatorEvals, MaPolyState, WbIterState

logger = logging.getLogger(__name__)

MODES = ('full_2t', 't_plus_e', 'two_e')


def _even(R0, R1):
    return R0 if R0 % 2 == 0 else R1


def _decide(d_r, g_r, R0, R1, r):
    if d_r == 0 and g_r == 0:
        raise SolverInvariantError('d and g vanish together at step %d' % r)
    return d_r == 0 or (R0 > R1 and g_r != 0)


def _apply(field, step, diff, a, b, ctr):
    g_r, d_r, keep = step
    top = gf_add(gf_mul(field, g_r, a, ctr), gf_mul(field, d_r, b, ctr), ctr)
    bottom = gf_mul(field, diff, b if keep else a, ctr)
    return top, bottom


def _update_pairs(field, step, r, xs, ys, indices, ctr):
    point_r = omega(field, r)
    for i in indices:
        diff = gf_add(omega(field, i), point_r, ctr)
        xs[i], ys[i] = _apply(field, step, diff, xs[i], ys[i], ctr)


def _next_counters(keep, R0, R1):
    return (R0, R1 + 2) if keep else (R1, R0 + 2)


def _check_counters(state):
    if state.R0 + state.R1 != 2 * state.r + 1:
        raise SolverInvariantError('R0 + R1 != 2r + 1 at step %d' % state.r)


def _advance(field, state, ctr, rows=True):
    """One iteration of the evaluation-domain solver on ``state``."""
    r = state.r
    keep = _decide(state.d[r], state.g[r], state.R0, state.R1, r)
    step = (state.g[r], state.d[r], keep)
    _update_pairs(field, step, r, state.d, state.g, range(r + 1, state.hi + 1), ctr)
    if rows:
        _update_pairs(field, step, r, state.W, state.V, range(len(state.W)), ctr)
    even_before = _even(state.R0, state.R1)
    state.R0, state.R1 = _next_counters(keep, state.R0, state.R1)
    state.r = r + 1
    state.history.append(step)
    _check_counters(state)
    if _even(state.R0, state.R1) < even_before:
        raise SolverInvariantError('Even(R0, R1) decreased at step %d' % r)
    logger.debug('step %d keep=%s R=(%d,%d)', r, keep, state.R0, state.R1)


def _settled(state):
    """Zero discrepancy tail with the locator side ahead, R0 < R1."""
    return state.R0 < state.R1 and not any(state.d[state.r:state.hi + 1])


def _extend(field, partial, syndromes, t, ctr):
    """Carry a truncated run over to all 2t indices and the t+1 locator rows."""
    old_hi = partial.hi
    hi = len(syndromes) - 1
    d = list(partial.d[:old_hi + 1]) + list(syndromes[old_hi + 1:])
    g = list(partial.g[:old_hi + 1]) + [1] * (hi - old_hi)
    W = [1] * (t + 1)
    V = [0] * (t + 1)
    for r, step in enumerate(partial.history):
        _update_pairs(field, step, r, d, g, range(old_hi + 1, hi + 1), ctr)
        _update_pairs(field, step, r, W, V, range(t + 1), ctr)
    return WbIterState(d=d, g=g, W=W, V=V, R0=partial.R0, R1=partial.R1,
                       r=partial.r, hi=hi, history=list(partial.history))


def ifdma_solve(code, syndromes, ctr=None, resume=None):
    params, field = code.params, code.field
    t = params.t
    if len(syndromes) != 2 * t:
        raise MalformedInput('expected %d syndromes, got %d' % (2 * t, len(syndromes)))

    if resume is None:
        state = WbIterState(d=list(syndromes), g=[1] * (2 * t), W=[1] * (t + 1),
                            V=[0] * (t + 1), hi=2 * t - 1)
        if not any(syndromes):
            return LocatorEvals(list(state.W), 0, 0, state)
    else:
        state = _extend(field, resume, syndromes, t, ctr)
        if state.r and _settled(state):
            return LocatorEvals(list(state.W), state.r, state.R0 // 2, state)

    while state.r < 2 * t:
        _advance(field, state, ctr)
        if state.r <= state.hi and _settled(state):
            break
    if state.R0 > state.R1:
        raise Undecodable('key_equation', 'no locator of degree <= t after %d steps' % state.r)
    logger.debug('I-FDMA finished after %d steps, e=%d', state.r, state.R0 // 2)
    return LocatorEvals(list(state.W), state.r, state.R0 // 2, state)


def si_fdma(code, syndromes, ctr=None):
    params = code.params
    t0 = params.t0
    if t0 % 2:
        raise OddT0('t0 must be even, got %d' % t0)
    if len(syndromes) != t0 + 1:
        raise MalformedInput('expected %d syndromes, got %d' % (t0 + 1, len(syndromes)))
    state = WbIterState(d=list(syndromes), g=[1] * (t0 + 1), W=[], V=[], hi=t0)
    if not any(syndromes):
        return CountEstimate(0, 0, state)
    while state.r < t0:
        _advance(code.field, state, ctr, rows=False)
        if _settled(state):
            return CountEstimate(state.R0 // 2, state.r, state)
    return CountEstimate(None, state.r, state)


def _poly_scale_add(field, a, p, b, q, ctr):
    """a·p + b·q on coefficient lists."""
    size = max(len(p), len(q))
    out = []
    for i in range(size):
        x = gf_mul(field, a, p[i], ctr) if i < len(p) else 0
        y = gf_mul(field, b, q[i], ctr) if i < len(q) else 0
        out.append(gf_add(x, y, ctr))
    return out


def _poly_shift_mul(field, root, p, ctr):
    """(x + root)·p."""
    out = [0] + list(p)
    for i, coef in enumerate(p):
        out[i] = gf_add(out[i], gf_mul(field, root, coef, ctr), ctr)
    return out


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def ma_reference_solve(code, syndromes, mode='full_2t', ctr=None):
    """Polynomial-matrix solver returning (λ, z, steps) in monomial form."""
    params, field = code.params, code.field
    t = params.t
    if mode not in MODES:
        raise MalformedInput('unknown mode %r' % mode)
    if len(syndromes) != 2 * t:
        raise MalformedInput('expected %d syndromes, got %d' % (2 * t, len(syndromes)))
    state = MaPolyState(w=[1], n=[0], v=[0], m=[1], d=list(syndromes), g=[1] * (2 * t))
    if mode == 'two_e' and not any(syndromes):
        return [1], [0], 0

    for r in range(2 * t):
        keep = _decide(state.d[r], state.g[r], state.R0, state.R1, r)
        step = (state.g[r], state.d[r], keep)
        _update_pairs(field, step, r, state.d, state.g, range(r + 1, 2 * t), ctr)
        g_r, d_r = step[0], step[1]
        w = _poly_scale_add(field, g_r, state.w, d_r, state.v, ctr)
        n = _poly_scale_add(field, g_r, state.n, d_r, state.m, ctr)
        root = omega(field, r)
        if keep:
            v = _poly_shift_mul(field, root, state.v, ctr)
            m = _poly_shift_mul(field, root, state.m, ctr)
        else:
            v = _poly_shift_mul(field, root, state.w, ctr)
            m = _poly_shift_mul(field, root, state.n, ctr)
        state.w, state.n, state.v, state.m = w, n, v, m
        state.R0, state.R1 = _next_counters(keep, state.R0, state.R1)
        state.r = r + 1
        if state.R0 + state.R1 != 2 * state.r + 1:
            raise SolverInvariantError('R0 + R1 != 2r + 1 at step %d' % state.r)

        if mode == 't_plus_e' and state.R1 == 2 * t + 1:
            return _trim(state.w), _trim(state.n), state.r
        if mode == 'two_e' and state.r < 2 * t and state.R0 < state.R1 and not any(state.d[state.r:]):
            return _trim(state.w), _trim(state.n), state.r

    if state.R0 < state.R1:
        return _trim(state.w), _trim(state.n), state.r
    return _trim(state.v), _trim(state.m), state.r


def s_esbm(code, e, power_syndromes, ctr=None):
    """Connection polynomial σ (σ[0] = 1) of 2e power syndromes with known e."""
    field = code.field
    S = list(power_syndromes)
    if e < 1:
        raise MalformedInput('s_esbm needs e >= 1')
    if len(S) != 2 * e:
        raise MalformedInput('expected %d power syndromes, got %d' % (2 * e, len(S)))

    state = EsbmState(lam=[1], shadow=[1])
    initial_D = True
    for r in range(2 * e):
        disc = S[r]
        for i in range(1, state.L + 1):
            if i < len(state.lam):
                disc = gf_add(disc, gf_mul(field, state.lam[i], S[r - i], ctr), ctr)
        if disc == 0:
            state.gap += 1
            continue

        coef = disc if initial_D else gf_div(field, disc, state.D, ctr)
        previous = list(state.lam)
        size = max(len(state.lam), len(state.shadow) + state.gap)
        lam = state.lam + [0] * (size - len(state.lam))
        lam[state.gap] = gf_add(lam[state.gap], coef, ctr)
        for i in range(1, len(state.shadow)):
            term = gf_mul(field, coef, state.shadow[i], ctr)
            lam[i + state.gap] = gf_add(lam[i + state.gap], term, ctr)
        state.lam = lam

        if 2 * state.L <= r:
            state.L = r + 1 - state.L
            state.shadow = previous
            state.D = disc
            initial_D = False
            state.gap = 1
        else:
            state.gap += 1
        if state.L > e:
            raise DegenerateInput('register length %d exceeds e=%d' % (state.L, e))

    sigma = _trim(state.lam)
    if len(sigma) > e + 1:
        raise DegenerateInput('connection polynomial degree exceeds e=%d' % e)
    return sigma + [0] * (e + 1 - len(sigma))
