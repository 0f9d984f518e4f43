"""
    The two decoding pipelines and the primitives they share.
"""
import logging

from fastrs.engine.codec import accumulate_powers
from fastrs.engine.gf2m import gf_add, gf_div, gf_inv, gf_mul, omega, omega_index, subspace_eval
from fastrs.engine.lch import (lch_eval, lch_extended_ifft, lch_fft, lch_ifft, lch_to_mono,
                               mono_eval, mono_to_lch)
from fastrs.engine.solvers import ifdma_solve, s_esbm, si_fdma
from fastrs.errors import (CountOutOfRange, DegenerateInput, FastRSError, InconsistentCount,
                           LengthMismatch, Undecodable, ZeroDenominator)
from fastrs.models import DecodeResult, ErrorPattern, OpCounter, PowerSyndromes, SyndromeBundle

logger = logging.getLogger(__name__)


def syndrome_bundle(code, received, ctr=None):
    params, xctx = code.params, code.xctx
    if len(received) != params.n:
        raise LengthMismatch('expected %d symbols, got %d' % (params.n, len(received)))
    T, mu = params.T, params.mu
    acc = None
    for c in range(params.block_count):
        coeffs = lch_ifft(xctx, received[c * T:(c + 1) * T], mu, omega(code.field, c * T), ctr)
        acc = coeffs if acc is None else [gf_add(a, b, ctr) for a, b in zip(acc, coeffs)]
    scale = gf_inv(code.field, xctx.p(params.n - T), ctr)
    s_lch = [gf_mul(code.field, a, scale, ctr) for a in acc]
    s_evals = lch_fft(xctx, s_lch, mu, 0, ctr)[:2 * params.t]
    return SyndromeBundle(s_lch, s_evals)


def _powers_from_polynomial(code, s_lch, count, ctr):
    """
    S_c from the syndrome polynomial s(x) = Σ e_ℓ·s_μ(x + ω_ℓ)/(x + ω_ℓ).

    The monomial coefficient of x^(T-1-c) is S_c plus a_b·S_(c-T+2^b) for
    every b < μ with c >= T - 2^b, where a_b are the coefficients of s_μ.
    """
    params, field = code.params, code.field
    T, mu = params.T, params.mu
    rows = code.xctx.mono_rows(T)
    top = {}
    for d in range(T - count, T):
        acc = None
        for i in range(d, T):
            c = rows[i][d]
            if c == 0:
                continue
            term = s_lch[i] if c == 1 else gf_mul(field, s_lch[i], c, ctr)
            acc = term if acc is None else gf_add(acc, term, ctr)
        top[d] = acc or 0
    linear = code.xctx.linearized(mu)
    S = []
    for c in range(count):
        value = top[T - 1 - c]
        for b in range(mu):
            if c < T - (1 << b) or linear[b] == 0:
                continue
            prior = S[c - T + (1 << b)]
            term = prior if linear[b] == 1 else gf_mul(field, linear[b], prior, ctr)
            value = gf_add(value, term, ctr)
        S.append(value)
    return S


def power_syndromes(code, received, count, ctr=None, bundle=None):
    params = code.params
    if not 0 <= count <= params.n - params.k:
        raise CountOutOfRange('count %d outside [0, %d]' % (count, params.n - params.k))
    if bundle is None:
        if len(received) != params.n:
            raise LengthMismatch('expected %d symbols, got %d' % (params.n, len(received)))
        return PowerSyndromes(accumulate_powers(code, received, count, ctr))
    return PowerSyndromes(_powers_from_polynomial(code, bundle.s_lch, count, ctr))


def chien_block_search(code, poly_lch, block_log, ctr=None):
    size = 1 << block_log
    if len(poly_lch) > size:
        raise LengthMismatch('polynomial of length %d does not fit blocks of %d' % (len(poly_lch), size))
    padded = list(poly_lch) + [0] * (size - len(poly_lch))
    roots = []
    for start in range(0, code.params.n, size):
        values = lch_fft(code.xctx, padded, block_log, omega(code.field, start), ctr)
        roots.extend(start + j for j, value in enumerate(values) if value == 0)
    return roots


def formal_derivative(p):
    out = [p[i] if i % 2 else 0 for i in range(1, len(p))]
    return out or [0]


def forney_values(code, z_lch, lam_mono, roots, ctr=None):
    field = code.field
    deriv = formal_derivative(lam_mono)
    values = {}
    for index in roots:
        point = omega(field, index)
        numerator = lch_eval(code.xctx, z_lch, point, ctr)
        denominator = gf_mul(field, subspace_eval(field, code.params.mu, point, ctr),
                             mono_eval(field, deriv, point, ctr), ctr)
        if denominator == 0:
            raise ZeroDenominator('Forney denominator vanishes at index %d' % index)
        values[index] = gf_div(field, numerator, denominator, ctr)
    return values


def _locator_from_points(field, points, ctr):
    """Monic ∏(x + p) by convolution; the leading one is never multiplied."""
    lam = [1]
    for point in points:
        out = [0] * (len(lam) + 1)
        out[-1] = 1
        for i in range(len(lam)):
            product = point if i == len(lam) - 1 else gf_mul(field, point, lam[i], ctr)
            out[i] = product if i == 0 else gf_add(lam[i - 1], product, ctr)
        lam = out
    return lam


def _is_codeword(code, word):
    return syndrome_bundle(code, word).is_zero


def _repair(code, received, values, tag, ctr):
    try:
        pattern = ErrorPattern(dict(values))
        pattern.validate(code.params)
    except FastRSError as exc:
        raise Undecodable('forney', str(exc))
    codeword = list(received)
    for index, value in values.items():
        codeword[index] ^= value
    if not _is_codeword(code, codeword):
        raise Undecodable('parity', 'repaired word fails the parity check')
    return DecodeResult(codeword, pattern, tag, ctr)


def _forney_or_fail(code, z_lch, lam_mono, roots, ctr):
    try:
        return forney_values(code, z_lch, lam_mono, roots, ctr)
    except ZeroDenominator as exc:
        raise Undecodable('forney', str(exc))


def _finish_first(code, received, bundle, loc, ctr, tag):
    params, xctx = code.params, code.xctx
    t = params.t
    z_vals = [gf_mul(code.field, s, w, ctr) for s, w in zip(bundle.s_evals[:t + 1], loc.evals)]
    lam_lch = lch_extended_ifft(xctx, loc.evals, params.mu - 1, 0, ctr)
    z_lch = lch_extended_ifft(xctx, z_vals, params.mu - 1, 0, ctr)
    roots = chien_block_search(code, lam_lch, params.mu, ctr)
    if len(roots) != loc.e:
        raise Undecodable('chien', 'locator has %d roots, solver inferred %d' % (len(roots), loc.e))
    lam_mono = lch_to_mono(xctx, lam_lch, ctr)
    values = _forney_or_fail(code, z_lch, lam_mono, roots, ctr)
    return _repair(code, received, values, tag, ctr)


def decode_first(code, received, ctr=None):
    ctr = ctr if ctr is not None else OpCounter()
    bundle = syndrome_bundle(code, received, ctr)
    if bundle.is_zero:
        return DecodeResult(list(received), ErrorPattern(), 'first', ctr)
    loc = ifdma_solve(code, bundle.s_evals, ctr)
    logger.debug('first pipeline: e=%d after %d steps', loc.e, loc.steps)
    return _finish_first(code, received, bundle, loc, ctr, 'first')


def _finish_second(code, received, bundle, e, ctr):
    field, xctx = code.field, code.xctx
    S = power_syndromes(code, received, 2 * e, ctr, bundle=bundle).S
    sigma = s_esbm(code, e, S, ctr)
    sigma_lch = mono_to_lch(xctx, sigma, ctr)
    s = e.bit_length()
    R = 1 << s
    reciprocal = chien_block_search(code, sigma_lch, s, ctr)
    if len(reciprocal) != e:
        raise InconsistentCount(e, len(reciprocal))
    positions = sorted(omega_index(field, gf_inv(field, omega(field, i), ctr)) for i in reciprocal)
    lam = _locator_from_points(field, [omega(field, i) for i in positions], ctr)
    lam_lch = mono_to_lch(xctx, lam, ctr)
    lam_vals = lch_fft(xctx, lam_lch + [0] * (R - len(lam_lch)), s, 0, ctr)
    z_vals = [gf_mul(field, a, b, ctr) for a, b in zip(bundle.s_evals[:R], lam_vals)]
    z_lch = lch_ifft(xctx, z_vals, s, 0, ctr)
    values = _forney_or_fail(code, z_lch, lam, positions, ctr)
    return _repair(code, received, values, 'second', ctr)


def decode_second(code, received, ctr=None):
    ctr = ctr if ctr is not None else OpCounter()
    params = code.params
    bundle = syndrome_bundle(code, received, ctr)
    if bundle.is_zero:
        return DecodeResult(list(received), ErrorPattern(), 'second', ctr)

    estimate = si_fdma(code, bundle.s_evals[:params.t0 + 1], ctr)
    if estimate.e:
        try:
            return _finish_second(code, received, bundle, estimate.e, ctr)
        except (Undecodable, DegenerateInput) as exc:
            if not code.config.get('FASTRS_SECOND_FALLBACK', True):
                raise
            logger.info('count estimate reported e=%d but %s; resuming the first pipeline', estimate.e, exc)
    else:
        logger.debug('count estimate gave no value after %d iterations', estimate.iterations)
    loc = ifdma_solve(code, bundle.s_evals, ctr, resume=estimate.state)
    return _finish_first(code, received, bundle, loc, ctr, 'second_fell_back_to_first')
