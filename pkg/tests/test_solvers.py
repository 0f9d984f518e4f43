from fastrs.engine.codec import corrupt
from fastrs.engine.decoder import syndrome_bundle
from fastrs.engine.gf2m import gf_add, gf_div, gf_inv, gf_mul, omega
from fastrs.engine.lch import mono_eval
from fastrs.engine.solvers import ifdma_solve, ma_reference_solve, s_esbm, si_fdma
from fastrs.errors import DegenerateInput, MalformedInput
from fastrs.fake import fake_instance
from fastrs.models import ErrorPattern, OpCounter

from tests.base import BaseTestCase, full_code, mid_code, naive_poly_product, naive_powers


def solve_hankel(field, S, e):
    """σ_1 .. σ_e from S_i = Σ σ_j·S_(i-j), i = e .. 2e-1, by Gauss-Jordan elimination."""
    rows = [[S[e + i - j] for j in range(1, e + 1)] + [S[e + i]] for i in range(e)]
    for col in range(e):
        pivot = next(r for r in range(col, e) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        scale = gf_inv(field, rows[col][col])
        rows[col] = [gf_mul(field, scale, v) for v in rows[col]]
        for r in range(e):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [a ^ gf_mul(field, factor, b) for a, b in zip(rows[r], rows[col])]
    return [1] + [row[e] for row in rows]


# I-FDMA multiplications at (256, 224), e = 1 .. 10
IFDMA_MULS = (285, 558, 819, 1068, 1305, 1530, 1743, 1944, 2133, 2310)


class SolverBase(BaseTestCase):

    def setUp(self):
        super().setUp()
        self.full = full_code()

    def evals_for(self, code, e):
        codeword, pattern, received = fake_instance(code, e, self.rng)
        return pattern, syndrome_bundle(code, received).s_evals


class IfdmaTestCase(SolverBase):

    def check_counts(self, code, e, pattern, evals):
        t = code.params.t
        ctr = OpCounter()
        loc = ifdma_solve(code, evals, ctr)
        self.assertEqual(ctr.mul, 18 * e * t - 6 * e * e + 3 * e, pattern.entries)
        self.assertEqual(ctr.add, 12 * e * t - 4 * e * e + 2 * e, pattern.entries)
        self.assertEqual(ctr.inv, 0)
        self.assertEqual(loc.steps, 2 * e)
        self.assertEqual(loc.e, e)
        self.assertEqual((loc.state.R0, loc.state.R1), (2 * e, 2 * e + 1))
        return ctr

    def test_published_counts(self):
        for e, expected in enumerate(IFDMA_MULS, 1):
            pattern, evals = self.evals_for(self.full, e)
            self.assertEqual(self.check_counts(self.full, e, pattern, evals).mul, expected)

    def test_counts_for_every_e(self):
        for code in (self.full, mid_code()):
            for e in range(1, code.params.t + 1):
                pattern, evals = self.evals_for(code, e)
                self.check_counts(code, e, pattern, evals)

    def test_equal_values_on_adjacent_points(self):
        # ω_8 and ω_9 differ in bit 0 only, so d_1 vanishes after the first step
        for value in range(1, 16):
            pattern = ErrorPattern({8: value, 9: value})
            received = corrupt(self.code, [0] * 16, pattern)
            evals = syndrome_bundle(self.code, received).s_evals
            self.check_counts(self.code, 2, pattern, evals)
        pattern = ErrorPattern({100: 0x37, 101: 0x37})
        received = corrupt(self.full, [0] * 256, pattern)
        self.check_counts(self.full, 2, pattern, syndrome_bundle(self.full, received).s_evals)

    def test_locator_values_are_proportional(self):
        field = self.full.field
        pattern, evals = self.evals_for(self.full, 6)
        loc = ifdma_solve(self.full, evals)
        locator = naive_poly_product(field, [omega(field, i) for i in pattern.positions])
        ratios = {gf_div(field, w, mono_eval(field, locator, omega(field, i))) for i, w in enumerate(loc.evals)}
        self.assertEqual(len(loc.evals), 17)
        self.assertEqual(len(ratios), 1)
        self.assertNotIn(0, ratios)

    def test_zero_syndromes(self):
        loc = ifdma_solve(self.full, [0] * 32)
        self.assertEqual((loc.e, loc.steps), (0, 0))
        self.assertEqual(loc.evals, [1] * 17)

    def test_wrong_length(self):
        with self.assertRaises(MalformedInput):
            ifdma_solve(self.full, [0] * 31)


class CountEstimateTestCase(SolverBase):

    def test_count_estimate_finds_count(self):
        for e in (1, 3, 7):
            pattern, evals = self.evals_for(self.full, e)
            estimate = si_fdma(self.full, evals[:17])
            self.assertEqual(estimate.e, e)
            self.assertEqual(estimate.iterations, 2 * e)

    def test_count_estimate_on_equal_adjacent_values(self):
        for code, pattern in ((self.code, ErrorPattern({8: 6, 9: 6})),
                              (self.full, ErrorPattern({100: 0x37, 101: 0x37}))):
            received = corrupt(code, [0] * code.params.n, pattern)
            evals = syndrome_bundle(code, received).s_evals
            estimate = si_fdma(code, evals[:code.params.t0 + 1])
            self.assertEqual((estimate.e, estimate.iterations), (2, 4))

    def test_count_estimate_gives_no_value_beyond_its_reach(self):
        pattern, evals = self.evals_for(self.full, 12)
        estimate = si_fdma(self.full, evals[:17])
        self.assertIsNone(estimate.e)
        self.assertEqual(estimate.iterations, 16)

    def test_count_estimate_zero(self):
        self.assertEqual(si_fdma(self.full, [0] * 17).e, 0)

    def test_count_estimate_length(self):
        with self.assertRaises(MalformedInput):
            si_fdma(self.full, [1] * 16)

    def test_resume_reuses_the_triangle(self):
        for e in (2, 6):
            pattern, evals = self.evals_for(self.full, e)
            ctr = OpCounter()
            estimate = si_fdma(self.full, evals[:17], ctr)
            loc = ifdma_solve(self.full, evals, ctr, resume=estimate.state)
            self.assertEqual(ctr.mul, IFDMA_MULS[e - 1])
            self.assertEqual(loc.e, e)
            self.assertEqual(loc.evals, ifdma_solve(self.full, evals).evals)

    def test_resume_after_no_value(self):
        pattern, evals = self.evals_for(self.full, 12)
        ctr = OpCounter()
        estimate = si_fdma(self.full, evals[:17], ctr)
        loc = ifdma_solve(self.full, evals, ctr, resume=estimate.state)
        self.assertEqual(loc.e, 12)
        self.assertEqual(ctr.mul, 18 * 12 * 16 - 6 * 144 + 36)
        self.assertEqual(loc.evals, ifdma_solve(self.full, evals).evals)


class ReferenceSolverTestCase(SolverBase):

    def check_locator(self, lam, pattern):
        field = self.full.field
        self.assertEqual(len(lam) - 1, pattern.e)
        for index in pattern.positions:
            self.assertEqual(mono_eval(field, lam, omega(field, index)), 0)

    def test_modes(self):
        for e in (1, 4, 9):
            codeword, pattern, received = fake_instance(self.full, e, self.rng)
            evals = syndrome_bundle(self.full, received).s_evals
            lam, z, steps = ma_reference_solve(self.full, evals, 'full_2t')
            self.check_locator(lam, pattern)
            self.assertEqual(steps, 32)
            lam, z, steps = ma_reference_solve(self.full, evals, 't_plus_e')
            self.check_locator(lam, pattern)
            self.assertEqual(steps, 16 + e)
            lam, z, steps = ma_reference_solve(self.full, evals, 'two_e')
            self.check_locator(lam, pattern)
            self.assertEqual(steps, 2 * e)
            self.assertLess(len(z), len(lam))

    def test_two_e_on_equal_adjacent_values(self):
        pattern = ErrorPattern({100: 0x37, 101: 0x37})
        received = corrupt(self.full, [0] * 256, pattern)
        evals = syndrome_bundle(self.full, received).s_evals
        lam, z, steps = ma_reference_solve(self.full, evals, 'two_e')
        self.check_locator(lam, pattern)
        self.assertEqual(steps, 4)

    def test_zero_syndromes(self):
        self.assertEqual(ma_reference_solve(self.full, [0] * 32, 'two_e'), ([1], [0], 0))

    def test_bad_mode(self):
        with self.assertRaises(MalformedInput):
            ma_reference_solve(self.full, [0] * 32, 'fast')


class EsbmTestCase(SolverBase):

    def test_connection_polynomial(self):
        field = self.full.field
        generic = 0
        for e in (1, 2, 5, 8, 8, 8, 8, 8, 8, 8):
            codeword, pattern, received = fake_instance(self.full, e, self.rng)
            S = naive_powers(field, pattern, 2 * e)
            ctr = OpCounter()
            sigma = s_esbm(self.full, e, S, ctr)
            expected = naive_poly_product(field, [omega(field, i) for i in pattern.positions])[::-1]
            self.assertEqual(sigma, expected)
            for i in range(e, 2 * e):
                residual = 0
                for j in range(e + 1):
                    residual = gf_add(residual, gf_mul(field, sigma[j], S[i - j]))
                self.assertEqual(residual, 0)
            self.assertLessEqual(ctr.inv, 2 * e)
            if ctr.mul == e * e + (e - 1) * (e - 1):
                generic += 1
        self.assertGreaterEqual(generic, 7)

    def test_matches_linear_solve(self):
        field = self.full.field
        for e in range(1, 9):
            for _ in range(5):
                codeword, pattern, received = fake_instance(self.full, e, self.rng)
                S = naive_powers(field, pattern, 2 * e)
                ctr = OpCounter()
                sigma = s_esbm(self.full, e, S, ctr)
                self.assertEqual(sigma, solve_hankel(field, S, e))
                self.assertLessEqual(ctr.mul, 2 * e * e - 1)

    def test_two_error_example(self):
        field = self.full.field
        pattern = ErrorPattern({40: 0x11, 77: 0xC4})
        S = naive_powers(field, pattern, 4)
        self.assertEqual(s_esbm(self.full, 2, S), solve_hankel(field, S, 2))

    def test_degenerate(self):
        with self.assertRaises(DegenerateInput):
            s_esbm(self.full, 1, [0, 1])

    def test_bad_input(self):
        with self.assertRaises(MalformedInput):
            s_esbm(self.full, 0, [])
        with self.assertRaises(MalformedInput):
            s_esbm(self.full, 2, [1, 2, 3])
