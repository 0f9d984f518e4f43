from fastrs.engine.bench import (bench_tables, emit_report, formula_counts, formula_rows, improvements,
                                 measure_decoders, measure_solver, published, table_check)
from fastrs.errors import MalformedInput
from fastrs.fake import make_rng

from tests.base import BaseTestCase, full_code


class FormulaTestCase(BaseTestCase):

    def test_closed_forms(self):
        counts = formula_counts(16, 1)
        self.assertEqual(counts['fdma_formula'], (3120, 2080))
        self.assertEqual(counts['efdma_formula'], (1125, 775))
        self.assertEqual(counts['ifdma_formula'], (285, 190))
        self.assertEqual(formula_counts(16, 2)['efdma_formula'][0], 1321)
        self.assertEqual(formula_counts(16, 10)['ifdma_formula'][0], 2310)

    def test_range(self):
        with self.assertRaises(MalformedInput):
            formula_counts(16, 0)
        with self.assertRaises(MalformedInput):
            formula_counts(16, 17)

    def test_published(self):
        self.assertEqual(published(256, 224, 'efdma_formula', 1), 1125)
        self.assertIsNone(published(256, 224, 'decode_second_measured', 9))
        self.assertIsNone(published(16, 8, 'ifdma_formula', 1))

    def test_improvement(self):
        rows = formula_rows(full_code().params, 1)
        gains = improvements(rows)
        by_label = {row.label: gains.get(id(row)) for row in rows}
        self.assertEqual(by_label['ifdma_formula'], 74.67)
        self.assertIsNone(by_label['efdma_formula'])


class ReportTestCase(BaseTestCase):

    def setUp(self):
        super().setUp()
        self.rows = formula_rows(full_code().params, 1)

    def test_csv(self):
        lines = emit_report(self.rows, 'csv').splitlines()
        self.assertEqual(lines, [
            'e,label,mul,add,improvement_pct,published_mul',
            '1,fdma_formula,3120,2080,,',
            '1,efdma_formula,1125,775,,1125',
            '1,ifdma_formula,285,190,74.67,285',
        ])

    def test_markdown(self):
        text = emit_report(self.rows, 'markdown')
        self.assertIn('(n, k) = (256, 224), t = 16', text)
        self.assertIn('| e | label | mul | add | improvement_pct | published_mul |', text)
        self.assertIn('| 1 | ifdma_formula | 285 | 190 | 74.67 | 285 |', text)

    def test_bad_format(self):
        with self.assertRaises(MalformedInput):
            emit_report(self.rows, 'xml')
        with self.assertRaises(MalformedInput):
            emit_report([], 'csv')


class MeasureTestCase(BaseTestCase):

    def test_solver_rows(self):
        rows = measure_solver(full_code(), 3, 3, seed=5)
        self.assertEqual([row.label for row in rows], ['ifdma_measured', 'sesbm_measured'])
        self.assertEqual(rows[0].mul, 819)
        self.assertEqual(rows[0].inv, 0)
        self.assertEqual(rows[0].published_mul, 819)

    def test_decoder_rows(self):
        rows = measure_decoders(full_code(), 2, 2, seed=5)
        self.assertEqual([row.label for row in rows], ['decode_first_measured', 'decode_second_measured'])
        self.assertLess(rows[1].mul, rows[0].mul)

    def test_no_second_row_beyond_estimate_reach(self):
        rows = measure_decoders(self.code, 3, 2, seed=5)
        self.assertEqual([row.label for row in rows], ['decode_first_measured'])

    def test_bench_tables(self):
        rows = bench_tables(self.code, 2, 2, seed=1)
        self.assertEqual(sum(row.label == 'ifdma_measured' for row in rows), 2)
        text = emit_report(rows, 'csv')
        self.assertIn('1,ifdma_measured,69,46,37.84,0', text)

    def test_e_max_is_clamped(self):
        rows = bench_tables(self.code, 10, 1, seed=1)
        self.assertEqual(max(row.e for row in rows), 4)

    def test_table_check(self):
        self.assertEqual(table_check(full_code(), make_rng(3)), [])
