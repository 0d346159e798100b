import json
import os
import tempfile
import unittest
from pathlib import Path

import sys
sys.path.append('.')
from src.heckeutils.heckediag import Localizer, Merge, Vertex2m, chain, tensor, Id
from src.heckeutils.realization import RealizationError
from src.heckeutils.realizations import builtin
from src.heckeutils.relations import (
    A3_BOTTOM, A3_LHS, A3_RHS, A3_TOP, RelationCase, Report,
    braid_path, build_one_color_suite, build_suite, build_unbalanced_suite, build_zamolodchikov_a3,
    finite_pairs, load_zamolodchikov_pair, verify, verify_zamolodchikov_custom,
)


SLOW = bool(os.environ.get('HECKEUTILS_SLOW'))


class BrokenMergeLocalizer(Localizer):
    """Merge の (0, 0) 成分だけを 2 倍にした Λ。"""

    def _gen_matrix(self, g):
        mat = super()._gen_matrix(g)
        if isinstance(g, Merge):
            entries = dict(mat.entries)
            entries[(0, 0)] = entries[(0, 0)] + entries[(0, 0)]
            mat = type(mat)(mat.source, mat.target, entries, self.r)
        return mat


class TestRelations(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        # 初期化処理 - 1度のみ
        cls.a1 = builtin.load('A1')
        cls.a2 = builtin.load('A2')
        cls.b2 = builtin.load('B2')
        cls.a3 = builtin.load('A3')

    @classmethod
    def tearDownClass(cls) -> None:
        # 終了処理 - 1度のみ
        pass

    def setUp(self):
        # 初期化処理 - unittestごと
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        # 終了処理 - unittestごと
        self.tmpdir.cleanup()

    def assertPassed(self, report: Report):
        failed = [(res.name, res.error, res.diffs[:1]) for res in report.failures]
        self.assertTrue(report.passed, failed)

    def test_finite_pairs(self):
        self.assertEqual(finite_pairs(self.a1), [])
        self.assertEqual(finite_pairs(self.b2), [('s', 't', 4)])
        self.assertEqual(finite_pairs(self.a3), [('1', '2', 3), ('1', '3', 2), ('2', '3', 3)])

    def test_one_color(self):
        cases = build_one_color_suite('s', self.a1)
        self.assertEqual(len(cases), 16)
        self.assertTrue(all(c.name.startswith('one_color/s/') for c in cases))
        others = [builtin.load(name) for name in ('G2', 'I2_5', 'I2_6_unbalanced')]
        for r in [self.a1, self.a2, self.b2] + others:
            report = verify(build_suite('one_color', r))
            self.assertPassed(report)
            self.assertEqual(len(report), 16 * r.rank)

    def test_two_color_suites(self):
        for name in ('A1xA1', 'A2', 'B2'):
            r = builtin.load(name)
            for suite in ('cyclicity', 'jw', 'assoc', 'vertex', 'degree'):
                cases = build_suite(suite, r)
                self.assertTrue(cases, (name, suite))
                self.assertPassed(verify(cases))

    def test_i2m_a1(self):
        for name, n in (('A1xA1xA1', 3), ('A2xA1', 1), ('B2xA1', 1)):
            r = builtin.load(name)
            cases = build_suite('i2m_a1', r)
            self.assertEqual(len(cases), n, name)
            self.assertPassed(verify(cases))

    def test_zamolodchikov_a3(self):
        case = build_zamolodchikov_a3(self.a3)
        self.assertEqual(case.lhs.source, A3_BOTTOM)
        self.assertEqual(case.lhs.target, A3_TOP)
        self.assertPassed(verify([case]))
        with self.assertRaises(RealizationError):
            build_zamolodchikov_a3(self.a2)
        self.assertEqual(build_suite('zamolodchikov_a3', self.a2), [])

    def test_zamolodchikov_file(self):
        path = Path(self.tmpdir.name) / 'a3.json'
        data = {
            'name': 'zamolodchikov/a3_from_file',
            'lhs': {'word': list(A3_BOTTOM), 'moves': [list(x) for x in A3_LHS]},
            'rhs': {'word': list(A3_BOTTOM), 'moves': [list(x) for x in A3_RHS]},
        }
        path.write_text(json.dumps(data), encoding='utf-8')
        case = load_zamolodchikov_pair(path, self.a3)
        self.assertEqual(case.name, 'zamolodchikov/a3_from_file')
        self.assertPassed(verify([case]))
        with self.assertRaises(RealizationError):
            verify_zamolodchikov_custom(case.lhs, case.rhs, self.a2)
        path.write_text(json.dumps({'lhs': data['lhs']}), encoding='utf-8')
        with self.assertRaises(ValueError):
            load_zamolodchikov_pair(path, self.a3)

    def test_braid_path(self):
        r = self.a2
        d = braid_path(('s', 't', 's'), [('s', 't', 1)], r)
        self.assertEqual(d, Vertex2m('s', 't', 3))
        self.assertEqual(braid_path(('s', 't'), [], r), Id(('s', 't')))
        with self.assertRaises(ValueError):
            braid_path(('s', 't', 's'), [('t', 's', 1)], r)

    def test_unbalanced(self):
        r = builtin.load('I2_3_q')
        cases = build_suite('unbalanced', r)
        self.assertEqual(len(cases), len(build_unbalanced_suite('s', 't', r)))
        self.assertEqual(len(cases), 22)
        report = verify(cases)
        self.assertPassed(report)
        for u in ('s', 't'):
            for name in ('cyclicity', 'jw', 'all_dots', 'vertex_from_estar', 'dot_last', 'dot_first',
                         'box_all_dots', 'dot_through', 'bent_jw'):
                self.assertTrue(report[f'unbalanced/s,t/shading={u}/{name}'].passed, (u, name))
        self.assertTrue(report['unbalanced/s,t/shading=t/associativity'].passed)
        self.assertTrue(report['unbalanced/t,s/shading=s/associativity'].passed)
        # 平衡な実現では空
        self.assertEqual(build_suite('unbalanced', self.a2), [])
        with self.assertRaises(RealizationError):
            build_unbalanced_suite('s', 't', self.b2)

    def test_broken_localizer_is_detected(self):
        report = verify(build_one_color_suite('s', self.a1), localizer_factory=BrokenMergeLocalizer)
        self.assertFalse(report.passed)
        needle = report['one_color/s/needle']
        self.assertFalse(needle.passed)
        self.assertTrue(needle.diffs)
        self.assertIn(needle, report.failures)
        self.assertTrue(report['one_color/s/barbell'].passed)

    def test_errors_are_reported(self):
        # 回転不可能な対の頂点は例外ではなく失敗として記録する
        r = builtin.load('I2_4_degenerate')
        report = verify(build_suite('vertex', r))
        self.assertFalse(report.passed)
        self.assertTrue(all(res.error.startswith('NotRotatable') for res in report))

    def test_threads_do_not_change_output(self):
        cases = build_suite('all', self.a2)
        one = verify(cases, threads=1)
        four = verify(cases, threads=4)
        self.assertPassed(one)
        self.assertEqual(one.dumps(), four.dumps())

    def test_report(self):
        report = verify(build_suite('degree', self.a2))
        frame = report.to_frame()
        self.assertEqual(list(frame.columns), ['name', 'tags', 'passed', 'degree_ok', 'n_diffs', 'error', 'seconds'])
        self.assertEqual(len(frame), len(report))
        self.assertEqual(list(frame['name']), sorted(frame['name']))
        data = report.to_json()
        self.assertEqual(data['n_cases'], len(report))
        self.assertEqual(data['n_failed'], 0)
        self.assertNotIn('seconds', data['cases'][0])
        self.assertIn('seconds', report.to_json(include_timing=True)['cases'][0])
        self.assertEqual(str(report), f'{len(report)}/{len(report)} passed')
        with self.assertRaises(KeyError):
            report['no/such/case']

    def test_case_boundaries(self):
        with self.assertRaises(ValueError):
            RelationCase('bad', Id(('s',)), Id(('s', 's')), self.a1)
        with self.assertRaises(AssertionError):
            RelationCase('bad', Id(('s',)), None, self.a1, mode='approx')
        self.assertEqual(chain(tensor(Id(('s',)))), Id(('s',)))

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            build_suite('nonsense', self.a2)

    @unittest.skipUnless(SLOW, 'set HECKEUTILS_SLOW=1 to run')
    def test_large_m(self):
        for name in ('G2', 'I2_5', 'I2_7'):
            r = builtin.load(name)
            for suite in ('jw', 'vertex', 'cyclicity'):
                self.assertPassed(verify(build_suite(suite, r), threads=4))

    @unittest.skipUnless(SLOW, 'set HECKEUTILS_SLOW=1 to run')
    def test_b3_assoc(self):
        self.assertPassed(verify(build_suite('assoc', builtin.load('B3')), threads=4))


if __name__ == '__main__':
    unittest.main()
