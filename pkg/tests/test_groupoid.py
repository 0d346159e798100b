import json
import unittest

import numpy as np

import sys
sys.path.append('.')
from src.heckeutils.groupoid import (
    EndpointError, LocMatrix, SumObject, compose, degree_check, diff, equal, identity, tensor, zero,
)
from src.heckeutils.realizations import builtin


class TestGroupoid(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        # 初期化処理 - 1度のみ
        cls.r = builtin.load('A1')
        cls.a2 = builtin.load('A2')

    @classmethod
    def tearDownClass(cls) -> None:
        # 終了処理 - 1度のみ
        pass

    def setUp(self):
        # 初期化処理 - unittestごと
        cox = self.r.cox
        self.empty = SumObject(cox, ())
        self.one = SumObject(cox, (0,))
        self.two = SumObject(cox, (0, 0))
        self.alpha = self.r.alpha('s')
        # 上端に点のある射 B_s -> 1 と下端に点のある射 1 -> B_s
        self.dot_top = LocMatrix(self.one, self.empty, {((), (0,)): self.alpha}, self.r)
        self.dot_bottom = LocMatrix(self.empty, self.one, {((0,), ()): 1}, self.r)

    def tearDown(self):
        # 終了処理 - unittestごと
        pass

    def test_sum_object(self):
        self.assertEqual(len(self.empty), 1)
        self.assertEqual(len(self.two), 4)
        self.assertEqual(self.two.labels, ((0, 0), (0, 1), (1, 0), (1, 1)))
        self.assertEqual([self.r.cox.format_element(x) for x in self.two.endpoints], ['id', 's', 's', 'id'])
        self.assertEqual(sorted(len(v) for v in self.two.classes.values()), [2, 2])
        self.assertEqual(self.empty.label(0), '()')
        self.assertEqual(self.one.tensor(self.one), self.two)
        obj = SumObject(self.a2.cox, (0, 1, 0))
        self.assertEqual(len(obj.classes), 6)

    def test_endpoint_error(self):
        with self.assertRaises(EndpointError):
            LocMatrix(self.one, self.one, {((0,), (1,)): 1}, self.r)
        with self.assertRaises(EndpointError):
            SumObject(self.r.cox, (0,), labels=[(0,), (0,)])
        with self.assertRaises(EndpointError):
            compose(self.dot_top, self.dot_top)

    def test_zero_entries_dropped(self):
        m = LocMatrix(self.one, self.one, {((0,), (0,)): 0, ((1,), (1,)): 1}, self.r)
        self.assertEqual(len(m.entries), 1)
        self.assertTrue(zero(self.one, self.empty, self.r).is_zero())

    def test_compose(self):
        barbell = compose(self.dot_top, self.dot_bottom)
        self.assertEqual(barbell.shape, (1, 1))
        self.assertEqual(barbell.entry((), ()), self.r.frac(self.alpha))
        self.assertEqual(self.dot_top @ identity(self.one, self.r), self.dot_top)
        # 下端の点と上端の点を逆に合成すると B_s の自己準同型になり、(0, 0) 成分だけを持つ
        e = compose(self.dot_bottom, self.dot_top)
        self.assertEqual(e.shape, (2, 2))
        self.assertEqual(list(e.entries), [(0, 0)])

    def test_tensor_twists(self):
        m = tensor(identity(self.one, self.r), self.dot_top)
        self.assertEqual(m.source, self.two)
        self.assertEqual(m.target, self.one)
        self.assertEqual(m.entry((0,), (0, 0)), self.r.frac(self.alpha))
        # 左の因子の端点 s で右の因子の成分がひねられる
        self.assertEqual(m.entry((1,), (1, 0)), self.r.frac(-self.alpha))
        self.assertEqual(len(m.entries), 2)

    def test_linear_structure(self):
        a = identity(self.one, self.r)
        b = a + a
        self.assertEqual(b, a.scalar_mul(2))
        self.assertTrue((b - a - a).is_zero())
        self.assertTrue(equal(-a, a.scalar_mul(-1)))
        with self.assertRaises(EndpointError):
            a + identity(self.two, self.r)

    def test_diff(self):
        a = identity(self.one, self.r)
        b = a.scalar_mul(self.alpha)
        out = diff(a, b)
        self.assertEqual(len(out), 2)
        row, col, u, v = out[0]
        self.assertEqual((row, col), ('0', '0'))
        self.assertTrue(u.is_one())
        self.assertEqual(v, self.r.frac(self.alpha))
        self.assertEqual(len(diff(a, b, limit=1)), 1)
        self.assertEqual(diff(a, a), [])

    def test_output(self):
        m = tensor(identity(self.one, self.r), self.dot_top)
        arr = m.to_array()
        self.assertEqual(arr.shape, (2, 4))
        self.assertEqual(arr.dtype, np.dtype(object))
        frame = m.to_frame()
        self.assertEqual(list(frame.columns), ['row', 'col', 'endpoint', 'value'])
        self.assertEqual(list(frame['col']), ['00', '10'])
        self.assertEqual(list(frame['endpoint']), ['id', 's'])
        data = m.to_json()
        self.assertEqual(data['source_word'], ['s', 's'])
        self.assertEqual([e['col'] for e in data['entries']], ['00', '10'])
        self.assertEqual(json.loads(m.dumps()), json.loads(json.dumps(data)))
        self.assertIn('[1, 10]', str(m))

    def test_degree_check(self):
        self.assertTrue(degree_check(self.dot_top, 1))
        self.assertFalse(degree_check(self.dot_top, 0))
        self.assertTrue(degree_check(self.dot_bottom, 1))
        self.assertTrue(degree_check(zero(self.one, self.empty, self.r), 5))


if __name__ == '__main__':
    unittest.main()
