import unittest

import sys
sys.path.append('.')
from src.heckeutils.algebra import PrimeField, RationalField
from src.heckeutils.quantum import QuantumFraction
from src.heckeutils.realizations import builtin
from src.heckeutils.tl2 import (
    GenericRing, JonesWenzlNotFound, NotRotatable, SpecializationPoint,
    all_matchings, cap, catalan, compose, cup, flip_color, identity, identity_matching,
    is_jones_wenzl, is_rotatable, jw_at, jw_exists, jw_generic, jw_specialize,
    poly_eval, ptr, ptr1, regions, rotate_by_one, rotate_matching, rotation_coefficient_diagram,
    rotation_eigenvalue, single_clasp_expand, tensor_matchings,
)


QQ = RationalField()


class TestTL2(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        # 初期化処理 - 1度のみ
        cls.ring = GenericRing(QQ)
        cls.zero_qq = SpecializationPoint.of(QQ, 0, 0)
        F2 = PrimeField(2)
        cls.zero_f2 = SpecializationPoint.of(F2, 0, 0)

    @classmethod
    def tearDownClass(cls) -> None:
        # 終了処理 - 1度のみ
        pass

    def setUp(self):
        # 初期化処理 - unittestごと
        pass

    def tearDown(self):
        # 終了処理 - unittestごと
        pass

    def test_matchings(self):
        self.assertEqual([catalan(n) for n in range(6)], [1, 1, 2, 5, 14, 42])
        self.assertEqual(len(all_matchings(3, 3)), 5)
        self.assertEqual(len(all_matchings(4, 0)), 2)
        with self.assertRaises(ValueError):
            all_matchings(1, 2)
        M = identity_matching(2)
        self.assertTrue(M.is_identity())
        self.assertEqual(M.render(), '||/||')
        self.assertEqual(M.through_strands(), 2)

    def test_regions(self):
        M = identity_matching(3, 't')
        colors = sorted(c for _, c in regions(M))
        self.assertEqual(colors, ['s', 's', 't', 't'])
        self.assertEqual(len(regions(all_matchings(0, 0)[0])), 1)

    def test_rotation_of_matchings(self):
        for M in all_matchings(3, 3):
            self.assertEqual(rotate_matching(rotate_matching(M), inverse=True), M)
            N = M
            for _ in range(6):
                N = rotate_matching(N)
            self.assertEqual(N, M)

    def test_tensor_colors(self):
        left = identity_matching(1, 's')
        with self.assertRaises(ValueError):
            tensor_matchings(left, identity_matching(1, 's'))
        self.assertEqual(tensor_matchings(left, identity_matching(1, 't')), identity_matching(2, 's'))

    def test_circle(self):
        ring = self.ring
        bubble = compose(cap(2, 0, 's', ring), cup(2, 0, 's', ring))
        self.assertEqual(bubble.identity_coefficient(), -QuantumFraction.x(QQ, 's'))
        bubble = compose(cap(2, 0, 't', ring), cup(2, 0, 't', ring))
        self.assertEqual(bubble.identity_coefficient(), -QuantumFraction.x(QQ, 't'))

    def test_jw_small(self):
        ring = self.ring
        jw2 = jw_generic(2, 's')
        e = compose(cup(2, 0, 's', ring), cap(2, 0, 's', ring))
        expected = identity(2, 's', ring) + e.scale(QuantumFraction.qnum(QQ, 2, 's').inverse())
        self.assertEqual(jw2, expected)
        self.assertEqual(jw_generic(1, 's'), identity(1, 't', ring))
        self.assertEqual(jw_generic(0, 's').identity_coefficient(), 1)

    def test_jw_generic(self):
        for n in range(1, 5):
            for c in ('s', 't'):
                f = jw_generic(n, c)
                self.assertEqual(f.rightmost, c)
                self.assertTrue(is_jones_wenzl(f), (n, c))
                self.assertEqual(len(f.terms), catalan(n))

    def test_methods_agree(self):
        for n in range(2, 6):
            self.assertEqual(jw_generic(n, 's', method='two_sided'), jw_generic(n, 's', method='single_clasp'))
        self.assertEqual(single_clasp_expand(3, 't'), jw_generic(4, 't'))

    def test_jw3_coefficients(self):
        # 単位元が 1、残り 4 つは 1/[3], 1/[3], [2]_s/[3], [2]_t/[3]
        q3 = QuantumFraction.qnum(QQ, 3, 's')
        for c in ('s', 't'):
            f = jw_generic(3, c)
            self.assertEqual(f.identity_coefficient(), 1)
            rest = [v for M, v in f.items() if not M.is_identity()]
            expected = [q3.inverse(), q3.inverse(),
                        QuantumFraction.qnum(QQ, 2, 's') / q3, QuantumFraction.qnum(QQ, 2, 't') / q3]
            for value in expected:
                self.assertIn(value, rest, c)
                rest.remove(value)
            self.assertEqual(rest, [])

    def test_rotation_coefficient(self):
        # 反時計回りに 1 本回して単位元になる図式の係数は 1/[n]_s
        for n in range(2, 7):
            f = jw_generic(n, 's')
            M = rotation_coefficient_diagram(n, f.leftmost)
            self.assertIn(M, f.terms)
            self.assertTrue(rotate_matching(M).is_identity())
            self.assertEqual(f.coefficient(M), QuantumFraction.qnum(QQ, n, 's').inverse(), n)

    def test_partial_trace(self):
        # ptr_1(JW_n) = -[n+1]_t / [n]_s
        for n in range(1, 9):
            expected = -QuantumFraction.qnum(QQ, n + 1, 't') / QuantumFraction.qnum(QQ, n, 's')
            self.assertEqual(ptr1(jw_generic(n, 's')), expected, n)
        with self.assertRaises(ValueError):
            ptr(identity(0, 's', self.ring))

    def test_specialize_at_zero(self):
        self.assertFalse(jw_exists(self.zero_qq, 2, 's'))
        with self.assertRaises(JonesWenzlNotFound):
            jw_specialize(self.zero_qq, 2, 's')
        self.assertTrue(jw_exists(self.zero_qq, 3, 's'))
        self.assertTrue(jw_exists(self.zero_f2, 3, 's'))
        f = jw_specialize(self.zero_qq, 3, 's')
        self.assertTrue(is_jones_wenzl(f))
        self.assertEqual(ptr1(f), 0)
        self.assertFalse(ptr(f).is_zero())
        # 標数 2 でだけ回転可能
        self.assertFalse(is_rotatable(self.zero_qq, 3))
        self.assertTrue(is_rotatable(self.zero_f2, 3))

    def test_existence_depends_on_characteristic(self):
        # [5 2] = -2 at x_s = x_t = 0
        self.assertTrue(jw_exists(self.zero_qq, 5, 's'))
        self.assertFalse(jw_exists(self.zero_f2, 5, 's'))

    def test_jw5_at_zero_not_rotatable(self):
        # [6] = 0 なので ptr_1 は消えるが、ptr 自体は残る
        f = jw_specialize(self.zero_qq, 5, 's')
        self.assertEqual(ptr1(f), 0)
        self.assertFalse(ptr(f).is_zero())
        self.assertFalse(is_rotatable(self.zero_qq, 5))
        with self.assertRaises(NotRotatable):
            rotation_eigenvalue(self.zero_qq, 5, 's')

    def test_jw8_at_one(self):
        # x_s = x_t = 1 では [3] = 0, [8] = 1
        point = SpecializationPoint.of(QQ, 1, 1)
        self.assertEqual(point.qnum(3, 's'), 0)
        self.assertEqual(point.qnum(8, 's'), 1)
        self.assertTrue(jw_exists(point, 8, 's'))
        f = jw_specialize(point, 8, 's')
        self.assertEqual(ptr1(f), 0)
        trace = ptr(f)
        self.assertFalse(trace.is_zero())
        # ptr の係数はすべて 3 で割り切れる (分母に 3 が残らない)
        for M, c in trace.items():
            self.assertNotEqual((c / 3).denominator % 3, 0, M)
        self.assertFalse(is_rotatable(point, 8))
        # 標数 3 では回転可能
        F3 = PrimeField(3)
        point_f3 = SpecializationPoint.of(F3, 1, 1)
        self.assertTrue(jw_exists(point_f3, 8, 's'))
        self.assertTrue(ptr(jw_specialize(point_f3, 8, 's')).is_zero())
        self.assertTrue(is_rotatable(point_f3, 8))

    def test_rotation_eigenvalue(self):
        r = builtin.load('I2_3_q')
        point = SpecializationPoint.from_realization(r, 's', 't')
        self.assertTrue(is_rotatable(point, 2))
        a_s = rotation_eigenvalue(point, 2, 's')
        a_t = rotation_eigenvalue(point, 2, 't')
        self.assertEqual(a_s, point.xt)
        self.assertEqual(a_t, point.xs)
        self.assertEqual(a_s * a_t, 1)
        f = jw_specialize(point, 2, 's')
        self.assertEqual(rotate_by_one(f), jw_specialize(point, 2, 't').scale(a_s))

    def test_poly_eval(self):
        # JW_{m-1} (左端が s) の評価は π_{s,t}
        for name in ['A2', 'B2', 'I2_5', 'G2', 'I2_7']:
            r = builtin.load(name)
            m = int(r.order('s', 't'))
            f = jw_at(r, ('s', 't'), m - 1, flip_color('s', m - 1))
            self.assertEqual(f.leftmost, 's')
            self.assertEqual(poly_eval(f, r, ('s', 't')), r.pi('s', 't'), name)


if __name__ == '__main__':
    unittest.main()
