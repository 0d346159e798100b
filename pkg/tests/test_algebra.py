import random
import unittest
from fractions import Fraction

import sympy

import sys
sys.path.append('.')
from src.heckeutils.algebra import (
    Frac, NumberField, Poly, PrimeField, RationalField, RationalFunctionField, StructureError,
    frac_degree, frac_eq, frac_reduce, poly_gcd,
)


QQ = RationalField()
XY = ('x', 'y')


def _poly(terms):
    return Poly(XY, QQ, terms)


def _random_terms(rng, degree):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        i = rng.randint(0, degree)
        j = rng.randint(0, degree - i)
        terms[(i, j)] = rng.randint(-3, 3)
    if all(c == 0 for c in terms.values()):
        terms[(0, 0)] = 1
    return terms


def _to_sympy(terms):
    x, y = sympy.symbols('x y')
    return sum((c * x ** i * y ** j for (i, j), c in terms.items()), sympy.Integer(0))


def _random_rational(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_element(field, rng):
    """field のランダムな元。"""
    if isinstance(field, RationalField):
        return _random_rational(rng)
    if isinstance(field, PrimeField):
        return field(rng.randint(0, field.p - 1))
    if isinstance(field, NumberField):
        g = field.gen()
        return sum((_random_rational(rng) * g ** i for i in range(field.degree)), field.zero())
    num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
    den = [rng.randint(-3, 3) for _ in range(rng.randint(0, 2))] + [1]
    return field.from_coefficients(num, den)


class TestAlgebra(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        # 初期化処理 - 1度のみ
        pass

    @classmethod
    def tearDownClass(cls) -> None:
        # 終了処理 - 1度のみ
        pass

    def setUp(self):
        # 初期化処理 - unittestごと
        self.x = Poly.variable(XY, QQ, 'x')
        self.y = Poly.variable(XY, QQ, 'y')

    def tearDown(self):
        # 終了処理 - unittestごと
        pass

    def test_poly_arith(self):
        x, y = self.x, self.y
        p = (x + y) ** 2
        self.assertEqual(p, x * x + 2 * x * y + y * y)
        self.assertEqual(p - x * x - y * y, 2 * x * y)
        self.assertTrue((x - x).is_zero())
        self.assertTrue(p.is_homogeneous())
        self.assertFalse((p + 1).is_homogeneous())
        self.assertEqual(p.total_degree(), 2)
        self.assertEqual(str(x - y), 'x - y')

    def test_exact_div(self):
        x, y = self.x, self.y
        self.assertEqual((x * x - y * y).exact_div(x - y), x + y)
        self.assertIsNone((x * x + y * y).exact_div(x - y))
        with self.assertRaises(ZeroDivisionError):
            x.exact_div(x - x)

    def test_variable_mismatch(self):
        z = Poly.variable(('x', 'z'), QQ, 'z')
        with self.assertRaises(StructureError):
            self.x + z
        with self.assertRaises(StructureError):
            Poly.variable(XY, QQ, 'w')

    def test_substitute(self):
        x, y = self.x, self.y
        # x -> -x, y -> x + y
        p = x * y
        self.assertEqual(p.substitute([-x, x + y]), -x * x - x * y)

    def test_gcd(self):
        x, y = self.x, self.y
        self.assertEqual(poly_gcd(x * x - y * y, (x - y) ** 2), x - y)
        self.assertEqual(poly_gcd(2 * x, 4 * y), Poly.constant(XY, QQ, 1))

    def test_gcd_random(self):
        rng = random.Random(0)
        for _ in range(300):
            f, g, h = (_random_terms(rng, rng.randint(1, 3)) for _ in range(3))
            a = _poly(f) * _poly(h)
            b = _poly(g) * _poly(h)
            if a.is_zero() or b.is_zero():
                continue
            expected = sympy.Poly(sympy.gcd(sympy.expand(_to_sympy(f) * _to_sympy(h)),
                                            sympy.expand(_to_sympy(g) * _to_sympy(h))), *sympy.symbols('x y'))
            got = poly_gcd(a, b)
            self.assertIsNotNone(a.exact_div(got))
            self.assertIsNotNone(b.exact_div(got))
            self.assertEqual(got.total_degree(), expected.total_degree())

    def test_frac(self):
        x, y = self.x, self.y
        a = Frac(Poly.constant(XY, QQ, 1), x) + Frac(Poly.constant(XY, QQ, 1), y)
        self.assertEqual(a, Frac(x + y, x * y))
        # 約分していない表示でも交差積で等しい
        self.assertTrue(frac_eq(Frac.from_factors(x * y, [x * x]), Frac(y, x)))
        self.assertEqual(frac_reduce(Frac.from_factors(x * x - y * y, [x - y, x])), Frac(x + y, x))
        self.assertTrue((a * a.inverse()).is_one())
        with self.assertRaises(ZeroDivisionError):
            Frac(x, x - x)

    def test_frac_degree(self):
        x, y = self.x, self.y
        self.assertEqual(frac_degree(Frac(x, y * y)), -2)
        self.assertEqual(frac_degree(Frac(x * y)), 4)
        self.assertIsNone(frac_degree(Frac(x + 1)))
        self.assertIsNone(frac_degree(Frac(x - x)))

    def test_frac_json(self):
        x, y = self.x, self.y
        a = Frac(x * x + Fraction(1, 2) * y, x - y)
        self.assertEqual(Frac.from_json(XY, QQ, a.to_json()), a)

    def test_frac_evaluate(self):
        x, y = self.x, self.y
        a = Frac(x + y, x - y)
        self.assertEqual(a.evaluate([Fraction(3), Fraction(1)]), Fraction(2))
        with self.assertRaises(ZeroDivisionError):
            a.evaluate([Fraction(1), Fraction(1)])

    def test_rational_field(self):
        self.assertEqual(QQ.parse('-3/4'), Fraction(-3, 4))
        with self.assertRaises(TypeError):
            QQ(0.5)

    def test_prime_field(self):
        with self.assertRaises(ValueError):
            PrimeField(4)
        F5 = PrimeField(5)
        self.assertEqual(F5(2) * F5(3), F5(1))
        self.assertEqual(F5.parse('1/2'), F5(3))
        with self.assertRaises(ZeroDivisionError):
            F5(1) / F5(5)

    def test_number_field(self):
        K = NumberField('x^2 - x - 1', 'x')
        phi = K.gen()
        self.assertEqual(phi * phi, phi + 1)
        self.assertEqual(1 / phi, phi - 1)
        self.assertEqual(K.parse('x^3'), 2 * phi + 1)
        with self.assertRaises(ValueError):
            NumberField('2*x^2 - 1', 'x')

    def test_rational_function_field(self):
        Kq = RationalFunctionField(QQ, 'q')
        q = Kq.gen()
        self.assertEqual(q * (1 / q), Kq.one())
        self.assertEqual(Kq.parse('(q^2 - 1)/(q - 1)'), q + 1)
        self.assertNotEqual(q, Kq(1))

    def test_field_axioms_random(self):
        fields = [
            QQ,
            PrimeField(7),
            NumberField('x^3 - x^2 - 2*x + 1', 'x'),
            RationalFunctionField(QQ, 'q'),
            RationalFunctionField(PrimeField(5), 'q'),
        ]
        rng = random.Random(1)
        for field in fields:
            zero, one = field.zero(), field.one()
            for _ in range(1000):
                a, b, c = (_random_element(field, rng) for _ in range(3))
                self.assertEqual(a + b, b + a, field)
                self.assertEqual((a + b) + c, a + (b + c), field)
                self.assertEqual(a * b, b * a, field)
                self.assertEqual((a * b) * c, a * (b * c), field)
                self.assertEqual(a * (b + c), a * b + a * c, field)
                self.assertEqual(a + zero, a, field)
                self.assertEqual(a * one, a, field)
                self.assertEqual(a - a, zero, field)
                if a != zero:
                    self.assertEqual(a * (one / a), one, field)
                    self.assertEqual((a * b) / a, b, field)

    def test_poly_over_number_field(self):
        K = NumberField('x^2 - 2', 'x')
        a = Poly.variable(XY, K, 'x')
        r = K.gen()
        p = a * r
        self.assertEqual(p * r, 2 * a)


if __name__ == '__main__':
    unittest.main()
