"""二色量子数と二色量子二項係数。

[n]_s, [n]_t は Z[x_s, x_t] の元で、
    [0] = 0, [1] = 1, [n+1]_t = [n]_s x_t - [n-1]_t (色を入れ替えた式も同様)
で定まる。n が奇数なら [n]_s = [n]_t。

QuantumFraction は z = x_s x_t についての一変数有理関数を係数に持つ
x_s^c (c < 0 なら x_t^{-c}) の和で、二色 Temperley-Lieb の一般係数の計算に使う。
"""

import functools
import logging
import typing

from .algebra import (
    Frac, Poly, PrimeField, PrimeFieldElement, RationalField, RationalFunction,
    RationalFunctionField, _uni_eval,
)


__all__ = [
    'IntegralityError', 'COLORS', 'QVARS', 'other',
    'qnum', 'qbinom', 'qnum_specialized', 'qbinom_specialized', 'specialization_values',
    'binomials_invertible', 'QuantumFraction',
]

logger = logging.getLogger(__name__)

COLORS = ('s', 't')
QVARS = ('x_s', 'x_t')
QQ = RationalField()


class IntegralityError(ArithmeticError):
    """量子二項係数が多項式として割り切れない。"""


def other(color: str) -> str:
    assert color in COLORS, 'color must be "s" or "t". color={}'.format(color)
    return 't' if color == 's' else 's'


@functools.lru_cache(maxsize=None)
def qnum(n: int, color: str) -> Poly:
    """[n]_color を Q[x_s, x_t] の多項式として返す。

    Parameters
    ----------
    n: int
        負の値も可 ([-n] = -[n])。

    color: str
        's' または 't'。

    Returns
    -------
    Poly
    """
    assert color in COLORS, 'color must be "s" or "t". color={}'.format(color)
    if n < 0:
        return -qnum(-n, color)
    if n == 0:
        return Poly.zero(QVARS, QQ)
    if n == 1:
        return Poly.constant(QVARS, QQ, 1)
    x = Poly.variable(QVARS, QQ, f'x_{color}')
    return qnum(n - 1, other(color)) * x - qnum(n - 2, color)


def _binom_factors(n: int, k: int, color: str) -> typing.Tuple[list, list]:
    return [qnum(n - i, color) for i in range(k)], [qnum(i + 1, color) for i in range(k)]


@functools.lru_cache(maxsize=None)
def qbinom(n: int, k: int, color: str) -> Poly:
    """二色量子二項係数 [n k]_color。

    分子 [n][n-1]...[n-k+1] と分母 [1][2]...[k] の偶数番目の因子はすべて color で塗る。
    割り切れなければ IntegralityError。
    """
    if not 0 <= k <= n:
        raise ValueError(f'0 <= k <= n is required. n={n}, k={k}')
    numer, denom = _binom_factors(n, k, color)
    num = Poly.constant(QVARS, QQ, 1)
    for f in numer:
        num = num * f
    den = Poly.constant(QVARS, QQ, 1)
    for f in denom:
        den = den * f
    q = num.exact_div(den)
    if q is None:
        raise IntegralityError(f'[{n} {k}]_{color} is not a polynomial')
    return q


def specialization_values(realization, s, t) -> tuple:
    """x_s -> -a_st, x_t -> -a_ts"""
    return -realization.cartan_entry(s, t), -realization.cartan_entry(t, s)


def qnum_specialized(realization, pair: typing.Tuple, n: int, color: str):
    """[n]_color を realization の係数体で評価する。color 's' は pair[0] 側の色。"""
    s, t = pair
    assert realization.cox.index(s) != realization.cox.index(t), 'pair must consist of two distinct generators'
    xs, xt = specialization_values(realization, s, t)
    return qnum(n, color).evaluate([xs, xt], realization.field)


def qbinom_specialized(realization, pair: typing.Tuple, n: int, k: int, color: str):
    s, t = pair
    xs, xt = specialization_values(realization, s, t)
    return qbinom(n, k, color).evaluate([xs, xt], realization.field)


def binomials_invertible(field, xs, xt, n: int) -> bool:
    """[n k]_s, [n k]_t (1 <= k <= n) がすべて点 (xs, xt) で 0 でないか。

    JW_n の存在条件として予想されている条件で、診断用にのみ使う。
    """
    for k in range(1, n + 1):
        for color in COLORS:
            if qbinom(n, k, color).evaluate([xs, xt], field) == 0:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _z_field(base) -> RationalFunctionField:
    return RationalFunctionField(base, 'z')


class QuantumFraction(object):
    """x_s^c r(z) (z = x_s x_t) の有限和。

    c > 0 は x_s^c、c < 0 は x_t^{-c} を表す。
    x^{c1} x^{c2} は符号が異なるとき x^{c1+c2} z^{min(|c1|, |c2|)}。

    Parameters
    ----------
    base: RationalField | PrimeField
        係数の素体。

    components: dict
        c -> RationalFunction (z の有理関数)
    """

    __slots__ = ('base', 'zfield', 'components')

    def __init__(self, base, components: typing.Optional[dict] = None):
        self.base = base
        self.zfield = _z_field(base)
        self.components = {c: r for c, r in (components or {}).items() if r != 0}

    # --- 構成 ---

    @classmethod
    def scalar(cls, base, value) -> 'QuantumFraction':
        zf = _z_field(base)
        return cls(base, {0: zf(value)})

    @classmethod
    def x(cls, base, color: str) -> 'QuantumFraction':
        zf = _z_field(base)
        return cls(base, {1 if color == 's' else -1: zf.one()})

    @classmethod
    def from_poly(cls, base, p: Poly) -> 'QuantumFraction':
        """x_s, x_t の多項式から変換する。"""
        zf = _z_field(base)
        buckets = {}
        for (a, b), coeff in p.terms.items():
            c, j = a - b, min(a, b)
            poly = buckets.setdefault(c, {})
            poly[j] = poly.get(j, base.zero()) + base(coeff)
        components = {}
        for c, poly in buckets.items():
            coeffs = [poly.get(j, base.zero()) for j in range(max(poly) + 1)]
            components[c] = zf.from_coefficients(coeffs)
        return cls(base, components)

    @classmethod
    def qnum(cls, base, n: int, color: str) -> 'QuantumFraction':
        return cls.from_poly(base, qnum(n, color))

    def _like(self, components) -> 'QuantumFraction':
        return QuantumFraction(self.base, components)

    def _coerce(self, other) -> 'QuantumFraction':
        if isinstance(other, QuantumFraction):
            assert other.base == self.base, 'base fields differ: {} vs {}'.format(self.base, other.base)
            return other
        return QuantumFraction.scalar(self.base, other)

    def _zpow(self, k: int) -> RationalFunction:
        one, zero = self.base.one(), self.base.zero()
        return RationalFunction([zero] * k + [one], [one], self.zfield)

    # --- 算術 ---

    def is_zero(self) -> bool:
        return not self.components

    def is_homogeneous(self) -> bool:
        return len(self.components) <= 1

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.components)
        for c, r in other.components.items():
            out[c] = out[c] + r if c in out else r
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({c: -r for c, r in self.components.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for c1, r1 in self.components.items():
            for c2, r2 in other.components.items():
                r = r1 * r2
                if c1 * c2 < 0:
                    r = r * self._zpow(min(abs(c1), abs(c2)))
                c = c1 + c2
                out[c] = out[c] + r if c in out else r
        return self._like(out)

    __rmul__ = __mul__

    def inverse(self) -> 'QuantumFraction':
        if self.is_zero():
            raise ZeroDivisionError('0 is not invertible')
        if not self.is_homogeneous():
            raise ArithmeticError(f'{self} is not homogeneous; only homogeneous values are inverted')
        (c, r), = self.components.items()
        return self._like({-c: 1 / (r * self._zpow(abs(c)))})

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, AssertionError):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    # --- 変換 ---

    @staticmethod
    def _split_z(r: RationalFunction) -> typing.Tuple[int, list]:
        """分母を z^j q'(z) (q'(0) != 0) に分ける。"""
        den = list(r.den)
        j = 0
        while den[j] == 0:
            j += 1
        return j, den[j:]

    def _component_frac(self, c: int, r: RationalFunction) -> Frac:
        base = self.base
        j, qprime = self._split_z(r)
        i = min(abs(c), j)
        a, b = (0, 1) if c > 0 else (1, 0)

        def zpoly(coeffs, extra):
            # sum coeffs[k] (x_s x_t)^k に x_a, x_b の冪 extra を掛ける
            terms = {}
            for k, v in enumerate(coeffs):
                if v != 0:
                    mono = [k, k]
                    mono[0] += extra[0]
                    mono[1] += extra[1]
                    terms[tuple(mono)] = v
            return Poly(QVARS, base, terms)

        num_extra = [0, 0]
        num_extra[a] = abs(c) - i
        den_extra = [0, 0]
        den_extra[b] = i
        num = zpoly(list(r.num), num_extra)
        den = zpoly([base.zero()] * (j - i) + list(qprime), den_extra)
        return Frac(num, den)

    def to_frac(self) -> Frac:
        """x_s, x_t の既約な有理式に変換する。"""
        if self.is_zero():
            return Frac.constant(QVARS, self.base, 0)
        if self.is_homogeneous():
            (c, r), = self.components.items()
            return self._component_frac(c, r)
        total = None
        for c, r in sorted(self.components.items()):
            f = self._component_frac(c, r)
            total = f if total is None else total + f
        return total.reduce()

    def specialize(self, field, xs, xt):
        """点 (xs, xt) での値。既約な分母が 0 になるなら ZeroDivisionError。"""
        if self.is_zero():
            return field.zero()
        if not self.is_homogeneous():
            return self.to_frac().evaluate([xs, xt], field)
        (c, r), = self.components.items()
        j, qprime = self._split_z(r)
        i = min(abs(c), j)
        xa, xb = (xs, xt) if c > 0 else (xt, xs)
        z0 = xs * xt
        zero = field.zero()
        den = xb ** i * z0 ** (j - i) * _uni_eval([field(v) for v in qprime], z0, zero)
        if den == 0:
            raise ZeroDivisionError(f'denominator of {self} vanishes at x_s={xs}, x_t={xt}')
        num = xa ** (abs(c) - i) * _uni_eval([field(v) for v in r.num], z0, zero)
        return num / den

    def __str__(self):
        return str(self.to_frac())

    def __repr__(self):
        return f'QuantumFraction({self})'
