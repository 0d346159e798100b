"""厳密計算のための係数体・多項式・有理式。

係数体は 4 種類。
* RationalField : 有理数体 (fractions.Fraction)
* PrimeField : 素体 F_p
* NumberField : 有理数体上の単拡大 Q[x]/(f)
* RationalFunctionField : 一変数有理関数体 k(q)

多項式 (Poly) は単項式 -> 係数の疎な辞書で持つ。
単項式順序は固定した変数順での次数付き辞書式順序 (grlex)。
有理式 (Frac) の等価判定は常に交差積で行うので、約分が不完全でも結果は正しい。
"""

from __future__ import annotations

import fractions
import functools
import logging
import typing

import sympy


__all__ = [
    'StructureError',
    'CoeffField', 'RationalField', 'PrimeField', 'NumberField', 'RationalFunctionField',
    'PrimeFieldElement', 'NumberFieldElement', 'RationalFunction',
    'Poly', 'Frac',
    'poly_arith', 'poly_exact_div', 'poly_gcd',
    'frac_eq', 'frac_reduce', 'frac_degree', 'specialize_poly',
]

logger = logging.getLogger(__name__)

Fraction = fractions.Fraction


class StructureError(ValueError):
    """変数集合や係数体が一致しない演算。"""


# ---------------------------------------------------------------------------
# 一変数多項式の補助関数 (係数は低次から高次へのリスト)
# ---------------------------------------------------------------------------

def _uni_trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _uni_add(a: list, b: list, zero) -> list:
    n = max(len(a), len(b))
    return _uni_trim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)])


def _uni_sub(a: list, b: list, zero) -> list:
    return _uni_add(a, [-c for c in b], zero)


def _uni_mul(a: list, b: list, zero) -> list:
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _uni_trim(out)


def _uni_divmod(a: list, b: list, zero) -> typing.Tuple[list, list]:
    b = _uni_trim(b)
    if not b:
        raise ZeroDivisionError('division by the zero polynomial')
    a = _uni_trim(a)
    q = [zero] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = a[d + i] - c * y
        a = _uni_trim(a)
    return _uni_trim(q), a


def _uni_monic(a: list) -> list:
    if not a:
        return []
    inv = 1 / a[-1]
    return [c * inv for c in a]


def _uni_gcd(a: list, b: list, zero) -> list:
    a, b = _uni_trim(a), _uni_trim(b)
    while b:
        a, b = b, _uni_divmod(a, b, zero)[1]
    return _uni_monic(a)


def _uni_xgcd(a: list, b: list, zero, one) -> typing.Tuple[list, list, list]:
    """g = s*a + t*b となる (g, s, t) を返す。g はモニック。"""
    r0, r1 = _uni_trim(a), _uni_trim(b)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = _uni_divmod(r0, r1, zero)
        r0, r1 = r1, r
        s0, s1 = s1, _uni_sub(s0, _uni_mul(q, s1, zero), zero)
        t0, t1 = t1, _uni_sub(t0, _uni_mul(q, t1, zero), zero)
    if not r0:
        return [], [], []
    inv = one / r0[-1]
    return [c * inv for c in r0], [c * inv for c in s0], [c * inv for c in t0]


def _uni_eval(a: list, x, zero):
    acc = zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _format_coeff(text: str) -> str:
    """複合的な係数 (数体の元など) は括弧で囲む。"""
    body = text[1:] if text.startswith('-') else text
    if any(ch in body for ch in '+- '):
        return f'({text})'
    return text


def _uni_format(a: list, var: str) -> str:
    if not a:
        return '0'
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        mono = '' if d == 0 else (var if d == 1 else f'{var}^{d}')
        parts.append(_join_coeff(str(c), mono))
    return _join_terms(parts)


def _join_coeff(coeff: str, mono: str) -> str:
    if not mono:
        return coeff
    if coeff == '1':
        return mono
    if coeff == '-1':
        return '-' + mono
    return f'{_format_coeff(coeff)}*{mono}'


def _join_terms(parts: typing.List[str]) -> str:
    if not parts:
        return '0'
    out = parts[0]
    for p in parts[1:]:
        out += f' - {p[1:]}' if p.startswith('-') else f' + {p}'
    return out


def _parse_rational(text) -> Fraction:
    value = sympy.nsimplify(sympy.sympify(str(text), rational=True))
    if not value.is_Rational:
        raise ValueError(f'not a rational literal: {text!r}')
    return Fraction(int(value.p), int(value.q))


# ---------------------------------------------------------------------------
# 係数体
# ---------------------------------------------------------------------------

class _FieldElement(object):
    """演算子の共通実装。サブクラスは _add, _mul, _neg, _inv, _key を実装する。"""

    __slots__ = ('field',)

    def _lift(self, other):
        try:
            return self.field(other)
        except (TypeError, StructureError):
            return None

    def __add__(self, other):
        other = self._lift(other)
        return NotImplemented if other is None else self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return NotImplemented if other is None else self._add(other._neg())

    def __rsub__(self, other):
        other = self._lift(other)
        return NotImplemented if other is None else other._add(self._neg())

    def __mul__(self, other):
        other = self._lift(other)
        return NotImplemented if other is None else self._mul(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return NotImplemented if other is None else self._mul(other._inv())

    def __rtruediv__(self, other):
        other = self._lift(other)
        return NotImplemented if other is None else other._mul(self._inv())

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return self._inv() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result._mul(base)
            base = base._mul(base)
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __bool__(self):
        return self != 0

    def __repr__(self):
        return f'{type(self).__name__}({self})'


class CoeffField(object):
    """係数体の抽象クラス。

    `field(value)` で int / Fraction / 同じ体の元を体の元に変換する。
    """

    kind = None

    def __call__(self, value):
        raise NotImplementedError

    def parse(self, text):
        """設定ファイルのリテラルを体の元に変換する。"""
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    def prime_field(self) -> 'CoeffField':
        raise NotImplementedError

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def format(self, value) -> str:
        return str(self(value))

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoeffField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return str(self)


class RationalField(CoeffField):
    """有理数体。元は fractions.Fraction そのもの。"""

    kind = 'rational'

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f'cannot coerce {value!r} into the rationals')

    def parse(self, text):
        return _parse_rational(text)

    @property
    def characteristic(self) -> int:
        return 0

    def prime_field(self):
        return self

    def _key(self):
        return ('rational',)

    def __str__(self):
        return 'QQ'


class PrimeFieldElement(_FieldElement):
    __slots__ = ('value',)

    def __init__(self, value: int, field: 'PrimeField'):
        self.field = field
        self.value = value % field.p

    def _add(self, other):
        return PrimeFieldElement(self.value + other.value, self.field)

    def _mul(self, other):
        return PrimeFieldElement(self.value * other.value, self.field)

    def _neg(self):
        return PrimeFieldElement(-self.value, self.field)

    def _inv(self):
        if self.value == 0:
            raise ZeroDivisionError(f'0 is not invertible in F_{self.field.p}')
        p = self.field.p
        return PrimeFieldElement(pow(self.value, p - 2, p), self.field)

    def _key(self):
        return (self.field.p, self.value)

    def __str__(self):
        return str(self.value)


class PrimeField(CoeffField):
    """素体 F_p。p が素数でなければ ValueError。"""

    kind = 'prime'

    def __init__(self, p: int):
        if not sympy.isprime(p):
            raise ValueError(f'p must be prime. p={p}')
        self.p = int(p)

    def __call__(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise StructureError(f'element of F_{value.field.p} used in F_{self.p}')
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f'{value} has no image in F_{self.p}')
            return PrimeFieldElement(value.numerator * pow(den, self.p - 2, self.p), self)
        raise TypeError(f'cannot coerce {value!r} into F_{self.p}')

    def parse(self, text):
        return self(_parse_rational(text))

    @property
    def characteristic(self) -> int:
        return self.p

    def prime_field(self):
        return self

    def _key(self):
        return ('prime', self.p)

    def __str__(self):
        return f'GF({self.p})'


class NumberFieldElement(_FieldElement):
    __slots__ = ('coeffs',)

    def __init__(self, coeffs, field: 'NumberField'):
        self.field = field
        self.coeffs = tuple(_uni_trim(coeffs))

    def _add(self, other):
        return NumberFieldElement(_uni_add(list(self.coeffs), list(other.coeffs), Fraction(0)), self.field)

    def _mul(self, other):
        prod = _uni_mul(list(self.coeffs), list(other.coeffs), Fraction(0))
        return NumberFieldElement(self.field._reduce(prod), self.field)

    def _neg(self):
        return NumberFieldElement([-c for c in self.coeffs], self.field)

    def _inv(self):
        if not self.coeffs:
            raise ZeroDivisionError('0 is not invertible')
        g, s, _ = _uni_xgcd(list(self.coeffs), list(self.field.modulus), Fraction(0), Fraction(1))
        if g != [Fraction(1)]:
            raise ZeroDivisionError(f'{self} is a zero divisor; the modulus is reducible')
        return NumberFieldElement(self.field._reduce(s), self.field)

    def _key(self):
        return self.coeffs

    def __str__(self):
        return _uni_format(list(self.coeffs), self.field.generator)


class NumberField(CoeffField):
    """Q[x]/(modulus)。

    modulus はモニックで次数 1 以上 (既約性は呼び出し側の責任)。
    元は次数 < deg(modulus) の多項式で表し、逆元は拡張ユークリッド互除法で求める。
    """

    kind = 'number'

    def __init__(self, modulus, generator: str = 'x'):
        self.generator = generator
        if isinstance(modulus, str):
            poly = sympy.Poly(sympy.sympify(modulus), sympy.Symbol(generator))
            modulus = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        modulus = _uni_trim([Fraction(c) for c in modulus])
        if len(modulus) < 2:
            raise ValueError(f'modulus must have degree >= 1. modulus={modulus}')
        if modulus[-1] != 1:
            raise ValueError(f'modulus must be monic. modulus={_uni_format(modulus, generator)}')
        self.modulus = tuple(modulus)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def _reduce(self, coeffs: list) -> list:
        return _uni_divmod(coeffs, list(self.modulus), Fraction(0))[1]

    def gen(self) -> NumberFieldElement:
        return NumberFieldElement(self._reduce([Fraction(0), Fraction(1)]), self)

    def __call__(self, value):
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise StructureError(f'element of {value.field} used in {self}')
            return value
        if isinstance(value, (int, Fraction)):
            return NumberFieldElement([Fraction(value)], self)
        raise TypeError(f'cannot coerce {value!r} into {self}')

    def parse(self, text):
        poly = sympy.Poly(sympy.sympify(str(text)), sympy.Symbol(self.generator))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return NumberFieldElement(self._reduce(coeffs), self)

    @property
    def characteristic(self) -> int:
        return 0

    def prime_field(self):
        return RationalField()

    def _key(self):
        return ('number', self.modulus, self.generator)

    def __str__(self):
        return f'QQ[{self.generator}]/({_uni_format(list(self.modulus), self.generator)})'


class RationalFunction(_FieldElement):
    """k(q) の元。分子分母は互いに素で、分母はモニック。"""

    __slots__ = ('num', 'den')

    def __init__(self, num, den, field: 'RationalFunctionField'):
        zero = field.base.zero()
        num, den = _uni_trim(num), _uni_trim(den)
        if not den:
            raise ZeroDivisionError('zero denominator')
        if num:
            g = _uni_gcd(num, den, zero)
            if len(g) > 1:
                num = _uni_divmod(num, g, zero)[0]
                den = _uni_divmod(den, g, zero)[0]
            inv = 1 / den[-1]
            num = [c * inv for c in num]
            den = [c * inv for c in den]
        else:
            den = [field.base.one()]
        self.field = field
        self.num = tuple(num)
        self.den = tuple(den)

    def _add(self, other):
        zero = self.field.base.zero()
        if self.den == other.den:
            return RationalFunction(_uni_add(list(self.num), list(other.num), zero), list(self.den), self.field)
        num = _uni_add(_uni_mul(list(self.num), list(other.den), zero),
                       _uni_mul(list(other.num), list(self.den), zero), zero)
        return RationalFunction(num, _uni_mul(list(self.den), list(other.den), zero), self.field)

    def _mul(self, other):
        zero = self.field.base.zero()
        return RationalFunction(_uni_mul(list(self.num), list(other.num), zero),
                                _uni_mul(list(self.den), list(other.den), zero), self.field)

    def _neg(self):
        return RationalFunction([-c for c in self.num], list(self.den), self.field)

    def _inv(self):
        if not self.num:
            raise ZeroDivisionError('0 is not invertible')
        return RationalFunction(list(self.den), list(self.num), self.field)

    def _key(self):
        return (self.num, self.den)

    def evaluate(self, x, zero=None):
        """分母が消える点では ZeroDivisionError。"""
        zero = self.field.base.zero() if zero is None else zero
        d = _uni_eval(list(self.den), x, zero)
        if d == 0:
            raise ZeroDivisionError(f'denominator of {self} vanishes at {x}')
        return _uni_eval(list(self.num), x, zero) / d

    def __str__(self):
        var = self.field.variable
        num = _uni_format(list(self.num), var)
        if len(self.den) == 1:
            return num
        return f'({num})/({_uni_format(list(self.den), var)})'


class RationalFunctionField(CoeffField):
    """base(variable)。約分は一変数 gcd で行う。"""

    kind = 'rational_functions'

    def __init__(self, base: CoeffField, variable: str = 'q'):
        assert isinstance(base, (RationalField, PrimeField)), 'base must be QQ or GF(p). base={}'.format(base)
        self.base = base
        self.variable = variable

    def gen(self) -> RationalFunction:
        return RationalFunction([self.base.zero(), self.base.one()], [self.base.one()], self)

    def __call__(self, value):
        if isinstance(value, RationalFunction):
            if value.field != self:
                raise StructureError(f'element of {value.field} used in {self}')
            return value
        return RationalFunction([self.base(value)], [self.base.one()], self)

    def from_coefficients(self, num, den=None) -> RationalFunction:
        num = [self.base(c) for c in num]
        den = [self.base.one()] if den is None else [self.base(c) for c in den]
        return RationalFunction(num, den, self)

    def parse(self, text):
        var = sympy.Symbol(self.variable)
        expr = sympy.together(sympy.sympify(str(text)))
        num, den = sympy.fraction(expr)

        def coeffs(e):
            poly = sympy.Poly(e, var)
            return [self.base(Fraction(int(c.p), int(c.q))) for c in reversed(poly.all_coeffs())]

        return RationalFunction(coeffs(num), coeffs(den), self)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def prime_field(self):
        return self.base.prime_field()

    def _key(self):
        return ('rational_functions', self.base._key(), self.variable)

    def __str__(self):
        return f'{self.base}({self.variable})'


# ---------------------------------------------------------------------------
# 多変数多項式
# ---------------------------------------------------------------------------

Monomial = typing.Tuple[int, ...]


def _grlex(mono: Monomial):
    return (sum(mono), mono)


class Poly(object):
    """係数体上の多変数多項式。

    Parameters
    ----------
    variables: Sequence[str]
        変数名 (順序が単項式順序を決める)。

    field: CoeffField
        係数体。

    terms: dict
        単項式 (指数のタプル) -> 係数。0 の係数は捨てる。
    """

    __slots__ = ('variables', 'field', 'terms', '_hash')

    def __init__(self, variables, field: CoeffField, terms: typing.Optional[dict] = None):
        self.variables = tuple(variables)
        self.field = field
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            assert len(mono) == len(self.variables), 'monomial {} does not fit variables {}'.format(mono, self.variables)
            c = field(c)
            if c != 0:
                clean[mono] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, field, terms) -> 'Poly':
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.field = field
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, variables, field) -> 'Poly':
        return cls._raw(tuple(variables), field, {})

    @classmethod
    def constant(cls, variables, field, c) -> 'Poly':
        variables = tuple(variables)
        return cls(variables, field, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables, field, exponents, c=1) -> 'Poly':
        return cls(variables, field, {tuple(exponents): c})

    @classmethod
    def variable(cls, variables, field, name: str) -> 'Poly':
        variables = tuple(variables)
        if name not in variables:
            raise StructureError(f'unknown variable {name!r}. variables={variables}')
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, field, {mono: 1})

    @classmethod
    def linear(cls, variables, field, coeffs) -> 'Poly':
        """sum coeffs[i] * variables[i]"""
        variables = tuple(variables)
        n = len(variables)
        terms = {}
        for i, c in enumerate(coeffs):
            terms[tuple(1 if j == i else 0 for j in range(n))] = c
        return cls(variables, field, terms)

    # --- 構造 ---

    def _like(self, terms) -> 'Poly':
        return Poly._raw(self.variables, self.field, terms)

    def _coerce(self, other) -> 'Poly':
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise StructureError(f'variable sets differ: {self.variables} vs {other.variables}')
            if other.field != self.field:
                raise StructureError(f'coefficient fields differ: {self.field} vs {other.field}')
            return other
        return Poly.constant(self.variables, self.field, self.field(other))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * len(self.variables), self.field.zero())

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value() == 1

    def leading_term(self) -> typing.Tuple[Monomial, typing.Any]:
        if not self.terms:
            raise ValueError('the zero polynomial has no leading term')
        mono = max(self.terms, key=_grlex)
        return mono, self.terms[mono]

    def normalized(self) -> typing.Tuple[typing.Any, 'Poly']:
        """(先頭係数, 先頭係数で割った多項式)"""
        _, lc = self.leading_term()
        if lc == 1:
            return lc, self
        inv = 1 / lc
        return lc, self._like({m: c * inv for m, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=0)

    def items(self):
        """正準な単項式順序 (降順) で (単項式, 係数) を返す。"""
        for mono in sorted(self.terms, key=_grlex, reverse=True):
            yield mono, self.terms[mono]

    # --- 算術 ---

    def __add__(self, other):
        if isinstance(other, Frac):
            return NotImplemented
        other = self._coerce(other)
        terms = dict(self.terms)
        zero = self.field.zero()
        for mono, c in other.terms.items():
            v = terms.get(mono, zero) + c
            if v == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = v
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Frac):
            return NotImplemented
        if not isinstance(other, Poly):
            c = self.field(other)
            if c == 0:
                return self._like({})
            return self._like({m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self._like({})
        terms = {}
        zero = self.field.zero()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, zero) + c1 * c2
        return self._like({m: c for m, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        assert n >= 0, 'negative power of a polynomial. n={}'.format(n)
        result = Poly.constant(self.variables, self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: 'Poly') -> typing.Optional['Poly']:
        """self = q * other となる q。割り切れなければ None。"""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError('division by the zero polynomial')
        lm_b, lc_b = other.leading_term()
        inv = 1 / lc_b
        zero = self.field.zero()
        rem = dict(self.terms)
        quot = {}
        while rem:
            lm_a = max(rem, key=_grlex)
            diff = tuple(a - b for a, b in zip(lm_a, lm_b))
            if any(d < 0 for d in diff):
                return None
            c = rem[lm_a] * inv
            quot[diff] = c
            for mono, coeff in other.terms.items():
                m = tuple(a + b for a, b in zip(mono, diff))
                v = rem.get(m, zero) - c * coeff
                if v == 0:
                    rem.pop(m, None)
                else:
                    rem[m] = v
        return self._like(quot)

    def substitute(self, images: typing.Sequence['Poly']) -> 'Poly':
        """各変数を images[i] に置き換える (環準同型)。"""
        assert len(images) == len(self.variables), 'need one image per variable'
        if not self.terms:
            return images[0]._like({}) if images else self
        target = images[0]
        powers = [{0: Poly.constant(target.variables, target.field, 1), 1: img} for img in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e // 2) * power(i, e - e // 2)
            return cache[e]

        result = Poly.zero(target.variables, target.field)
        for mono, c in self.terms.items():
            term = Poly.constant(target.variables, target.field, target.field(c) if target.field == self.field else c)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, values: typing.Sequence, hom: typing.Optional[typing.Callable] = None):
        """変数に values を代入した値。hom は係数体から値の体への準同型 (既定は恒等写像)。"""
        assert len(values) == len(self.variables), 'need one value per variable'
        hom = hom or (lambda c: c)
        acc = None
        for mono, c in self.terms.items():
            term = hom(c)
            for v, e in zip(values, mono):
                if e:
                    term = term * v ** e
            acc = term if acc is None else acc + term
        if acc is None:
            return hom(self.field.zero())
        return acc

    # --- 比較・表示 ---

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self._coerce(other)
            except (TypeError, StructureError):
                return NotImplemented
        return self.variables == other.variables and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        parts = []
        for mono, c in self.items():
            names = []
            for v, e in zip(self.variables, mono):
                if e == 1:
                    names.append(v)
                elif e > 1:
                    names.append(f'{v}^{e}')
            parts.append(_join_coeff(self.field.format(c), '*'.join(names)))
        return _join_terms(parts)

    def __repr__(self):
        return f'Poly({self})'

    def to_json(self) -> list:
        return [[self.field.format(c), list(mono)] for mono, c in self.items()]

    @classmethod
    def from_json(cls, variables, field: CoeffField, data) -> 'Poly':
        return cls(variables, field, {tuple(mono): field.parse(c) for c, mono in data})


# ---------------------------------------------------------------------------
# 多変数 gcd (内容と原始部分による再帰的 PRS)
# ---------------------------------------------------------------------------

def _split(p: Poly, k: int) -> typing.Dict[int, Poly]:
    """k 番目の変数についての {次数: 係数多項式}。"""
    out = {}
    for mono, c in p.terms.items():
        rest = mono[:k] + (0,) + mono[k + 1:]
        out.setdefault(mono[k], {})[rest] = c
    return {d: p._like(t) for d, t in out.items()}


def _content(p: Poly, k: int) -> Poly:
    parts = list(_split(p, k).values())
    g = parts[0]
    for c in parts[1:]:
        if g.is_constant():
            break
        g = _gcd_rec(g, c, k - 1)
    if g.is_constant():
        return Poly.constant(p.variables, p.field, 1)
    return g.normalized()[1]


def _primitive(p: Poly, k: int) -> Poly:
    return p.exact_div(_content(p, k))


def _prem(f: Poly, g: Poly, k: int) -> Poly:
    parts_g = _split(g, k)
    dg = max(parts_g)
    lg = parts_g[dg]
    r = f
    while not r.is_zero():
        parts_r = _split(r, k)
        dr = max(parts_r)
        if dr < dg:
            break
        shift = tuple(dr - dg if i == k else 0 for i in range(len(f.variables)))
        xk = Poly._raw(f.variables, f.field, {shift: f.field.one()})
        r = r * lg - g * parts_r[dr] * xk
    return r


def _gcd_rec(a: Poly, b: Poly, k: int) -> Poly:
    if k < 0:
        return Poly.constant(a.variables, a.field, 1)
    ca, cb = _content(a, k), _content(b, k)
    f, g = a.exact_div(ca), b.exact_div(cb)
    c = _gcd_rec(ca, cb, k - 1)
    if f.degree_in(k) < g.degree_in(k):
        f, g = g, f
    while not g.is_zero():
        r = _prem(f, g, k)
        f, g = g, (r if r.is_zero() else _primitive(r, k))
    return c * _primitive(f, k)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """先頭係数 1 に正規化した最大公約式。"""
    b = a._coerce(b)
    if a.is_zero() and b.is_zero():
        return a
    if a.is_zero():
        return b.normalized()[1]
    if b.is_zero():
        return a.normalized()[1]
    return _gcd_rec(a, b, len(a.variables) - 1).normalized()[1]


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == 'add':
        return a + a._coerce(b)
    if op == 'sub':
        return a - a._coerce(b)
    if op == 'mul':
        return a * a._coerce(b)
    raise ValueError(f"op is 'add', 'sub' or 'mul'. op={op}")


def poly_exact_div(a: Poly, b: Poly) -> typing.Optional[Poly]:
    return a.exact_div(b)


def specialize_poly(p: Poly, assignment: typing.Mapping[str, typing.Any], hom: typing.Optional[typing.Callable] = None):
    missing = [v for v in p.variables if v not in assignment]
    if missing:
        raise StructureError(f'unassigned variables: {missing}')
    return p.evaluate([assignment[v] for v in p.variables], hom)


# ---------------------------------------------------------------------------
# 有理式
# ---------------------------------------------------------------------------

class Frac(object):
    """多項式の分数。

    分母は先頭係数 1 の因子の積 {因子: 重複度} として持つ。
    演算のたびに分子を各因子で試し割りして約分する。完全な約分は reduce() で行う。
    """

    __slots__ = ('num', 'factors')

    def __init__(self, num: Poly, den: typing.Optional[Poly] = None):
        factors = {} if den is None else {den: 1}
        self.num, self.factors = Frac._normalize(num, factors)

    @classmethod
    def _make(cls, num: Poly, factors: dict, cancel: bool = True) -> 'Frac':
        obj = cls.__new__(cls)
        obj.num, obj.factors = cls._normalize(num, factors, cancel)
        return obj

    @classmethod
    def from_factors(cls, num: Poly, den_factors: typing.Iterable[Poly]) -> 'Frac':
        factors = {}
        for f in den_factors:
            factors[f] = factors.get(f, 0) + 1
        return cls._make(num, factors)

    @classmethod
    def constant(cls, variables, field, c) -> 'Frac':
        return cls._make(Poly.constant(variables, field, c), {}, cancel=False)

    @staticmethod
    def _normalize(num: Poly, factors: dict, cancel: bool = True):
        if num.is_zero():
            return num, {}
        clean = {}
        for f, k in factors.items():
            if k == 0:
                continue
            f = num._coerce(f)
            if f.is_zero():
                raise ZeroDivisionError('zero denominator')
            lc, monic = f.normalized()
            if lc != 1:
                num = num * (1 / lc ** k)
            if monic.is_constant():
                continue
            clean[monic] = clean.get(monic, 0) + k
        if cancel:
            for f in list(clean):
                while clean[f]:
                    q = num.exact_div(f)
                    if q is None:
                        break
                    num = q
                    clean[f] -= 1
                if not clean[f]:
                    del clean[f]
        return num, clean

    # --- 構造 ---

    @property
    def variables(self):
        return self.num.variables

    @property
    def field(self):
        return self.num.field

    @property
    def den(self) -> Poly:
        den = Poly.constant(self.num.variables, self.num.field, 1)
        for f, k in self.factors.items():
            den = den * f ** k
        return den

    def _coerce(self, other) -> 'Frac':
        if isinstance(other, Frac):
            self.num._coerce(other.num)
            return other
        if isinstance(other, Poly):
            return Frac._make(self.num._coerce(other), {}, cancel=False)
        return Frac.constant(self.num.variables, self.num.field, self.num.field(other))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return not self.factors and self.num.is_one()

    def is_polynomial(self) -> bool:
        return not self.factors

    # --- 算術 ---

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_one():
            return self
        if other.is_zero() or self.is_one():
            return other
        factors = dict(self.factors)
        for f, k in other.factors.items():
            factors[f] = factors.get(f, 0) + k
        return Frac._make(self.num * other.num, factors)

    __rmul__ = __mul__

    def __add__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.factors == other.factors:
            return Frac._make(self.num + other.num, dict(self.factors))
        common = dict(self.factors)
        for f, k in other.factors.items():
            common[f] = max(common.get(f, 0), k)
        a = self.num
        for f, k in common.items():
            if k > self.factors.get(f, 0):
                a = a * f ** (k - self.factors.get(f, 0))
        b = other.num
        for f, k in common.items():
            if k > other.factors.get(f, 0):
                b = b * f ** (k - other.factors.get(f, 0))
        return Frac._make(a + b, common)

    __radd__ = __add__

    def __neg__(self):
        return Frac._make(-self.num, dict(self.factors), cancel=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def inverse(self) -> 'Frac':
        if self.is_zero():
            raise ZeroDivisionError('0 is not invertible')
        return Frac._make(self.den, {self.num: 1})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError('division by zero fraction')
        if other.is_polynomial() and other.num.is_constant():
            return Frac._make(self.num * (1 / other.num.constant_value()), dict(self.factors), cancel=False)
        num = self.num
        for f, k in other.factors.items():
            num = num * f ** k
        factors = dict(self.factors)
        factors[other.num] = factors.get(other.num, 0) + 1
        return Frac._make(num, factors)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Frac._make(self.num ** n, {f: k * n for f, k in self.factors.items()})

    def act(self, images: typing.Sequence[Poly]) -> 'Frac':
        """変数の置換 (環準同型) を分子と各因子に施す。"""
        factors = {}
        for f, k in self.factors.items():
            g = f.substitute(images)
            factors[g] = factors.get(g, 0) + k
        return Frac._make(self.num.substitute(images), factors, cancel=False)

    def evaluate(self, values, hom=None):
        den = self.den.evaluate(values, hom)
        if den == 0:
            raise ZeroDivisionError(f'denominator of {self} vanishes')
        return self.num.evaluate(values, hom) / den

    def reduce(self) -> 'Frac':
        return frac_reduce(self)

    def degree(self) -> typing.Optional[int]:
        return frac_degree(self)

    # --- 比較・表示 ---

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, StructureError):
            return NotImplemented
        return frac_eq(self, other)

    __hash__ = None

    def __str__(self):
        if not self.factors:
            return str(self.num)
        den = []
        for f in sorted(self.factors, key=str):
            k = self.factors[f]
            den.append(f'({f})' if k == 1 else f'({f})^{k}')
        return f'({self.num})/{"*".join(den)}'

    def __repr__(self):
        return f'Frac({self})'

    def to_json(self) -> dict:
        return {'num': self.num.to_json(), 'den': self.den.to_json()}

    @classmethod
    def from_json(cls, variables, field, data: dict) -> 'Frac':
        return cls(Poly.from_json(variables, field, data['num']), Poly.from_json(variables, field, data['den']))


def frac_eq(a: Frac, b: Frac) -> bool:
    """交差積による等価判定。共通分母 L に対し a.num*(L/a.den) == b.num*(L/b.den)。"""
    a.num._coerce(b.num)
    if a.factors == b.factors:
        return a.num == b.num
    lhs, rhs = a.num, b.num
    for f in set(a.factors) | set(b.factors):
        ka, kb = a.factors.get(f, 0), b.factors.get(f, 0)
        if kb > ka:
            lhs = lhs * f ** (kb - ka)
        elif ka > kb:
            rhs = rhs * f ** (ka - kb)
    return lhs == rhs


def frac_reduce(a: Frac) -> Frac:
    """gcd で完全に約分し、分母の先頭係数を 1 にする。"""
    if a.is_zero():
        return a
    den = a.den
    g = poly_gcd(a.num, den)
    num, den = a.num.exact_div(g), den.exact_div(g)
    return Frac._make(num, {den: 1}, cancel=False)


def frac_degree(a: Frac) -> typing.Optional[int]:
    """deg(変数) = 2 とした次数。分子か分母が斉次でなければ None。"""
    if a.is_zero():
        return None
    if not a.num.is_homogeneous() or not all(f.is_homogeneous() for f in a.factors):
        return None
    den = sum(f.total_degree() * k for f, k in a.factors.items())
    return 2 * a.num.total_degree() - 2 * den
