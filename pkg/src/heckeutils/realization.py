"""Coxeter 系の実現 (realization)。

単純ルート α_s を変数とする多項式環 R 上の W 作用、正ルート β、
π_{s,t}、ζ(e')、balanced 性と二面体部分群の作用の位数を扱う。
実現は Cartan 行列 a_{st} = <α_s^∨, α_t> だけで与える (ルートの張る空間のモデル)。
"""

import dataclasses
import logging
import math
import threading
import typing

import numpy as np

from .algebra import CoeffField, Frac, Poly
from .coxeter import CoxeterSystem, CoxWord, Subexpression
from .quantum import qnum, specialization_values


__all__ = ['RealizationError', 'LinearForm', 'Realization']

logger = logging.getLogger(__name__)


class RealizationError(ValueError):
    """実現の定義が不正 (未知の生成元、Cartan 成分の欠落、[m] が消えない等)。"""


@dataclasses.dataclass(frozen=True)
class LinearForm:
    """単純ルートの一次結合 sum coeffs[i] α_i。"""

    coeffs: tuple

    def __add__(self, other: 'LinearForm') -> 'LinearForm':
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'LinearForm':
        return LinearForm(tuple(-a for a in self.coeffs))

    def __sub__(self, other: 'LinearForm') -> 'LinearForm':
        return self + (-other)

    def scale(self, c) -> 'LinearForm':
        return LinearForm(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)


class Realization(object):
    """Coxeter 系の実現。

    Parameters
    ----------
    cox: CoxeterSystem
        Coxeter 系。

    field: CoeffField
        係数体。

    cartan: dict
        (s, t) -> a_{st}。s, t は生成元の名前か添字。
        m_{st} = 2 の組は省略すると 0、それ以外の s != t は必須 (m = inf も含む)。

    name: str
        表示用の名前。
    """

    def __init__(self, cox: CoxeterSystem, field: CoeffField, cartan: typing.Mapping, name: str = ''):
        self.cox = cox
        self.field = field
        self.name = name or 'realization'
        self.variables = tuple(f'alpha_{n}' for n in cox.names)
        n = cox.rank
        given = {}
        for (s, t), value in cartan.items():
            try:
                i, j = cox.index(s), cox.index(t)
            except ValueError as e:
                raise RealizationError(f'cartan entry ({s}, {t}): {e}') from None
            if i == j:
                if field(value) != 2:
                    raise RealizationError(f'a_ss must be 2. s={cox.names[i]}')
                continue
            given[(i, j)] = field(value)
        matrix = [[field(2) if i == j else None for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if (i, j) in given:
                    matrix[i][j] = given[(i, j)]
                elif cox.m[i][j] == 2:
                    matrix[i][j] = field.zero()
                else:
                    raise RealizationError(
                        f'missing cartan entry a_{cox.names[i]}{cox.names[j]} (m={cox.m[i][j]})')
        self.cartan = tuple(tuple(row) for row in matrix)
        self._lock = threading.Lock()
        self._action_cache = {}
        self._pi_cache = {}
        self.validate()
        logger.info('realization %s loaded: rank=%d, field=%s', self.name, n, field)

    # --- 基本データ ---

    @property
    def rank(self) -> int:
        return self.cox.rank

    def cartan_entry(self, s, t):
        return self.cartan[self.cox.index(s)][self.cox.index(t)]

    def order(self, s, t):
        return self.cox.order(s, t)

    def validate(self):
        """有限の m_{st} すべてで [m]_s = [m]_t = 0 を確認する。"""
        n = self.rank
        for i in range(n):
            for j in range(i + 1, n):
                m = self.cox.m[i][j]
                if math.isinf(m):
                    continue
                xs, xt = specialization_values(self, i, j)
                for color in ('s', 't'):
                    value = qnum(int(m), color).evaluate([xs, xt], self.field)
                    if value != 0:
                        s, t = self.cox.names[i], self.cox.names[j]
                        raise RealizationError(
                            f'[{m}]_{s if color == "s" else t} = {value} != 0 for the pair ({s}, {t})')

    def zero(self) -> Poly:
        return Poly.zero(self.variables, self.field)

    def one(self) -> Poly:
        return Poly.constant(self.variables, self.field, 1)

    def alpha(self, s) -> Poly:
        return Poly.variable(self.variables, self.field, self.variables[self.cox.index(s)])

    def frac(self, value) -> Frac:
        if isinstance(value, Frac):
            return value
        if isinstance(value, Poly):
            return Frac(value)
        return Frac.constant(self.variables, self.field, value)

    def simple_root(self, s) -> LinearForm:
        i = self.cox.index(s)
        return LinearForm(tuple(self.field.one() if j == i else self.field.zero() for j in range(self.rank)))

    def linear_poly(self, f: LinearForm) -> Poly:
        return Poly.linear(self.variables, self.field, f.coeffs)

    # --- W 作用 ---

    def reflect(self, s, f: LinearForm) -> LinearForm:
        """s(f) = f - <α_s^∨, f> α_s"""
        i = self.cox.index(s)
        pairing = sum((self.cartan[i][j] * c for j, c in enumerate(f.coeffs)), self.field.zero())
        coeffs = list(f.coeffs)
        coeffs[i] = coeffs[i] - pairing
        return LinearForm(tuple(coeffs))

    def reflection_matrix(self, s) -> np.ndarray:
        """s の表現行列 (列 j が s(α_j) の係数)。"""
        n = self.rank
        mat = np.empty((n, n), dtype=object)
        for j in range(n):
            e = LinearForm(tuple(self.field.one() if k == j else self.field.zero() for k in range(n)))
            mat[:, j] = list(self.reflect(s, e).coeffs)
        return mat

    def action_matrix(self, word: CoxWord) -> np.ndarray:
        """w = s_1 ... s_d の表現行列。右端の文字から作用させる。"""
        key = self.cox.reduce(word)
        with self._lock:
            hit = self._action_cache.get(key)
        if hit is not None:
            return hit
        n = self.rank
        mat = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                mat[i, j] = self.field.one() if i == j else self.field.zero()
        for s in key:
            mat = mat.dot(self.reflection_matrix(s))
        with self._lock:
            self._action_cache[key] = mat
        logger.debug('action matrix cached for %s', self.cox.format_word(key))
        return mat

    def apply(self, word: CoxWord, f: LinearForm) -> LinearForm:
        mat = self.action_matrix(word)
        return LinearForm(tuple(mat.dot(np.array(f.coeffs, dtype=object))))

    def images(self, word: CoxWord) -> typing.List[Poly]:
        """各変数 α_j の w による像。"""
        mat = self.action_matrix(word)
        return [Poly.linear(self.variables, self.field, list(mat[:, j])) for j in range(self.rank)]

    def act_on_poly(self, word: CoxWord, p):
        """Poly または Frac に w を作用させる。"""
        if not self.cox.reduce(word):
            return p
        images = self.images(word)
        if isinstance(p, Frac):
            return p.act(images)
        return p.substitute(images)

    def act_on_element(self, x, p):
        return self.act_on_poly(x.word, p)

    # --- ルート ---

    def beta(self, word: CoxWord) -> LinearForm:
        """β_w = s_1 ... s_{d-1}(α_{s_d})"""
        if not word:
            raise RealizationError('beta of the empty word is undefined')
        return self.apply(word[:-1], self.simple_root(word[-1]))

    def beta_sub(self, word: CoxWord, e: Subexpression) -> LinearForm:
        """β_e = s_1^{e_1} ... s_{d-1}^{e_{d-1}}(α_{s_d})。e_d は結果に影響しない。"""
        if not word:
            raise RealizationError('beta of the empty word is undefined')
        if len(word) != len(e):
            raise RealizationError(f'subexpression length {len(e)} does not match word length {len(word)}')
        prefix = tuple(s for s, bit in zip(word[:-1], e[:-1]) if bit)
        return self.apply(prefix, self.simple_root(word[-1]))

    def pi(self, s, t) -> Poly:
        """π_{s,t}: X_s の正ルートの積 (m 個の一次式)。"""
        i, j = self.cox.index(s), self.cox.index(t)
        m = self.cox.m[i][j]
        if math.isinf(m):
            raise RealizationError(f'pi is undefined for m = inf. pair=({self.cox.names[i]}, {self.cox.names[j]})')
        with self._lock:
            hit = self._pi_cache.get((i, j))
        if hit is not None:
            return hit
        word = self.cox.alternating(i, j, int(m))
        result = self.one()
        for x in self.cox.leading_subexpressions(word):
            result = result * self.linear_poly(self.beta(x))
        with self._lock:
            self._pi_cache[(i, j)] = result
        return result

    def zeta(self, s, t, e: Subexpression) -> Poly:
        """ζ(e') = prod_i s_1^{e'_1} ... s_{i-1}^{e'_{i-1}}(α_{s_i})。語は (t, s, t, ...) で長さ m。"""
        m = self.order(s, t)
        if math.isinf(m):
            raise RealizationError('zeta is undefined for m = inf')
        if len(e) != m:
            raise RealizationError(f'zeta needs a subexpression of length {m}. length={len(e)}')
        word = self.cox.alternating(t, s, int(m))
        result = self.one()
        for i in range(1, int(m) + 1):
            result = result * self.linear_poly(self.beta_sub(word[:i], tuple(e[:i])))
        return result

    def demazure(self, s, f: Poly) -> Poly:
        """∂_s(f) = (f - s f) / α_s"""
        diff = f - self.act_on_poly((self.cox.index(s),), f)
        q = diff.exact_div(self.alpha(s))
        assert q is not None, 'f - s(f) must be divisible by alpha_s. f={}'.format(f)
        return q

    # --- 診断 ---

    def balance_scalar(self, s, t) -> tuple:
        """([m-1]_s, [m-1]_t)"""
        m = self.order(s, t)
        if math.isinf(m):
            raise RealizationError('balance is undefined for m = inf')
        xs, xt = specialization_values(self, s, t)
        return (qnum(int(m) - 1, 's').evaluate([xs, xt], self.field),
                qnum(int(m) - 1, 't').evaluate([xs, xt], self.field))

    def is_balanced_pair(self, s, t) -> bool:
        a, b = self.balance_scalar(s, t)
        return a == 1 and b == 1

    def _finite_pairs(self):
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if not math.isinf(self.cox.m[i][j]):
                    yield i, j

    def is_balanced(self) -> bool:
        return all(self.is_balanced_pair(i, j) for i, j in self._finite_pairs())

    def is_even_balanced(self) -> bool:
        return all(self.is_balanced_pair(i, j) for i, j in self._finite_pairs() if self.cox.m[i][j] % 2 == 0)

    def span_matrices(self, s, t) -> typing.Tuple[np.ndarray, np.ndarray]:
        """基底 (α_s, α_t) での s, t の行列。"""
        one, zero = self.field.one(), self.field.zero()
        a_st, a_ts = self.cartan_entry(s, t), self.cartan_entry(t, s)
        S = np.array([[-one, -a_st], [zero, one]], dtype=object)
        T = np.array([[one, zero], [-a_ts, -one]], dtype=object)
        return S, T

    def order_on_span(self, s, t, bound: int = 64):
        """(st)^k が span{α_s, α_t} 上で恒等になる最小の k (見つからなければ inf)。"""
        m = self.order(s, t)
        S, T = self.span_matrices(s, t)
        st = S.dot(T)
        power = st
        limit = bound if math.isinf(m) else int(m)
        for k in range(1, limit + 1):
            if all(power[i, j] == (1 if i == j else 0) for i in range(2) for j in range(2)):
                if not math.isinf(m):
                    assert int(m) % k == 0, 'order on the span must divide m. k={}, m={}'.format(k, m)
                return k
            power = power.dot(st)
        return math.inf

    def is_faithful_on_span(self, s, t) -> bool:
        return self.order_on_span(s, t) == self.order(s, t)

    def __repr__(self):
        return f'Realization(name={self.name!r}, cox={self.cox.names}, field={self.field})'
