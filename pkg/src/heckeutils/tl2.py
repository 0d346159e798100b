"""二色 Temperley-Lieb 圏と Jones-Wenzl 射影子。

(n, m) 交差なしマッチングは境界点 0..n+m-1 上の不動点なし対合で表す。
下端の点は左から右へ 0..n-1、上端の点は右から左へ n..n+m-1 と番号を付ける
(上端の左から p 番目の点の番号は n+m-1-p)。
領域の色は最も左の領域の色 (leftmost) から、線を 1 本横切るごとに入れ替わる。
閉じた円は内側と外側の色で評価し、外側の色が c なら -x_c になる。

JW_{n_c} は右端の領域の色が c の n 本の Jones-Wenzl 射影子。
一般の係数は QuantumFraction、特殊化した係数は体の元で持つ。
"""

from __future__ import annotations

import dataclasses
import logging
import threading
import typing

import scipy.special

from .algebra import Poly, RationalField
from .quantum import COLORS, QuantumFraction, other, qnum, specialization_values


__all__ = [
    'JonesWenzlNotFound', 'NotRotatable',
    'Matching', 'TLRing', 'GenericRing', 'SpecializationPoint', 'TLMorphism',
    'flip_color', 'catalan', 'generate_sequences', 'all_matchings',
    'identity', 'cap', 'cup', 'compose', 'tensor',
    'jw_generic', 'single_clasp_expand', 'jw_specialize', 'jw_exists', 'jw_at',
    'is_jones_wenzl', 'ptr', 'ptr1', 'is_rotatable',
    'rotate_by_one', 'rotation_eigenvalue', 'rotation_coefficient_diagram',
    'regions', 'poly_eval',
]

logger = logging.getLogger(__name__)


class JonesWenzlNotFound(ArithmeticError):
    """この特殊化では Jones-Wenzl 射影子が存在しない。"""


class NotRotatable(ArithmeticError):
    """Jones-Wenzl 射影子は存在するが回転で不変でない。"""


def flip_color(color: str, times: int = 1) -> str:
    return color if times % 2 == 0 else other(color)


def catalan(n: int) -> int:
    return int(scipy.special.comb(2 * n, n, exact=True)) // (n + 1)


# ---------------------------------------------------------------------------
# マッチング
# ---------------------------------------------------------------------------

def is_crossingless(seq: typing.Sequence[int]) -> bool:
    if not all(0 <= seq[i] < len(seq) and seq[i] != i and seq[seq[i]] == i for i in range(len(seq))):
        return False
    stack = []
    for i in range(len(seq)):
        if i < seq[i]:
            stack.append(seq[i])
        elif stack.pop() != i:
            return False
    return True


def generate_sequences(size: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    """size 個の点 (偶数) の交差なしマッチングをすべて列挙する。"""
    if size < 0 or size % 2 == 1:
        raise ValueError(f'size must be a non-negative even number. size={size}')
    seq = [-1] * size

    # 二分木と括弧列の対応で並べる
    def place(i, pairs):
        if pairs == 0:
            yield
        for left in range(pairs):
            l, r = i, i + 1 + 2 * left
            seq[l], seq[r] = r, l
            for _ in place(l + 1, left):
                for _ in place(r + 1, pairs - left - 1):
                    yield

    for _ in place(0, size // 2):
        yield tuple(seq)


@dataclasses.dataclass(frozen=True, order=True)
class Matching:
    """二色 (n, m) 交差なしマッチング。n は下端、m は上端の点の数。"""

    n: int
    m: int
    pairing: typing.Tuple[int, ...]
    leftmost: str = 's'

    def __post_init__(self):
        assert (self.n + self.m) % 2 == 0, 'n + m must be even. n={}, m={}'.format(self.n, self.m)
        assert len(self.pairing) == self.n + self.m, 'pairing must have n + m entries'
        assert self.leftmost in COLORS, 'leftmost must be "s" or "t". leftmost={}'.format(self.leftmost)
        assert is_crossingless(self.pairing), 'pairing is not a crossingless matching: {}'.format(self.pairing)

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def rightmost(self) -> str:
        return flip_color(self.leftmost, self.n)

    def top_index(self, p: int) -> int:
        return self.n + self.m - 1 - p

    def position(self, index: int) -> typing.Tuple[str, int]:
        """境界の番号を ('b', 左からの位置) か ('t', 左からの位置) に変換する。"""
        if index < self.n:
            return 'b', index
        return 't', self.n + self.m - 1 - index

    def through_strands(self) -> int:
        return sum(1 for i in range(self.n) if self.pairing[i] >= self.n)

    def is_identity(self) -> bool:
        return self.n == self.m and all(self.pairing[k] == self.top_index(k) for k in range(self.n))

    def flip(self) -> 'Matching':
        """上下反転。"""
        N = self.size
        return Matching(self.m, self.n, tuple(N - 1 - i for i in reversed(self.pairing)), self.leftmost)

    def render(self) -> str:
        """入れ子の括弧で表す。'|' は上下をつなぐ線。例: '()|/|'"""
        def side(kind, count):
            chars = []
            for p in range(count):
                idx = p if kind == 'b' else self.top_index(p)
                other_kind, q = self.position(self.pairing[idx])
                if other_kind != kind:
                    chars.append('|')
                else:
                    chars.append('(' if q > p else ')')
            return ''.join(chars)

        return f'{side("b", self.n)}/{side("t", self.m)}'

    def __str__(self):
        return self.render()


def all_matchings(n: int, m: int, leftmost: str = 's') -> typing.List[Matching]:
    if (n + m) % 2 != 0:
        raise ValueError(f'n and m must have the same parity. n={n}, m={m}')
    return [Matching(n, m, seq, leftmost) for seq in generate_sequences(n + m)]


def identity_matching(n: int, leftmost: str = 's') -> Matching:
    return Matching(n, n, tuple(2 * n - 1 - i for i in range(2 * n)), leftmost)


def _from_arcs(n: int, m: int, arcs, leftmost: str) -> Matching:
    """('b'|'t', 位置) の組のリストからマッチングを作る。"""
    def index(point):
        kind, p = point
        return p if kind == 'b' else n + m - 1 - p

    seq = [-1] * (n + m)
    for a, b in arcs:
        i, j = index(a), index(b)
        seq[i], seq[j] = j, i
    return Matching(n, m, tuple(seq), leftmost)


def _arcs(M: Matching):
    for i in range(M.size):
        j = M.pairing[i]
        if i < j:
            yield M.position(i), M.position(j)


def cap_matching(n: int, i: int, leftmost: str = 's') -> Matching:
    """n -> n-2。下端の位置 i, i+1 を結ぶ。"""
    assert 0 <= i < n - 1, 'cap position out of range. n={}, i={}'.format(n, i)
    arcs = [(('b', i), ('b', i + 1))]
    for k in range(n - 2):
        arcs.append((('b', k if k < i else k + 2), ('t', k)))
    return _from_arcs(n, n - 2, arcs, leftmost)


def cup_matching(n: int, i: int, leftmost: str = 's') -> Matching:
    """n-2 -> n。上端の位置 i, i+1 を結ぶ。"""
    return cap_matching(n, i, leftmost).flip()


def compose_matchings(upper: Matching, lower: Matching) -> typing.Tuple[Matching, typing.List[str]]:
    """upper ∘ lower と、閉じた円ごとの外側の色のリスト。"""
    if upper.n != lower.m or upper.leftmost != lower.leftmost:
        raise ValueError(f'cannot compose ({upper.n}->{upper.m}, {upper.leftmost}) after '
                         f'({lower.n}->{lower.m}, {lower.leftmost})')
    mid = upper.n
    U, L = upper.pairing, lower.pairing
    nL = len(L)
    bot, top = lower.n, upper.m
    result = [-1] * (bot + top)
    visited = [False] * mid
    for i in range(len(result)):
        v, side = (i, 0) if i < bot else (i - bot + mid, 1)
        while True:
            if side == 0:
                v = L[v]
                if v < bot:
                    result[i] = v
                    break
                v = nL - v - 1
                visited[v] = True
                side = 1
            else:
                v = U[v]
                if v >= mid:
                    result[i] = v - mid + bot
                    break
                visited[v] = True
                v = nL - v - 1
                side = 0

    # 残った中段の点は閉じた円をなす。円の内側は最も左の点のすぐ右の領域
    bubbles = []
    for i in range(mid):
        if visited[i]:
            continue
        v = i
        leftmost_point = i
        while True:
            visited[v] = True
            visited[U[v]] = True
            leftmost_point = min(leftmost_point, v, U[v])
            v = nL - L[nL - U[v] - 1] - 1
            if visited[v]:
                break
        bubbles.append(flip_color(upper.leftmost, leftmost_point))
    return Matching(bot, top, tuple(result), upper.leftmost), bubbles


def tensor_matchings(left: Matching, right: Matching) -> Matching:
    if right.leftmost != left.rightmost:
        raise ValueError(f'colors do not match: {left.rightmost} then {right.leftmost}')
    n, m = left.n + right.n, left.m + right.m
    arcs = list(_arcs(left))
    for (ka, pa), (kb, pb) in _arcs(right):
        shift_a = left.n if ka == 'b' else left.m
        shift_b = left.n if kb == 'b' else left.m
        arcs.append(((ka, pa + shift_a), (kb, pb + shift_b)))
    return _from_arcs(n, m, arcs, left.leftmost)


def rotate_matching(M: Matching, inverse: bool = False) -> Matching:
    """境界点を反時計回りに 1 つずらす (inverse なら時計回り)。(n, n) の形は保たれる。"""
    N = M.size
    if inverse:
        seq = tuple((M.pairing[(j + 1) % N] - 1) % N for j in range(N))
    else:
        seq = tuple((M.pairing[(j - 1) % N] + 1) % N for j in range(N))
    return Matching(M.n, M.m, seq, other(M.leftmost))


def regions(M: Matching) -> typing.List[typing.Tuple[typing.FrozenSet[int], str]]:
    """領域 (境界の区間の集合) とその色。区間 k は点 k と k+1 の間。"""
    N = M.size
    if N == 0:
        return [(frozenset(), M.leftmost)]
    seen = set()
    out = []
    for k in range(N):
        if k in seen:
            continue
        cycle = []
        j = k
        while j not in seen:
            seen.add(j)
            cycle.append(j)
            j = M.pairing[(j + 1) % N]
        out.append((frozenset(cycle), flip_color(M.leftmost, k + 1)))
    return out


# ---------------------------------------------------------------------------
# 係数環
# ---------------------------------------------------------------------------

class TLRing(object):
    """射の係数の環。circle(c) は外側の色が c の円の値 -x_c。"""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def circle(self, exterior: str):
        raise NotImplementedError


class GenericRing(TLRing):
    """素体 base 上の一般係数 (QuantumFraction)。"""

    def __init__(self, base):
        self.base = base

    def zero(self):
        return QuantumFraction(self.base)

    def one(self):
        return QuantumFraction.scalar(self.base, 1)

    def qnum(self, n: int, color: str) -> QuantumFraction:
        return QuantumFraction.qnum(self.base, n, color)

    def circle(self, exterior: str):
        return -QuantumFraction.x(self.base, exterior)

    def __eq__(self, other):
        return isinstance(other, GenericRing) and other.base == self.base

    def __hash__(self):
        return hash(('generic', self.base))

    def __repr__(self):
        return f'GenericRing({self.base})'


@dataclasses.dataclass(frozen=True)
class SpecializationPoint(TLRing):
    """x_s, x_t に体の元を代入した点。"""

    field: typing.Any
    xs: typing.Any
    xt: typing.Any

    @classmethod
    def from_realization(cls, realization, s, t) -> 'SpecializationPoint':
        xs, xt = specialization_values(realization, s, t)
        return cls(realization.field, xs, xt)

    @classmethod
    def of(cls, field, xs, xt) -> 'SpecializationPoint':
        return cls(field, field(xs), field(xt))

    @property
    def base(self):
        return self.field.prime_field()

    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def x(self, color: str):
        return self.xs if color == 's' else self.xt

    def qnum(self, n: int, color: str):
        return qnum(n, color).evaluate([self.xs, self.xt], self.field)

    def circle(self, exterior: str):
        return -self.x(exterior)


# ---------------------------------------------------------------------------
# 射
# ---------------------------------------------------------------------------

class TLMorphism(object):
    """マッチングの一次結合。

    Parameters
    ----------
    n, m: int
        下端と上端の点の数。

    leftmost: str
        最も左の領域の色。

    terms: dict
        Matching -> 係数。0 の係数は捨てる。

    ring: TLRing
        係数環。
    """

    __slots__ = ('n', 'm', 'leftmost', 'terms', 'ring')

    def __init__(self, n: int, m: int, leftmost: str, terms: typing.Mapping, ring: TLRing):
        self.n, self.m, self.leftmost, self.ring = n, m, leftmost, ring
        clean = {}
        for M, c in terms.items():
            assert (M.n, M.m, M.leftmost) == (n, m, leftmost), 'matching {} does not fit ({}, {}, {})'.format(M, n, m, leftmost)
            if c != 0:
                clean[M] = c
        self.terms = clean

    @classmethod
    def from_matching(cls, M: Matching, ring: TLRing, coeff=None) -> 'TLMorphism':
        return cls(M.n, M.m, M.leftmost, {M: ring.one() if coeff is None else coeff}, ring)

    def _like(self, terms) -> 'TLMorphism':
        return TLMorphism(self.n, self.m, self.leftmost, terms, self.ring)

    def _check(self, other: 'TLMorphism'):
        if (self.n, self.m, self.leftmost) != (other.n, other.m, other.leftmost):
            raise ValueError(f'shapes differ: ({self.n}, {self.m}, {self.leftmost}) vs '
                             f'({other.n}, {other.m}, {other.leftmost})')

    @property
    def rightmost(self) -> str:
        return flip_color(self.leftmost, self.n)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, M: Matching):
        return self.terms.get(M, self.ring.zero())

    def identity_coefficient(self):
        return self.coefficient(identity_matching(self.n, self.leftmost))

    def items(self):
        for M in sorted(self.terms):
            yield M, self.terms[M]

    def __add__(self, other: 'TLMorphism') -> 'TLMorphism':
        self._check(other)
        terms = dict(self.terms)
        for M, c in other.terms.items():
            terms[M] = terms[M] + c if M in terms else c
        return self._like(terms)

    def __neg__(self) -> 'TLMorphism':
        return self._like({M: -c for M, c in self.terms.items()})

    def __sub__(self, other: 'TLMorphism') -> 'TLMorphism':
        return self + (-other)

    def scale(self, c) -> 'TLMorphism':
        return self._like({M: c * v for M, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        if (self.n, self.m, self.leftmost) != (other.n, other.m, other.leftmost):
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __matmul__(self, other: 'TLMorphism') -> 'TLMorphism':
        return compose(self, other)

    def flip(self) -> 'TLMorphism':
        return TLMorphism(self.m, self.n, self.leftmost, {M.flip(): c for M, c in self.terms.items()}, self.ring)

    def __str__(self):
        if not self.terms:
            return '0'
        return '\n'.join(f'{M.render()}: {c}' for M, c in self.items())

    def __repr__(self):
        return f'TLMorphism(n={self.n}, m={self.m}, leftmost={self.leftmost!r}, terms={len(self.terms)})'


def identity(n: int, leftmost: str, ring: TLRing) -> TLMorphism:
    return TLMorphism.from_matching(identity_matching(n, leftmost), ring)


def cap(n: int, i: int, leftmost: str, ring: TLRing) -> TLMorphism:
    return TLMorphism.from_matching(cap_matching(n, i, leftmost), ring)


def cup(n: int, i: int, leftmost: str, ring: TLRing) -> TLMorphism:
    return TLMorphism.from_matching(cup_matching(n, i, leftmost), ring)


def compose(f: TLMorphism, g: TLMorphism) -> TLMorphism:
    """f ∘ g (g が下)。閉じた円は外側の色 c で -x_c に置き換える。"""
    if f.n != g.m or f.leftmost != g.leftmost:
        raise ValueError(f'cannot compose ({f.n}->{f.m}, {f.leftmost}) after ({g.n}->{g.m}, {g.leftmost})')
    ring = f.ring
    terms = {}
    for Mf, cf in f.terms.items():
        for Mg, cg in g.terms.items():
            M, bubbles = compose_matchings(Mf, Mg)
            c = cf * cg
            for exterior in bubbles:
                c = c * ring.circle(exterior)
            terms[M] = terms[M] + c if M in terms else c
    return TLMorphism(g.n, f.m, f.leftmost, terms, ring)


def tensor(f: TLMorphism, g: TLMorphism) -> TLMorphism:
    """f の右に g を並べる。"""
    terms = {}
    for Mf, cf in f.terms.items():
        for Mg, cg in g.terms.items():
            M = tensor_matchings(Mf, Mg)
            c = cf * cg
            terms[M] = terms[M] + c if M in terms else c
    return TLMorphism(f.n + g.n, f.m + g.m, f.leftmost, terms, f.ring)


# ---------------------------------------------------------------------------
# Jones-Wenzl 射影子
# ---------------------------------------------------------------------------

_jw_lock = threading.Lock()
_jw_cache = {}


def _jw_two_sided(ring: GenericRing, n: int, color: str) -> TLMorphism:
    # JW_{(k+1)_c} = JW_{k_c'} ⊗ 1 + ([k]_c' / [k+1]_c) (JW ⊗ 1) e_k (JW ⊗ 1)
    prev = jw_generic(n - 1, other(color), ring.base, method='two_sided')
    left = prev.leftmost
    ext = tensor(prev, identity(1, prev.rightmost, ring))
    e = compose(cup(n, n - 2, left, ring), cap(n, n - 2, left, ring))
    coeff = ring.qnum(n - 1, other(color)) / ring.qnum(n, color)
    return ext + compose(ext, compose(e, ext)).scale(coeff)


def _jw_single_clasp(ring: GenericRing, n: int, color: str) -> TLMorphism:
    # JW_{(k+1)_c} = JW_{k_c'} ⊗ 1 + sum_a ([a]_u / [k+1]_c) D_a (JW ⊗ 1)
    # D_a は下端の最後の 2 点を閉じ、上端の位置 a-1, a に cup を置く図式。u は cup の内側の色
    prev = jw_generic(n - 1, other(color), ring.base, method='single_clasp')
    left = prev.leftmost
    ext = tensor(prev, identity(1, prev.rightmost, ring))
    closed = compose(cap(n, n - 2, left, ring), ext)
    result = ext
    denominator = ring.qnum(n, color)
    for a in range(1, n):
        u = flip_color(left, a)
        term = compose(cup(n, a - 1, left, ring), closed)
        result = result + term.scale(ring.qnum(a, u) / denominator)
    return result


def jw_generic(n: int, color: str, base=None, method: str = 'single_clasp') -> TLMorphism:
    """一般の係数での JW_{n_color}。

    Parameters
    ----------
    n: int
        本数。

    color: str
        右端の領域の色。

    base: CoeffField
        係数の素体 (既定は有理数体)。特殊化先の標数に合わせる。

    method: str
        'two_sided' (定義の漸化式) か 'single_clasp' (速い展開)。

    Returns
    -------
    TLMorphism
        係数は QuantumFraction。
    """
    assert n >= 0, 'n must be non-negative. n={}'.format(n)
    assert method in ('two_sided', 'single_clasp'), 'unknown method {}'.format(method)
    base = RationalField() if base is None else base
    ring = GenericRing(base)
    if n <= 1:
        return identity(n, flip_color(color, n), ring)
    key = (n, color, base, method)
    with _jw_lock:
        hit = _jw_cache.get(key)
    if hit is not None:
        return hit
    if method == 'two_sided':
        result = _jw_two_sided(ring, n, color)
    else:
        result = _jw_single_clasp(ring, n, color)
    with _jw_lock:
        _jw_cache[key] = result
    logger.debug('generic JW_%d_%s cached (%s over %s, %d terms)', n, color, method, base, len(result.terms))
    return result


def single_clasp_expand(n: int, color: str, base=None) -> TLMorphism:
    """JW_{(n+1)_color} を JW_n からの一重クラスプ展開で作る。"""
    ring = GenericRing(RationalField() if base is None else base)
    return _jw_single_clasp(ring, n + 1, color)


def _specialize_morphism(f: TLMorphism, point: SpecializationPoint) -> TLMorphism:
    terms = {}
    for M, c in f.terms.items():
        terms[M] = c.specialize(point.field, point.xs, point.xt)
    return TLMorphism(f.n, f.m, f.leftmost, terms, point)


def jw_specialize(point: SpecializationPoint, n: int, color: str, method: str = 'single_clasp') -> TLMorphism:
    """点 point での JW_{n_color}。存在しなければ JonesWenzlNotFound。"""
    generic = jw_generic(n, color, point.base, method=method)
    try:
        result = _specialize_morphism(generic, point)
    except ZeroDivisionError as e:
        raise JonesWenzlNotFound(f'JW_{n}_{color} does not exist at x_s={point.xs}, x_t={point.xt}: {e}') from None
    if not is_jones_wenzl(result):
        raise JonesWenzlNotFound(f'specialized JW_{n}_{color} is not killed by caps at x_s={point.xs}, x_t={point.xt}')
    return result


def jw_exists(point: SpecializationPoint, n: int, color: str) -> bool:
    try:
        jw_specialize(point, n, color)
    except JonesWenzlNotFound:
        return False
    return True


def jw_at(realization, pair, n: int, color: str) -> TLMorphism:
    s, t = pair
    return jw_specialize(SpecializationPoint.from_realization(realization, s, t), n, color)


def is_jones_wenzl(f: TLMorphism) -> bool:
    """単位元の係数が 1 で、上のどの cap・下のどの cup でも 0 になるか。"""
    if f.n != f.m:
        return False
    if f.identity_coefficient() != 1:
        return False
    for i in range(f.n - 1):
        if not compose(cap(f.n, i, f.leftmost, f.ring), f).is_zero():
            return False
        if not compose(f, cup(f.n, i, f.leftmost, f.ring)).is_zero():
            return False
    return True


def ptr(f: TLMorphism) -> TLMorphism:
    """右端の線を閉じた部分トレース。"""
    n = f.n
    if n == 0 or f.m != n:
        raise ValueError(f'partial trace needs an endomorphism of n >= 1 strands. n={f.n}, m={f.m}')
    ring = f.ring
    left = f.leftmost
    inner = flip_color(left, n - 1)
    ext = tensor(f, identity(1, f.rightmost, ring))
    down = tensor(identity(n - 1, left, ring), cup(2, 0, inner, ring))
    up = tensor(identity(n - 1, left, ring), cap(2, 0, inner, ring))
    return compose(up, compose(ext, down))


def ptr1(f: TLMorphism):
    """ptr(f) の単位元の係数。"""
    return ptr(f).identity_coefficient()


def rotate_by_one(f: TLMorphism, inverse: bool = False) -> TLMorphism:
    """(n, n) 射を反時計回りに 1 本回す。領域の色は入れ替わる。"""
    assert f.n == f.m, 'rotation needs an endomorphism. n={}, m={}'.format(f.n, f.m)
    return TLMorphism(f.n, f.m, other(f.leftmost),
                      {rotate_matching(M, inverse): c for M, c in f.terms.items()}, f.ring)


def rotation_coefficient_diagram(n: int, leftmost: str) -> Matching:
    """反時計回りの回転で単位元に移る図式。"""
    return rotate_matching(identity_matching(n, other(leftmost)), inverse=True)


def is_rotatable(point: SpecializationPoint, n: int) -> bool:
    """ptr(JW_{n_s}) = ptr(JW_{n_t}) = 0 か。JW が無ければ JonesWenzlNotFound。"""
    return all(ptr(jw_specialize(point, n, c)).is_zero() for c in COLORS)


def rotation_eigenvalue(point: SpecializationPoint, n: int, color: str = 's'):
    """rotate(JW_{n_color}) = a JW_{n_other} となる a を測る。成り立たなければ NotRotatable。"""
    f = jw_specialize(point, n, color)
    g = jw_specialize(point, n, other(color))
    rotated = rotate_by_one(f)
    a = rotated.identity_coefficient()
    if rotated != g.scale(a):
        raise NotRotatable(f'JW_{n}_{color} is not an eigenvector of the rotation at x_s={point.xs}, x_t={point.xt}')
    return a


def poly_eval(f: TLMorphism, realization, pair) -> Poly:
    """sum coeff(M) α_s^{s 色の領域数} α_t^{t 色の領域数}"""
    s, t = pair
    alpha = {'s': realization.alpha(s), 't': realization.alpha(t)}
    result = realization.zero()
    for M, c in f.terms.items():
        term = realization.one() * c
        for _, color in regions(M):
            term = term * alpha[color]
        result = result + term
    return result
