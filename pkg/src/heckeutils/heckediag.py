"""Hecke 圏の図式と局所化関手 Λ。

図式は不変な木で表す。
* 生成元 (Gen のサブクラス): Id, PolyBox, DotTop, DotBottom, Merge, Split, Cap, Cup,
  Vertex2m, EStar, JWPrime
* VComp(top, bottom): bottom の後に top を施す縦の合成
* HComp(left, right): 横の合成 (テンソル積)
* Scaled(coeff, diagram), Sum(terms, source, target): 一次結合

語は生成元の名前のタプル。Λ の計算は Localizer が実現ごとに行い、生成元の行列をキャッシュする。
"""

import dataclasses
import json
import logging
import math
import threading
import typing

import sympy

from . import groupoid
from .algebra import Frac, Poly, frac_degree
from .groupoid import LocMatrix, SumObject
from .tl2 import (
    JonesWenzlNotFound, Matching, NotRotatable, SpecializationPoint,
    flip_color, is_rotatable, jw_specialize,
)


__all__ = [
    'DiagramError', 'Diagram', 'Gen',
    'Id', 'PolyBox', 'DotTop', 'DotBottom', 'Merge', 'Split', 'Cap', 'Cup',
    'Vertex2m', 'EStar', 'JWPrime',
    'VComp', 'HComp', 'Scaled', 'Sum',
    'Localizer', 'localize', 'gen_matrix', 'degree',
    'alternating', 'chain', 'tensor', 'layer',
    'cup_nested', 'cap_nested', 'pitchfork', 'inv_pitchfork', 'pitchfork_at', 'all_dots',
    'sigma', 'compile_jwprime', 'compile_jw_box', 'vertex_from_estar',
    'to_json', 'from_json', 'load_diagram',
]

logger = logging.getLogger(__name__)

Word = typing.Tuple[str, ...]


class DiagramError(ValueError):
    """境界の合わない図式や不正な JSON。"""


def alternating(s: str, t: str, length: int) -> Word:
    return tuple(s if i % 2 == 0 else t for i in range(length))


def _rev(word: Word) -> Word:
    return tuple(reversed(word))


# ---------------------------------------------------------------------------
# 図式
# ---------------------------------------------------------------------------

class Diagram(object):
    """図式の基底クラス。source は下端、target は上端の語。"""

    @property
    def source(self) -> Word:
        raise NotImplementedError

    @property
    def target(self) -> Word:
        raise NotImplementedError

    def __matmul__(self, other: 'Diagram') -> 'Diagram':
        return VComp(self, other)

    def __add__(self, other: 'Diagram') -> 'Diagram':
        return Sum((self, other), self.source, self.target)

    def __rmul__(self, coeff) -> 'Diagram':
        return Scaled(coeff, self)


class Gen(Diagram):
    """生成元。degree は次数付き圏での次数。"""

    degree = 0

    def colors(self) -> Word:
        return tuple(sorted(set(self.source + self.target)))


@dataclasses.dataclass(frozen=True)
class Id(Gen):
    word: Word = ()

    def __post_init__(self):
        object.__setattr__(self, 'word', tuple(self.word))

    @property
    def source(self):
        return self.word

    @property
    def target(self):
        return self.word


@dataclasses.dataclass(frozen=True)
class PolyBox(Gen):
    """空の語の自己準同型としての多項式 f。"""

    f: Poly

    source = ()
    target = ()

    @property
    def degree(self):
        if not self.f.is_homogeneous():
            return None
        return 0 if self.f.is_zero() else 2 * self.f.total_degree()


@dataclasses.dataclass(frozen=True)
class _OneColor(Gen):
    color: str


@dataclasses.dataclass(frozen=True)
class DotTop(_OneColor):
    """B_s -> 1"""

    degree = 1

    @property
    def source(self):
        return (self.color,)

    @property
    def target(self):
        return ()


@dataclasses.dataclass(frozen=True)
class DotBottom(_OneColor):
    """1 -> B_s"""

    degree = 1

    @property
    def source(self):
        return ()

    @property
    def target(self):
        return (self.color,)


@dataclasses.dataclass(frozen=True)
class Merge(_OneColor):
    """B_s B_s -> B_s"""

    degree = -1

    @property
    def source(self):
        return (self.color, self.color)

    @property
    def target(self):
        return (self.color,)


@dataclasses.dataclass(frozen=True)
class Split(_OneColor):
    """B_s -> B_s B_s"""

    degree = -1

    @property
    def source(self):
        return (self.color,)

    @property
    def target(self):
        return (self.color, self.color)


@dataclasses.dataclass(frozen=True)
class Cap(_OneColor):
    """B_s B_s -> 1"""

    @property
    def source(self):
        return (self.color, self.color)

    @property
    def target(self):
        return ()


@dataclasses.dataclass(frozen=True)
class Cup(_OneColor):
    """1 -> B_s B_s"""

    @property
    def source(self):
        return ()

    @property
    def target(self):
        return (self.color, self.color)


@dataclasses.dataclass(frozen=True)
class _TwoColor(Gen):
    s: str
    t: str
    m: int
    shading: typing.Optional[str] = None

    def __post_init__(self):
        if self.s == self.t:
            raise DiagramError(f'a two-color generator needs two distinct colors. s={self.s}')
        if not isinstance(self.m, int) or self.m < 2:
            raise DiagramError(f'm must be a finite integer >= 2. m={self.m}')
        if self.shading is None:
            object.__setattr__(self, 'shading', self.s)
        if self.shading not in (self.s, self.t):
            raise DiagramError(f'shading must be {self.s} or {self.t}. shading={self.shading}')


@dataclasses.dataclass(frozen=True)
class Vertex2m(_TwoColor):
    """2m 価頂点 G_{s,t}: (s, t, ...) -> (t, s, ...)、長さ m。"""

    @property
    def source(self):
        return alternating(self.s, self.t, self.m)

    @property
    def target(self):
        return alternating(self.t, self.s, self.m)


@dataclasses.dataclass(frozen=True)
class EStar(_TwoColor):
    """すべての腕を下に曲げた 2m 価頂点: (s, t, ...)_{2m} -> 1"""

    @property
    def source(self):
        return alternating(self.s, self.t, 2 * self.m)

    @property
    def target(self):
        return ()


@dataclasses.dataclass(frozen=True)
class JWPrime(_TwoColor):
    """曲げた Jones-Wenzl 射: (s, t, ...)_{2m-1} -> 1。Λ は compile_jwprime を通して計算する。"""

    degree = 1

    @property
    def source(self):
        return alternating(self.s, self.t, 2 * self.m - 1)

    @property
    def target(self):
        return ()


@dataclasses.dataclass(frozen=True)
class VComp(Diagram):
    """bottom を施した後に top を施す。"""

    top: Diagram
    bottom: Diagram

    def __post_init__(self):
        if self.bottom.target != self.top.source:
            raise DiagramError(f'cannot stack {list(self.top.source)} on top of {list(self.bottom.target)}')

    @property
    def source(self):
        return self.bottom.source

    @property
    def target(self):
        return self.top.target


@dataclasses.dataclass(frozen=True)
class HComp(Diagram):
    left: Diagram
    right: Diagram

    @property
    def source(self):
        return self.left.source + self.right.source

    @property
    def target(self):
        return self.left.target + self.right.target


@dataclasses.dataclass(frozen=True, eq=False)
class Scaled(Diagram):
    """coeff * diagram。coeff は体の元か Frac。"""

    coeff: typing.Any
    diagram: Diagram

    @property
    def source(self):
        return self.diagram.source

    @property
    def target(self):
        return self.diagram.target


@dataclasses.dataclass(frozen=True, eq=False)
class Sum(Diagram):
    """一次結合。空の和は 0。"""

    terms: typing.Tuple[Diagram, ...]
    src: Word
    tgt: Word

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))
        object.__setattr__(self, 'src', tuple(self.src))
        object.__setattr__(self, 'tgt', tuple(self.tgt))
        for d in self.terms:
            if d.source != self.src or d.target != self.tgt:
                raise DiagramError(
                    f'summand {list(d.source)} -> {list(d.target)} does not match {list(self.src)} -> {list(self.tgt)}')

    @property
    def source(self):
        return self.src

    @property
    def target(self):
        return self.tgt


def degree(d: Diagram) -> typing.Optional[int]:
    """図式の次数。斉次でなければ None。"""
    if isinstance(d, Gen):
        return d.degree
    if isinstance(d, VComp):
        a, b = degree(d.top), degree(d.bottom)
        return None if a is None or b is None else a + b
    if isinstance(d, HComp):
        a, b = degree(d.left), degree(d.right)
        return None if a is None or b is None else a + b
    if isinstance(d, Scaled):
        inner = degree(d.diagram)
        if isinstance(d.coeff, (Frac, Poly)):
            c = frac_degree(d.coeff if isinstance(d.coeff, Frac) else Frac(d.coeff))
            return None if inner is None or c is None else inner + c
        return inner
    if isinstance(d, Sum):
        degrees = {degree(t) for t in d.terms}
        return degrees.pop() if len(degrees) == 1 else None
    raise DiagramError(f'unknown diagram node {type(d).__name__}')


# ---------------------------------------------------------------------------
# 組み立て
# ---------------------------------------------------------------------------

def chain(*layers: Diagram) -> Diagram:
    """下から上へ順に合成する。"""
    if not layers:
        raise DiagramError('chain needs at least one layer')
    result = layers[0]
    for d in layers[1:]:
        result = VComp(d, result)
    return result


def tensor(*factors: Diagram) -> Diagram:
    """左から右へ並べる。空の Id は省く。"""
    factors = [d for d in factors if not (isinstance(d, Id) and not d.word)]
    if not factors:
        return Id(())
    result = factors[0]
    for d in factors[1:]:
        result = HComp(result, d)
    return result


def layer(left: typing.Sequence[str], d: Diagram, right: typing.Sequence[str] = ()) -> Diagram:
    """Id(left) ⊗ d ⊗ Id(right)"""
    return tensor(Id(tuple(left)), d, Id(tuple(right)))


def cup_nested(word: typing.Sequence[str]) -> Diagram:
    """入れ子のカップ: 1 -> word + reversed(word)"""
    word = tuple(word)
    if not word:
        return Id(())
    x = word[0]
    if len(word) == 1:
        return Cup(x)
    return chain(Cup(x), layer((x,), cup_nested(word[1:]), (x,)))


def cap_nested(word: typing.Sequence[str]) -> Diagram:
    """入れ子のキャップ: word + reversed(word) -> 1"""
    word = tuple(word)
    if not word:
        return Id(())
    x = word[0]
    if len(word) == 1:
        return Cap(x)
    return chain(layer((x,), cap_nested(word[1:]), (x,)), Cap(x))


def pitchfork(x: str, y: str) -> Diagram:
    """x -> x y x。2TL のカップの像。"""
    return chain(Split(x), tensor(Id((x,)), DotBottom(y), Id((x,))))


def inv_pitchfork(x: str, y: str) -> Diagram:
    """x y x -> x。2TL のキャップの像。"""
    return chain(tensor(Id((x,)), DotTop(y), Id((x,))), Merge(x))


def pitchfork_at(word: typing.Sequence[str], position: int) -> Diagram:
    """上端が word で、位置 position..position+2 の 3 本を 1 本から作る射。"""
    word = tuple(word)
    if not 0 <= position <= len(word) - 3:
        raise DiagramError(f'pitchfork position out of range. position={position}, length={len(word)}')
    x, y = word[position], word[position + 1]
    if word[position + 2] != x or x == y:
        raise DiagramError(f'no pitchfork fits {list(word[position:position + 3])}')
    return layer(word[:position], pitchfork(x, y), word[position + 3:])


def all_dots(word: typing.Sequence[str]) -> Diagram:
    """1 -> word。各線の下端に点。"""
    word = tuple(word)
    if not word:
        return Id(())
    return tensor(*[DotBottom(x) for x in word])


def sigma(M: Matching, word: Word) -> Diagram:
    """2TL のマッチング M (領域の色が word) を Hecke 圏の射 word -> word に写す。

    下端のキャップは内側・左側から逆ピッチフォークに、上端のカップはピッチフォークに置き換える。
    """
    assert M.n == M.m == len(word) - 1, 'matching {} does not fit the word {}'.format(M, word)
    layers = []

    current = list(word)
    points = list(range(M.n))
    while True:
        k = next((k for k in range(len(points) - 1) if M.pairing[points[k]] == points[k + 1]), None)
        if k is None:
            break
        layers.append(layer(current[:k], inv_pitchfork(current[k], current[k + 1]), current[k + 3:]))
        current = current[:k + 1] + current[k + 3:]
        del points[k:k + 2]
    middle = tuple(current)

    top_layers = []
    current = list(word)
    points = [M.top_index(p) for p in range(M.m)]
    while True:
        k = next((k for k in range(len(points) - 1) if M.pairing[points[k]] == points[k + 1]), None)
        if k is None:
            break
        top_layers.append((current[:k], current[k], current[k + 1], current[k + 3:]))
        current = current[:k + 1] + current[k + 3:]
        del points[k:k + 2]
    assert tuple(current) == middle, 'through strands do not match: {} vs {}'.format(current, middle)

    for left, x, y, right in reversed(top_layers):
        layers.append(layer(left, pitchfork(x, y), right))
    if not layers:
        return Id(tuple(word))
    return chain(*layers)


def _require_pair(r, s: str, t: str, m: int):
    order = r.order(s, t)
    if math.isinf(order):
        raise DiagramError(f'the pair ({s}, {t}) has m = inf')
    if int(order) != m:
        raise DiagramError(f'the pair ({s}, {t}) has m = {order}, not {m}')


def _jw_for_pair(r, s: str, t: str, m: int):
    point = SpecializationPoint.from_realization(r, s, t)
    try:
        return jw_specialize(point, m - 1, flip_color('s', m - 1))
    except JonesWenzlNotFound as e:
        raise JonesWenzlNotFound(f'pair ({s}, {t}): {e}') from e


def _sigma_jw(r, s: str, t: str, m: int) -> Sum:
    """𝒥𝒲_{s,t}: JW_{m-1} (左端の領域が s) の Σ による像。w -> w (w = (s, t, ...)、長さ m)"""
    w = alternating(s, t, m)
    jw = _jw_for_pair(r, s, t, m)
    return Sum(tuple(Scaled(c, sigma(M, w)) for M, c in jw.items()), w, w)


def _shade(body: Diagram, r, s: str, t: str, m: int, shading: typing.Optional[str]) -> Diagram:
    # t で塗った版は [m-1]_s 倍 (m が奇数のときだけ異なる)
    if shading == t and m % 2 == 1:
        point = SpecializationPoint.from_realization(r, s, t)
        return Scaled(point.qnum(m - 1, 's'), body)
    return body


def compile_jwprime(s: str, t: str, m: int, shading: typing.Optional[str], r) -> Diagram:
    """JW'_{s,t} を点・三価頂点・キャップだけからなる図式の一次結合として組み立てる。

    JW' = cap_nested(w) ∘ (𝒥𝒲 ⊗ Id(rev w)) ∘ (Id(w[:m-1]) ⊗ DotBottom(w_m) ⊗ Id(rev w))
    (w = (s, t, ...)、長さ m)。𝒥𝒲 は JW_{m-1} (左端の領域が s) の Σ による像。
    """
    _require_pair(r, s, t, m)
    w = alternating(s, t, m)
    jw = _sigma_jw(r, s, t, m)
    body = chain(
        layer(w[:m - 1], DotBottom(w[m - 1]), _rev(w)),
        tensor(jw, Id(_rev(w))),
        cap_nested(w),
    )
    logger.debug('compiled JW prime for (%s, %s), m=%d: %d matchings', s, t, m, len(jw.terms))
    return _shade(body, r, s, t, m, shading)


def compile_jw_box(s: str, t: str, m: int, shading: typing.Optional[str], r) -> Diagram:
    """次数 +2 の JW_{s,t}: (s, t, ...)_{2m-2} -> 1。

    ²𝒥𝒲 = (DotTop(w_1) ⊗ Id) ∘ 𝒥𝒲 ∘ (Id ⊗ DotBottom(w_m)) の出力 v = w[1:] を右へ折り曲げたもの。
    JW'_{s,t} は JW_{s,t} の 1 本目を三価頂点で分けて右端まで回したものに等しい。
    """
    _require_pair(r, s, t, m)
    w = alternating(s, t, m)
    v = w[1:]
    body = chain(
        layer(w[:m - 1], DotBottom(w[m - 1]), _rev(v)),
        tensor(_sigma_jw(r, s, t, m), Id(_rev(v))),
        layer((), DotTop(w[0]), v + _rev(v)),
        cap_nested(v),
    )
    return _shade(body, r, s, t, m, shading)


def vertex_from_estar(s: str, t: str, m: int, shading: typing.Optional[str] = None) -> Diagram:
    """E_{s,t} の右側 m 本をカップで上に曲げた 2m 価頂点。"""
    w = alternating(s, t, m)
    v = alternating(t, s, m)
    return chain(tensor(Id(w), cup_nested(_rev(v))), tensor(EStar(s, t, m, shading), Id(v)))


# ---------------------------------------------------------------------------
# 局所化
# ---------------------------------------------------------------------------

class Localizer(object):
    """実現 r での Λ。

    Parameters
    ----------
    realization: Realization
    """

    def __init__(self, realization):
        self.r = realization
        self._lock = threading.Lock()
        self._gen_cache = {}
        self._obj_cache = {}
        self._pair_cache = {}

    def obj(self, word: Word) -> SumObject:
        word = tuple(word)
        with self._lock:
            hit = self._obj_cache.get(word)
        if hit is not None:
            return hit
        obj = SumObject(self.r.cox, self.r.cox.word(list(word)))
        with self._lock:
            self._obj_cache[word] = obj
        return obj

    def check_pair(self, s: str, t: str, m: int):
        """m が一致し、JW_{m-1} が存在して回転可能かを確かめる。"""
        _require_pair(self.r, s, t, m)
        key = tuple(sorted((s, t)))
        with self._lock:
            hit = self._pair_cache.get(key)
        if hit:
            return
        point = SpecializationPoint.from_realization(self.r, s, t)
        try:
            ok = is_rotatable(point, m - 1)
        except JonesWenzlNotFound as e:
            raise JonesWenzlNotFound(f'pair ({s}, {t}): {e}') from e
        if not ok:
            raise NotRotatable(f'pair ({s}, {t}): JW_{m - 1} is not rotatable')
        with self._lock:
            self._pair_cache[key] = True

    def gen_matrix(self, g: Gen) -> LocMatrix:
        with self._lock:
            hit = self._gen_cache.get(g)
        if hit is not None:
            return hit
        result = self._gen_matrix(g)
        with self._lock:
            self._gen_cache[g] = result
        logger.debug('generator %s localized: %dx%d', g, *result.shape)
        return result

    def _matrix(self, g: Gen, entries: dict) -> LocMatrix:
        return LocMatrix(self.obj(g.source), self.obj(g.target), entries, self.r)

    def _gen_matrix(self, g: Gen) -> LocMatrix:
        r = self.r
        if isinstance(g, Id):
            return groupoid.identity(self.obj(g.word), r)
        if isinstance(g, PolyBox):
            return self._matrix(g, {((), ()): g.f})
        if isinstance(g, _OneColor):
            a = Frac(r.alpha(g.color))
            inv = a.inverse()
            if isinstance(g, DotTop):
                return self._matrix(g, {((), (0,)): a})
            if isinstance(g, DotBottom):
                return self._matrix(g, {((0,), ()): 1})
            if isinstance(g, Split):
                return self._matrix(g, {((0, 0), (0,)): inv, ((0, 1), (1,)): inv,
                                        ((1, 0), (1,)): -inv, ((1, 1), (0,)): -inv})
            if isinstance(g, Merge):
                return self._matrix(g, {((0,), (0, 0)): 1, ((0,), (1, 1)): 1,
                                        ((1,), (0, 1)): 1, ((1,), (1, 0)): 1})
            if isinstance(g, Cup):
                return self._matrix(g, {((0, 0), ()): inv, ((1, 1), ()): -inv})
            if isinstance(g, Cap):
                return self._matrix(g, {((), (0, 0)): a, ((), (1, 1)): a})
        if isinstance(g, _TwoColor):
            self.check_pair(g.s, g.t, g.m)
            other = g.t if g.shading == g.s else g.s
            pi = Frac(r.pi(g.shading, other))
            if isinstance(g, EStar):
                source = self.obj(g.source)
                entries = {(0, j): pi for j, x in enumerate(source.endpoints) if x.is_identity()}
                return LocMatrix(source, self.obj(()), entries, r)
            if isinstance(g, Vertex2m):
                source, target = self.obj(g.source), self.obj(g.target)
                entries = {}
                for i, ep in enumerate(target.labels):
                    value = pi / Frac(r.zeta(g.s, g.t, ep))
                    for j in source.classes.get(target.endpoints[i], ()):
                        entries[(i, j)] = value
                return LocMatrix(source, target, entries, r)
            if isinstance(g, JWPrime):
                return self.evaluate(compile_jwprime(g.s, g.t, g.m, g.shading, r))
        raise DiagramError(f'unknown generator {g!r}')

    def evaluate(self, d: Diagram) -> LocMatrix:
        """Λ(d)"""
        memo = {}

        def walk(node):
            key = id(node)
            if key in memo:
                return memo[key][1]
            if isinstance(node, Gen):
                value = self.gen_matrix(node)
            elif isinstance(node, VComp):
                value = groupoid.compose(walk(node.top), walk(node.bottom))
            elif isinstance(node, HComp):
                value = groupoid.tensor(walk(node.left), walk(node.right))
            elif isinstance(node, Scaled):
                value = walk(node.diagram).scalar_mul(self.r.frac(node.coeff))
            elif isinstance(node, Sum):
                value = groupoid.zero(self.obj(node.source), self.obj(node.target), self.r)
                for term in node.terms:
                    value = value + walk(term)
            else:
                raise DiagramError(f'unknown diagram node {type(node).__name__}')
            memo[key] = (node, value)
            return value

        return walk(d)


def localize(d: Diagram, realization) -> LocMatrix:
    """Λ(d) を新しい Localizer で計算する。"""
    return Localizer(realization).evaluate(d)


def gen_matrix(g: Gen, realization) -> LocMatrix:
    return Localizer(realization).gen_matrix(g)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

_ONE_COLOR = {cls.__name__: cls for cls in (DotTop, DotBottom, Merge, Split, Cap, Cup)}
_TWO_COLOR = {cls.__name__: cls for cls in (Vertex2m, EStar, JWPrime)}


def _format_coeff(c, r) -> typing.Union[str, dict]:
    if isinstance(c, Frac):
        return c.to_json()
    if isinstance(c, Poly):
        return Frac(c).to_json()
    return r.field.format(c)


def _parse_coeff(data, r):
    if isinstance(data, dict):
        return Frac.from_json(r.variables, r.field, data)
    if isinstance(data, (int, float)):
        data = str(data)
    return r.field.parse(data)


def _parse_poly(data, r) -> Poly:
    """[[係数, [指数...]], ...] か、alpha_<名前> を変数とする式の文字列。"""
    if isinstance(data, list):
        return Poly.from_json(r.variables, r.field, data)
    symbols = sympy.symbols(r.variables)
    try:
        expr = sympy.sympify(str(data), locals={v: x for v, x in zip(r.variables, symbols)})
        p = sympy.Poly(expr, *symbols)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError) as e:
        raise DiagramError(f'cannot parse polynomial {data!r}: {e}') from None
    terms = {tuple(mono): r.field.parse(str(c)) for mono, c in p.terms()}
    return Poly(r.variables, r.field, terms)


def to_json(d: Diagram, r=None) -> dict:
    """図式を JSON 互換の辞書にする。PolyBox や係数を含むなら r が必要。"""
    if isinstance(d, Id):
        return {'type': 'gen', 'name': 'Id', 'word': list(d.word)}
    if isinstance(d, PolyBox):
        return {'type': 'gen', 'name': 'PolyBox', 'poly': d.f.to_json()}
    if isinstance(d, _OneColor):
        return {'type': 'gen', 'name': type(d).__name__, 'color': d.color}
    if isinstance(d, _TwoColor):
        return {'type': 'gen', 'name': type(d).__name__, 's': d.s, 't': d.t, 'm': d.m, 'shading': d.shading}
    if isinstance(d, VComp):
        return {'type': 'vcomp', 'top': to_json(d.top, r), 'bottom': to_json(d.bottom, r)}
    if isinstance(d, HComp):
        return {'type': 'hcomp', 'left': to_json(d.left, r), 'right': to_json(d.right, r)}
    if isinstance(d, Scaled):
        assert r is not None, 'a realization is needed to serialize coefficients'
        return {'type': 'scaled', 'coeff': _format_coeff(d.coeff, r), 'diagram': to_json(d.diagram, r)}
    if isinstance(d, Sum):
        return {'type': 'sum', 'source': list(d.source), 'target': list(d.target),
                'terms': [to_json(t, r) for t in d.terms]}
    raise DiagramError(f'unknown diagram node {type(d).__name__}')


def from_json(data: dict, r) -> Diagram:
    """JSON の辞書から図式を作る。"chain" (下から上) と "tensor" (左から右) も受け付ける。"""
    try:
        kind = data['type']
        if kind == 'gen':
            name = data['name']
            if name == 'Id':
                return Id(tuple(data.get('word', ())))
            if name == 'PolyBox':
                return PolyBox(_parse_poly(data['poly'], r))
            if name in _ONE_COLOR:
                return _ONE_COLOR[name](str(data['color']))
            if name in _TWO_COLOR:
                return _TWO_COLOR[name](str(data['s']), str(data['t']), int(data['m']), data.get('shading'))
            raise DiagramError(f'unknown generator {name!r}')
        if kind == 'vcomp':
            return VComp(from_json(data['top'], r), from_json(data['bottom'], r))
        if kind == 'hcomp':
            return HComp(from_json(data['left'], r), from_json(data['right'], r))
        if kind == 'chain':
            return chain(*[from_json(x, r) for x in data['layers']])
        if kind == 'tensor':
            return tensor(*[from_json(x, r) for x in data['factors']])
        if kind == 'scaled':
            return Scaled(_parse_coeff(data['coeff'], r), from_json(data['diagram'], r))
        if kind == 'sum':
            return Sum(tuple(from_json(x, r) for x in data['terms']), tuple(data['source']), tuple(data['target']))
    except KeyError as e:
        raise DiagramError(f'missing key {e} in diagram node {data!r}') from None
    except TypeError as e:
        raise DiagramError(f'malformed diagram node {data!r}: {e}') from None
    raise DiagramError(f'unknown diagram node type {data.get("type")!r}')


def load_diagram(path, r) -> Diagram:
    with open(path, encoding='utf-8') as fp:
        return from_json(json.load(fp), r)
