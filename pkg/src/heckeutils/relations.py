"""Hecke 圏の関係式の検証。

関係式の両辺を図式として組み立て、Λ で局所化して成分ごとに厳密に比較する。
スイートは SUITES に名前で登録してあり、verify が (必要ならスレッドで並列に) 評価して Report を返す。

スイート
* one_color: 一色の関係式 (バーベル、単位・余単位、針、結合・余結合、Frobenius、多項式の押し出し、ジグザグ、円)
* cyclicity: 2m 価頂点の回転
* jw: Jones-Wenzl 関係式と、点の付いた JW、ピッチフォーク
* assoc: 二色結合律
* i2m_a1: I2(m) x A1 の関係式
* zamolodchikov_a3: A3 型の Zamolodchikov 関係式
* unbalanced: 非平衡な実現での色付き関係式
* degree: 生成元の行列の次数
* vertex: 2m 価頂点の閉公式と E_{s,t} からの構成の比較
"""

import concurrent.futures
import dataclasses
import json
import logging
import math
import time
import typing

import pandas as pd

from . import groupoid
from .heckediag import (
    Cap, Cup, Diagram, DotBottom, DotTop, EStar, Id, JWPrime, Localizer, Merge, PolyBox,
    Scaled, Split, Sum, Vertex2m,
    all_dots, alternating, chain, compile_jw_box, degree, from_json, layer, pitchfork_at, tensor,
    vertex_from_estar,
)
from .quantum import qnum_specialized
from .realization import Realization, RealizationError


__all__ = [
    'RelationCase', 'CaseResult', 'Report',
    'build_one_color_suite', 'build_cyclicity', 'build_jw', 'build_jw_alldots', 'build_jw_pitchforks',
    'build_assoc', 'build_i2m_a1', 'braid_path', 'build_zamolodchikov_a3', 'verify_zamolodchikov_custom',
    'load_zamolodchikov_pair', 'build_unbalanced_suite', 'build_vertex_cases', 'build_degree_suite',
    'finite_pairs', 'SUITES', 'build_suite', 'verify',
]

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class RelationCase:
    """検証する関係式 1 つ。

    Parameters
    ----------
    name: str
        '<スイート>/<色>/<関係式>' の形の名前。Report はこの名前で並べる。

    lhs, rhs: Diagram
        両辺。rhs が None なら 0 と比べる。

    realization: Realization

    tags: Tuple[str, ...]
        属するスイートの名前。

    mode: str
        'equal' は両辺の比較、'degree' は lhs の行列の次数だけを確かめる。
    """

    name: str
    lhs: Diagram
    rhs: typing.Optional[Diagram]
    realization: Realization
    tags: typing.Tuple[str, ...] = ()
    mode: str = 'equal'

    def __post_init__(self):
        assert self.mode in ('equal', 'degree'), 'mode must be "equal" or "degree". mode={}'.format(self.mode)
        self.tags = tuple(self.tags)
        if self.rhs is not None and (self.lhs.source != self.rhs.source or self.lhs.target != self.rhs.target):
            raise ValueError(
                f'{self.name}: boundaries differ: {list(self.lhs.source)} -> {list(self.lhs.target)} '
                f'vs {list(self.rhs.source)} -> {list(self.rhs.target)}')


@dataclasses.dataclass
class CaseResult:
    name: str
    tags: typing.Tuple[str, ...]
    passed: bool
    seconds: float
    error: typing.Optional[str] = None
    diffs: typing.List[dict] = dataclasses.field(default_factory=list)
    degree_ok: typing.Optional[bool] = None

    def to_json(self, include_timing: bool = False) -> dict:
        data = {
            'name': self.name,
            'tags': list(self.tags),
            'passed': self.passed,
            'error': self.error,
            'degree_ok': self.degree_ok,
            'diffs': self.diffs,
        }
        if include_timing:
            data['seconds'] = round(self.seconds, 6)
        return data


class Report(object):
    """verify の結果。ケースは名前順に並ぶ。"""

    def __init__(self, results: typing.Iterable[CaseResult]):
        self.results = sorted(results, key=lambda x: x.name)

    def __len__(self):
        return len(self.results)

    def __iter__(self):
        return iter(self.results)

    def __getitem__(self, name: str) -> CaseResult:
        for res in self.results:
            if res.name == name:
                return res
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(res.passed for res in self.results)

    @property
    def failures(self) -> typing.List[CaseResult]:
        return [res for res in self.results if not res.passed]

    @property
    def seconds(self) -> float:
        return sum(res.seconds for res in self.results)

    def to_frame(self) -> pd.DataFrame:
        rows = [{
            'name': res.name,
            'tags': ','.join(res.tags),
            'passed': res.passed,
            'degree_ok': res.degree_ok,
            'n_diffs': len(res.diffs),
            'error': res.error or '',
            'seconds': res.seconds,
        } for res in self.results]
        return pd.DataFrame(rows, columns=['name', 'tags', 'passed', 'degree_ok', 'n_diffs', 'error', 'seconds'])

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            'passed': self.passed,
            'n_cases': len(self.results),
            'n_failed': len(self.failures),
            'cases': [res.to_json(include_timing) for res in self.results],
        }

    def dumps(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json(include_timing), sort_keys=True, ensure_ascii=False, indent=2)

    def __str__(self):
        return f'{len(self.results) - len(self.failures)}/{len(self.results)} passed'


# ---------------------------------------------------------------------------
# 補助
# ---------------------------------------------------------------------------

def finite_pairs(r: Realization) -> typing.List[typing.Tuple[str, str, int]]:
    """m_{st} が有限な (s, t, m) (s が先に並ぶもの)。"""
    names = r.cox.names
    out = []
    for i, s in enumerate(names):
        for t in names[i + 1:]:
            m = r.order(s, t)
            if not math.isinf(m):
                out.append((s, t, int(m)))
    return out


def _order(r: Realization, s: str, t: str) -> int:
    m = r.order(s, t)
    if math.isinf(m):
        raise RealizationError(f'the pair ({s}, {t}) has m = inf')
    return int(m)


def _other(s: str, t: str, u: str) -> str:
    return t if u == s else s


# ---------------------------------------------------------------------------
# 一色の関係式
# ---------------------------------------------------------------------------

def build_one_color_suite(s: str, r: Realization) -> typing.List[RelationCase]:
    """色 s の一色の関係式すべて。

    | 名前               | 関係式                                              |
    |--------------------|-----------------------------------------------------|
    | barbell            | 上の点 ∘ 下の点 = α_s                                |
    | counit_right/left  | (Id ⊗ 上の点) ∘ Split = Id とその鏡像                |
    | unit_right/left    | Merge ∘ (Id ⊗ 下の点) = Id とその鏡像                |
    | needle             | Merge ∘ Split = 0                                    |
    | associativity      | Merge ∘ (Merge ⊗ Id) = Merge ∘ (Id ⊗ Merge)           |
    | coassociativity    | Split の同様の式                                     |
    | frobenius_*        | (Id ⊗ Merge) ∘ (Split ⊗ Id) = Split ∘ Merge とその鏡像 |
    | polynomial_forcing | 線の右の f = 左の s(f) + ∂_s(f) (切れた線)           |
    | zigzag_*           | Cup と Cap のジグザグ = Id                            |
    | cup, cap           | Cup = Split ∘ 下の点、Cap = 上の点 ∘ Merge            |
    | circle             | Cap ∘ Cup = 0                                        |
    """
    S = (s,)
    tags = ('one_color',)
    last = r.cox.names[-1]
    f = r.alpha(s) * (r.alpha(s) + 2 * r.alpha(last))
    sf = r.act_on_poly((r.cox.index(s),), f)

    def case(name, lhs, rhs):
        return RelationCase(f'one_color/{s}/{name}', lhs, rhs, r, tags)

    return [
        case('barbell', chain(DotBottom(s), DotTop(s)), PolyBox(r.alpha(s))),
        case('counit_right', chain(Split(s), tensor(Id(S), DotTop(s))), Id(S)),
        case('counit_left', chain(Split(s), tensor(DotTop(s), Id(S))), Id(S)),
        case('unit_right', chain(tensor(Id(S), DotBottom(s)), Merge(s)), Id(S)),
        case('unit_left', chain(tensor(DotBottom(s), Id(S)), Merge(s)), Id(S)),
        case('needle', chain(Split(s), Merge(s)), None),
        case('associativity',
             chain(tensor(Merge(s), Id(S)), Merge(s)),
             chain(tensor(Id(S), Merge(s)), Merge(s))),
        case('coassociativity',
             chain(Split(s), tensor(Split(s), Id(S))),
             chain(Split(s), tensor(Id(S), Split(s)))),
        case('frobenius_left',
             chain(tensor(Split(s), Id(S)), tensor(Id(S), Merge(s))),
             chain(Merge(s), Split(s))),
        case('frobenius_right',
             chain(tensor(Id(S), Split(s)), tensor(Merge(s), Id(S))),
             chain(Merge(s), Split(s))),
        case('polynomial_forcing',
             tensor(Id(S), PolyBox(f)),
             Sum((tensor(PolyBox(sf), Id(S)), Scaled(r.demazure(s, f), chain(DotTop(s), DotBottom(s)))), S, S)),
        case('zigzag_right', chain(tensor(Cup(s), Id(S)), tensor(Id(S), Cap(s))), Id(S)),
        case('zigzag_left', chain(tensor(Id(S), Cup(s)), tensor(Cap(s), Id(S))), Id(S)),
        case('cup', Cup(s), chain(DotBottom(s), Split(s))),
        case('cap', Cap(s), chain(Merge(s), DotTop(s))),
        case('circle', chain(Cup(s), Cap(s)), None),
    ]


# ---------------------------------------------------------------------------
# 二色の関係式
# ---------------------------------------------------------------------------

def build_cyclicity(s: str, t: str, r: Realization, shading: typing.Optional[str] = None,
                    suite: str = 'cyclicity') -> RelationCase:
    """E_{s,t} を 1 本回すと E_{t,s} になる。両辺の E は同じ色で塗る。

    両辺とも (t, s, ...)_{2m-1} -> (s)。
    """
    m = _order(r, s, t)
    u = s if shading is None else shading
    X = alternating(t, s, 2 * m - 1)
    lhs = chain(tensor(Cup(s), Id(X)), tensor(Id((s,)), EStar(s, t, m, u)))
    rhs = chain(tensor(Id(X), Cup(s)), tensor(EStar(t, s, m, u), Id((s,))))
    return RelationCase(f'{suite}/{s},{t}/shading={u}/cyclicity', lhs, rhs, r, (suite,))


def build_jw(s: str, t: str, r: Realization, shading: typing.Optional[str] = None,
             suite: str = 'jw') -> RelationCase:
    """E_{s,t} の最後の線に点を付けたものが JW'_{s,t} に等しい。"""
    m = _order(r, s, t)
    u = s if shading is None else shading
    word = alternating(s, t, 2 * m - 1)
    lhs = chain(tensor(Id(word), DotBottom(t)), EStar(s, t, m, u))
    return RelationCase(f'{suite}/{s},{t}/shading={u}/jw', lhs, JWPrime(s, t, m, u), r, (suite,))


def build_jw_alldots(s: str, t: str, r: Realization, shading: typing.Optional[str] = None,
                     suite: str = 'jw') -> RelationCase:
    """すべての線に点を付けた JW' は π_{shading, other}。"""
    m = _order(r, s, t)
    u = s if shading is None else shading
    lhs = chain(all_dots(alternating(s, t, 2 * m - 1)), JWPrime(s, t, m, u))
    return RelationCase(f'{suite}/{s},{t}/shading={u}/all_dots', lhs, PolyBox(r.pi(u, _other(s, t, u))), r, (suite,))


def build_jw_pitchforks(s: str, t: str, r: Realization, shading: typing.Optional[str] = None,
                        suite: str = 'jw') -> typing.List[RelationCase]:
    """JW' は下のピッチフォークで消える。"""
    m = _order(r, s, t)
    u = s if shading is None else shading
    word = alternating(s, t, 2 * m - 1)
    return [
        RelationCase(f'{suite}/{s},{t}/shading={u}/pitchfork_{p}',
                     chain(pitchfork_at(word, p), JWPrime(s, t, m, u)), None, r, (suite,))
        for p in range(len(word) - 2)
    ]


def build_assoc(s: str, t: str, r: Realization, shading: typing.Optional[str] = None,
                suite: str = 'assoc') -> RelationCase:
    """二色結合律: 1 本目に三価頂点を付けた 2m 価頂点と、ずらした 2 つの 2m 価頂点。

    両辺とも (s, s, t, ...)_{m+1} -> (t, s, ...)_m。
    """
    m = _order(r, s, t)
    u = s if shading is None else shading
    G = Vertex2m(s, t, m, u)
    v = alternating(t, s, m)
    c = alternating(s, t, m + 1)[m]
    lhs = chain(tensor(Merge(s), Id(alternating(t, s, m - 1))), G)
    rhs = chain(
        tensor(Id((s,)), G),
        tensor(G, Id((c,))),
        tensor(Id(v[:m - 1]), Merge(c)),
    )
    return RelationCase(f'{suite}/{s},{t}/shading={u}/associativity', lhs, rhs, r, (suite,))


def _cross(u: str, word: typing.Sequence[str]) -> typing.List[Diagram]:
    """u の線を word の左から右へ 4 価頂点で渡す層。"""
    word = tuple(word)
    return [layer(word[:i], Vertex2m(u, x, 2), word[i + 1:]) for i, x in enumerate(word)]


def build_i2m_a1(s: str, t: str, u: str, r: Realization) -> RelationCase:
    """u の線は s, t の 2m 価頂点を素通りする。"""
    m = _order(r, s, t)
    for x in (s, t):
        if r.order(x, u) != 2:
            raise RealizationError(f'{u} must commute with {x}. m={r.order(x, u)}')
    lhs = chain(*_cross(u, alternating(s, t, m)), tensor(Vertex2m(s, t, m), Id((u,))))
    rhs = chain(tensor(Id((u,)), Vertex2m(s, t, m)), *_cross(u, alternating(t, s, m)))
    return RelationCase(f'i2m_a1/{s},{t},{u}/crossing', lhs, rhs, r, ('i2m_a1',))


# ---------------------------------------------------------------------------
# Zamolodchikov
# ---------------------------------------------------------------------------

Move = typing.Tuple[str, str, int]

# (s, t, 開始位置 (1 始まり))。m は実現から取る。
A3_BOTTOM = ('3', '2', '1', '3', '2', '3')
A3_TOP = ('1', '2', '1', '3', '2', '1')
A3_LHS: typing.Tuple[Move, ...] = (
    ('1', '3', 3), ('3', '2', 1), ('2', '1', 3), ('3', '1', 2), ('1', '3', 5), ('3', '2', 3), ('2', '1', 1),
)
A3_RHS: typing.Tuple[Move, ...] = (
    ('3', '2', 4), ('2', '1', 2), ('3', '1', 1), ('1', '3', 4), ('3', '2', 2), ('2', '1', 4), ('3', '1', 3),
)


def braid_path(word: typing.Sequence[str], moves: typing.Sequence[Move], r: Realization) -> Diagram:
    """word から始めて、組紐移動ごとに 2m 価頂点を 1 つ積む。

    Parameters
    ----------
    word: Sequence[str]
        下端の語。

    moves: Sequence[(s, t, start)]
        位置 start (1 始まり) から m 文字の (s, t, ...) を (t, s, ...) に置き換える。
    """
    word = tuple(str(x) for x in word)
    layers = []
    for s, t, start in moves:
        s, t = str(s), str(t)
        m = _order(r, s, t)
        i = int(start) - 1
        if word[i:i + m] != alternating(s, t, m):
            raise ValueError(f'braid move ({s}, {t}) at {start} does not fit {list(word)}')
        layers.append(layer(word[:i], Vertex2m(s, t, m), word[i + m:]))
        word = word[:i] + alternating(t, s, m) + word[i + m:]
    if not layers:
        return Id(word)
    return chain(*layers)


def _is_a3(r: Realization) -> bool:
    return (tuple(r.cox.names) == ('1', '2', '3')
            and r.order('1', '2') == 3 and r.order('2', '3') == 3 and r.order('1', '3') == 2)


def build_zamolodchikov_a3(r: Realization) -> RelationCase:
    """A3 型の Zamolodchikov 関係式。生成元の名前は '1', '2', '3' (1-3 が可換)。"""
    if not _is_a3(r):
        raise RealizationError(f'the A3 Zamolodchikov relation needs generators 1, 2, 3 of type A3. got {r.cox.names}')
    lhs = braid_path(A3_BOTTOM, A3_LHS, r)
    rhs = braid_path(A3_BOTTOM, A3_RHS, r)
    assert lhs.target == rhs.target == A3_TOP, 'A3 braid paths must end at {}'.format(A3_TOP)
    return RelationCase('zamolodchikov_a3/1,2,3/zamolodchikov', lhs, rhs, r, ('zamolodchikov_a3',))


def verify_zamolodchikov_custom(lhs: Diagram, rhs: Diagram, r: Realization,
                                name: str = 'zamolodchikov/custom') -> RelationCase:
    """外から与えた Zamolodchikov 関係式 (例えば B3) の両辺。"""
    if r.rank != 3:
        raise RealizationError(f'a Zamolodchikov relation needs a rank 3 realization. rank={r.rank}')
    return RelationCase(name, lhs, rhs, r, ('zamolodchikov',))


def _side(data, r: Realization) -> Diagram:
    if isinstance(data, dict) and 'moves' in data:
        return braid_path(data['word'], [tuple(x) for x in data['moves']], r)
    return from_json(data, r)


def load_zamolodchikov_pair(path, r: Realization) -> RelationCase:
    """{"lhs": ..., "rhs": ...} の JSON を読む。

    各辺は図式の JSON か {"word": [...], "moves": [[s, t, start], ...]} (braid_path の引数)。
    """
    with open(path, encoding='utf-8') as fp:
        data = json.load(fp)
    try:
        lhs, rhs = _side(data['lhs'], r), _side(data['rhs'], r)
    except KeyError as e:
        raise ValueError(f'missing key {e} in {path}') from None
    return verify_zamolodchikov_custom(lhs, rhs, r, name=str(data.get('name', 'zamolodchikov/custom')))


# ---------------------------------------------------------------------------
# 非平衡な実現
# ---------------------------------------------------------------------------

def _wrap_first(x: str, d: Diagram) -> Diagram:
    """d の 1 本目 (色 x) を三価頂点で分け、左の枝を d の上を回して右端へ下ろす。"""
    rest = d.source[1:]
    return chain(tensor(Split(x), Id(rest), Id((x,))), layer((x,), d, (x,)), Cap(x))


def _wrap_last(x: str, d: Diagram) -> Diagram:
    """_wrap_first の鏡像: 最後の線を分け、右の枝を左端へ下ろす。"""
    rest = d.source[:-1]
    return chain(layer((x,) + rest, Split(x)), layer((x,), d, (x,)), Cap(x))


def _bend_first(x: str, d: Diagram) -> Diagram:
    """d の 1 本目を左から上を回して右端へ下ろす (1 本分の回転)。"""
    rest = d.source[1:]
    return chain(tensor(Cup(x), Id(rest), Id((x,))), layer((x,), d, (x,)), Cap(x))


def build_unbalanced_suite(s: str, t: str, r: Realization) -> typing.List[RelationCase]:
    """m が奇数の対 (s, t) での色付き関係式。

    | 名前                 | 関係式                                                   |
    |----------------------|----------------------------------------------------------|
    | rescale              | t で塗った頂点 = [m-1]_s · s で塗った頂点                 |
    | pi_relation          | π_{s,t} = [m-1]_t π_{t,s}                                |
    | cyclicity, jw, all_dots, vertex_from_estar | 各色で塗った版                      |
    | dot_last / dot_first | 最後 (最初) の線に点を付けた E = 三価頂点で回した JW_{s,t} |
    | box_all_dots         | すべての線に点を付けた JW_{s,t} = π                        |
    | dot_through          | 1 本目に点を付けた頂点は、上に頂点を重ねると点が素通りした項だけ残る |
    | bent_jw              | 1 本回した JW_{s,t} = [m-1]_t JW_{t,s} とその色の入れ替え  |
    | associativity        | t で塗った (s, t) と s で塗った (t, s)                    |
    """
    m = _order(r, s, t)
    if m % 2 == 0:
        raise RealizationError(f'the unbalanced suite needs an odd m. pair=({s}, {t}), m={m}')
    tag = 'unbalanced'
    prefix = f'{tag}/{s},{t}'
    ms = qnum_specialized(r, (s, t), m - 1, 's')
    mt = qnum_specialized(r, (s, t), m - 1, 't')
    E = alternating(s, t, 2 * m)
    v = alternating(t, s, m)

    def case(name, lhs, rhs):
        return RelationCase(f'{prefix}/{name}', lhs, rhs, r, (tag,))

    cases = [
        case('rescale', Vertex2m(s, t, m, t), Scaled(ms, Vertex2m(s, t, m, s))),
        case('pi_relation', PolyBox(r.pi(s, t)), Scaled(mt, PolyBox(r.pi(t, s)))),
    ]
    for u in (s, t):
        box = compile_jw_box(s, t, m, u, r)
        top = Vertex2m(t, s, m, u)
        cases += [
            build_cyclicity(s, t, r, shading=u, suite=tag),
            build_jw(s, t, r, shading=u, suite=tag),
            build_jw_alldots(s, t, r, shading=u, suite=tag),
            case(f'shading={u}/vertex_from_estar', vertex_from_estar(s, t, m, u), Vertex2m(s, t, m, u)),
            case(f'shading={u}/dot_last',
                 chain(tensor(Id(E[:-1]), DotBottom(E[-1])), EStar(s, t, m, u)), _wrap_first(s, box)),
            case(f'shading={u}/dot_first',
                 chain(tensor(DotBottom(E[0]), Id(E[1:])), EStar(s, t, m, u)), _wrap_last(E[-1], box)),
            case(f'shading={u}/box_all_dots',
                 chain(all_dots(box.source), box), PolyBox(r.pi(u, _other(s, t, u)))),
            # 残りの項は上端にピッチフォークがあり、上の頂点で消える
            case(f'shading={u}/dot_through',
                 chain(tensor(DotBottom(s), Id(v[:-1])), Vertex2m(s, t, m, u), top),
                 Scaled(1 if u == t else mt, chain(tensor(Id(v[:-1]), DotBottom(v[-1])), top))),
        ]
    for a, b, coeff in ((s, t, mt), (t, s, ms)):
        cases.append(case(f'shading={a}/bent_jw', _bend_first(a, compile_jw_box(a, b, m, a, r)),
                          Scaled(coeff, compile_jw_box(b, a, m, b, r))))
    cases.append(build_assoc(s, t, r, shading=t, suite=tag))
    cases.append(build_assoc(t, s, r, shading=s, suite=tag))
    return cases


# ---------------------------------------------------------------------------
# 頂点と次数
# ---------------------------------------------------------------------------

def build_vertex_cases(s: str, t: str, r: Realization) -> typing.List[RelationCase]:
    """2m 価頂点の閉公式が E_{s,t} とカップからの構成に一致する (両方の向き)。"""
    m = _order(r, s, t)
    return [
        RelationCase(f'vertex/{a},{b}/vertex_from_estar', vertex_from_estar(a, b, m), Vertex2m(a, b, m), r, ('vertex',))
        for a, b in ((s, t), (t, s))
    ]


def build_degree_suite(r: Realization) -> typing.List[RelationCase]:
    """すべての生成元の行列の成分が次数どおりか。"""
    cases = []
    for s in r.cox.names:
        for g in (DotTop(s), DotBottom(s), Merge(s), Split(s), Cap(s), Cup(s), PolyBox(r.alpha(s))):
            cases.append(RelationCase(f'degree/{s}/{type(g).__name__}', g, None, r, ('degree',), mode='degree'))
    for s, t, m in finite_pairs(r):
        for a, b in ((s, t), (t, s)):
            for g in (Vertex2m(a, b, m), EStar(a, b, m), JWPrime(a, b, m)):
                cases.append(RelationCase(f'degree/{a},{b}/{type(g).__name__}', g, None, r, ('degree',), mode='degree'))
    return cases


# ---------------------------------------------------------------------------
# スイート
# ---------------------------------------------------------------------------

def _suite_one_color(r):
    return [c for s in r.cox.names for c in build_one_color_suite(s, r)]


def _suite_cyclicity(r):
    return [build_cyclicity(a, b, r) for s, t, _ in finite_pairs(r) for a, b in ((s, t), (t, s))]


def _suite_jw(r):
    cases = []
    for s, t, _ in finite_pairs(r):
        for a, b in ((s, t), (t, s)):
            cases.append(build_jw(a, b, r))
            cases.append(build_jw_alldots(a, b, r))
            cases.extend(build_jw_pitchforks(a, b, r))
    return cases


def _suite_assoc(r):
    return [build_assoc(a, b, r) for s, t, _ in finite_pairs(r) for a, b in ((s, t), (t, s))]


def _suite_i2m_a1(r):
    cases = []
    names = r.cox.names
    for s, t, _ in finite_pairs(r):
        for u in names:
            if u not in (s, t) and r.order(s, u) == 2 and r.order(t, u) == 2:
                cases.append(build_i2m_a1(s, t, u, r))
    return cases


def _suite_zamolodchikov_a3(r):
    return [build_zamolodchikov_a3(r)] if _is_a3(r) else []


def _suite_unbalanced(r):
    return [c for s, t, m in finite_pairs(r) if m % 2 == 1 and not r.is_balanced_pair(s, t)
            for c in build_unbalanced_suite(s, t, r)]


def _suite_vertex(r):
    return [c for s, t, _ in finite_pairs(r) for c in build_vertex_cases(s, t, r)]


SUITES: typing.Dict[str, typing.Callable[[Realization], typing.List[RelationCase]]] = {
    'one_color': _suite_one_color,
    'cyclicity': _suite_cyclicity,
    'jw': _suite_jw,
    'assoc': _suite_assoc,
    'i2m_a1': _suite_i2m_a1,
    'zamolodchikov_a3': _suite_zamolodchikov_a3,
    'unbalanced': _suite_unbalanced,
    'degree': build_degree_suite,
    'vertex': _suite_vertex,
}


def build_suite(name: str, r: Realization) -> typing.List[RelationCase]:
    """名前 (または 'all') のスイートのケース。実現に当てはまらないスイートは空。"""
    if name == 'all':
        return [c for key in SUITES for c in SUITES[key](r)]
    if name not in SUITES:
        raise ValueError(f'unknown suite {name!r}. (Supported: all, {", ".join(SUITES)})')
    return SUITES[name](r)


# ---------------------------------------------------------------------------
# 検証
# ---------------------------------------------------------------------------

def _diff_entries(a, b, limit: int) -> typing.List[dict]:
    return [
        {'row': row, 'col': col, 'lhs': str(u.reduce()), 'rhs': str(v.reduce())}
        for row, col, u, v in groupoid.diff(a, b, limit=limit)
    ]


def _degree_ok(d: Diagram, mat) -> typing.Optional[bool]:
    deg = degree(d)
    if deg is None:
        return None
    return groupoid.degree_check(mat, deg)


def _run_case(case: RelationCase, localizer: Localizer, diff_limit: int) -> CaseResult:
    logger.info('case %s started', case.name)
    start = time.perf_counter()
    try:
        lhs = localizer.evaluate(case.lhs)
        if case.mode == 'degree':
            degree_ok = _degree_ok(case.lhs, lhs)
            passed = degree_ok is True
            diffs = []
        else:
            if case.rhs is None:
                rhs = groupoid.zero(lhs.source, lhs.target, case.realization)
                checks = [_degree_ok(case.lhs, lhs)]
            else:
                rhs = localizer.evaluate(case.rhs)
                checks = [_degree_ok(case.lhs, lhs), _degree_ok(case.rhs, rhs)]
            diffs = _diff_entries(lhs, rhs, diff_limit)
            known = [x for x in checks if x is not None]
            degree_ok = all(known) if known else None
            passed = not diffs and degree_ok is not False
        result = CaseResult(case.name, case.tags, passed, time.perf_counter() - start,
                            diffs=diffs, degree_ok=degree_ok)
    except (ArithmeticError, AssertionError, KeyError, ValueError) as e:
        result = CaseResult(case.name, case.tags, False, time.perf_counter() - start,
                            error=f'{type(e).__name__}: {e}')
    if result.passed:
        logger.info('case %s passed in %.3fs', case.name, result.seconds)
    elif result.error:
        logger.warning('case %s raised %s', case.name, result.error)
    else:
        logger.warning('case %s failed: %d differing entries, degree_ok=%s',
                       case.name, len(result.diffs), result.degree_ok)
    return result


def verify(cases: typing.Sequence[RelationCase], threads: int = 1,
           localizer_factory: typing.Callable[[Realization], Localizer] = Localizer,
           diff_limit: int = 10) -> Report:
    """すべてのケースを評価して Report を返す。

    Parameters
    ----------
    cases: Sequence[RelationCase]

    threads: int
        1 より大きければケースをスレッドで並列に評価する。結果の順序は変わらない。

    localizer_factory: Callable[[Realization], Localizer]
        実現ごとに 1 度だけ呼ぶ。生成元の行列のキャッシュは同じ実現のケースで共有する。

    diff_limit: int
        失敗したケースで記録する成分の数。
    """
    assert threads >= 1, 'threads must be positive. threads={}'.format(threads)
    localizers = {}
    for case in cases:
        key = id(case.realization)
        if key not in localizers:
            localizers[key] = localizer_factory(case.realization)
    logger.info('verifying %d cases on %d thread(s)', len(cases), threads)

    def run(case):
        return _run_case(case, localizers[id(case.realization)], diff_limit)

    if threads == 1:
        results = [run(case) for case in cases]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, cases))
    report = Report(results)
    logger.info('verification finished: %s', report)
    return report
