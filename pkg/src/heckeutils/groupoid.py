"""Q 亜群の加法的包絡。

対象は部分式でラベル付けされた r_x の直和 (SumObject)、
射は分数を成分とする疎行列 (LocMatrix)。
行・列の順序は e_1 を最上位ビットとする二進数の順 (0 < 1)。
Hom(r_x, r_y) は x = y のときだけ Q なので、行と列の端点が異なる成分は持てない。
"""

import json
import logging
import typing

import numpy as np
import pandas as pd

from .algebra import Frac, frac_degree, frac_eq
from .coxeter import CoxeterSystem, CoxWord, Element, Subexpression, format_subexpression


__all__ = [
    'EndpointError', 'SumObject', 'LocMatrix',
    'compose', 'tensor', 'equal', 'degree_check', 'identity', 'zero', 'diff',
]

logger = logging.getLogger(__name__)


class EndpointError(ValueError):
    """端点の異なる行と列の成分、または対象の合わない合成。"""


class SumObject(object):
    """語 word の部分式で添字付けられた r_x の直和。

    Parameters
    ----------
    cox: CoxeterSystem

    word: CoxWord
        B_word の語。

    labels: Optional[Sequence[Subexpression]]
        和因子の部分式。省略時は 2^d 個すべてを正準順で持つ。
    """

    def __init__(self, cox: CoxeterSystem, word: CoxWord, labels: typing.Optional[typing.Sequence[Subexpression]] = None):
        self.cox = cox
        self.word = tuple(word)
        if labels is None:
            pairs = cox.endpoints(self.word)
            self.labels = tuple(e for e, _ in pairs)
            self.endpoints = tuple(x for _, x in pairs)
        else:
            self.labels = tuple(tuple(e) for e in labels)
            if len(set(self.labels)) != len(self.labels):
                raise EndpointError(f'labels must be distinct. word={cox.format_word(self.word)}')
            self.endpoints = tuple(cox.endpoint(self.word, e) for e in self.labels)
        self.index = {e: i for i, e in enumerate(self.labels)}
        classes = {}
        for i, x in enumerate(self.endpoints):
            classes.setdefault(x, []).append(i)
        self.classes = classes

    def __len__(self):
        return len(self.labels)

    def label(self, i: int) -> str:
        return format_subexpression(self.labels[i]) or '()'

    def endpoint(self, i: int) -> Element:
        return self.endpoints[i]

    def tensor(self, other: 'SumObject') -> 'SumObject':
        labels = [a + b for a in self.labels for b in other.labels]
        obj = SumObject.__new__(SumObject)
        obj.cox = self.cox
        obj.word = self.word + other.word
        obj.labels = tuple(labels)
        obj.endpoints = tuple(
            self.cox.multiply_word(x, tuple(s for s, bit in zip(other.word, b) if bit))
            for x in self.endpoints for b in other.labels)
        obj.index = {e: i for i, e in enumerate(obj.labels)}
        obj.classes = {}
        for i, x in enumerate(obj.endpoints):
            obj.classes.setdefault(x, []).append(i)
        return obj

    def __eq__(self, other):
        return isinstance(other, SumObject) and self.word == other.word and self.labels == other.labels

    def __hash__(self):
        return hash((self.word, self.labels))

    def __repr__(self):
        return f'SumObject(word={self.cox.format_word(self.word)}, size={len(self)})'


class LocMatrix(object):
    """source -> target の射。成分は {(行番号, 列番号): Frac} の疎な辞書。

    Parameters
    ----------
    source, target: SumObject

    entries: dict
        (行, 列) -> 値。行・列は番号か部分式。0 の成分は捨てる。

    realization: Realization
        W の作用と係数の型を与える実現。
    """

    __slots__ = ('source', 'target', 'entries', 'realization', '_columns')

    def __init__(self, source: SumObject, target: SumObject, entries: typing.Mapping, realization):
        self.source = source
        self.target = target
        self.realization = realization
        clean = {}
        for (row, col), value in entries.items():
            i = row if isinstance(row, int) else target.index[tuple(row)]
            j = col if isinstance(col, int) else source.index[tuple(col)]
            value = realization.frac(value)
            if value.is_zero():
                continue
            if target.endpoints[i] != source.endpoints[j]:
                raise EndpointError(
                    f'entry ({target.label(i)}, {source.label(j)}) joins different endpoints '
                    f'{realization.cox.format_element(target.endpoints[i])} and '
                    f'{realization.cox.format_element(source.endpoints[j])}')
            clean[(i, j)] = value
        self.entries = clean
        self._columns = None

    @classmethod
    def _trusted(cls, source, target, entries, realization) -> 'LocMatrix':
        obj = cls.__new__(cls)
        obj.source, obj.target, obj.realization = source, target, realization
        obj.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        obj._columns = None
        return obj

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return len(self.target), len(self.source)

    def columns(self) -> typing.Dict[int, typing.Dict[int, Frac]]:
        """列番号 -> {行番号: 値}"""
        if self._columns is None:
            cols = {}
            for (i, j), v in self.entries.items():
                cols.setdefault(j, {})[i] = v
            self._columns = cols
        return self._columns

    def entry(self, row, col) -> Frac:
        i = row if isinstance(row, int) else self.target.index[tuple(row)]
        j = col if isinstance(col, int) else self.source.index[tuple(col)]
        return self.entries.get((i, j), self.realization.frac(0))

    def column(self, col) -> typing.Dict[Subexpression, Frac]:
        j = col if isinstance(col, int) else self.source.index[tuple(col)]
        return {self.target.labels[i]: v for i, v in sorted(self.columns().get(j, {}).items())}

    def is_zero(self) -> bool:
        return not self.entries

    def _check_same(self, other: 'LocMatrix'):
        if self.source != other.source or self.target != other.target:
            raise EndpointError(f'objects differ: {self.source} -> {self.target} vs {other.source} -> {other.target}')

    def __add__(self, other: 'LocMatrix') -> 'LocMatrix':
        self._check_same(other)
        entries = dict(self.entries)
        for k, v in other.entries.items():
            entries[k] = entries[k] + v if k in entries else v
        return LocMatrix._trusted(self.source, self.target, entries, self.realization)

    def __neg__(self) -> 'LocMatrix':
        return LocMatrix._trusted(self.source, self.target, {k: -v for k, v in self.entries.items()}, self.realization)

    def __sub__(self, other: 'LocMatrix') -> 'LocMatrix':
        return self + (-other)

    def scalar_mul(self, c) -> 'LocMatrix':
        c = self.realization.frac(c)
        return LocMatrix._trusted(self.source, self.target, {k: c * v for k, v in self.entries.items()}, self.realization)

    def __matmul__(self, other: 'LocMatrix') -> 'LocMatrix':
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, LocMatrix):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    # --- 表示・出力 ---

    def to_array(self) -> np.ndarray:
        """密な numpy の object 配列 (成分は Frac)。"""
        arr = np.empty(self.shape, dtype=object)
        zero = self.realization.frac(0)
        arr[:, :] = zero
        for (i, j), v in self.entries.items():
            arr[i, j] = v
        return arr

    def to_frame(self) -> pd.DataFrame:
        """非零成分を 1 行ずつ並べた表。"""
        rows = []
        for (i, j) in sorted(self.entries):
            rows.append({
                'row': self.target.label(i),
                'col': self.source.label(j),
                'endpoint': self.realization.cox.format_element(self.source.endpoints[j]),
                'value': str(self.entries[(i, j)]),
            })
        return pd.DataFrame(rows, columns=['row', 'col', 'endpoint', 'value'])

    def to_json(self) -> dict:
        cox = self.realization.cox
        return {
            'source_word': cox.format_word(self.source.word),
            'target_word': cox.format_word(self.target.word),
            'entries': [
                {
                    'row': format_subexpression(self.target.labels[i]),
                    'col': format_subexpression(self.source.labels[j]),
                    'value': self.entries[(i, j)].reduce().to_json(),
                }
                for (i, j) in sorted(self.entries)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)

    def __str__(self):
        lines = [f'{self.realization.cox.format_word(self.source.word)} -> '
                 f'{self.realization.cox.format_word(self.target.word)} ({self.shape[0]}x{self.shape[1]})']
        for (i, j) in sorted(self.entries):
            lines.append(f'  [{self.target.label(i)}, {self.source.label(j)}] = {self.entries[(i, j)]}')
        return '\n'.join(lines)

    def __repr__(self):
        return f'LocMatrix({self.source!r} -> {self.target!r}, nnz={len(self.entries)})'


def identity(obj: SumObject, realization) -> LocMatrix:
    one = realization.frac(1)
    return LocMatrix._trusted(obj, obj, {(i, i): one for i in range(len(obj))}, realization)


def zero(source: SumObject, target: SumObject, realization) -> LocMatrix:
    return LocMatrix._trusted(source, target, {}, realization)


def compose(a: LocMatrix, b: LocMatrix) -> LocMatrix:
    """a ∘ b (b を先に施す)。"""
    if b.target != a.source:
        raise EndpointError(f'cannot compose: {b.target} is not {a.source}')
    a_cols = a.columns()
    acc = {}
    for (j, k), v in b.entries.items():
        col = a_cols.get(j)
        if not col:
            continue
        for i, u in col.items():
            key = (i, k)
            term = u * v
            acc[key] = acc[key] + term if key in acc else term
    logger.debug('compose %dx%d by %dx%d: nnz=%d', a.shape[0], a.shape[1], b.shape[0], b.shape[1], len(acc))
    return LocMatrix._trusted(b.source, a.target, acc, a.realization)


def tensor(a: LocMatrix, b: LocMatrix) -> LocMatrix:
    """a ⊗ b。(f1 f2, e1 e2) 成分は a[f1, e1] * w(b[f2, e2]) (w は f1 の端点)。"""
    r = a.realization
    source = a.source.tensor(b.source)
    target = a.target.tensor(b.target)
    nb_src, nb_tgt = len(b.source), len(b.target)
    twisted = {}
    entries = {}
    for (i1, j1), u in a.entries.items():
        w = a.target.endpoints[i1]
        if w not in twisted:
            if w.is_identity():
                twisted[w] = b.entries
            else:
                twisted[w] = {k: r.act_on_element(w, v) for k, v in b.entries.items()}
        for (i2, j2), v in twisted[w].items():
            value = v if u.is_one() else u * v
            entries[(i1 * nb_tgt + i2, j1 * nb_src + j2)] = value
    return LocMatrix._trusted(source, target, entries, r)


def equal(a: LocMatrix, b: LocMatrix) -> bool:
    a._check_same(b)
    return not diff(a, b, limit=1)


def diff(a: LocMatrix, b: LocMatrix, limit: typing.Optional[int] = None) -> typing.List[tuple]:
    """異なる成分の (行ラベル, 列ラベル, a の値, b の値) のリスト。"""
    a._check_same(b)
    zero_frac = a.realization.frac(0)
    out = []
    for key in sorted(set(a.entries) | set(b.entries)):
        u = a.entries.get(key, zero_frac)
        v = b.entries.get(key, zero_frac)
        if not frac_eq(u, v):
            i, j = key
            out.append((a.target.label(i), a.source.label(j), u, v))
            if limit is not None and len(out) >= limit:
                break
    return out


def degree_check(a: LocMatrix, morphism_degree: int) -> bool:
    """すべての成分が斉次で次数 morphism_degree + |source| - |target| を持つか。"""
    expected = morphism_degree + len(a.source.word) - len(a.target.word)
    for v in a.entries.values():
        if frac_degree(v) != expected:
            return False
    return True
