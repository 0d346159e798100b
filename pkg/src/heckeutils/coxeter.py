"""Coxeter 系・語・部分式・端点。

語 (CoxWord) は単純鏡映の添字のタプル、部分式 (Subexpression) は 0/1 のタプルで表す。
語の問題は Tits のアルゴリズム (braid move の軌道探索と ss の削除) で解き、
元 (Element) は軌道の辞書式最小の簡約語で代表する。
"""

import dataclasses
import itertools
import logging
import math
import threading
import typing


__all__ = [
    'CoxeterError', 'CoxeterSystem', 'Element',
    'CoxWord', 'Subexpression',
    'format_subexpression', 'parse_subexpression',
]

logger = logging.getLogger(__name__)

CoxWord = typing.Tuple[int, ...]
Subexpression = typing.Tuple[int, ...]


class CoxeterError(ValueError):
    """Coxeter 行列や語が不正。"""


@dataclasses.dataclass(frozen=True, order=True)
class Element:
    """W の元。word は braid 軌道で辞書式最小の簡約語。"""

    word: CoxWord = ()

    def __len__(self):
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word


IDENTITY = Element(())


def format_subexpression(e: Subexpression) -> str:
    return ''.join(str(b) for b in e)


def parse_subexpression(text: str) -> Subexpression:
    if any(ch not in '01' for ch in text):
        raise CoxeterError(f'subexpression must be a 0/1 string. text={text!r}')
    return tuple(int(ch) for ch in text)


def _parse_order(value) -> typing.Union[int, float]:
    if isinstance(value, str):
        if value.strip().lower() in ('inf', 'infinity', '∞'):
            return math.inf
        value = int(value)
    if isinstance(value, float):
        if math.isinf(value):
            return math.inf
        if not value.is_integer():
            raise CoxeterError(f'order must be an integer or inf. value={value}')
        value = int(value)
    return value


class CoxeterSystem(object):
    """Coxeter 系 (W, S)。

    Parameters
    ----------
    names: Sequence[str]
        単純鏡映の名前。

    m: Sequence[Sequence]
        対称な Coxeter 行列。対角は 1、非対角は 2 以上の整数か 'inf'。
    """

    def __init__(self, names: typing.Sequence[str], m: typing.Sequence[typing.Sequence]):
        self.names = tuple(str(n) for n in names)
        if len(set(self.names)) != len(self.names):
            raise CoxeterError(f'generator names must be distinct. names={self.names}')
        n = len(self.names)
        if n == 0:
            raise CoxeterError('a Coxeter system needs at least one generator')
        if len(m) != n or any(len(row) != n for row in m):
            raise CoxeterError(f'Coxeter matrix must be {n}x{n}')
        m = tuple(tuple(_parse_order(v) for v in row) for row in m)
        for i in range(n):
            if m[i][i] != 1:
                raise CoxeterError(f'm[{i}][{i}] must be 1. m={m[i][i]}')
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise CoxeterError(f'Coxeter matrix is not symmetric at ({i}, {j})')
                if i != j and m[i][j] < 2:
                    raise CoxeterError(f'm[{i}][{j}] must be >= 2. m={m[i][j]}')
        self.m = m
        self._lock = threading.Lock()
        self._reduce_cache = {}
        self._multiply_cache = {}

    @classmethod
    def dihedral(cls, m, names: typing.Sequence[str] = ('s', 't')) -> 'CoxeterSystem':
        return cls(names, [[1, m], [m, 1]])

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.rank:
                raise CoxeterError(f'generator index out of range. index={name}')
            return name
        try:
            return self.names.index(str(name))
        except ValueError:
            raise CoxeterError(f'unknown generator {name!r}. generators={self.names}') from None

    def order(self, s, t) -> typing.Union[int, float]:
        return self.m[self.index(s)][self.index(t)]

    def word(self, letters) -> CoxWord:
        """名前 (または添字) の列を語に変換する。文字列は 1 文字ずつか ',' 区切りで読む。"""
        if isinstance(letters, str):
            letters = letters.split(',') if ',' in letters else list(letters)
            letters = [x.strip() for x in letters if x.strip()]
        return tuple(self.index(x) for x in letters)

    def format_word(self, word: CoxWord) -> typing.List[str]:
        return [self.names[i] for i in word]

    def format_element(self, x: Element) -> str:
        if x.is_identity():
            return 'id'
        return ''.join(self.names[i] for i in x.word)

    def alternating(self, s, t, length: int) -> CoxWord:
        s, t = self.index(s), self.index(t)
        return tuple(s if i % 2 == 0 else t for i in range(length))

    # --- 語の問題 ---

    def _braid_neighbors(self, word: CoxWord) -> typing.Iterator[CoxWord]:
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                continue
            m = self.m[a][b]
            if math.isinf(m) or i + m > len(word):
                continue
            m = int(m)
            if word[i:i + m] == self.alternating(a, b, m):
                yield word[:i] + self.alternating(b, a, m) + word[i + m:]

    def braid_orbit(self, word: CoxWord) -> typing.FrozenSet[CoxWord]:
        """braid move で移り合う語の全体。"""
        seen = {tuple(word)}
        frontier = [tuple(word)]
        while frontier:
            nxt = []
            for w in frontier:
                for v in self._braid_neighbors(w):
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        return frozenset(seen)

    def _append(self, canonical: CoxWord, s: int) -> CoxWord:
        """簡約語 canonical の右に s を掛けた元の正準語。"""
        orbit = self.braid_orbit(canonical + (s,))
        for v in sorted(orbit):
            for i in range(len(v) - 1):
                if v[i] == v[i + 1]:
                    return min(self.braid_orbit(v[:i] + v[i + 2:]))
        return min(orbit)

    def reduce(self, word: CoxWord) -> CoxWord:
        """同じ元を表す簡約語 (辞書式最小の代表) を返す。"""
        word = tuple(word)
        with self._lock:
            hit = self._reduce_cache.get(word)
        if hit is not None:
            return hit
        for s in word:
            self.index(s)
        canonical = ()
        for s in word:
            canonical = self.multiply(Element(canonical), s).word
        with self._lock:
            self._reduce_cache[word] = canonical
        return canonical

    def element(self, word) -> Element:
        if isinstance(word, Element):
            return word
        return Element(self.reduce(self.word(word) if isinstance(word, str) else word))

    def multiply(self, x: Element, s: int) -> Element:
        """x * s"""
        key = (x.word, s)
        with self._lock:
            hit = self._multiply_cache.get(key)
        if hit is not None:
            return hit
        result = Element(self._append(x.word, s))
        with self._lock:
            self._multiply_cache[key] = result
        return result

    def multiply_word(self, x: Element, word: CoxWord) -> Element:
        for s in word:
            x = self.multiply(x, s)
        return x

    def is_reduced(self, word: CoxWord) -> bool:
        return len(self.reduce(word)) == len(word)

    def elements_equal(self, a: CoxWord, b: CoxWord) -> bool:
        return self.reduce(a) == self.reduce(b)

    def length(self, word: CoxWord) -> int:
        return len(self.reduce(word))

    # --- 部分式 ---

    def endpoint(self, word: CoxWord, e: Subexpression) -> Element:
        """w^e = s_1^{e_1} ... s_d^{e_d}"""
        if len(word) != len(e):
            raise CoxeterError(f'subexpression length {len(e)} does not match word length {len(word)}')
        x = IDENTITY
        for s, bit in zip(word, e):
            if bit:
                x = self.multiply(x, s)
        return x

    def endpoints(self, word: CoxWord) -> typing.List[typing.Tuple[Subexpression, Element]]:
        """全部分式とその端点を正準順 (e_1 が最上位、0 < 1) で返す。"""
        out = []

        def walk(x, i, bits):
            if i == len(word):
                out.append((bits, x))
                return
            walk(x, i + 1, bits + (0,))
            walk(self.multiply(x, word[i]), i + 1, bits + (1,))

        walk(IDENTITY, 0, ())
        return out

    def subexpressions_with_endpoint(self, word: CoxWord, x) -> typing.List[Subexpression]:
        x = self.element(x)
        return [e for e, y in self.endpoints(tuple(word)) if y == x]

    def leading_subexpressions(self, x: CoxWord) -> typing.List[CoxWord]:
        """X_x = {(s_1), (s_1, s_2), ..., x}"""
        x = tuple(x)
        if not x:
            raise CoxeterError('leading subexpressions of the empty word are undefined')
        return [x[:k] for k in range(1, len(x) + 1)]

    def all_subexpressions(self, length: int) -> typing.Iterator[Subexpression]:
        return itertools.product((0, 1), repeat=length)

    # --- 比較・表示 ---

    def __eq__(self, other):
        return isinstance(other, CoxeterSystem) and self.names == other.names and self.m == other.m

    def __hash__(self):
        return hash((self.names, self.m))

    def __repr__(self):
        return f'CoxeterSystem(names={self.names}, m={self.m})'
