"""
組み込みの実現

どれも TOML と同じ構造の辞書で、from_config を通して読み込む。
"""

import functools
import typing

from .base import BaseRealizationSource, from_config
from ..realization import Realization, RealizationError


__all__ = ['CATALOG', 'BuiltinRealization', 'builtin_names', 'load']


def _dihedral(name, m, a_st, a_ts=None, field=None):
    return {
        'name': name,
        'field': field or {'kind': 'rational'},
        'coxeter': {'generators': ['s', 't'], 'm': [[1, m], [m, 1]]},
        'cartan': {'s,t': a_st, 't,s': a_st if a_ts is None else a_ts},
    }


def _times_a1(name, m, a_st, a_ts=None):
    return {
        'name': name,
        'field': {'kind': 'rational'},
        'coxeter': {'generators': ['s', 't', 'u'], 'm': [[1, m, 2], [m, 1, 2], [2, 2, 1]]},
        'cartan': {'s,t': a_st, 't,s': a_st if a_ts is None else a_ts},
    }


CATALOG = {
    'A1': {
        'name': 'A1',
        'field': {'kind': 'rational'},
        'coxeter': {'generators': ['s'], 'm': [[1]]},
        'cartan': {},
    },
    'A1xA1': _dihedral('A1xA1', 2, 0),
    'A2': _dihedral('A2', 3, -1),
    'B2': _dihedral('B2', 4, -2, -1),
    'G2': _dihedral('G2', 6, -3, -1),
    'A3': {
        'name': 'A3',
        'field': {'kind': 'rational'},
        'coxeter': {'generators': ['1', '2', '3'], 'm': [[1, 3, 2], [3, 1, 3], [2, 3, 1]]},
        'cartan': {'1,2': -1, '2,1': -1, '2,3': -1, '3,2': -1},
    },
    'B3': {
        'name': 'B3',
        'field': {'kind': 'rational'},
        'coxeter': {'generators': ['1', '2', '3'], 'm': [[1, 3, 2], [3, 1, 4], [2, 4, 1]]},
        'cartan': {'1,2': -1, '2,1': -1, '2,3': -2, '3,2': -1},
    },
    # I2(m) x A1 (u は s, t と可換)
    'A1xA1xA1': _times_a1('A1xA1xA1', 2, 0),
    'A2xA1': _times_a1('A2xA1', 3, -1),
    'B2xA1': _times_a1('B2xA1', 4, -2, -1),
    # 2cos(pi/m) を生成元とする数体上の幾何的実現
    'I2_5': _dihedral('I2_5', 5, '-x', field={'kind': 'number', 'modulus': 'x^2 - x - 1', 'generator': 'x'}),
    'I2_7': _dihedral('I2_7', 7, '-x', field={'kind': 'number', 'modulus': 'x^3 - x^2 - 2*x + 1', 'generator': 'x'}),
    'I2_8': _dihedral('I2_8', 8, '-x', field={'kind': 'number', 'modulus': 'x^4 - 4*x^2 + 2', 'generator': 'x'}),
    # 退化した例
    'I2_6_unbalanced': _dihedral('I2_6_unbalanced', 6, -1),
    'I2_9_nonfaithful': _dihedral('I2_9_nonfaithful', 9, -1),
    'I2_4_degenerate': _dihedral('I2_4_degenerate', 4, 0),
    'I2_4_degenerate_F2': _dihedral('I2_4_degenerate_F2', 4, 0, field={'kind': 'prime', 'p': 2}),
    'I2_3_signed': _dihedral('I2_3_signed', 3, 1),
    'I2_3_q': _dihedral('I2_3_q', 3, '-q', '-1/q', field={'kind': 'rational_functions', 'base': 'rational', 'variable': 'q'}),
}


def builtin_names() -> typing.List[str]:
    return list(CATALOG)


@functools.lru_cache(maxsize=None)
def load(name: str) -> Realization:
    """組み込みの実現を返す。同じ名前には同じインスタンスを返す。"""
    if name not in CATALOG:
        raise RealizationError(f'unknown built-in realization {name!r}. (Supported: {", ".join(CATALOG)})')
    return from_config(CATALOG[name], name=name)


class BuiltinRealization(BaseRealizationSource):
    """組み込みの実現のローダ。path の代わりに名前を持つ。"""

    def __init__(self, name: str):
        super().__init__(name)

    def load(self) -> Realization:
        return load(self.path)
