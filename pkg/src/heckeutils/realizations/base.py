"""
実現ローダの抽象クラスと設定辞書の解釈
"""

import math
import typing

from ..algebra import CoeffField, NumberField, PrimeField, RationalField, RationalFunctionField
from ..coxeter import CoxeterError, CoxeterSystem
from ..realization import Realization, RealizationError


__all__ = ['BaseRealizationSource', 'parse_field', 'from_config']


class BaseRealizationSource(object):
    def __init__(self, path):
        self.path = path

    def load(self) -> Realization:
        raise NotImplementedError


def parse_field(cfg: typing.Mapping) -> CoeffField:
    """[field] テーブルから係数体を作る。

    Parameters
    ----------
    cfg: Mapping
        kind = rational | prime | number | rational_functions
        prime は p、number は modulus と generator、
        rational_functions は base (rational | prime)、p、variable を持つ。
    """
    kind = cfg.get('kind', 'rational')
    if kind == 'rational':
        return RationalField()
    if kind == 'prime':
        if 'p' not in cfg:
            raise RealizationError('prime field needs p')
        return PrimeField(int(cfg['p']))
    if kind == 'number':
        if 'modulus' not in cfg:
            raise RealizationError('number field needs modulus')
        return NumberField(cfg['modulus'], cfg.get('generator', 'x'))
    if kind == 'rational_functions':
        base = parse_field({'kind': cfg.get('base', 'rational'), 'p': cfg.get('p')})
        return RationalFunctionField(base, cfg.get('variable', 'q'))
    raise RealizationError(f'unknown field kind {kind!r}. (Supported: rational, prime, number, rational_functions)')


def _parse_pair(key: str) -> typing.Tuple[str, str]:
    parts = [p.strip() for p in key.split(',')]
    if len(parts) != 2 or not all(parts):
        raise RealizationError(f'cartan key must be "s,t". key={key!r}')
    return parts[0], parts[1]


def from_config(cfg: typing.Mapping, name: typing.Optional[str] = None) -> Realization:
    """設定辞書 (TOML と同じ構造) から実現を作る。"""
    try:
        field = parse_field(cfg.get('field', {}))
        cox_cfg = cfg['coxeter']
        m = [[math.inf if str(v).lower() == 'inf' else v for v in row] for row in cox_cfg['m']]
        cox = CoxeterSystem(cox_cfg['generators'], m)
    except KeyError as e:
        raise RealizationError(f'missing config key {e}') from None
    except (CoxeterError, ValueError) as e:
        if isinstance(e, RealizationError):
            raise
        raise RealizationError(str(e)) from None
    cartan = {}
    for key, value in cfg.get('cartan', {}).items():
        s, t = _parse_pair(key)
        try:
            cartan[(s, t)] = value if isinstance(value, int) and not isinstance(value, bool) else field.parse(str(value))
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise RealizationError(f'cannot parse cartan entry {key} = {value!r}: {e}') from None
    return Realization(cox, field, cartan, name=name or cfg.get('name', ''))
