"""
TOML ファイルで記述された実現の読み込み
"""

from pathlib import Path
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .base import BaseRealizationSource, from_config
from ..realization import Realization, RealizationError


__all__ = ['TomlRealization', 'load']


class TomlRealization(BaseRealizationSource):
    """TOML ファイルの実現ローダ。"""

    def __init__(self, path: Path):
        super().__init__(Path(path))

    def load(self) -> Realization:
        return load(self.path)


def load(path: Path) -> Realization:
    """TOML ファイルを読み込んで実現を返す。

    Parameters
    ----------
    path: Path
        TOML ファイルのパス。

    Returns
    -------
    Realization
    """
    path = Path(path)
    if not path.exists():
        raise RealizationError(f'{path} is not exists.')
    with path.open('rb') as fp:
        try:
            cfg = tomllib.load(fp)
        except tomllib.TOMLDecodeError as e:
            raise RealizationError(f'{path}: {e}') from None
    return from_config(cfg, name=cfg.get('name', path.stem))
