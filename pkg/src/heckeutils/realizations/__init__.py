"""実現の読み込み。

組み込みの実現は名前で、それ以外は TOML ファイルのパスで指定する。

組み込みの実現
* A1, A1xA1, A2, B2, G2, A3, B3 (整数 Cartan 行列)
* A1xA1xA1, A2xA1, B2xA1 (第 3 の生成元 u が s, t と可換)
* I2_5, I2_7, I2_8 (2cos(pi/m) を含む数体上)
* I2_6_unbalanced, I2_9_nonfaithful, I2_4_degenerate, I2_4_degenerate_F2, I2_3_signed, I2_3_q
"""

from pathlib import Path

from . import (
    base,
    builtin,
    config,
)
from ..realization import Realization


def realization_source(ref) -> base.BaseRealizationSource:
    """組み込みの名前なら BuiltinRealization、それ以外は TomlRealization。"""
    if isinstance(ref, str) and ref in builtin.CATALOG:
        return builtin.BuiltinRealization(ref)
    return config.TomlRealization(Path(ref))


def load_realization(ref) -> Realization:
    """組み込みの名前か TOML のパスから実現を読み込む。"""
    if isinstance(ref, Realization):
        return ref
    return realization_source(ref).load()
