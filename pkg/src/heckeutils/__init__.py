"""Hecke 圏の局所化関手 Λ の厳密計算と関係式の検証。

実現 (Coxeter 行列と Cartan 行列) を与えると、図式を Q 亜群の加法的包絡の行列に写す。
"""

from .algebra import Frac, Poly
from .coxeter import CoxeterSystem
from .realization import Realization
from .realizations import load_realization
from .heckediag import localize
from .relations import SUITES, verify
from . import (
    quantum,
    tl2,
    groupoid,
    heckediag,
    relations,
)

__version__ = '0.1.0'
