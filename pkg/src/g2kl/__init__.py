"""Exact Kazhdan-Lusztig computations for the affine Weyl group of type G2,
centered on the lowest two-sided cell: canonical-basis products, structure
constants, the delta classification table, and leading coefficients mu(u,w).
"""

__version__ = "0.1.0"

from .core import BACKEND
from .laurent import LaurentPoly
from .weyl import (
    GroupElement,
    IDENTITY,
    W0,
    X_ALPHA,
    X_BETA,
    bruhat_leq,
    bruhat_subword_oracle,
    canonicalize,
    element,
    elements_up_to_length,
    evaluate,
    inverse,
    left_descents,
    multiply,
    right_descents,
)
from .kl import HeckeCombination, KLEngine
from .cell import C0Decomposition, LowestCell, decompose_c0

__all__ = [
    "BACKEND",
    "C0Decomposition",
    "GroupElement",
    "HeckeCombination",
    "IDENTITY",
    "KLEngine",
    "LaurentPoly",
    "LowestCell",
    "W0",
    "X_ALPHA",
    "X_BETA",
    "bruhat_leq",
    "bruhat_subword_oracle",
    "canonicalize",
    "decompose_c0",
    "element",
    "elements_up_to_length",
    "evaluate",
    "inverse",
    "left_descents",
    "multiply",
    "right_descents",
    "__version__",
]
