"""Exact computational engine for commuting varieties of reductive Lie algebras."""

__version__ = "0.1.0"

from .rootsystem import build_root_system, direct_sum, root_length_classes, subsystem
from .chevalley import build_lie_algebra, bracket, ad_matrix, sl2_triple_check

__all__ = [
    "build_root_system", "direct_sum", "root_length_classes", "subsystem",
    "build_lie_algebra", "bracket", "ad_matrix", "sl2_triple_check",
]
