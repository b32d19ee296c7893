"""
SOLVER Module - Root finding and maximization

Components:
- models: RootConfig, RootResult
- roots: safeguarded Newton-bisection, golden-section maximization
- optimum: coth fixed point, optimal angle, critical-equation root,
  direct maximization of the arc length
"""

from .models import RootConfig, RootResult
from .optimum import (
    COTH_BRACKET,
    CRITICAL_BRACKET,
    MAXIMIZER_BRACKET,
    coth,
    coth_fixed_point,
    maximize_arc_length_direct,
    optimal_angle,
    solve_critical_equation,
)
from .roots import golden_section_maximize, safeguarded_newton

__all__ = [
    "COTH_BRACKET",
    "CRITICAL_BRACKET",
    "MAXIMIZER_BRACKET",
    "RootConfig",
    "RootResult",
    "coth",
    "coth_fixed_point",
    "golden_section_maximize",
    "maximize_arc_length_direct",
    "optimal_angle",
    "safeguarded_newton",
    "solve_critical_equation",
]
