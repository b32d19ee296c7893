"""
QUADRATURE Module - Independent numerical oracles

Components:
- models: QuadratureConfig, ParametricIntegral
- simpson: adaptive Simpson integration, central finite differences
- leibniz: differentiation under the integral sign with moving limits
- arc_length: quadrature of the projectile's speed and of the worked integral
"""

from .arc_length import arc_length_quadrature, worked_integral_quadrature
from .leibniz import leibniz_derivative, projectile_integral
from .models import ParametricIntegral, QuadratureConfig
from .simpson import central_difference, default_step, integrate

__all__ = [
    "ParametricIntegral",
    "QuadratureConfig",
    "arc_length_quadrature",
    "central_difference",
    "default_step",
    "integrate",
    "leibniz_derivative",
    "projectile_integral",
    "worked_integral_quadrature",
]
