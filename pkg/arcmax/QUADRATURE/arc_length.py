#!/usr/bin/env python3
"""
Quadrature oracles for the projectile integrals
Arc length by integrating speed over the flight time, and the worked
integral that yields the logarithmic term of L'(θ).
"""

import math
from typing import Optional

from arcmax.CORE.models import Angle, ProjectileParams
from arcmax.CORE.trajectory import flight_time
from arcmax.QUADRATURE.models import QuadratureConfig
from arcmax.QUADRATURE.simpson import integrate


def _with_apex_split(theta: Angle, params: ProjectileParams, config: Optional[QuadratureConfig]) -> QuadratureConfig:
    """Add the apex time v·sinθ/g to the split points; at θ = π/2 the integrand |v − g·t| kinks there"""
    config = config or QuadratureConfig()
    apex = params.v * math.sin(theta.theta) / params.g
    split_points = sorted(set(config.split_points) | {apex})
    return config.model_copy(update={"split_points": split_points})


def arc_length_quadrature(
    theta: Angle,
    params: ProjectileParams,
    config: Optional[QuadratureConfig] = None,
) -> float:
    """
    L(θ) = ∫₀^{τ(θ)} √(v²cos²θ + (v·sinθ − g·t)²) dt by adaptive Simpson.
    Valid on the whole closed range (0, π/2], vertical launch included.
    """
    vc = params.v * math.cos(theta.theta)
    vs = params.v * math.sin(theta.theta)
    g = params.g

    def integrand(t: float) -> float:
        return math.hypot(vc, vs - g * t)

    return integrate(integrand, 0.0, flight_time(theta, params), _with_apex_split(theta, params, config))


def worked_integral_quadrature(
    theta: Angle,
    params: ProjectileParams,
    config: Optional[QuadratureConfig] = None,
) -> float:
    """∫₀^{τ(θ)} −g·t / √(v²cos²θ + (v·sinθ − g·t)²) dt by adaptive Simpson"""
    vc = params.v * math.cos(theta.theta)
    vs = params.v * math.sin(theta.theta)
    g = params.g

    def integrand(t: float) -> float:
        return -g * t / math.hypot(vc, vs - g * t)

    return integrate(integrand, 0.0, flight_time(theta, params), _with_apex_split(theta, params, config))
