#!/usr/bin/env python3
"""
Differentiation under the integral sign

    d/dα ∫_{a(α)}^{b(α)} f(x, α) dx
        = ∫_{a}^{b} ∂f/∂α dx + f(b, α)·b'(α) − f(a, α)·a'(α)

The engine assumes f, a and b are continuously differentiable in α near the
queried point and does not try to detect violations. For the projectile
integrand that holds whenever θ ≠ π/2.
"""

import math
from typing import Optional

from loguru import logger

from arcmax.CORE.models import ProjectileParams
from arcmax.errors import DomainError
from arcmax.QUADRATURE.models import ParametricIntegral, QuadratureConfig
from arcmax.QUADRATURE.simpson import central_difference, integrate

# Limit derivatives use a step of max(|α|, 1)·LIMIT_STEP
LIMIT_STEP = 1e-6


def leibniz_derivative(
    pi: ParametricIntegral,
    alpha: float,
    config: Optional[QuadratureConfig] = None,
) -> float:
    """
    Derivative of a parametric integral with respect to its parameter.

    Args:
        pi: Integrand, limits and optional analytic partial ∂f/∂α
        alpha: Parameter value
        config: Quadrature controls for the interior integral

    Returns:
        The three-term Leibniz sum

    Raises:
        DomainError: if the limits cross within one step of alpha
        NonConvergenceError: propagated from the interior integral
    """
    config = config or QuadratureConfig()
    h = max(abs(alpha), 1.0) * LIMIT_STEP

    for point in (alpha - h, alpha, alpha + h):
        if pi.lower_limit(point) > pi.upper_limit(point):
            raise DomainError(f"Integration limits cross at alpha={point!r}")

    a = pi.lower_limit(alpha)
    b = pi.upper_limit(alpha)
    da = central_difference(pi.lower_limit, alpha, h)
    db = central_difference(pi.upper_limit, alpha, h)

    if pi.integrand_partial is not None:
        partial = pi.integrand_partial
    else:
        def partial(x: float, a_: float) -> float:
            return central_difference(lambda s: pi.integrand(x, s), a_)

    if pi.split_points is not None:
        config = config.model_copy(update={"split_points": list(pi.split_points(alpha))})

    interior = integrate(lambda x: partial(x, alpha), a, b, config)
    upper_term = pi.integrand(b, alpha) * db
    lower_term = pi.integrand(a, alpha) * da

    logger.debug(
        f"leibniz at alpha={alpha:.10g}: interior={interior:.12g}, "
        f"upper={upper_term:.12g}, lower={lower_term:.12g}"
    )
    return interior + upper_term - lower_term


def projectile_integral(params: ProjectileParams) -> ParametricIntegral:
    """
    L(θ) = ∫₀^{τ(θ)} √(v²cos²θ + (v·sinθ − g·t)²) dt as a parametric integral,
    with the analytic partial v·cosθ·(−g·t)/√(v²cos²θ + (v·sinθ − g·t)²)
    and a split at the apex time v·sinθ/g.
    """
    v, g = params.v, params.g

    def integrand(t: float, theta: float) -> float:
        return math.hypot(v * math.cos(theta), v * math.sin(theta) - g * t)

    def integrand_partial(t: float, theta: float) -> float:
        c = math.cos(theta)
        return v * c * (-g * t) / math.hypot(v * c, v * math.sin(theta) - g * t)

    return ParametricIntegral(
        integrand=integrand,
        lower_limit=lambda theta: 0.0,
        upper_limit=lambda theta: 2.0 * v * math.sin(theta) / g,
        integrand_partial=integrand_partial,
        split_points=lambda theta: [v * math.sin(theta) / g],
    )
