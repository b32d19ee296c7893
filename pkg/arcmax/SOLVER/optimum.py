#!/usr/bin/env python3
"""
The angle of the longest trajectory, by three independent routes

1. α, the unique positive fixed point of coth, then θ* = csc⁻¹(α)
2. the root of sinθ·tanh⁻¹(sinθ) − 1, which never evaluates coth
3. golden-section maximization of the quadrature arc length

coth is decreasing on (0, ∞) from +∞ to 1 while x increases, so
coth(x) − x changes sign exactly once; coth(x) > 1 puts α above 1.
"""

import math
from typing import Optional

from loguru import logger

from arcmax.CORE.models import HALF_PI, Angle, ProjectileParams
from arcmax.CORE.trajectory import critical_residual, critical_residual_derivative
from arcmax.errors import BracketError, DomainError
from arcmax.QUADRATURE.arc_length import arc_length_quadrature
from arcmax.QUADRATURE.models import ORACLE_QUADRATURE, QuadratureConfig
from arcmax.SOLVER.models import RootConfig, RootResult
from arcmax.SOLVER.roots import golden_section_maximize, safeguarded_newton

COTH_BRACKET = RootConfig(bracket_lo=1.0, bracket_hi=2.0)
CRITICAL_BRACKET = RootConfig(bracket_lo=0.7, bracket_hi=1.3)
MAXIMIZER_BRACKET = RootConfig(bracket_lo=0.1, bracket_hi=HALF_PI - 1e-6, tol=1e-10, max_iter=200)


def coth(x: float) -> float:
    if x == 0.0:
        raise DomainError("coth is singular at x=0")
    return 1.0 / math.tanh(x)


def _coth_minus_identity(x: float) -> float:
    return coth(x) - x


def _coth_minus_identity_slope(x: float) -> float:
    sh = math.sinh(x)
    return -1.0 / (sh * sh) - 1.0


def coth_fixed_point(config: Optional[RootConfig] = None) -> RootResult:
    """
    α with coth(α) = α, by safeguarded Newton on coth(x) − x.

    Raises:
        BracketError: if the bracket is not inside (0, ∞) or coth(x) − x
            has equal signs at its ends
        NonConvergenceError: after max_iter iterations
    """
    config = config or COTH_BRACKET
    if config.bracket_lo <= 0.0:
        # the negative fixed point and the pole at 0 are not α
        raise BracketError(f"bracket [{config.bracket_lo!r}, {config.bracket_hi!r}] must lie in (0, ∞)")
    result = safeguarded_newton(_coth_minus_identity, _coth_minus_identity_slope, config)
    logger.debug(f"coth fixed point α={result.root:.17g}")
    return result


def optimal_angle(config: Optional[RootConfig] = None) -> RootResult:
    """
    θ* = csc⁻¹(α) = arcsin(1/α), in radians. Takes no physical parameters:
    the optimum depends on neither the launch speed nor gravity.
    The residual reported is the critical residual at θ*.
    """
    alpha = coth_fixed_point(config)
    theta = math.asin(1.0 / alpha.root)
    return RootResult(
        root=theta,
        residual=critical_residual(Angle(theta=theta)),
        iterations=alpha.iterations,
        converged=alpha.converged,
    )


def solve_critical_equation(config: Optional[RootConfig] = None) -> RootResult:
    """Root of sinθ·tanh⁻¹(sinθ) = 1 on the bracket, default [0.7, 1.3]"""
    return safeguarded_newton(
        lambda theta: critical_residual(Angle(theta=theta)),
        lambda theta: critical_residual_derivative(Angle(theta=theta)),
        config or CRITICAL_BRACKET,
    )


def maximize_arc_length_direct(
    params: ProjectileParams,
    config: Optional[RootConfig] = None,
    quadrature: Optional[QuadratureConfig] = None,
) -> RootResult:
    """
    Derivative-free maximization of the quadrature arc length over
    [0.1, π/2 − 1e-6] by golden-section search. L is unimodal there since
    L' changes sign once, at θ*.

    The quadrature defaults to the tight oracle tolerance so that its noise
    stays well below the flat top of L.
    """
    quadrature = quadrature or ORACLE_QUADRATURE

    def objective(theta: float) -> float:
        return arc_length_quadrature(Angle(theta=theta), params, quadrature)

    result = golden_section_maximize(objective, config or MAXIMIZER_BRACKET)
    logger.debug(f"direct maximization for v={params.v}, g={params.g}: argmax {result.root:.12g}")
    return result
