#!/usr/bin/env python3
"""
Adaptive Simpson integration and central finite differences

Both are independent numerical oracles for the closed forms in CORE.
User-supplied functions are called from the caller's thread; they must be
safe to call concurrently if the caller integrates concurrently.
"""

import math
import sys
from typing import Callable, Optional

from loguru import logger

from arcmax.errors import DomainError, NonConvergenceError
from arcmax.QUADRATURE.models import QuadratureConfig

CBRT_EPS = sys.float_info.epsilon ** (1.0 / 3.0)


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    """h/3 * (f(a) + 4*f(m) + f(b)) with h the half-width"""
    return h / 3.0 * (fa + 4.0 * fm + fb)


class _AdaptiveSimpson:
    """Recursive adaptive Simpson rule with Richardson correction on one smooth piece"""

    def __init__(self, f: Callable[[float], float], config: QuadratureConfig):
        self.f = f
        self.config = config
        self.evaluations = 0

    def eval(self, x: float) -> float:
        self.evaluations += 1
        fx = self.f(x)
        if not math.isfinite(fx):
            raise DomainError(f"Integrand is not finite at x={x!r}: {fx!r}")
        return fx

    def integrate(self, a: float, b: float, abs_floor: float) -> float:
        fa = self.eval(a)
        fb = self.eval(b)
        fm = self.eval(0.5 * (a + b))
        s_whole = _simpson(fa, fm, fb, 0.5 * (b - a))
        # the crude estimate sets the relative part of the tolerance
        tol = max(self.config.rel_tol * abs(s_whole), abs_floor)
        return self._adaptive(a, b, fa, fm, fb, s_whole, 0, tol)

    def _adaptive(
        self,
        a: float,
        b: float,
        fa: float,
        fm: float,
        fb: float,
        s_whole: float,
        depth: int,
        tol: float,
    ) -> float:
        m = 0.5 * (a + b)
        h = 0.5 * (b - a)
        flm = self.eval(0.5 * (a + m))
        frm = self.eval(0.5 * (m + b))

        s_left = _simpson(fa, flm, fm, 0.5 * h)
        s_right = _simpson(fm, frm, fb, 0.5 * h)
        error_estimate = (s_left + s_right - s_whole) / 15.0

        if depth >= self.config.min_depth and abs(error_estimate) <= tol:
            return s_left + s_right + error_estimate

        if depth >= self.config.max_depth:
            raise NonConvergenceError(
                f"Quadrature did not converge on [{a!r}, {b!r}] within max_depth={self.config.max_depth} "
                f"(error estimate {abs(error_estimate):.3e} > {tol:.3e})"
            )

        return (
            self._adaptive(a, m, fa, flm, fm, s_left, depth + 1, 0.5 * tol)
            + self._adaptive(m, b, fm, frm, fb, s_right, depth + 1, 0.5 * tol)
        )


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    config: Optional[QuadratureConfig] = None,
) -> float:
    """
    Integrate f over [a, b] with adaptive Simpson, piecewise between the
    configured split points.

    Args:
        f: Scalar integrand, finite on [a, b]
        a: Lower limit
        b: Upper limit, a ≤ b
        config: Tolerances, depth cap and split points

    Returns:
        Estimate within max(rel_tol·|I|, abs_tol) of the integral

    Raises:
        DomainError: if a > b, a split point is outside (a, b) or f is not finite
        NonConvergenceError: if max_depth is exhausted on some panel
    """
    config = config or QuadratureConfig()
    if a > b:
        raise DomainError(f"Integration limits reversed: a={a!r} > b={b!r}")
    if a == b:
        return 0.0

    for p in config.split_points:
        if not a < p < b:
            raise DomainError(f"Split point {p!r} is not strictly inside ({a!r}, {b!r})")

    edges = [a, *config.split_points, b]
    engine = _AdaptiveSimpson(f, config)
    total = 0.0
    for lo, hi in zip(edges, edges[1:]):
        total += engine.integrate(lo, hi, config.abs_tol * (hi - lo) / (b - a))

    logger.debug(f"integrate [{a:.6g}, {b:.6g}] over {len(edges) - 1} piece(s): {engine.evaluations} evaluations")
    return total


def default_step(x: float) -> float:
    """Finite-difference step max(|x|, 1)·ε^(1/3), balancing truncation against rounding"""
    return max(abs(x), 1.0) * CBRT_EPS


def central_difference(fn: Callable[[float], float], x: float, h: Optional[float] = None) -> float:
    """(fn(x+h) − fn(x−h)) / (2h); h defaults to default_step(x)"""
    h = default_step(x) if h is None else h
    if not h > 0:
        raise DomainError(f"Finite-difference step must be positive, got h={h!r}")
    return (fn(x + h) - fn(x - h)) / (2.0 * h)
