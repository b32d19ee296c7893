#!/usr/bin/env python3
"""
Bracketed 1-D solvers
Newton-Raphson safeguarded by bisection, and golden-section maximization.
Both are reentrant and keep no state between calls.
"""

import math
from typing import Callable, Optional

from loguru import logger

from arcmax.errors import BracketError, NonConvergenceError
from arcmax.QUADRATURE.simpson import central_difference
from arcmax.SOLVER.models import RootConfig, RootResult

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def safeguarded_newton(
    f: Callable[[float], float],
    df: Optional[Callable[[float], float]],
    config: RootConfig,
) -> RootResult:
    """
    Find the root of f bracketed by [bracket_lo, bracket_hi].

    A Newton step is taken only when it stays inside the current bracket and
    shrinks the step fast enough; otherwise the bracket is bisected.
    Convergence needs both a step (or bracket) no wider than tol·max(1, |x|)
    and |f(x)| ≤ tol.

    Args:
        f: Function whose root is sought
        df: Its derivative; central difference of f when None
        config: Bracket, tolerance and iteration cap

    Raises:
        BracketError: if f has the same sign at both ends
        NonConvergenceError: if max_iter is exhausted
    """
    if df is None:
        def df(x: float) -> float:
            return central_difference(f, x)

    lo, hi = config.bracket_lo, config.bracket_hi
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return RootResult(root=lo, residual=0.0, iterations=0, converged=True)
    if f_hi == 0.0:
        return RootResult(root=hi, residual=0.0, iterations=0, converged=True)
    if (f_lo > 0) == (f_hi > 0):
        raise BracketError(f"No sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}")

    # orient so that f(x_neg) < 0 < f(x_pos)
    x_neg, x_pos = (lo, hi) if f_lo < 0 else (hi, lo)

    x = 0.5 * (lo + hi)
    dx_old = hi - lo
    dx = dx_old
    fx, dfx = f(x), df(x)

    for iteration in range(1, config.max_iter + 1):
        out_of_bracket = ((x - x_pos) * dfx - fx) * ((x - x_neg) * dfx - fx) >= 0.0
        too_slow = abs(2.0 * fx) > abs(dx_old * dfx)
        if out_of_bracket or too_slow:
            dx_old = dx
            dx = 0.5 * (x_pos - x_neg)
            x = x_neg + dx
        else:
            dx_old = dx
            dx = fx / dfx
            x = x - dx

        fx, dfx = f(x), df(x)
        if fx < 0:
            x_neg = x
        else:
            x_pos = x

        x_tol = config.tol * max(1.0, abs(x))
        narrow = abs(dx) <= x_tol or abs(x_pos - x_neg) <= x_tol
        if fx == 0.0 or (narrow and abs(fx) <= config.tol):
            logger.debug(f"safeguarded_newton converged to {x:.17g} in {iteration} iterations (residual {fx:.3e})")
            return RootResult(root=x, residual=fx, iterations=iteration, converged=True)

    raise NonConvergenceError(
        f"Root not converged after {config.max_iter} iterations: x={x!r}, residual={fx!r}"
    )


def golden_section_maximize(f: Callable[[float], float], config: RootConfig) -> RootResult:
    """
    Golden-section search for the maximum of a unimodal f on the bracket.

    Stops once the bracket is no wider than tol·max(1, |midpoint|). The
    returned residual is that final bracket width.

    Raises:
        NonConvergenceError: if max_iter is exhausted first
    """
    a, b = config.bracket_lo, config.bracket_hi
    h = b - a
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for iteration in range(1, config.max_iter + 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

        width = b - a
        if width <= config.tol * max(1.0, abs(0.5 * (a + b))):
            best = c if yc > yd else d
            logger.debug(f"golden_section_maximize converged to {best:.17g} in {iteration} iterations")
            return RootResult(root=best, residual=width, iterations=iteration, converged=True)

    raise NonConvergenceError(
        f"Golden-section search not converged after {config.max_iter} iterations: bracket [{a!r}, {b!r}]"
    )
