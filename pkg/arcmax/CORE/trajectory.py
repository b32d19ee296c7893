#!/usr/bin/env python3
"""
Closed-form kinematics of an ideal projectile
Flight time, velocity, speed, position, arc length L(θ), its derivative L'(θ)
and the critical residual sinθ·tanh⁻¹(sinθ) − 1 whose root maximizes L.

All functions are pure and safe to call from any number of threads.
"""

import math

from arcmax.CORE.models import Angle, ProjectileParams, VelocityVector
from arcmax.errors import DomainError, SingularityError

# Relative slack on t = τ so that a rounded flight time stays inside the domain
TIME_SLACK = 1e-12


def stable_atanh(x: float) -> float:
    """
    Inverse hyperbolic tangent as ½·ln((1+x)/(1−x)), written with log1p
    so that it stays accurate as x approaches 1.

    Raises:
        SingularityError: if |x| ≥ 1
    """
    if not -1.0 < x < 1.0:
        raise SingularityError(f"tanh⁻¹ is singular at x={x!r}")
    return 0.5 * math.log1p(2.0 * x / (1.0 - x))


def flight_time(theta: Angle, params: ProjectileParams) -> float:
    """τ(θ) = 2v·sinθ/g, the positive root of v·t·sinθ − g·t²/2 = 0"""
    return 2.0 * params.v * math.sin(theta.theta) / params.g


def flight_time_derivative(theta: Angle, params: ProjectileParams) -> float:
    """τ'(θ) = 2v·cosθ/g"""
    return 2.0 * params.v * math.cos(theta.theta) / params.g


def _check_time(t: float, theta: Angle, params: ProjectileParams) -> float:
    tau = flight_time(theta, params)
    if not (0.0 <= t <= tau * (1.0 + TIME_SLACK)):
        raise DomainError(f"t={t!r} outside [0, τ={tau!r}] for theta={theta.theta!r}")
    return min(t, tau)


def velocity(t: float, theta: Angle, params: ProjectileParams) -> VelocityVector:
    """(v·cosθ, v·sinθ − g·t); the horizontal part is constant"""
    t = _check_time(t, theta, params)
    return VelocityVector(
        vx=params.v * math.cos(theta.theta),
        vy=params.v * math.sin(theta.theta) - params.g * t,
    )


def speed(t: float, theta: Angle, params: ProjectileParams) -> float:
    """
    Speed along the trajectory, the arc-length integrand
    √(v²cos²θ + (v·sinθ − g·t)²). Equal to v at launch and at landing.
    """
    t = _check_time(t, theta, params)
    return math.hypot(params.v * math.cos(theta.theta), params.v * math.sin(theta.theta) - params.g * t)


def position(t: float, theta: Angle, params: ProjectileParams) -> tuple[float, float]:
    """(x, y) = (v·t·cosθ, v·t·sinθ − g·t²/2)"""
    t = _check_time(t, theta, params)
    x = params.v * t * math.cos(theta.theta)
    # factored so that y(τ) cancels to zero
    y = t * (params.v * math.sin(theta.theta) - 0.5 * params.g * t)
    return x, max(y, 0.0)


def horizontal_range(theta: Angle, params: ProjectileParams) -> float:
    """v²·sin(2θ)/g, maximal at 45°"""
    return params.length_scale * math.sin(2.0 * theta.theta)


def apex_height(theta: Angle, params: ProjectileParams) -> float:
    s = math.sin(theta.theta)
    return 0.5 * params.length_scale * s * s


def _sin_below_one(theta: Angle, what: str) -> float:
    s = math.sin(theta.theta)
    if theta.is_vertical or s >= 1.0:
        raise SingularityError(f"{what} is singular at theta={theta.theta!r} (sinθ rounds to 1)")
    return s


def arc_length_closed_form(theta: Angle, params: ProjectileParams) -> float:
    """
    L(θ) = (v²/g)·[sinθ + cos²θ·tanh⁻¹(sinθ)]

    Obtained from the trigonometric-substitution antiderivative of the speed
    integrand. Singular at θ = π/2, where arc_length() returns v²/g instead.

    Raises:
        SingularityError: at θ = π/2
    """
    s = _sin_below_one(theta, "arc_length_closed_form")
    c = math.cos(theta.theta)
    return params.length_scale * (s + c * c * stable_atanh(s))


def arc_length(theta: Angle, params: ProjectileParams) -> float:
    """Arc length for any valid angle: closed form below π/2, exactly v²/g at π/2"""
    if theta.is_vertical:
        return params.length_scale
    return arc_length_closed_form(theta, params)


def arc_length_derivative_closed_form(theta: Angle, params: ProjectileParams) -> float:
    """
    L'(θ) = 2v²cosθ/g + (v²·sinθ·cosθ/g)·ln((1−sinθ)/(1+sinθ))

    Positive below the optimal angle, negative above it.

    Raises:
        SingularityError: at θ = π/2, where the logarithm diverges
    """
    s = _sin_below_one(theta, "arc_length_derivative_closed_form")
    c = math.cos(theta.theta)
    log_ratio = -2.0 * stable_atanh(s)  # ln((1−s)/(1+s))
    return params.length_scale * (2.0 * c + s * c * log_ratio)


def worked_integral_closed_form(theta: Angle, params: ProjectileParams) -> float:
    """
    Value of ∫₀^τ −g·t / √(v²cos²θ + (v·sinθ − g·t)²) dt,
    which evaluates to (v·sinθ/g)·ln((1−sinθ)/(1+sinθ)).
    """
    s = _sin_below_one(theta, "worked_integral_closed_form")
    return -2.0 * params.v * s / params.g * stable_atanh(s)


def critical_residual(theta: Angle) -> float:
    """
    sinθ·tanh⁻¹(sinθ) − 1; strictly increasing on (0, π/2) and zero
    exactly at the angle of the longest trajectory.
    """
    s = _sin_below_one(theta, "critical_residual")
    return s * stable_atanh(s) - 1.0


def critical_residual_derivative(theta: Angle) -> float:
    """d/dθ [sinθ·tanh⁻¹(sinθ)] = cosθ·tanh⁻¹(sinθ) + sinθ/cosθ"""
    s = _sin_below_one(theta, "critical_residual_derivative")
    c = math.cos(theta.theta)
    return c * stable_atanh(s) + s / c
