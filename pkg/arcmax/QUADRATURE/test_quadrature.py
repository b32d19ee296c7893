#!/usr/bin/env python3
"""
Test suite for the numerical oracles
Adaptive Simpson integration, central differences and the Leibniz-rule engine
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from arcmax.CORE.models import HALF_PI, Angle, ProjectileParams
from arcmax.CORE.trajectory import (
    arc_length_closed_form,
    arc_length_derivative_closed_form,
    worked_integral_closed_form,
)
from arcmax.errors import DomainError, NonConvergenceError
from arcmax.QUADRATURE import (
    ParametricIntegral,
    QuadratureConfig,
    arc_length_quadrature,
    central_difference,
    default_step,
    integrate,
    leibniz_derivative,
    projectile_integral,
    worked_integral_quadrature,
)
from arcmax.QUADRATURE.models import ORACLE_QUADRATURE

UNIT = ProjectileParams(v=1.0, g=1.0)


def test_quadrature_config_validation():
    """Test QuadratureConfig invariants"""
    for bad in ({"rel_tol": 0.0}, {"abs_tol": -1.0}, {"max_depth": 0}, {"split_points": [0.5, 0.5]}):
        with pytest.raises(ValidationError):
            QuadratureConfig(**bad)

    config = QuadratureConfig()
    assert config.rel_tol == 1e-10
    assert config.abs_tol == 1e-12
    assert config.max_depth == 50
    assert config.split_points == []


def test_integrate_examples():
    """Test integration of simple integrands"""
    assert integrate(lambda x: 1.0, 0.0, 2.0) == pytest.approx(2.0, rel=1e-14)
    assert integrate(lambda x: x * x, 0.0, 1.0) == pytest.approx(1.0 / 3.0, rel=1e-14)
    assert integrate(math.sin, 0.0, math.pi) == pytest.approx(2.0, rel=1e-10)
    assert integrate(math.exp, -1.0, 3.0) == pytest.approx(math.exp(3) - math.exp(-1), rel=1e-10)

    kinked = integrate(lambda t: abs(1.0 - t), 0.0, 2.0, QuadratureConfig(split_points=[1.0]))
    assert kinked == pytest.approx(1.0, abs=1e-14)
    print("✓ Integration examples test passed")


def test_integrate_edge_cases():
    """Test empty, reversed and badly split intervals"""
    assert integrate(math.exp, 1.5, 1.5) == 0.0

    with pytest.raises(DomainError):
        integrate(math.exp, 1.0, 0.0)

    with pytest.raises(DomainError):
        integrate(math.exp, 0.0, 1.0, QuadratureConfig(split_points=[1.0]))

    with pytest.raises(DomainError):
        integrate(lambda x: math.log(x) if x > 0 else -math.inf, 0.0, 1.0)


def test_integrate_non_convergence():
    """Test that an exhausted depth budget raises instead of returning a poor estimate"""
    with pytest.raises(NonConvergenceError):
        integrate(math.sqrt, 0.0, 1.0, QuadratureConfig(max_depth=1))

    with pytest.raises(NonConvergenceError):
        integrate(math.sqrt, 0.0, 1.0, QuadratureConfig(max_depth=4, rel_tol=1e-14, abs_tol=1e-16))


def test_integrate_additivity():
    """Test ∫_a^c = ∫_a^b + ∫_b^c for random smooth integrands"""
    rng = np.random.default_rng(3)
    for _ in range(20):
        k, phase, scale = rng.uniform(0.5, 4.0), rng.uniform(0, math.pi), rng.uniform(0.1, 2.0)

        def f(x, k=k, phase=phase, scale=scale):
            return math.sin(k * x + phase) * math.exp(-scale * x) + x

        a, b, c = np.sort(rng.uniform(-2.0, 2.0, size=3))
        whole = integrate(f, a, c)
        parts = integrate(f, a, b) + integrate(f, b, c)
        tolerance = max(1e-10 * abs(whole), 1e-12)
        assert abs(whole - parts) <= 2 * tolerance


def test_central_difference():
    """Test central differences on functions with known derivatives"""
    assert central_difference(lambda x: x * x, 3.0, 1e-5) == pytest.approx(6.0, abs=1e-8)
    assert central_difference(math.sin, 0.0, 1e-5) == pytest.approx(1.0, abs=1e-9)
    assert central_difference(math.exp, 1.0) == pytest.approx(math.e, rel=1e-9)

    assert default_step(0.5) == default_step(1.0)
    assert default_step(-4.0) == pytest.approx(4.0 * default_step(1.0))

    with pytest.raises(DomainError):
        central_difference(math.sin, 0.0, 0.0)


def test_arc_length_quadrature():
    """Test the quadrature arc length against published values and the closed form"""
    assert arc_length_quadrature(Angle(theta=HALF_PI), UNIT) == pytest.approx(1.0, abs=1e-10)
    assert arc_length_quadrature(Angle(theta=math.pi / 4), UNIT) == pytest.approx(1.14779357, abs=1e-8)
    assert arc_length_quadrature(Angle(theta=0.9855), UNIT) == pytest.approx(1.19967864, abs=1e-6)

    params = ProjectileParams(v=3.0, g=9.8)
    assert arc_length_quadrature(Angle(theta=HALF_PI), params) == pytest.approx(9.0 / 9.8, rel=1e-10)

    for theta in np.linspace(0.05, HALF_PI - 0.05, 15):
        angle = Angle(theta=float(theta))
        assert arc_length_quadrature(angle, params) == pytest.approx(arc_length_closed_form(angle, params), rel=1e-9)
    print("✓ Arc length quadrature test passed")


def test_vertical_launch_needs_the_apex_split():
    """Test that the kink at the apex is integrated exactly once split"""
    vertical = Angle(theta=HALF_PI)
    split = arc_length_quadrature(vertical, UNIT, QuadratureConfig(rel_tol=1e-12))
    assert abs(split - 1.0) <= 1e-10

    # kink off the dyadic grid, no split
    with pytest.raises(NonConvergenceError):
        integrate(lambda t: abs(1.0 - t), 0.0, 2.001, QuadratureConfig(max_depth=8))


def test_worked_integral():
    """Test the quadrature of −g·t/√(v²cos²θ + h(t)²) against its logarithmic value"""
    params = ProjectileParams(v=2.0, g=9.8)
    for theta in np.linspace(0.1, 1.45, 10):
        angle = Angle(theta=float(theta))
        assert abs(worked_integral_quadrature(angle, params) - worked_integral_closed_form(angle, params)) <= 1e-9


def test_leibniz_examples():
    """Test the Leibniz engine on integrals with known derivatives"""
    constant_limits = ParametricIntegral(
        integrand=lambda x, alpha: alpha,
        lower_limit=lambda alpha: 0.0,
        upper_limit=lambda alpha: 1.0,
    )
    assert leibniz_derivative(constant_limits, 3.0) == pytest.approx(1.0, abs=1e-8)

    moving_limit = ParametricIntegral(
        integrand=lambda x, alpha: 1.0,
        lower_limit=lambda alpha: 0.0,
        upper_limit=lambda alpha: alpha,
    )
    assert leibniz_derivative(moving_limit, 2.0) == pytest.approx(1.0, abs=1e-8)

    # d/dα ∫_α^{α²} x·α dx = d/dα α(α⁴ − α²)/2 = (5α⁴ − 3α²)/2
    both_moving = ParametricIntegral(
        integrand=lambda x, alpha: x * alpha,
        lower_limit=lambda alpha: alpha,
        upper_limit=lambda alpha: alpha * alpha,
        integrand_partial=lambda x, alpha: x,
    )
    assert leibniz_derivative(both_moving, 1.5) == pytest.approx((5 * 1.5 ** 4 - 3 * 1.5 ** 2) / 2, rel=1e-8)
    print("✓ Leibniz examples test passed")


def test_leibniz_rejects_crossing_limits():
    """Test that crossing limits near the parameter are a domain error"""
    crossing = ParametricIntegral(
        integrand=lambda x, alpha: 1.0,
        lower_limit=lambda alpha: alpha,
        upper_limit=lambda alpha: 0.0,
    )
    with pytest.raises(DomainError):
        leibniz_derivative(crossing, 1.0)


def test_leibniz_projectile_derivative():
    """Test the Leibniz derivative of the arc length against the closed form and finite differences"""
    integral = projectile_integral(UNIT)
    assert leibniz_derivative(integral, math.pi / 4) == pytest.approx(0.532839, abs=1e-5)

    def length(theta):
        return arc_length_quadrature(Angle(theta=theta), UNIT, ORACLE_QUADRATURE)

    for theta in np.linspace(0.1, 1.45, 20):
        theta = float(theta)
        closed = arc_length_derivative_closed_form(Angle(theta=theta), UNIT)
        leibniz = leibniz_derivative(integral, theta)
        finite = central_difference(length, theta, 1e-6)
        assert abs(leibniz - finite) <= 1e-5 * (1 + abs(closed))
        assert abs(closed - leibniz) <= 1e-5
        assert abs(closed - finite) <= 1e-5

    assert central_difference(length, 1.2, 1e-6) == pytest.approx(
        arc_length_derivative_closed_form(Angle(theta=1.2), UNIT), abs=1e-6
    )


def test_leibniz_upper_boundary_term_is_launch_speed_times_tau_prime():
    """Test that the upper boundary term equals v·τ'(θ)"""
    params = ProjectileParams(v=4.0, g=9.8)
    integral = projectile_integral(params)
    theta = 0.8
    tau = integral.upper_limit(theta)
    assert integral.integrand(tau, theta) == pytest.approx(params.v, rel=1e-12)
    assert central_difference(integral.upper_limit, theta, 1e-6) == pytest.approx(
        2 * params.v * math.cos(theta) / params.g, rel=1e-9
    )


def run_all_tests():
    """Run all tests"""
    print("Running quadrature tests...\n")
    for test in (
        test_quadrature_config_validation,
        test_integrate_examples,
        test_integrate_edge_cases,
        test_integrate_non_convergence,
        test_integrate_additivity,
        test_central_difference,
        test_arc_length_quadrature,
        test_vertical_launch_needs_the_apex_split,
        test_worked_integral,
        test_leibniz_examples,
        test_leibniz_rejects_crossing_limits,
        test_leibniz_projectile_derivative,
        test_leibniz_upper_boundary_term_is_launch_speed_times_tau_prime,
    ):
        test()
    print("\n✅ All tests passed successfully!")


if __name__ == "__main__":
    run_all_tests()
