#!/usr/bin/env python3
"""
Oracle cross-check suite
Each closed form is compared with an independent numerical route: quadrature
against the arc-length formula, the Leibniz engine and finite differences
against L'(θ), three solvers against each other, and sampled polylines
against the arc length.
"""

import math
from typing import Callable, List

import numpy as np
from loguru import logger

from arcmax.config import ArcMaxConfig
from arcmax.CORE.models import HALF_PI, Angle, ProjectileParams
from arcmax.CORE.trajectory import (
    arc_length_closed_form,
    arc_length_derivative_closed_form,
    flight_time,
    speed,
    worked_integral_closed_form,
)
from arcmax.errors import ArcMaxError
from arcmax.QUADRATURE.arc_length import arc_length_quadrature, worked_integral_quadrature
from arcmax.QUADRATURE.leibniz import leibniz_derivative, projectile_integral
from arcmax.QUADRATURE.simpson import central_difference
from arcmax.SOLVER.models import RootConfig
from arcmax.SOLVER.optimum import (
    COTH_BRACKET,
    CRITICAL_BRACKET,
    coth,
    coth_fixed_point,
    maximize_arc_length_direct,
    optimal_angle,
    solve_critical_equation,
)
from arcmax.SWEEP.angle_sweep import polyline_length, sweep, trajectory_family
from arcmax.SWEEP.models import CheckResult, SweepSpec, VerificationReport
from arcmax.SWEEP.report import NATURAL_UNITS, report_optimum

# Published reference values for natural units (v = g = 1)
EXPECTED_THETA = 0.9855
EXPECTED_THETA_DEG = 56.47
EXPECTED_ALPHA = 1.1996786
EXPECTED_L_MAX = 1.19967864
EXPECTED_L_QUARTER_PI = 1.14779357
EXPECTED_GAP_PERCENT = 4.5


def _within(name: str, measured: float, expected: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        passed=abs(measured - expected) <= tolerance,
        measured=measured,
        expected=expected,
        tolerance=tolerance,
        detail=detail,
    )


def _root_config(settings: ArcMaxConfig, bracket: RootConfig) -> RootConfig:
    return bracket.model_copy(update={"tol": settings.get("ROOT_TOL"), "max_iter": settings.get("ROOT_MAX_ITER")})


def check_optimal_angle(settings: ArcMaxConfig) -> List[CheckResult]:
    report = report_optimum(_root_config(settings, COTH_BRACKET))
    direct_root = solve_critical_equation(_root_config(settings, CRITICAL_BRACKET)).root
    return [
        _within("optimal angle (rad)", report.theta_rad, EXPECTED_THETA, 1e-4),
        _within("optimal angle (deg)", report.theta_deg, EXPECTED_THETA_DEG, 1e-2),
        _within("critical-equation root vs csc⁻¹(α)", direct_root, report.theta_rad, 1e-9),
    ]


def check_fixed_point(settings: ArcMaxConfig) -> List[CheckResult]:
    config = _root_config(settings, COTH_BRACKET)
    alpha = coth_fixed_point(config).root
    theta = Angle(theta=optimal_angle(config).root)
    return [
        _within("coth fixed point residual", coth(alpha) - alpha, 0.0, 1e-12),
        _within("coth fixed point value", alpha, EXPECTED_ALPHA, 1e-6),
        _within("L(θ*) equals α", arc_length_closed_form(theta, NATURAL_UNITS), alpha, 1e-10),
    ]


def check_reference_lengths(settings: ArcMaxConfig) -> List[CheckResult]:
    quadrature = settings.quadrature_config()
    theta_star = Angle(theta=optimal_angle(_root_config(settings, COTH_BRACKET)).root)
    results = []
    for label, angle, expected in (
        ("π/4", Angle(theta=math.pi / 4), EXPECTED_L_QUARTER_PI),
        ("θ*", theta_star, EXPECTED_L_MAX),
    ):
        closed = arc_length_closed_form(angle, NATURAL_UNITS)
        quad = arc_length_quadrature(angle, NATURAL_UNITS, quadrature)
        results.append(_within(f"L({label}) closed form", closed, expected, 1e-7))
        results.append(_within(f"L({label}) quadrature", quad, expected, 1e-7))
        results.append(_within(f"L({label}) closed form vs quadrature", closed, quad, 1e-8))
    return results


def check_vertical_launch(settings: ArcMaxConfig) -> List[CheckResult]:
    quad = arc_length_quadrature(Angle(theta=HALF_PI), NATURAL_UNITS, settings.quadrature_config())
    return [_within("L(π/2) by kink-split quadrature", quad, 1.0, 1e-10)]


def check_relative_gap(settings: ArcMaxConfig) -> List[CheckResult]:
    gap = report_optimum(_root_config(settings, COTH_BRACKET)).percent_gap
    return [CheckResult(
        name="gap between L(θ*) and L(π/4) (%)",
        passed=gap > EXPECTED_GAP_PERCENT,
        measured=gap,
        expected=EXPECTED_GAP_PERCENT,
        detail="must exceed the expected value",
    )]


def check_derivative_triangulation(settings: ArcMaxConfig) -> List[CheckResult]:
    quadrature = settings.quadrature_config()
    oracle = settings.oracle_quadrature_config()
    integral = projectile_integral(NATURAL_UNITS)

    def length(theta: float) -> float:
        return arc_length_quadrature(Angle(theta=theta), NATURAL_UNITS, oracle)

    worst = 0.0
    for theta in np.linspace(0.1, 1.45, 20):
        theta = float(theta)
        closed = arc_length_derivative_closed_form(Angle(theta=theta), NATURAL_UNITS)
        leibniz = leibniz_derivative(integral, theta, quadrature)
        finite = central_difference(length, theta, 1e-6)
        worst = max(worst, abs(closed - leibniz), abs(closed - finite), abs(leibniz - finite))

    return [_within("L' closed form / Leibniz / finite difference", worst, 0.0, 1e-5, "worst pairwise gap on 20 angles")]


def check_worked_integral(settings: ArcMaxConfig) -> List[CheckResult]:
    quadrature = settings.quadrature_config()
    worst = 0.0
    for theta in np.linspace(0.1, 1.45, 10):
        angle = Angle(theta=float(theta))
        worst = max(worst, abs(
            worked_integral_quadrature(angle, NATURAL_UNITS, quadrature)
            - worked_integral_closed_form(angle, NATURAL_UNITS)
        ))
    return [_within("worked integral vs logarithmic closed form", worst, 0.0, 1e-9, "worst gap on 10 angles")]


def check_parameter_independence(settings: ArcMaxConfig) -> List[CheckResult]:
    rng = np.random.default_rng(settings.get("VERIFY_SEED"))
    theta_star = optimal_angle(_root_config(settings, COTH_BRACKET)).root
    oracle = settings.oracle_quadrature_config()

    worst_angle = 0.0
    worst_scale = 0.0
    for _ in range(settings.get("VERIFY_RANDOM_PAIRS")):
        v, g = rng.uniform(0.1, 100.0, size=2)
        params = ProjectileParams(v=float(v), g=float(g))
        argmax = maximize_arc_length_direct(params, quadrature=oracle).root
        worst_angle = max(worst_angle, abs(argmax - theta_star))

        angle = Angle(theta=float(rng.uniform(0.05, HALF_PI - 0.05)))
        scaled = params.length_scale * arc_length_closed_form(angle, NATURAL_UNITS)
        worst_scale = max(worst_scale, abs(arc_length_closed_form(angle, params) - scaled) / scaled)

    return [
        _within("argmax independent of v and g", worst_angle, 0.0, 1e-5),
        _within("L scales as v²/g (relative)", worst_scale, 0.0, 1e-12),
    ]


def check_landing_speed(settings: ArcMaxConfig) -> List[CheckResult]:
    rng = np.random.default_rng(settings.get("VERIFY_SEED") + 1)
    worst = 0.0
    for _ in range(settings.get("VERIFY_SYMMETRY_SAMPLES")):
        theta = float(rng.uniform(1e-3, HALF_PI))
        v, g = (float(x) for x in rng.uniform(0.1, 100.0, size=2))
        angle, params = Angle(theta=theta), ProjectileParams(v=v, g=g)
        worst = max(worst, abs(speed(flight_time(angle, params), angle, params) - v) / v)
    return [_within("landing speed equals launch speed (relative)", worst, 0.0, 1e-12)]


def check_plot_data(settings: ArcMaxConfig) -> List[CheckResult]:
    theta_star = optimal_angle(_root_config(settings, COTH_BRACKET)).root

    spec = SweepSpec(theta_min=0.01, theta_max=1.56, steps=1000)
    rows = sweep(spec, NATURAL_UNITS, settings.quadrature_config())
    lengths = np.array([row.arc_length for row in rows])
    signs = np.sign(np.diff(lengths))
    unimodal = bool(np.count_nonzero(np.diff(signs) != 0) <= 1 and signs[0] > 0 and signs[-1] < 0)
    step = (spec.theta_max - spec.theta_min) / (spec.steps - 1)
    argmax_theta = rows[int(np.argmax(lengths))].theta

    degrees = list(settings.get("FAMILY_DEGREES"))
    family = trajectory_family(degrees, NATURAL_UNITS, 2000)
    ranges, polylines = [], []
    for _, frame in family.groupby("theta", sort=False):
        ranges.append(frame["x"].iloc[-1])
        polylines.append(polyline_length(frame["x"].to_numpy(), frame["y"].to_numpy()))
    nearest_optimum = min(degrees, key=lambda d: abs(d - math.degrees(theta_star)))

    return [
        CheckResult(name="arc length sweep is unimodal", passed=unimodal),
        _within("sweep argmax near θ*", argmax_theta, theta_star, step),
        CheckResult(
            name="family: longest range at 45°",
            passed=degrees[int(np.argmax(ranges))] == 45.0,
            measured=degrees[int(np.argmax(ranges))],
            expected=45.0,
        ),
        CheckResult(
            name="family: longest polyline nearest θ*",
            passed=degrees[int(np.argmax(polylines))] == nearest_optimum,
            measured=degrees[int(np.argmax(polylines))],
            expected=nearest_optimum,
        ),
    ]


CHECKS: List[Callable[[ArcMaxConfig], List[CheckResult]]] = [
    check_optimal_angle,
    check_fixed_point,
    check_reference_lengths,
    check_vertical_launch,
    check_relative_gap,
    check_derivative_triangulation,
    check_worked_integral,
    check_parameter_independence,
    check_landing_speed,
    check_plot_data,
]


def run_verification(settings: ArcMaxConfig) -> VerificationReport:
    """Run every cross-check; a check that raises is recorded as failed"""
    results: List[CheckResult] = []
    for check in CHECKS:
        logger.info(f"Running {check.__name__}...")
        try:
            results.extend(check(settings))
        except ArcMaxError as e:
            logger.error(f"{check.__name__} raised: {e}")
            results.append(CheckResult(name=check.__name__, passed=False, detail=str(e)))

    report = VerificationReport(checks=results)
    for failure in report.failures:
        logger.warning(f"FAILED {failure.name}: measured={failure.measured}, expected={failure.expected}")
    logger.info(f"Verification complete: {len(results) - len(report.failures)}/{len(results)} checks passed")
    return report
