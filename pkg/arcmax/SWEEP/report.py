#!/usr/bin/env python3
"""
Optimality report
The fixed point α, the optimal angle, and how much longer the optimal
trajectory is than the range-optimal one, all in natural units.
"""

import math
from typing import Optional

from loguru import logger

from arcmax.CORE.models import Angle, ProjectileParams
from arcmax.CORE.trajectory import arc_length_closed_form, horizontal_range
from arcmax.SOLVER.models import RootConfig
from arcmax.SOLVER.optimum import coth_fixed_point, optimal_angle
from arcmax.SWEEP.models import OptimumReport

NATURAL_UNITS = ProjectileParams(v=1.0, g=1.0)


def report_optimum(config: Optional[RootConfig] = None) -> OptimumReport:
    alpha = coth_fixed_point(config).root
    theta = Angle(theta=optimal_angle(config).root)
    quarter_pi = Angle(theta=math.pi / 4)

    arc_length_max = arc_length_closed_form(theta, NATURAL_UNITS)
    arc_length_quarter_pi = arc_length_closed_form(quarter_pi, NATURAL_UNITS)

    report = OptimumReport(
        alpha=alpha,
        theta_rad=theta.theta,
        theta_deg=theta.degrees,
        arc_length_max=arc_length_max,
        arc_length_quarter_pi=arc_length_quarter_pi,
        percent_gap=100.0 * (arc_length_max - arc_length_quarter_pi) / arc_length_quarter_pi,
        range_at_optimum=horizontal_range(theta, NATURAL_UNITS),
        range_max=horizontal_range(quarter_pi, NATURAL_UNITS),
    )
    logger.info(f"Optimum: θ*={report.theta_deg:.4f}°, L_max={report.arc_length_max:.10f}, gap={report.percent_gap:.3f}%")
    return report
