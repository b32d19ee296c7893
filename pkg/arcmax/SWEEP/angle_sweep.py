#!/usr/bin/env python3
"""
Angle sweeps and trajectory families
Plot data for arc length against launch angle, and for the trajectories
themselves at a set of angles.
"""

import math
from typing import Iterable, List, Optional

import numpy as np
import pandas as pd
from loguru import logger

from arcmax.CORE.models import Angle, ProjectileParams
from arcmax.CORE.trajectory import arc_length_closed_form, arc_length_derivative_closed_form, flight_time
from arcmax.errors import ArcMaxError, DomainError, SweepAborted
from arcmax.QUADRATURE.arc_length import arc_length_quadrature
from arcmax.QUADRATURE.models import QuadratureConfig
from arcmax.SWEEP.models import SweepRow, SweepSpec, TrajectorySample

SWEEP_COLUMNS = ["theta", "arc_length", "arc_length_derivative"]
TRAJECTORY_COLUMNS = ["theta", "t", "x", "y"]


def sweep(
    spec: SweepSpec,
    params: ProjectileParams,
    quadrature: Optional[QuadratureConfig] = None,
) -> List[SweepRow]:
    """
    Arc length and its derivative on a uniform grid of angles.
    Closed forms below π/2; at π/2 the arc length comes from quadrature and
    the derivative is left empty.

    Raises:
        SweepAborted: on the first row that fails, carrying its angle
    """
    thetas = np.linspace(spec.theta_min, spec.theta_max, spec.steps)
    logger.info(f"Sweeping {spec.steps} angles over [{spec.theta_min:.6g}, {spec.theta_max:.6g}]")

    rows = []
    for value in thetas:
        theta = float(value)
        try:
            angle = Angle(theta=theta)
            if angle.is_vertical:
                rows.append(SweepRow(theta=theta, arc_length=arc_length_quadrature(angle, params, quadrature)))
            else:
                rows.append(SweepRow(
                    theta=theta,
                    arc_length=arc_length_closed_form(angle, params),
                    arc_length_derivative=arc_length_derivative_closed_form(angle, params),
                ))
        except ArcMaxError as e:
            logger.error(f"Sweep row failed at theta={theta!r}: {e}")
            raise SweepAborted(theta, e) from e

    return rows


def sweep_frame(rows: Iterable[SweepRow]) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump() for row in rows], columns=SWEEP_COLUMNS).astype(float)


def trajectory_frame(theta: Angle, params: ProjectileParams, n: int) -> pd.DataFrame:
    """
    n samples at uniform t over [0, τ(θ)] as a DataFrame with columns
    theta, t, x, y. The first sample is the origin and the last lands at y = 0.
    """
    if n < 2:
        raise DomainError(f"Need at least 2 samples, got n={n}")

    t = np.linspace(0.0, flight_time(theta, params), n)
    x = params.v * t * math.cos(theta.theta)
    y = t * (params.v * math.sin(theta.theta) - 0.5 * params.g * t)

    return pd.DataFrame({
        "theta": np.full(n, theta.theta),
        "t": t,
        "x": x,
        "y": np.maximum(y, 0.0),  # flat ground
    })


def trajectory_samples(theta: Angle, params: ProjectileParams, n: int) -> List[TrajectorySample]:
    frame = trajectory_frame(theta, params, n)
    return [TrajectorySample(**record) for record in frame.to_dict("records")]


def trajectory_family(
    degrees: Iterable[float],
    params: ProjectileParams,
    n: int,
) -> pd.DataFrame:
    """Trajectories at several launch angles (given in degrees), stacked in order"""
    frames = [trajectory_frame(Angle.from_degrees(d), params, n) for d in degrees]
    logger.info(f"Sampled {len(frames)} trajectories with {n} points each")
    return pd.concat(frames, ignore_index=True)


def polyline_length(x: np.ndarray, y: np.ndarray) -> float:
    """Sum of segment lengths; approaches the arc length from below as sampling refines"""
    return float(np.hypot(np.diff(x), np.diff(y)).sum())
