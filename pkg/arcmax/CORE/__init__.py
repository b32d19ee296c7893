"""
CORE Module - Closed-form kinematics of an ideal projectile

Components:
- models: ProjectileParams, Angle, VelocityVector
- trajectory: flight time, velocity, speed, position, arc length L(θ),
  its derivative L'(θ) and the critical residual
"""

from .models import HALF_PI, Angle, ProjectileParams, VelocityVector
from .trajectory import (
    apex_height,
    arc_length,
    arc_length_closed_form,
    arc_length_derivative_closed_form,
    critical_residual,
    critical_residual_derivative,
    flight_time,
    flight_time_derivative,
    horizontal_range,
    position,
    speed,
    stable_atanh,
    velocity,
    worked_integral_closed_form,
)

__all__ = [
    "HALF_PI",
    "Angle",
    "ProjectileParams",
    "VelocityVector",
    "apex_height",
    "arc_length",
    "arc_length_closed_form",
    "arc_length_derivative_closed_form",
    "critical_residual",
    "critical_residual_derivative",
    "flight_time",
    "flight_time_derivative",
    "horizontal_range",
    "position",
    "speed",
    "stable_atanh",
    "velocity",
    "worked_integral_closed_form",
]
