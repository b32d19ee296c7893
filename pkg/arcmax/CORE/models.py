#!/usr/bin/env python3
"""
Pydantic models for the projectile kinematics
Launch parameters, validated launch angles and velocity vectors
"""

import math

from pydantic import BaseModel, ConfigDict, Field

HALF_PI = math.pi / 2.0


class ProjectileParams(BaseModel):
    """Launch speed and gravity; the physical scale of every length and time"""
    model_config = ConfigDict(frozen=True)

    v: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="Launch speed")
    g: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="Gravitational acceleration")

    @property
    def length_scale(self) -> float:
        """v²/g, the arc length of a vertical launch"""
        return self.v * self.v / self.g


class Angle(BaseModel):
    """Launch angle in radians, restricted to (0, π/2]"""
    model_config = ConfigDict(frozen=True)

    theta: float = Field(..., gt=0, le=HALF_PI, allow_inf_nan=False, description="Launch angle (rad)")

    @staticmethod
    def degrees_to_radians(degrees: float) -> float:
        # radians(90) may land one ulp off π/2
        if degrees == 90.0:
            return HALF_PI
        return math.radians(degrees)

    @classmethod
    def from_degrees(cls, degrees: float) -> "Angle":
        return cls(theta=cls.degrees_to_radians(degrees))

    @property
    def degrees(self) -> float:
        return math.degrees(self.theta)

    @property
    def is_vertical(self) -> bool:
        return self.theta == HALF_PI


class VelocityVector(BaseModel):
    """Velocity components; vy is signed, negative on the way down"""
    model_config = ConfigDict(frozen=True)

    vx: float = Field(..., ge=0, description="Horizontal speed component")
    vy: float = Field(..., description="Vertical speed component")

    @property
    def norm(self) -> float:
        return math.hypot(self.vx, self.vy)
