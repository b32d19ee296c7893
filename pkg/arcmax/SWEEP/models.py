#!/usr/bin/env python3
"""
Pydantic models for sweeps, trajectory samples, reports and verification
CSV-facing records and the structured results printed by the CLI
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from arcmax.CORE.models import HALF_PI


class SweepSpec(BaseModel):
    """Uniform grid of launch angles in radians"""
    model_config = ConfigDict(frozen=True)

    theta_min: float = Field(..., gt=0, description="First angle (rad)")
    theta_max: float = Field(..., le=HALF_PI, description="Last angle (rad)")
    steps: int = Field(..., ge=2, description="Number of rows")

    @model_validator(mode="after")
    def validate_range(self):
        if not self.theta_min < self.theta_max:
            raise ValueError("theta_min must be less than theta_max")
        return self


class SweepRow(BaseModel):
    """Arc length and its derivative at one angle; the derivative is undefined at π/2"""
    theta: float
    arc_length: float = Field(..., gt=0)
    arc_length_derivative: Optional[float] = None


class TrajectorySample(BaseModel):
    """One point of a trajectory at time t"""
    theta: float
    t: float
    x: float
    y: float = Field(..., ge=-1e-12)


class OptimumReport(BaseModel):
    """The longest-trajectory optimum in natural units (v = g = 1)"""
    alpha: float = Field(..., description="Positive fixed point of coth")
    theta_rad: float = Field(..., description="Optimal launch angle (rad)")
    theta_deg: float = Field(..., description="Optimal launch angle (deg)")
    arc_length_max: float = Field(..., description="L(θ*)")
    arc_length_quarter_pi: float = Field(..., description="L(π/4)")
    percent_gap: float = Field(..., description="100·(L(θ*) − L(π/4))/L(π/4)")
    range_at_optimum: float = Field(..., description="Horizontal range at θ*")
    range_max: float = Field(..., description="Horizontal range at π/4")


class CheckResult(BaseModel):
    """Outcome of one oracle cross-check"""
    name: str
    passed: bool
    measured: Optional[float] = None
    expected: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""


class VerificationReport(BaseModel):
    """All cross-checks of one verification run"""
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]
