#!/usr/bin/env python3
"""
Pydantic models for one-dimensional solves
Bracket and budget in, convergence report out
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RootConfig(BaseModel):
    """Bracket, tolerance and iteration cap shared by every 1-D solve"""
    model_config = ConfigDict(frozen=True)

    bracket_lo: float = Field(..., description="Lower end of the bracket")
    bracket_hi: float = Field(..., description="Upper end of the bracket")
    tol: float = Field(default=1e-12, gt=0, description="Tolerance on step width and residual")
    max_iter: int = Field(default=200, ge=1, description="Iteration cap")

    @model_validator(mode="after")
    def validate_bracket(self):
        if not self.bracket_lo < self.bracket_hi:
            raise ValueError("bracket_lo must be less than bracket_hi")
        return self


class RootResult(BaseModel):
    """Outcome of a solve"""
    root: float
    residual: float
    iterations: int
    converged: bool
