#!/usr/bin/env python3
"""
Pydantic models for numerical integration
Quadrature tolerances and parametric integrals with moving limits
"""

from typing import Callable, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class QuadratureConfig(BaseModel):
    """Tolerance and recursion controls for adaptive Simpson integration"""
    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=1e-10, gt=0, description="Relative tolerance")
    abs_tol: float = Field(default=1e-12, gt=0, description="Absolute tolerance")
    max_depth: int = Field(default=50, ge=1, description="Maximum bisection depth")
    min_depth: int = Field(default=2, ge=0, description="Depth below which no panel is accepted")
    split_points: List[float] = Field(
        default_factory=list,
        description="Interior abscissae where the integrand may have a kink",
    )

    @field_validator("split_points")
    @classmethod
    def validate_split_points(cls, v):
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("split_points must be strictly increasing")
        return v


# For integrals that get finite-differenced or maximized
ORACLE_QUADRATURE = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-15)


class ParametricIntegral(BaseModel):
    """
    ∫_{a(α)}^{b(α)} f(x, α) dx

    integrand_partial is ∂f/∂α; when absent it is obtained by central
    difference in α. split_points, when given, maps α to the interior
    abscissae where the integrand is non-smooth.
    """
    model_config = ConfigDict(frozen=True)

    integrand: Callable[[float, float], float]
    lower_limit: Callable[[float], float]
    upper_limit: Callable[[float], float]
    integrand_partial: Optional[Callable[[float, float], float]] = None
    split_points: Optional[Callable[[float], List[float]]] = None
