"""
ArcMax - Longest-Trajectory Launch Angle of an Ideal Projectile

Computes the arc length of an ideal projectile's ground-to-ground trajectory,
differentiates it under the integral sign, and solves the optimality condition
csc θ = coth(csc θ) through the unique positive fixed point of coth. Every
closed form is cross-checked by an independent numerical oracle.

Main components:
- CORE: closed-form kinematics, arc length, its derivative and the critical residual
- QUADRATURE: adaptive Simpson integration, Leibniz-rule differentiation, finite differences
- SOLVER: coth fixed point, optimal angle, critical-equation root, direct maximization
- SWEEP: angle sweeps, trajectory families, CSV emission, verification suite and CLI
"""

__version__ = "0.1.0"
__author__ = "Hackteam2025"
__description__ = "ArcMax - Longest-Trajectory Launch Angle of an Ideal Projectile"

from . import CORE, QUADRATURE, SOLVER, SWEEP

__all__ = [
    "__version__",
    "__author__",
    "__description__",
    "CORE",
    "QUADRATURE",
    "SOLVER",
    "SWEEP",
]
