"""
SWEEP Module - Plot data, reports and verification

Components:
- models: SweepSpec, SweepRow, TrajectorySample, OptimumReport, CheckResult
- angle_sweep: arc length against angle, trajectory samples and families
- export: CSV writing and parsing
- report: the optimality report in natural units
- verify: the oracle cross-check suite
- main: the click CLI (imported on demand)

Usage:
    from arcmax.SWEEP import sweep, SweepSpec
    from arcmax.CORE import ProjectileParams

    rows = sweep(SweepSpec(theta_min=0.01, theta_max=1.56, steps=1000), ProjectileParams())
"""

from .angle_sweep import polyline_length, sweep, sweep_frame, trajectory_family, trajectory_frame, trajectory_samples
from .export import read_sweep_csv, read_trajectory_csv, write_csv
from .models import CheckResult, OptimumReport, SweepRow, SweepSpec, TrajectorySample, VerificationReport
from .report import NATURAL_UNITS, report_optimum
from .verify import run_verification

__all__ = [
    "NATURAL_UNITS",
    "CheckResult",
    "OptimumReport",
    "SweepRow",
    "SweepSpec",
    "TrajectorySample",
    "VerificationReport",
    "polyline_length",
    "read_sweep_csv",
    "read_trajectory_csv",
    "report_optimum",
    "run_verification",
    "sweep",
    "sweep_frame",
    "trajectory_family",
    "trajectory_frame",
    "trajectory_samples",
    "write_csv",
]
