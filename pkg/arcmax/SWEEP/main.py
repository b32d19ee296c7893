#!/usr/bin/env python3
"""
ArcMax command-line interface

    arcmax [--v V] [--g G] [--degrees] [--out PATH] COMMAND ...

Commands: optimal, arclength, sweep, trajectory, verify.
Data goes to --out or standard output; logs go to standard error.
Exit codes: 0 success, 1 domain error or failed verification, 2 non-convergence.
"""

import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, TextIO

import click
import numpy as np
import pandas as pd
from loguru import logger
from pydantic import BaseModel, ConfigDict, ValidationError

from arcmax.config import ArcMaxConfig
from arcmax.CORE.models import Angle, ProjectileParams
from arcmax.CORE.trajectory import arc_length, arc_length_derivative_closed_form
from arcmax.errors import ArcMaxError, DomainError
from arcmax.QUADRATURE.arc_length import arc_length_quadrature
from arcmax.SOLVER.optimum import COTH_BRACKET
from arcmax.SWEEP.angle_sweep import sweep, sweep_frame, trajectory_family, trajectory_frame
from arcmax.SWEEP.export import write_csv
from arcmax.SWEEP.models import SweepRow, SweepSpec
from arcmax.SWEEP.report import report_optimum
from arcmax.SWEEP.verify import run_verification


def setup_logging(level: str, log_file: Optional[str] = None):
    """Configure logging; standard output is reserved for data"""
    logger.remove()  # Remove default handler

    # Console logging
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{line}</cyan> | {message}",
    )

    # File logging
    if log_file:
        logger.add(
            log_file,
            rotation="1 day",
            retention="7 days",
            level="DEBUG",
            format="{time} | {level} | {name}:{line} | {message}",
        )


class CliState(BaseModel):
    """Global options shared by every subcommand"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    params: ProjectileParams
    degrees: bool
    out: Optional[Path]
    settings: ArcMaxConfig


class ArcMaxGroup(click.Group):
    """Maps ArcMax, validation and usage errors to the documented exit codes"""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            # exit 2 is reserved for non-convergence
            e.exit_code = 1
            raise

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise
        except ArcMaxError as e:
            logger.error(str(e))
            ctx.exit(e.exit_code)
        except ValidationError as e:
            logger.error(f"Invalid input: {e}")
            ctx.exit(1)


def _to_radians(value: float, degrees: bool) -> float:
    return Angle.degrees_to_radians(value) if degrees else value


def _parse_angle(value: float, degrees: bool) -> Angle:
    return Angle.from_degrees(value) if degrees else Angle(theta=value)


@contextmanager
def _output(state: CliState) -> Iterator[TextIO]:
    if state.out is None:
        yield sys.stdout
    else:
        with open(state.out, "w", encoding="utf-8", newline="") as f:
            yield f
        logger.info(f"Output written to {state.out}")


def _emit(state: CliState, frame: pd.DataFrame):
    if state.degrees:
        frame = frame.assign(theta=np.degrees(frame["theta"]))
    with _output(state) as stream:
        write_csv(frame, stream)


@click.group(cls=ArcMaxGroup)
@click.option("--v", "v", type=float, default=1.0, show_default=True, help="Launch speed")
@click.option("--g", "g", type=float, default=1.0, show_default=True, help="Gravitational acceleration")
@click.option("--degrees", is_flag=True, help="Read and report angles in degrees")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Output file (default: stdout)")
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="YAML or JSON settings file")
@click.option("--log-level", default=None, help="Console log level (default from settings: WARNING)")
@click.option("--log-file", type=click.Path(dir_okay=False), default=None, help="Also log at DEBUG to this file")
@click.pass_context
def cli(ctx, v, g, degrees, out, config_file, log_level, log_file):
    """Arc length of an ideal projectile and the angle that maximizes it."""
    setup_logging(log_level or "WARNING", log_file)
    settings = ArcMaxConfig(config_file)
    if log_level is None:
        setup_logging(settings.get("LOG_LEVEL"), log_file)
    logger.debug(settings.get_summary())

    ctx.obj = CliState(params=ProjectileParams(v=v, g=g), degrees=degrees, out=out, settings=settings)


@cli.command()
@click.pass_obj
def optimal(state: CliState):
    """Report α, θ*, L_max, L(π/4) and their percent gap as JSON."""
    config = COTH_BRACKET.model_copy(update={
        "tol": state.settings.get("ROOT_TOL"),
        "max_iter": state.settings.get("ROOT_MAX_ITER"),
    })
    report = report_optimum(config)
    with _output(state) as stream:
        stream.write(report.model_dump_json(indent=2) + "\n")


@cli.command()
@click.option("--theta", type=float, required=True, help="Launch angle (radians, or degrees with --degrees)")
@click.option("--quadrature", "use_quadrature", is_flag=True, help="Use the quadrature oracle instead of the closed form")
@click.pass_obj
def arclength(state: CliState, theta: float, use_quadrature: bool):
    """Arc length and its derivative at one angle, as a one-row CSV."""
    angle = _parse_angle(theta, state.degrees)
    if use_quadrature:
        length = arc_length_quadrature(angle, state.params, state.settings.quadrature_config())
    else:
        length = arc_length(angle, state.params)
    derivative = None if angle.is_vertical else arc_length_derivative_closed_form(angle, state.params)
    row = SweepRow(theta=angle.theta, arc_length=length, arc_length_derivative=derivative)
    _emit(state, sweep_frame([row]))


@cli.command(name="sweep")
@click.option("--min", "theta_min", type=float, required=True, help="First angle")
@click.option("--max", "theta_max", type=float, required=True, help="Last angle")
@click.option("--steps", type=int, required=True, help="Number of rows (≥ 2)")
@click.pass_obj
def sweep_command(state: CliState, theta_min: float, theta_max: float, steps: int):
    """Arc length against launch angle on a uniform grid, as CSV."""
    spec = SweepSpec(
        theta_min=_to_radians(theta_min, state.degrees),
        theta_max=_to_radians(theta_max, state.degrees),
        steps=steps,
    )
    rows = sweep(spec, state.params, state.settings.quadrature_config())
    _emit(state, sweep_frame(rows))


@cli.command()
@click.option("--theta", type=float, default=None, help="Launch angle (radians, or degrees with --degrees)")
@click.option("--samples", type=int, default=101, show_default=True, help="Samples per trajectory")
@click.option("--family", is_flag=True, help="Emit the configured family of angles instead of one")
@click.pass_obj
def trajectory(state: CliState, theta: Optional[float], samples: int, family: bool):
    """Sampled trajectory points (theta, t, x, y), as CSV."""
    if family:
        frame = trajectory_family(state.settings.get("FAMILY_DEGREES"), state.params, samples)
    elif theta is not None:
        frame = trajectory_frame(_parse_angle(theta, state.degrees), state.params, samples)
    else:
        raise DomainError("Give --theta or --family")
    _emit(state, frame)


@cli.command()
@click.pass_obj
def verify(state: CliState):
    """Run the oracle cross-check suite; exit 1 if any check fails."""
    report = run_verification(state.settings)
    with _output(state) as stream:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{status}  {check.name}"
            if check.measured is not None:
                line += f"  measured={check.measured:.12g}"
            if check.expected is not None:
                line += f"  expected={check.expected:.12g}"
            if check.tolerance is not None:
                line += f"  tol={check.tolerance:.1e}"
            if check.detail:
                line += f"  ({check.detail})"
            stream.write(line + "\n")
    if not report.passed:
        click.get_current_context().exit(1)


if __name__ == "__main__":
    cli()
