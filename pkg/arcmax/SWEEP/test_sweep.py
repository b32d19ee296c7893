#!/usr/bin/env python3
"""
Test suite for plot data, CSV export and the optimality report
"""

import io
import math

import numpy as np
import pytest
from pydantic import ValidationError

from arcmax.config import ArcMaxConfig
from arcmax.CORE.models import HALF_PI, Angle, ProjectileParams
from arcmax.CORE.trajectory import arc_length_closed_form
from arcmax.errors import DomainError, NonConvergenceError, SweepAborted
from arcmax.QUADRATURE.models import QuadratureConfig
from arcmax.SWEEP import (
    SweepSpec,
    polyline_length,
    read_sweep_csv,
    read_trajectory_csv,
    report_optimum,
    sweep,
    sweep_frame,
    trajectory_family,
    trajectory_frame,
    trajectory_samples,
    write_csv,
)
from arcmax.SWEEP.verify import CHECKS, check_plot_data, run_verification

UNIT = ProjectileParams(v=1.0, g=1.0)


def _csv_text(frame) -> str:
    buffer = io.StringIO()
    write_csv(frame, buffer)
    return buffer.getvalue()


def test_sweep_spec_validation():
    """Test SweepSpec invariants"""
    for bad in (
        {"theta_min": 0.0, "theta_max": 1.0, "steps": 3},
        {"theta_min": 0.5, "theta_max": HALF_PI + 1e-6, "steps": 3},
        {"theta_min": 1.0, "theta_max": 0.5, "steps": 3},
        {"theta_min": 0.1, "theta_max": 0.5, "steps": 1},
    ):
        with pytest.raises(ValidationError):
            SweepSpec(**bad)


def test_sweep_quarter_to_vertical():
    """Test a three-row sweep from π/4 to π/2"""
    rows = sweep(SweepSpec(theta_min=math.pi / 4, theta_max=HALF_PI, steps=3), UNIT)
    assert len(rows) == 3
    assert [row.theta for row in rows] == pytest.approx([math.pi / 4, 3 * math.pi / 8, HALF_PI])

    assert rows[0].arc_length == pytest.approx(1.14779357, abs=1e-8)
    assert rows[1].arc_length == pytest.approx(arc_length_closed_form(Angle(theta=3 * math.pi / 8), UNIT), rel=1e-14)
    assert rows[2].arc_length == pytest.approx(1.0, abs=1e-10)

    assert rows[0].arc_length_derivative > 0
    assert rows[1].arc_length_derivative < 0
    assert rows[2].arc_length_derivative is None


def test_sweep_argmax_and_scaling():
    """Test the sweep maximum and v²/g scaling"""
    spec = SweepSpec(theta_min=0.01, theta_max=1.56, steps=1000)
    rows = sweep(spec, UNIT)
    step = (spec.theta_max - spec.theta_min) / (spec.steps - 1)
    best = max(rows, key=lambda row: row.arc_length)
    assert abs(best.theta - 0.9855) <= step

    doubled = sweep(spec, ProjectileParams(v=2.0, g=1.0))
    for unit_row, doubled_row in zip(rows, doubled):
        assert doubled_row.arc_length == pytest.approx(4.0 * unit_row.arc_length, rel=1e-15)


def test_sweep_aborts_with_offending_angle():
    """Test that a failing row aborts the sweep and reports its angle"""
    spec = SweepSpec(theta_min=1.0, theta_max=HALF_PI, steps=2)
    # the kinked vertical row cannot meet this budget
    starved = QuadratureConfig(max_depth=1)
    with pytest.raises(SweepAborted) as excinfo:
        sweep(spec, UNIT, starved)
    assert excinfo.value.theta == HALF_PI
    assert isinstance(excinfo.value.cause, NonConvergenceError)
    assert excinfo.value.exit_code == 2


def test_trajectory_samples():
    """Test sampled trajectories at 45° and 90°"""
    samples = trajectory_samples(Angle(theta=math.pi / 4), UNIT, 3)
    assert [(s.x, s.y) for s in samples] == [
        (0.0, 0.0),
        pytest.approx((0.5, 0.25)),
        pytest.approx((1.0, 0.0), abs=1e-12),
    ]
    assert samples[0].t == 0.0
    assert samples[-1].t == pytest.approx(math.sqrt(2))

    vertical = trajectory_samples(Angle(theta=HALF_PI), UNIT, 3)
    assert [(s.x, s.y) for s in vertical] == [
        (0.0, 0.0),
        pytest.approx((0.0, 0.5), abs=1e-12),
        pytest.approx((0.0, 0.0), abs=1e-12),
    ]
    for sample in samples + vertical:
        assert sample.y >= 0.0

    with pytest.raises(DomainError):
        trajectory_samples(Angle(theta=0.5), UNIT, 1)


def test_polyline_converges_to_arc_length():
    """Test that a densely sampled trajectory's polyline approaches L from below"""
    frame = trajectory_frame(Angle(theta=0.9855), UNIT, 1_000_000)
    length = polyline_length(frame["x"].to_numpy(), frame["y"].to_numpy())
    assert length == pytest.approx(1.1996786, abs=1e-5)
    assert length <= arc_length_closed_form(Angle(theta=0.9855), UNIT)


def test_trajectory_family():
    """Test the family: longest range at 45°, longest path nearest the optimum"""
    degrees = [30.0, 45.0, 56.47, 75.0, 90.0]
    family = trajectory_family(degrees, UNIT, 2000)
    assert list(family.columns) == ["theta", "t", "x", "y"]
    assert len(family) == 5 * 2000

    groups = [frame for _, frame in family.groupby("theta", sort=False)]
    ranges = [frame["x"].iloc[-1] for frame in groups]
    paths = [polyline_length(frame["x"].to_numpy(), frame["y"].to_numpy()) for frame in groups]
    assert degrees[int(np.argmax(ranges))] == 45.0
    assert degrees[int(np.argmax(paths))] == 56.47
    assert groups[-1]["theta"].iloc[0] == HALF_PI


def test_sweep_csv_round_trip():
    """Test that written CSV parses back to the same doubles"""
    rows = sweep(SweepSpec(theta_min=0.1, theta_max=HALF_PI, steps=17), ProjectileParams(v=3.3, g=9.81))
    text = _csv_text(sweep_frame(rows))

    lines = text.split("\n")
    assert lines[0] == "theta,arc_length,arc_length_derivative"
    assert lines[-1] == ""
    assert "\r" not in text
    # undefined derivative is an empty field
    assert lines[17].endswith(",")
    assert "nan" not in text.lower()

    parsed = read_sweep_csv(io.StringIO(text))
    assert parsed == rows
    print("✓ CSV round-trip test passed")


def test_trajectory_csv_round_trip():
    """Test trajectory CSV parsing"""
    frame = trajectory_frame(Angle(theta=0.7), ProjectileParams(v=12.0, g=9.81), 50)
    parsed = read_trajectory_csv(io.StringIO(_csv_text(frame)))
    assert [s.x for s in parsed] == frame["x"].tolist()
    assert [s.y for s in parsed] == frame["y"].tolist()

    with pytest.raises(ValueError):
        read_sweep_csv(io.StringIO(_csv_text(frame)))


def test_output_is_deterministic():
    """Test that identical inputs give byte-identical CSV"""
    spec = SweepSpec(theta_min=0.2, theta_max=HALF_PI, steps=50)
    first = _csv_text(sweep_frame(sweep(spec, UNIT)))
    second = _csv_text(sweep_frame(sweep(spec, UNIT)))
    assert first == second

    family_degrees = [30.0, 45.0, 90.0]
    assert _csv_text(trajectory_family(family_degrees, UNIT, 20)) == _csv_text(
        trajectory_family(family_degrees, UNIT, 20)
    )


def test_report_optimum():
    """Test the optimality report in natural units"""
    report = report_optimum()
    assert report.theta_deg == pytest.approx(56.47, abs=1e-2)
    assert report.theta_rad == pytest.approx(0.9855, abs=1e-4)
    assert report.arc_length_max == pytest.approx(1.19967864, abs=1e-7)
    assert report.arc_length_quarter_pi == pytest.approx(1.14779357, abs=1e-7)
    assert report.percent_gap == pytest.approx(4.52, abs=1e-2)
    assert report.percent_gap > 4.5
    assert abs(report.arc_length_max - report.alpha) <= 1e-10
    assert report.range_max == pytest.approx(1.0)
    assert report.range_at_optimum < report.range_max
    print("✓ Optimality report test passed")


def test_plot_data_checks_pass():
    """Test the sweep and family cross-checks"""
    results = check_plot_data(ArcMaxConfig())
    assert len(results) == 4
    assert all(result.passed for result in results), [r.name for r in results if not r.passed]


def test_run_verification_records_failures(monkeypatch):
    """Test that a check that raises is recorded as failed rather than propagated"""
    def broken(settings):
        raise NonConvergenceError("budget exhausted")

    monkeypatch.setattr("arcmax.SWEEP.verify.CHECKS", [broken] + CHECKS[:2])
    report = run_verification(ArcMaxConfig())
    assert not report.passed
    assert [failure.name for failure in report.failures] == ["broken"]
    assert "budget exhausted" in report.failures[0].detail


def run_all_tests():
    """Run all tests"""
    print("Running sweep and export tests...\n")
    for test in (
        test_sweep_spec_validation,
        test_sweep_quarter_to_vertical,
        test_sweep_argmax_and_scaling,
        test_sweep_aborts_with_offending_angle,
        test_trajectory_samples,
        test_polyline_converges_to_arc_length,
        test_trajectory_family,
        test_sweep_csv_round_trip,
        test_trajectory_csv_round_trip,
        test_output_is_deterministic,
        test_report_optimum,
        test_plot_data_checks_pass,
    ):
        test()
    print("\n✅ All tests passed successfully!")


if __name__ == "__main__":
    run_all_tests()
