#!/usr/bin/env python3
"""
CSV emission and parsing for sweep and trajectory data

One header line, '.' decimals, '\\n' newlines and 17 significant digits,
so that a written file parses back to the same doubles. An undefined
derivative is an empty field.
"""

import math
from pathlib import Path
from typing import IO, List, Union

import pandas as pd
from loguru import logger

from arcmax.SWEEP.angle_sweep import SWEEP_COLUMNS, TRAJECTORY_COLUMNS
from arcmax.SWEEP.models import SweepRow, TrajectorySample

CSV_OPTIONS = {
    "index": False,
    "float_format": "%.17g",
    "lineterminator": "\n",
    "na_rep": "",
}


def write_csv(frame: pd.DataFrame, destination: Union[str, Path, IO[str]]) -> None:
    frame.to_csv(destination, **CSV_OPTIONS)
    logger.info(f"Wrote {len(frame)} rows")


def _read(source: Union[str, Path, IO[str]], columns: List[str]) -> pd.DataFrame:
    frame = pd.read_csv(source, float_precision="round_trip")
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise ValueError(f"CSV is missing columns: {missing}")
    return frame[columns]


def read_sweep_csv(source: Union[str, Path, IO[str]]) -> List[SweepRow]:
    frame = _read(source, SWEEP_COLUMNS)
    rows = []
    for record in frame.to_dict("records"):
        derivative = record["arc_length_derivative"]
        rows.append(SweepRow(
            theta=record["theta"],
            arc_length=record["arc_length"],
            arc_length_derivative=None if math.isnan(derivative) else derivative,
        ))
    return rows


def read_trajectory_csv(source: Union[str, Path, IO[str]]) -> List[TrajectorySample]:
    frame = _read(source, TRAJECTORY_COLUMNS)
    return [TrajectorySample(**record) for record in frame.to_dict("records")]
