"""Schema-validated readers for the thermal-jc CSV contracts.

The scripts are read-only consumers: every number shown in a figure
originates in the CSV, nothing is recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SWEEP_HEADER = ["nbar1", "nbar2", "gt", "d1", "concurrence"]
ROBUST_HEADER = ["nbar1", "nbar2", "measure", "gtau_over_pi", "peak", "present"]
MEASURES = ("discord", "concurrence")


class SchemaError(ValueError):
    """The CSV does not match the producer contract."""


@dataclass(frozen=True)
class FigureSpec:
    """One rendering job: where the data lives, where the image goes, and
    which figure family it belongs to."""

    input_csv: str
    output_image: str
    kind: str = "surface-pair"  # or "robust-map"
    value_bounds: tuple[float, float] = (0.0, 1.0)
    time_label: str = r"$gt/\pi$"
    nbar_label: str = r"mean photon number $\bar{n}$"


@dataclass(frozen=True)
class RobustRow:
    nbar1: float
    nbar2: float
    measure: str
    gtau_over_pi: float
    peak: float
    present: bool


@dataclass
class RenderResult:
    """What a renderer produced, for callers that want to inspect it."""

    output_image: str
    categories: list = field(default_factory=list)


def _read_rows(path: str, header: list[str]) -> list[list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh if line.strip()]
    if not lines:
        raise SchemaError(f"{path}: empty file")
    got = lines[0].split(",")
    if got != header:
        raise SchemaError(f"{path}: header {got!r} does not match {header!r}")
    if len(lines) == 1:
        raise SchemaError(f"{path}: no data rows")
    rows = [line.split(",") for line in lines[1:]]
    for i, row in enumerate(rows, start=2):
        if len(row) != len(header):
            raise SchemaError(f"{path}:{i}: expected {len(header)} fields, got {len(row)}")
    return rows


def _parse_float(path: str, line: int, name: str, text: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise SchemaError(f"{path}:{line}: bad {name} value {text!r}") from exc


def read_sweep_csv(path: str) -> dict[str, np.ndarray]:
    """Columns of a sweep file as float arrays; values must sit in [0, 1]."""
    rows = _read_rows(path, SWEEP_HEADER)
    data = {name: np.empty(len(rows)) for name in SWEEP_HEADER}
    for i, row in enumerate(rows):
        for name, text in zip(SWEEP_HEADER, row):
            data[name][i] = _parse_float(path, i + 2, name, text)
    for name in ("d1", "concurrence"):
        if np.any(data[name] < -1e-9) or np.any(data[name] > 1.0 + 1e-9):
            raise SchemaError(f"{path}: {name} values leave [0, 1]")
    return data


def read_robust_csv(path: str) -> list[RobustRow]:
    """Rows of a robust-time map file, with the measure and presence fields
    validated against their closed vocabularies."""
    out = []
    for i, row in enumerate(_read_rows(path, ROBUST_HEADER), start=2):
        n1, n2, measure, gtau, peak, present = row
        if measure not in MEASURES:
            raise SchemaError(f"{path}:{i}: unknown measure {measure!r}")
        if present not in ("true", "false"):
            raise SchemaError(f"{path}:{i}: present must be true/false, got {present!r}")
        out.append(
            RobustRow(
                nbar1=_parse_float(path, i, "nbar1", n1),
                nbar2=_parse_float(path, i, "nbar2", n2),
                measure=measure,
                gtau_over_pi=_parse_float(path, i, "gtau_over_pi", gtau),
                peak=_parse_float(path, i, "peak", peak),
                present=present == "true",
            )
        )
    return out
