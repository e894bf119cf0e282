"""Reading and validation of the sweep CSV contract.

The plotting scripts consume sweep results purely through this file format;
they never recompute statistics.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

EXPECTED_HEADER = [
    "model",
    "n",
    "k",
    "gamma",
    "trials",
    "master_seed",
    "prob_connected",
    "mean_outside_giant",
    "max_outside_giant",
    "p95_outside_giant",
    "mean_components",
    "prob_giant_within_lambda",
]


class SchemaError(ValueError):
    """The CSV does not match the sweep contract."""


@dataclass
class SweepRow:
    model: str
    n: int
    k: int
    gamma: int
    trials: int
    prob_connected: float
    mean_outside_giant: float
    max_outside_giant: int
    p95_outside_giant: float
    mean_components: float
    prob_giant_within_lambda: float | None


def read_sweep_csv(path: str) -> list[SweepRow]:
    """Parse a sweep CSV, raising SchemaError on any contract violation."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if header != EXPECTED_HEADER:
            raise SchemaError(f"{path}: header mismatch, got {header}")
        rows = []
        for lineno, rec in enumerate(reader, start=2):
            if not rec:
                continue
            if len(rec) != len(EXPECTED_HEADER):
                raise SchemaError(f"{path}:{lineno}: expected {len(EXPECTED_HEADER)} columns")
            try:
                rows.append(
                    SweepRow(
                        model=rec[0],
                        n=int(rec[1]),
                        k=int(rec[2]),
                        gamma=int(rec[3]),
                        trials=int(rec[4]),
                        prob_connected=float(rec[6]),
                        mean_outside_giant=float(rec[7]),
                        max_outside_giant=int(rec[8]),
                        p95_outside_giant=float(rec[9]),
                        mean_components=float(rec[10]),
                        prob_giant_within_lambda=float(rec[11]) if rec[11] else None,
                    )
                )
            except ValueError as exc:
                raise SchemaError(f"{path}:{lineno}: {exc}") from None
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def group_by_model_gamma(rows: list[SweepRow]) -> dict[tuple[str, int], list[SweepRow]]:
    """Rows grouped into curves, each sorted by k."""
    groups: dict[tuple[str, int], list[SweepRow]] = {}
    for row in rows:
        groups.setdefault((row.model, row.gamma), []).append(row)
    for curve in groups.values():
        curve.sort(key=lambda r: r.k)
    return groups
