"""Shared plotting helpers (headless: object-oriented matplotlib, no pyplot)."""

from __future__ import annotations

import json
import os
import sys

from matplotlib.figure import Figure

from .csvio import SchemaError


def new_figure() -> tuple[Figure, object]:
    fig = Figure(figsize=(6.4, 4.2), dpi=110)
    ax = fig.add_subplot(111)
    ax.grid(True, alpha=0.3)
    return fig, ax


def pad_limits(ax, xs, ys) -> None:
    """Axis ranges covering every plotted point (no silent clipping)."""
    xs, ys = list(xs), list(ys)
    if not xs:
        return
    xpad = 0.5 + 0.02 * (max(xs) - min(xs))
    yspan = max(ys) - min(ys)
    ypad = 0.05 * yspan if yspan else max(0.05, 0.1 * abs(max(ys)) + 0.05)
    ax.set_xlim(min(xs) - xpad, max(xs) + xpad)
    ax.set_ylim(min(0.0, min(ys)) - ypad, max(ys) + ypad)


def save(fig: Figure, out_path: str, raster: bool = False) -> str:
    """Write the figure; extensionless paths default to svg (png if raster)."""
    root, ext = os.path.splitext(out_path)
    if not ext:
        out_path = f"{root}.{'png' if raster else 'svg'}"
    fig.savefig(out_path)
    return out_path


def load_json_sidecar(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def run_script(render, argv=None) -> int:
    """Wrap a script body: schema errors and bad inputs exit nonzero with a
    one-line diagnostic."""
    try:
        render(argv)
        return 0
    except (SchemaError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
