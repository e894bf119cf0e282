"""Paired model comparison: max nodes outside the giant component vs K for
every model present in the CSV (requires at least two)."""

from __future__ import annotations

import argparse
import sys

from .csvio import SchemaError, group_by_model_gamma, read_sweep_csv
from .render import new_figure, pad_limits, run_script, save

REQUIRED_MODELS = ("kout", "er")


def render_comparison(csv_path, out_path, raster=False):
    """Plot max_outside_giant per model; legend labels are the model column
    values verbatim.  Returns (figure, written_path)."""
    rows = read_sweep_csv(csv_path)
    present = {r.model for r in rows}
    missing = [m for m in REQUIRED_MODELS if m not in present]
    if missing:
        raise SchemaError(f"{csv_path}: missing rows for model(s) {missing}")
    ks_by_model = {m: {r.k for r in rows if r.model == m} for m in present}
    shared = set.intersection(*ks_by_model.values())
    if not shared:
        raise SchemaError(f"{csv_path}: models share no k values")
    fig, ax = new_figure()
    xs, ys = [], []
    for (model, gamma), curve in sorted(group_by_model_gamma(rows).items()):
        ax.plot(
            [r.k for r in curve],
            [r.max_outside_giant for r in curve],
            marker="o",
            label=model,
        )
        xs += [r.k for r in curve]
        ys += [r.max_outside_giant for r in curve]
    pad_limits(ax, xs, ys)
    ax.set_xlabel("K")
    ax.set_ylabel("max nodes outside the giant component")
    ax.legend()
    written = save(fig, out_path, raster=raster)
    return fig, written


def _run(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--raster", action="store_true", help="default to png instead of svg")
    args = parser.parse_args(argv)
    _, written = render_comparison(args.csv, args.out, raster=args.raster)
    print(written)


def main(argv=None) -> int:
    return run_script(_run, argv)


if __name__ == "__main__":
    sys.exit(main())
