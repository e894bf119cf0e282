"""Connectivity probability vs K, one curve per deleted-node count, with
optional vertical threshold lines."""

from __future__ import annotations

import argparse
import sys

from .csvio import group_by_model_gamma, read_sweep_csv
from .render import load_json_sidecar, new_figure, pad_limits, run_script, save


def render_connectivity(csv_path, out_path, threshold_overlay=(), raster=False):
    """Plot prob_connected against k for every (model, gamma) group.

    ``threshold_overlay`` is a list of (label, value) pairs drawn as vertical
    lines.  Returns (figure, written_path).
    """
    rows = read_sweep_csv(csv_path)
    groups = group_by_model_gamma(rows)
    fig, ax = new_figure()
    many_models = len({m for m, _ in groups}) > 1
    xs, ys = [], []
    for (model, gamma), curve in sorted(groups.items()):
        label = f"{model}, gamma={gamma}" if many_models else f"gamma={gamma}"
        ax.plot([r.k for r in curve], [r.prob_connected for r in curve], marker="o", label=label)
        xs += [r.k for r in curve]
        ys += [r.prob_connected for r in curve]
    for label, value in threshold_overlay:
        ax.axvline(float(value), linestyle="--", color="gray")
        ax.annotate(str(label), (float(value), 0.5), rotation=90, fontsize=8, ha="right")
        xs.append(float(value))
    pad_limits(ax, xs, ys + [0.0, 1.0])
    ax.set_xlabel("K")
    ax.set_ylabel("empirical probability of connectivity")
    ax.legend()
    written = save(fig, out_path, raster=raster)
    return fig, written


def _parse_overlay(path):
    doc = load_json_sidecar(path)
    if not isinstance(doc, list):
        raise ValueError(f"{path}: expected a list of threshold entries")
    overlay = []
    for entry in doc:
        if isinstance(entry, dict):
            overlay.append((entry["label"], float(entry["value"])))
        else:
            label, value = entry
            overlay.append((label, float(value)))
    return overlay


def _run(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--thresholds", help="JSON list of {label, value} vertical lines")
    parser.add_argument("--raster", action="store_true", help="default to png instead of svg")
    args = parser.parse_args(argv)
    overlay = _parse_overlay(args.thresholds) if args.thresholds else ()
    _, written = render_connectivity(args.csv, args.out, overlay, raster=args.raster)
    print(written)


def main(argv=None) -> int:
    return run_script(_run, argv)


if __name__ == "__main__":
    sys.exit(main())
