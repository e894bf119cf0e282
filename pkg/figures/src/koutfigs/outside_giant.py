"""Maximum nodes outside the giant component vs K, optionally alongside a
theoretical bound curve supplied as a sidecar table."""

from __future__ import annotations

import argparse
import sys

from .csvio import group_by_model_gamma, read_sweep_csv
from .render import load_json_sidecar, new_figure, pad_limits, run_script, save


def render_outside_giant(csv_path, out_path, theory_curve=None, raster=False):
    """Plot max_outside_giant against k per (model, gamma) group.

    ``theory_curve`` is an optional (label, [(k, bound), ...]) pair drawn as
    an extra dashed curve.  Returns (figure, written_path).
    """
    rows = read_sweep_csv(csv_path)
    groups = group_by_model_gamma(rows)
    fig, ax = new_figure()
    many_models = len({m for m, _ in groups}) > 1
    xs, ys = [], []
    for (model, gamma), curve in sorted(groups.items()):
        label = f"{model}, gamma={gamma}" if many_models else f"gamma={gamma}"
        ax.plot(
            [r.k for r in curve], [r.max_outside_giant for r in curve], marker="o", label=label
        )
        xs += [r.k for r in curve]
        ys += [r.max_outside_giant for r in curve]
    if theory_curve is not None:
        label, points = theory_curve
        points = sorted((float(k), float(v)) for k, v in points)
        ax.plot([p[0] for p in points], [p[1] for p in points], linestyle="--", label=label)
        xs += [p[0] for p in points]
        ys += [p[1] for p in points]
    pad_limits(ax, xs, ys)
    ax.set_xlabel("K")
    ax.set_ylabel("max nodes outside the giant component")
    ax.legend()
    written = save(fig, out_path, raster=raster)
    return fig, written


def _parse_theory(path):
    doc = load_json_sidecar(path)
    if isinstance(doc, dict):
        return doc.get("label", "theoretical bound"), doc["points"]
    return "theoretical bound", doc


def _run(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--csv", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--theory", help='JSON [[k, bound], ...] or {"label", "points"}')
    parser.add_argument("--raster", action="store_true", help="default to png instead of svg")
    args = parser.parse_args(argv)
    theory = _parse_theory(args.theory) if args.theory else None
    _, written = render_outside_giant(args.csv, args.out, theory, raster=args.raster)
    print(written)


def main(argv=None) -> int:
    return run_script(_run, argv)


if __name__ == "__main__":
    sys.exit(main())
