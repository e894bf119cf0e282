#!/usr/bin/env python3
# Reproduce the connectivity-transition experiment at reduced scale: sweep K
# for two deletion fractions, write the results CSV, and (when the figures
# package is installed) render the probability curves with their thresholds.
#
# The full-scale version of this run uses n=5000 and 1000 trials per cell;
# that only changes the numbers below, not the shape of the curves.

import json
from pathlib import Path

from kout import DeletionSpec, ExperimentConfig, r1, run_sweep

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

n, trials = 1000, 200
k_values = list(range(1, 13))

csv_paths = []
for alpha in (0.3, 0.5):
    config = ExperimentConfig(
        model="kout",
        n=n,
        k_values=k_values,
        deletion=DeletionSpec(mode="fraction", value=alpha),
        trials=trials,
        master_seed=2026,
    )
    result = run_sweep(config)
    path = out_dir / f"transition_alpha{int(alpha * 10):02d}.csv"
    result.write_csv(str(path))
    csv_paths.append((alpha, path))
    ks = [row.k for row in result.rows]
    ps = [row.prob_connected for row in result.rows]
    print(f"alpha={alpha}: threshold r1 = {r1(alpha, n):.2f}")
    for k, p in zip(ks, ps):
        bar = "#" * round(40 * p)
        print(f"  K={k:2d}  P(connected)={p:5.3f} {bar}")
    print()

# merge the two sweeps into one CSV (the contract is one row per cell, so
# files concatenate by dropping the duplicate header)
merged = out_dir / "transition_merged.csv"
lines = csv_paths[0][1].read_text().splitlines()
for _, path in csv_paths[1:]:
    lines += path.read_text().splitlines()[1:]
merged.write_text("\n".join(lines) + "\n")

sidecar = out_dir / "transition_thresholds.json"
sidecar.write_text(
    json.dumps([{"label": f"r1({a})", "value": r1(a, n)} for a, _ in csv_paths])
)
print(f"wrote {merged} and {sidecar}")

try:
    from koutfigs import render_connectivity
except ImportError:
    print("koutfigs not installed; skipping the figure")
else:
    overlay = [(f"r1({a})", r1(a, n)) for a, _ in csv_paths]
    _, figure_path = render_connectivity(str(merged), str(out_dir / "transition.svg"), overlay)
    print(f"figure: {figure_path}")
