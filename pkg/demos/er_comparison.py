#!/usr/bin/env python3
# K-out vs Erdos-Renyi at matched mean degree (p = 2K/n), under the same
# node deletions: the paired sweep, the outside-giant comparison figure, and
# a theoretical outside-giant curve from inverting the giant-size threshold.

import json
import math
from pathlib import Path

from kout import DeletionSpec, ExperimentConfig, compare_er, run_sweep

out_dir = Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

# -- paired comparison, a fraction of nodes deleted -------------------------
n, gamma_frac, trials = 1000, 0.4, 200
config = ExperimentConfig(
    model="both",
    n=n,
    k_values=[3, 4, 5, 6, 7, 8],
    deletion=DeletionSpec(mode="fraction", value=gamma_frac),
    trials=trials,
    master_seed=414,
)
result = compare_er(config)
cmp_csv = out_dir / "er_comparison.csv"
result.write_csv(str(cmp_csv))

print(f"max nodes outside the giant, n={n}, {int(gamma_frac * n)} deleted, {trials} trials")
print("  K   kout    er")
kout_rows = {r.k: r for r in result.rows if r.model == "kout"}
er_rows = {r.k: r for r in result.rows if r.model == "er"}
for k in sorted(kout_rows):
    print(f"  {k:2d}  {kout_rows[k].max_outside_giant:5d} {er_rows[k].max_outside_giant:5d}")

# -- sublinear deletion with a theoretical outside-giant curve --------------
# inverting the giant threshold 1 + log(1 + gamma/lam)/(log 2 + 1/2) = K
# gives the largest outside-giant count permitted at a given K:
#     lam(K) = gamma / (exp((K - 1)(log 2 + 1/2)) - 1)
gamma = 50
k_values = [2, 3, 4, 5]
sweep = run_sweep(
    ExperimentConfig(
        model="kout",
        n=5000,
        k_values=k_values,
        deletion=DeletionSpec(mode="count", value=gamma),
        trials=trials,
        master_seed=415,
    )
)
giant_csv = out_dir / "outside_giant.csv"
sweep.write_csv(str(giant_csv))

c = math.log(2) + 0.5
theory_points = [[k, gamma / (math.exp(c * (k - 1)) - 1)] for k in k_values]
sidecar = out_dir / "outside_giant_theory.json"
sidecar.write_text(json.dumps({"label": "threshold inversion", "points": theory_points}))

print(f"\nsublinear case: n=5000, gamma={gamma}")
print("  K   observed max   theory bound")
for row, (k, bound) in zip(sweep.rows, theory_points):
    print(f"  {row.k:2d}  {row.max_outside_giant:12d}   {bound:10.1f}")

try:
    from koutfigs import render_comparison, render_outside_giant
except ImportError:
    print("\nkoutfigs not installed; skipping figures")
else:
    _, p1 = render_comparison(str(cmp_csv), str(out_dir / "er_comparison.svg"))
    _, p2 = render_outside_giant(
        str(giant_csv),
        str(out_dir / "outside_giant.svg"),
        ("threshold inversion", [(k, v) for k, v in theory_points]),
    )
    print(f"\nfigures: {p1}, {p2}")
