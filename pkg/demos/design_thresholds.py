#!/usr/bin/env python3
# The design view: how large must K be so the graph survives gamma failures?
# Evaluates the four threshold functions, the integer-K helper, and the
# union bound on disconnection probability.

from kout import ThresholdQuery, min_k, r1, r2, r3, r4, resolve_threshold, union_bound_pz

print("connectivity thresholds, n = 5000, a fraction alpha of nodes deleted")
for alpha in (0.1, 0.3, 0.5, 0.8):
    query = ThresholdQuery(goal="connectivity", n=5000, alpha=alpha)
    decision = resolve_threshold(query)
    print(f"  alpha={alpha}: r1={r1(alpha, 5000):6.3f}  -> choose K >= {decision.k}")

print("\nconnectivity thresholds, n = 50000, a fixed count gamma deleted")
for gamma in (10, 100, 1000, 2000):
    decision = resolve_threshold(ThresholdQuery(goal="connectivity", n=50000, gamma=gamma))
    shown = f"r2={r2(gamma):6.3f}" if decision.regime == "sublinear-log" else "below sqrt(n)"
    print(f"  gamma={gamma:5d}: {shown}  regime={decision.regime:15s} -> K >= {decision.k}")

print("\ngiant-component goals (allow lam nodes outside the giant)")
print(f"  gamma=250, lam=250, n=50000: r3={r3(250, 250):.3f} -> K >= "
      f"{min_k(ThresholdQuery(goal='giant', n=50000, gamma=250, lam=250))}")
print(f"  alpha=0.4, lam=200, n=5000:  r4={r4(0.4, 200, 5000):.3f} -> K >= "
      f"{min_k(ThresholdQuery(goal='giant', n=5000, alpha=0.4, lam=200))}")

# a cautious designer can add slack on top of the recommendation
cautious = min_k(ThresholdQuery(goal="connectivity", n=50000, gamma=1000, slack=1))
print(f"\nwith one unit of slack at gamma=1000: K >= {cautious}")

print("\nunion bound on disconnection probability, n=5000, half the nodes deleted")
print("  K   bound")
for k in (8, 10, 12, 15, 20):
    report = union_bound_pz(5000, k, 2500)
    flag = " (clamped)" if report.clamped else ""
    print(f"  {k:2d}  {report.pz_bound:.3e}{flag}")

report = union_bound_pz(200, 2, 40, include_terms=True)
heaviest = max(range(len(report.per_r_terms)), key=report.per_r_terms.__getitem__)
print(f"\nn=200, K=2, gamma=40: bound={report.pz_bound:.4f}; "
      f"the r={heaviest + 1} cut size dominates the sum")
