"""Exact probabilities for tiny instances by exhaustive enumeration.

Because the model's law is invariant under relabeling the nodes, the deleted
set can be fixed (by default to the last gamma labels) instead of averaged
over; and because picks made by deleted nodes never produce residual edges,
only the survivors' selection sets are enumerated.  Every survivor profile
has equal weight, so the result is an exact rational count over
C(n-1, k)^(n-gamma) outcomes.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from fractions import Fraction
from itertools import product

from .errors import InstanceTooLargeError, InvalidParameterError

__all__ = ["unrank_subset", "exact_event_probability", "exact_probability", "GUARD_PROFILES"]

GUARD_N = 7
GUARD_PROFILES = 10**7


def unrank_subset(pool: Sequence[int], k: int, rank: int) -> tuple[int, ...]:
    """The rank-th k-subset of ``pool`` in lexicographic order.

    Combinadic unranking: matches the order of ``itertools.combinations``.
    """
    m = len(pool)
    if not 0 <= k <= m:
        raise InvalidParameterError(f"k must be in [0, {m}], got {k}")
    total = math.comb(m, k)
    if not 0 <= rank < total:
        raise InvalidParameterError(f"rank must be in [0, {total}), got {rank}")
    out = []
    lo = 0
    for slots in range(k, 0, -1):
        for pos in range(lo, m - slots + 1):
            below = math.comb(m - pos - 1, slots - 1)
            if rank < below:
                out.append(pool[pos])
                lo = pos + 1
                break
            rank -= below
    return tuple(out)


def _component_sizes(adj: dict[int, set[int]], survivors: tuple[int, ...]) -> list[int]:
    seen: set[int] = set()
    sizes = []
    for s in survivors:
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        sizes.append(size)
    return sizes


def exact_event_probability(
    n: int,
    k: int,
    gamma: int,
    event: Callable[[dict[int, set[int]], tuple[int, ...]], bool],
    deleted: Sequence[int] | None = None,
) -> Fraction:
    """Exact probability of ``event(residual_adjacency, survivors)`` under
    exhaustive enumeration of all survivor selection profiles.

    ``deleted`` fixes the deleted labels explicitly (defaults to the last
    gamma labels; any choice gives the same value by exchangeability).
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need n >= 2 and 1 <= k <= n-1, got n={n} k={k}")
    if not 0 <= gamma <= n:
        raise InvalidParameterError(f"gamma must be in [0, n], got {gamma}")
    per_node = math.comb(n - 1, k)
    if n > GUARD_N or per_node**n > GUARD_PROFILES:
        raise InstanceTooLargeError(
            f"C({n - 1},{k})^{n} = {per_node**n} profiles exceeds the guard"
        )
    if deleted is None:
        deleted_set = set(range(n - gamma + 1, n + 1))
    else:
        deleted_set = set(int(d) for d in deleted)
        if len(deleted_set) != gamma or not deleted_set.issubset(range(1, n + 1)):
            raise InvalidParameterError("deleted must be gamma distinct labels in [1, n]")
    survivors = tuple(i for i in range(1, n + 1) if i not in deleted_set)

    if not survivors:
        empty: dict[int, set[int]] = {}
        return Fraction(1 if event(empty, survivors) else 0, 1)

    # per survivor: its k-subsets in lexicographic rank order, pre-restricted
    # to surviving targets (deleted targets never make residual edges)
    surv_set = set(survivors)
    effective: list[list[tuple[int, ...]]] = []
    for i in survivors:
        pool = [j for j in range(1, n + 1) if j != i]
        picks = [unrank_subset(pool, k, rank) for rank in range(per_node)]
        effective.append([tuple(j for j in pick if j in surv_set) for pick in picks])

    hits = 0
    total = per_node ** len(survivors)
    for profile in product(*effective):
        adj: dict[int, set[int]] = {i: set() for i in survivors}
        for i, picks in zip(survivors, profile):
            for j in picks:
                adj[i].add(j)
                adj[j].add(i)
        if event(adj, survivors):
            hits += 1
    return Fraction(hits, total)


def exact_probability(
    n: int,
    k: int,
    gamma: int,
    predicate: str = "connected",
    lam: int | None = None,
    deleted: Sequence[int] | None = None,
) -> Fraction:
    """Exact probability that the residual graph is connected, or that
    fewer than ``lam`` survivors sit outside its largest component."""
    if predicate == "connected":

        def event(adj, survivors):
            sizes = _component_sizes(adj, survivors)
            return len(sizes) <= 1

    elif predicate == "outside_giant_lt":
        if lam is None or lam < 1:
            raise InvalidParameterError("outside_giant_lt needs lam >= 1")

        def event(adj, survivors):
            sizes = _component_sizes(adj, survivors)
            largest = max(sizes, default=0)
            return len(survivors) - largest < lam

    else:
        raise InvalidParameterError(f"unknown predicate: {predicate!r}")

    return exact_event_probability(n, k, gamma, event, deleted=deleted)
