"""Uniform node deletion and the induced residual graph on survivors.

Deletion draws its randomness from its own seed, independent of the seed
that produced the graph, so one sampled graph can be re-deleted
reproducibly.  Survivors keep their original 1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .graphs import BaselineGraph, KOutGraph
from .seeding import check_seed

__all__ = ["DeletionSpec", "ResidualGraph", "delete_uniform", "delete_explicit"]


@dataclass(eq=False)
class DeletionSpec:
    """How many nodes to delete: an exact count or a fraction of n.

    Fraction mode realizes gamma = round(alpha * n) with banker's rounding
    (Python ``round``).  ``seed`` may be None in templates; it must be set
    before the spec is used to draw a deletion set.
    """

    mode: str  # "count" | "fraction"
    value: float
    seed: int | None = None

    def realized_gamma(self, n: int) -> int:
        if self.mode == "count":
            gamma = int(self.value)
            if gamma != self.value or gamma < 0 or gamma > n:
                raise InvalidParameterError(f"count must be an integer in [0, n], got {self.value}")
            return gamma
        if self.mode == "fraction":
            alpha = float(self.value)
            if not 0.0 < alpha < 1.0:
                raise InvalidParameterError(f"fraction must be in (0, 1), got {alpha}")
            return round(alpha * n)
        raise InvalidParameterError(f"unknown deletion mode: {self.mode!r}")


@dataclass(eq=False)
class ResidualGraph:
    """Induced subgraph on the survivors of a deletion.

    ``deleted`` and ``survivors`` are sorted 1-based label arrays that
    partition {1..parent_n}; ``edges`` are the parent edges joining two
    survivors, in the parent's canonical form.
    """

    parent_n: int
    deleted: np.ndarray
    survivors: np.ndarray
    edges: np.ndarray

    @property
    def survivor_count(self) -> int:
        return len(self.survivors)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, label: int) -> np.ndarray:
        """Sorted surviving neighbors of a surviving 1-based label."""
        pos = np.searchsorted(self.survivors, label)
        if pos == len(self.survivors) or self.survivors[pos] != label:
            raise InvalidParameterError(f"label {label} is not a survivor")
        mask_u = self.edges[:, 0] == label
        mask_v = self.edges[:, 1] == label
        return np.sort(np.concatenate([self.edges[mask_u, 1], self.edges[mask_v, 0]]))


def _induce(graph: KOutGraph | BaselineGraph, deleted: np.ndarray) -> ResidualGraph:
    n = graph.n
    alive = np.ones(n + 1, dtype=bool)  # 1-based occupancy, slot 0 unused
    alive[0] = False
    alive[deleted] = False
    survivors = np.nonzero(alive)[0].astype(np.int64)
    edges = graph.edges
    keep = alive[edges[:, 0]] & alive[edges[:, 1]]
    return ResidualGraph(
        parent_n=n,
        deleted=np.sort(deleted).astype(np.int64),
        survivors=survivors,
        edges=edges[keep],
    )


def delete_uniform(graph: KOutGraph | BaselineGraph, spec: DeletionSpec) -> ResidualGraph:
    """Delete an exactly uniform gamma-subset of the nodes and return the
    induced residual graph."""
    gamma = spec.realized_gamma(graph.n)
    if spec.seed is None:
        raise InvalidParameterError("DeletionSpec.seed must be set for delete_uniform")
    rng = np.random.default_rng(check_seed(spec.seed))
    deleted = rng.permutation(graph.n)[:gamma].astype(np.int64) + 1
    return _induce(graph, deleted)


def delete_explicit(graph: KOutGraph | BaselineGraph, node_set) -> ResidualGraph:
    """Delete exactly the given 1-based labels."""
    deleted = np.unique(np.asarray(sorted(node_set), dtype=np.int64))
    if len(deleted) and (deleted[0] < 1 or deleted[-1] > graph.n):
        raise InvalidParameterError(f"labels outside [1, {graph.n}]")
    return _induce(graph, deleted)
