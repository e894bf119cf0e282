"""Connected-component decomposition and the statistics measured on it:
connectivity, largest-component size, and nodes outside the giant component.

Graphs with zero or one node count as connected (the vacuous corners keep
the connectivity probability total; neither occurs in the models' regimes).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _scipy_cc

from .deletion import ResidualGraph
from .graphs import BaselineGraph, KOutGraph

__all__ = ["ComponentSummary", "components", "is_connected"]

# below this many nodes a pure-python union-find beats the scipy call
_SMALL = 64


@dataclass
class ComponentSummary:
    survivor_count: int
    component_count: int
    component_sizes: list[int]  # descending
    largest: int
    outside_giant: int
    connected: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _graph_arrays(graph) -> tuple[int, np.ndarray]:
    """Node count and 0-based compact edge array for any graph type."""
    if isinstance(graph, ResidualGraph):
        m = graph.survivor_count
        if graph.edge_count == 0:
            return m, np.empty((0, 2), dtype=np.int64)
        # survivors are sorted, so searchsorted is an exact label->index map
        compact = np.searchsorted(graph.survivors, graph.edges)
        return m, compact
    if isinstance(graph, (KOutGraph, BaselineGraph)):
        return graph.n, graph.edges - 1
    raise TypeError(f"not a graph: {type(graph).__name__}")


def _sizes_unionfind(m: int, edges: np.ndarray) -> np.ndarray:
    """Component sizes via a disjoint-set forest (path halving + size union)."""
    parent = list(range(m))
    size = [1] * m

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges.tolist():
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
    return np.array(sorted((size[i] for i in range(m) if find(i) == i), reverse=True))


def _sizes_sparse(m: int, edges: np.ndarray) -> np.ndarray:
    """Component sizes via scipy's breadth-first traversal."""
    if len(edges) == 0:
        return np.ones(m, dtype=np.int64)
    data = np.ones(len(edges), dtype=np.int8)
    adj = coo_matrix((data, (edges[:, 0], edges[:, 1])), shape=(m, m))
    _, labels = _scipy_cc(adj, directed=False)
    return np.sort(np.bincount(labels))[::-1]


def _summary_from_sizes(m: int, sizes: np.ndarray) -> ComponentSummary:
    if m == 0:
        return ComponentSummary(0, 0, [], 0, 0, True)
    largest = int(sizes[0])
    return ComponentSummary(
        survivor_count=m,
        component_count=len(sizes),
        component_sizes=[int(s) for s in sizes],
        largest=largest,
        outside_giant=m - largest,
        connected=len(sizes) <= 1,
    )


def components(graph) -> ComponentSummary:
    """Exact component decomposition of a residual or whole graph."""
    m, edges = _graph_arrays(graph)
    if m == 0:
        return _summary_from_sizes(0, np.empty(0, dtype=np.int64))
    sizes = _sizes_unionfind(m, edges) if m <= _SMALL else _sizes_sparse(m, edges)
    return _summary_from_sizes(m, sizes)


def is_connected(graph) -> bool:
    return components(graph).connected
