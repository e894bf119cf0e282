"""Sampling of random K-out graphs and Erdos-Renyi baseline graphs.

A K-out graph on n nodes is built from a selection profile: each node i picks
a uniformly random set of k distinct other nodes, picks are mutually
independent, and the undirected edge {i, j} exists iff at least one of the
two picked the other.  Node labels are 1-based throughout the public API and
in serialized form.

All sampling is driven by ``numpy.random.Generator`` (PCG64) seeded with an
explicit 64-bit integer, so any sampled graph is a deterministic function of
its parameters and seed within a given numpy version.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, InvalidProfileError
from .seeding import check_seed

__all__ = [
    "SelectionProfile",
    "KOutGraph",
    "BaselineGraph",
    "sample_kout",
    "adjacency_from_selections",
    "sample_er",
    "graph_to_json",
    "graph_from_json",
    "write_graph",
    "load_graph",
]


@dataclass(eq=False)
class SelectionProfile:
    """The n selection sets of a K-out construction.

    ``selections`` has shape (n, k); row i holds the k distinct 1-based
    labels picked by node i+1, sorted ascending.  Rows never contain the
    picking node itself.
    """

    n: int
    k: int
    selections: np.ndarray

    def validate(self) -> None:
        n, k = self.n, self.k
        if n < 2 or not 1 <= k <= n - 1:
            raise InvalidProfileError(f"need n >= 2 and 1 <= k <= n-1, got n={n} k={k}")
        sel = self.selections
        if sel.shape != (n, k):
            raise InvalidProfileError(f"selections shape {sel.shape} != ({n}, {k})")
        if sel.min() < 1 or sel.max() > n:
            raise InvalidProfileError("selection labels outside [1, n]")
        rows = np.arange(1, n + 1, dtype=sel.dtype)[:, None]
        if np.any(sel == rows):
            raise InvalidProfileError("a node picked itself")
        s = np.sort(sel, axis=1)
        if k > 1 and np.any(s[:, 1:] == s[:, :-1]):
            raise InvalidProfileError("duplicate labels within a selection set")


class _AdjacencyMixin:
    """Sorted-neighbor-list access backed by a lazily built CSR structure."""

    def _csr(self):
        cached = getattr(self, "_csr_cache", None)
        if cached is None:
            cached = _edges_to_csr(self.n, self.edges)
            self._csr_cache = cached
        return cached

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, label: int) -> np.ndarray:
        """Sorted 1-based neighbor labels of the given 1-based node label."""
        if not 1 <= label <= self.n:
            raise InvalidParameterError(f"label {label} outside [1, {self.n}]")
        indptr, indices = self._csr()
        return indices[indptr[label - 1] : indptr[label]]

    def degrees(self) -> np.ndarray:
        """Array of shape (n,); entry i is the degree of label i+1."""
        indptr, _ = self._csr()
        return np.diff(indptr)


@dataclass(eq=False)
class KOutGraph(_AdjacencyMixin):
    """Undirected graph induced by a selection profile.

    ``edges`` has shape (edge_count, 2) with 1-based labels, u < v per row,
    rows in lexicographic order (the canonical form).
    """

    n: int
    k: int
    profile: SelectionProfile
    edges: np.ndarray
    seed: int | None = None


@dataclass(eq=False)
class BaselineGraph(_AdjacencyMixin):
    """Erdos-Renyi G(n, p) comparison graph, same edge representation."""

    n: int
    p: float
    edges: np.ndarray
    seed: int | None = None


def _edges_to_csr(n: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if len(edges) == 0:
        return np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int64)
    both = np.concatenate([edges, edges[:, ::-1]])
    order = np.lexsort((both[:, 1], both[:, 0]))
    both = both[order]
    counts = np.bincount(both[:, 0] - 1, minlength=n)
    indptr = np.concatenate([[0], np.cumsum(counts)])
    return indptr, both[:, 1].copy()


def _selection_codes(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    """(n, k) matrix of per-row-distinct codes drawn uniformly from {0..n-2}.

    Code c in row i stands for node c if c < i else c+1 (0-based), i.e. the
    c-th element of {0..n-1} minus {i}; distinct codes <=> distinct picks.
    """
    m = n - 1
    if k == m:
        return np.broadcast_to(np.arange(m, dtype=np.int64), (n, m)).copy()
    if k * (k - 1) <= m:
        # collisions within a row are rare; redraw offending rows until none
        # remain (exact: conditioning iid draws on distinctness is uniform)
        codes = rng.integers(0, m, size=(n, k), dtype=np.int64)
        while True:
            s = np.sort(codes, axis=1)
            bad = np.nonzero((s[:, 1:] == s[:, :-1]).any(axis=1))[0]
            if bad.size == 0:
                return codes
            codes[bad] = rng.integers(0, m, size=(bad.size, k), dtype=np.int64)
    if n <= 4096:
        # dense k: per-row Fisher-Yates shuffle, keep the first k entries
        pool = np.tile(np.arange(m, dtype=np.int64), (n, 1))
        return rng.permuted(pool, axis=1)[:, :k]
    # large n with k > ~sqrt(n): row-by-row Floyd sampling
    codes = np.empty((n, k), dtype=np.int64)
    for i in range(n):
        chosen: set[int] = set()
        for j in range(m - k, m):
            t = int(rng.integers(0, j + 1))
            chosen.add(j if t in chosen else t)
        codes[i] = sorted(chosen)
    return codes


def _profile_from_codes(n: int, k: int, codes: np.ndarray) -> SelectionProfile:
    rows = np.arange(n, dtype=np.int64)[:, None]
    labels = np.where(codes < rows, codes, codes + 1) + 1  # to 1-based
    labels.sort(axis=1)
    return SelectionProfile(n=n, k=k, selections=labels)


def _edges_from_selections(profile: SelectionProfile) -> np.ndarray:
    n, k = profile.n, profile.k
    pickers = np.repeat(np.arange(1, n + 1, dtype=np.int64), k)
    picked = profile.selections.ravel().astype(np.int64)
    u = np.minimum(pickers, picked)
    v = np.maximum(pickers, picked)
    pair_ids = np.unique(u * (n + 1) + v)  # dedupes mutual picks
    return np.column_stack([pair_ids // (n + 1), pair_ids % (n + 1)])


def sample_kout(n: int, k: int, seed: int) -> KOutGraph:
    """Sample a random K-out graph on n nodes, deterministic in (n, k, seed).

    Each node's selection set is an exactly uniform k-subset of the other
    n-1 nodes, the n sets mutually independent.
    """
    if n < 2:
        raise InvalidParameterError(f"n must be >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"k must satisfy 1 <= k <= n-1, got k={k} n={n}")
    rng = np.random.default_rng(check_seed(seed))
    profile = _profile_from_codes(n, k, _selection_codes(rng, n, k))
    return KOutGraph(n=n, k=k, profile=profile, edges=_edges_from_selections(profile), seed=seed)


def adjacency_from_selections(profile: SelectionProfile) -> KOutGraph:
    """Build the undirected graph whose edges are pairs where at least one
    endpoint picked the other.  Mutual picks yield a single edge."""
    profile.validate()
    return KOutGraph(
        n=profile.n,
        k=profile.k,
        profile=profile,
        edges=_edges_from_selections(profile),
        seed=None,
    )


def _sample_distinct(rng: np.random.Generator, total: int, m: int) -> np.ndarray:
    """Uniform m-subset of {0..total-1}, returned sorted ascending."""
    if m >= total:
        return np.arange(total, dtype=np.int64)
    if m == 0:
        return np.empty(0, dtype=np.int64)
    if 3 * m >= total:
        return np.sort(rng.permutation(total)[:m].astype(np.int64))
    # sparse case: the first m distinct values of an iid uniform stream form
    # a uniform m-subset; batches keep first-occurrence order
    picked: list[np.ndarray] = []
    have = 0
    while have < m:
        need = m - have
        batch = rng.integers(0, total, size=need + need // 8 + 16, dtype=np.int64)
        uniq, first = np.unique(batch, return_index=True)
        fresh = uniq[np.argsort(first)]
        if picked:
            fresh = fresh[~np.isin(fresh, np.concatenate(picked))]
        fresh = fresh[:need]
        picked.append(fresh)
        have += len(fresh)
    return np.sort(np.concatenate(picked))


def sample_er(n: int, p: float, seed: int) -> BaselineGraph:
    """Sample G(n, p): every unordered pair is an edge independently with
    probability p.  Deterministic in (n, p, seed)."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"p must be in [0, 1], got {p}")
    rng = np.random.default_rng(check_seed(seed))
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        m = 0
    elif p == 1.0:
        m = total
    else:
        # edge count is Binomial(total, p); given m, present edges are a
        # uniform m-subset of all pairs -- together exactly G(n, p)
        m = int(rng.binomial(total, p))
    idx = _sample_distinct(rng, total, m)
    # decode pair index -> (u, v), 0-based, lex order over u < v
    offsets = np.arange(n - 1, dtype=np.int64) * (n - 1) - (
        np.arange(n - 1, dtype=np.int64) * (np.arange(n - 1) - 1)
    ) // 2
    u = np.searchsorted(offsets, idx, side="right") - 1
    v = idx - offsets[u] + u + 1
    edges = np.column_stack([u + 1, v + 1]).astype(np.int64)
    return BaselineGraph(n=n, p=p, edges=edges, seed=seed)


# -- serialization ----------------------------------------------------------
# Graph files carry the generative description only; adjacency is recomputed
# on load (from selections for kout, from (n, p, seed) for er).


def graph_to_json(graph: KOutGraph | BaselineGraph) -> dict:
    if isinstance(graph, KOutGraph):
        return {
            "model": "kout",
            "n": graph.n,
            "k": graph.k,
            "seed": graph.seed,
            "selections": graph.profile.selections.tolist(),
        }
    if isinstance(graph, BaselineGraph):
        return {"model": "er", "n": graph.n, "p": graph.p, "seed": graph.seed}
    raise TypeError(f"not a serializable graph: {type(graph).__name__}")


def graph_from_json(doc: dict) -> KOutGraph | BaselineGraph:
    model = doc.get("model")
    if model == "kout":
        n, k = int(doc["n"]), int(doc["k"])
        sel = np.asarray(doc["selections"], dtype=np.int64)
        if sel.ndim != 2:
            raise InvalidProfileError("selections must be an array of arrays")
        graph = adjacency_from_selections(SelectionProfile(n=n, k=k, selections=sel))
        graph.seed = doc.get("seed")
        return graph
    if model == "er":
        seed = doc.get("seed")
        if seed is None:
            raise InvalidParameterError("er graph file must carry a seed")
        return sample_er(int(doc["n"]), float(doc["p"]), int(seed))
    raise InvalidParameterError(f"unknown graph model: {model!r}")


def write_graph(graph: KOutGraph | BaselineGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json(graph), fh, separators=(",", ":"))
        fh.write("\n")


def load_graph(path: str) -> KOutGraph | BaselineGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))
