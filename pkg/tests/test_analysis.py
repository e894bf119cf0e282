import json
from itertools import combinations

import numpy as np
import pytest

from kout.analysis import _sizes_sparse, _sizes_unionfind, components, is_connected
from kout.deletion import DeletionSpec, delete_explicit, delete_uniform
from kout.graphs import BaselineGraph, SelectionProfile, adjacency_from_selections, sample_er, sample_kout


def graph_from_edges(n, pairs):
    edges = np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2)
    return BaselineGraph(n=n, p=0.0, edges=edges, seed=None)


def test_path_graph_connected():
    summary = components(graph_from_edges(3, [(1, 2), (2, 3)]))
    assert summary.component_count == 1
    assert summary.largest == 3
    assert summary.connected


def test_edgeless_graph():
    summary = components(graph_from_edges(3, []))
    assert summary.component_count == 3
    assert summary.largest == 1
    assert summary.outside_giant == 2
    assert not summary.connected


def test_residual_from_deletion_example():
    prof = SelectionProfile(4, 1, np.array([[2], [1], [4], [3]]))
    res = delete_explicit(adjacency_from_selections(prof), {4})
    summary = components(res)
    assert summary.component_sizes == [2, 1]
    assert summary.outside_giant == 1
    assert not summary.connected


def test_empty_and_singleton_conventions():
    g = sample_kout(4, 1, 0)
    empty = delete_explicit(g, {1, 2, 3, 4})
    s = components(empty)
    assert (s.component_count, s.largest, s.outside_giant, s.connected) == (0, 0, 0, True)
    single = delete_explicit(g, {1, 2, 3})
    s = components(single)
    assert (s.survivor_count, s.connected) == (1, True)


def test_is_connected_examples():
    assert is_connected(graph_from_edges(3, [(1, 2), (1, 3), (2, 3)]))
    assert not is_connected(graph_from_edges(4, [(1, 2), (3, 4)]))


def test_summary_fields_sum():
    for seed in range(10):
        g = sample_er(60, 0.03, seed)
        s = components(g)
        assert sum(s.component_sizes) == s.survivor_count == 60
        assert s.component_sizes == sorted(s.component_sizes, reverse=True)
        assert s.outside_giant == s.survivor_count - s.largest
        assert s.connected == (s.component_count <= 1)


def test_two_implementations_agree():
    # disjoint-set forest vs scipy breadth-first traversal, 1000 random graphs
    rng = np.random.default_rng(0)
    for trial in range(1000):
        n = int(rng.integers(1, 65))
        model = trial % 2
        if model and n >= 2:
            g = sample_kout(n, int(rng.integers(1, n)), int(rng.integers(2**32)))
        else:
            g = sample_er(n, float(rng.uniform(0, 0.2)), int(rng.integers(2**32)))
        a = _sizes_unionfind(n, g.edges - 1)
        b = _sizes_sparse(n, g.edges - 1)
        assert np.array_equal(a, b)


def test_large_graph_uses_same_semantics():
    # the scipy path (survivors > 64) against the union-find reference
    g = sample_er(300, 0.005, 9)
    summary = components(g)
    ref = _sizes_unionfind(300, g.edges - 1)
    assert summary.component_sizes == [int(x) for x in ref]


def test_adding_edges_never_increases_component_count():
    rng = np.random.default_rng(3)
    for _ in range(40):
        n = int(rng.integers(3, 30))
        g = sample_er(n, 0.08, int(rng.integers(2**32)))
        base = components(g).component_count
        present = {(int(u), int(v)) for u, v in g.edges}
        candidates = [e for e in combinations(range(1, n + 1), 2) if e not in present]
        for extra in candidates[:8]:
            bigger = graph_from_edges(n, present | {extra})
            assert components(bigger).component_count <= base


def has_cut_in_range(res, lo, hi):
    """Exhaustive cut search: some survivor subset with size in [lo, hi] and
    no edges to its complement."""
    survivors = [int(x) for x in res.survivors]
    edges = [(int(u), int(v)) for u, v in res.edges]
    m = len(survivors)
    for size in range(lo, hi + 1):
        for subset in combinations(survivors, size):
            inside = set(subset)
            if not any((u in inside) != (v in inside) for u, v in edges):
                return True
    return False


def test_no_cut_implies_small_outside_giant():
    # if no cut of size in [x, m-x] exists, fewer than x survivors are
    # outside the largest component
    rng = np.random.default_rng(11)
    checked = 0
    for _ in range(60):
        n = int(rng.integers(4, 11))
        g = sample_kout(n, int(rng.integers(1, 3)), int(rng.integers(2**32)))
        gamma = int(rng.integers(0, n - 3))
        res = delete_uniform(g, DeletionSpec(mode="count", value=gamma, seed=int(rng.integers(2**32))))
        m = res.survivor_count
        for x in (1, 2, 3):
            if 3 * x > m:  # the implication requires x <= floor(m/3)
                continue
            if not has_cut_in_range(res, x, m - x):
                checked += 1
                assert components(res).outside_giant < x
    assert checked > 30


def test_summary_serializes_with_exact_field_names():
    s = components(graph_from_edges(3, [(1, 2)]))
    doc = json.loads(json.dumps(s.to_dict()))
    assert list(doc) == [
        "survivor_count",
        "component_count",
        "component_sizes",
        "largest",
        "outside_giant",
        "connected",
    ]


def test_rejects_non_graph():
    with pytest.raises(TypeError):
        components([1, 2, 3])
