from __future__ import annotations

import itertools

import networkx as nx
import pytest

from edgering import oracle
from edgering.graph import SimpleGraph, complete_bipartite, cycle_graph
from edgering.oracle import (
    FAIL,
    PASS,
    Limits,
    canonical_code,
    consistency_suite,
    degree_monotonicity_pairs,
    enumerate_connected_graphs,
    replay,
    sweep,
)
from edgering.toric import minimal_generators

from conftest import bowtie, c6_c6_glued


def brute_force_classes(n):
    """Connected labelled graphs deduplicated by a permutation-minimum code."""
    pairs = list(itertools.combinations(range(n), 2))
    codes = set()
    for mask in range(1 << len(pairs)):
        edges = [(i + 1, j + 1) for k, (i, j) in enumerate(pairs) if mask >> k & 1]
        g = SimpleGraph(n, tuple(edges))
        if not g.is_connected():
            continue
        best = None
        for perm in itertools.permutations(range(n)):
            adj = {(min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in ((u - 1, v - 1) for u, v in edges)}
            code = 0
            for j in range(1, n):
                for i in range(j):
                    code = code << 1 | ((i, j) in adj)
            best = code if best is None else min(best, code)
        codes.add(best)
    return codes


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    ours = {canonical_code(g) for g in enumerate_connected_graphs(n)}
    assert ours == brute_force_classes(n)


def test_enumeration_counts_against_atlas():
    atlas = [0] * 8
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            atlas[h.number_of_nodes()] += 1
    ours = [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 8)]
    assert ours == atlas[1:] == [1, 1, 2, 6, 21, 112, 853]


def test_enumeration_is_isomorphism_free_n6():
    graphs = list(enumerate_connected_graphs(6))
    nxg = [nx.Graph(list(g.edges)) for g in graphs]
    for a, b in itertools.combinations(range(len(graphs)), 2):
        if graphs[a].m == graphs[b].m and sorted(d for _, d in nxg[a].degree) == sorted(d for _, d in nxg[b].degree):
            assert not nx.is_isomorphic(nxg[a], nxg[b])


def test_enumeration_range():
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(0))
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(9))


@pytest.mark.parametrize("g", [complete_bipartite(2, 3), bowtie(), c6_c6_glued(), cycle_graph(6)])
def test_suite_passes_on_named_graphs(g):
    results = consistency_suite(g)
    assert all(r.status != FAIL for r in results), [r for r in results if r.status == FAIL]


def test_c6_c6_has_two_cubics():
    prof = minimal_generators(c6_c6_glued())
    assert prof.codimension == 2 and prof.degrees == [3, 3]


def test_skips_are_not_passes():
    results = {r.name: r.status for r in consistency_suite(c6_c6_glued())}
    # n = 11 is above the default polytope cap
    assert results["ehrhart-sanity"] == "skip"
    assert results["codegree-agreement"] == "skip"


@pytest.mark.parametrize("n_max, total", [(4, 10), (5, 31)])
def test_sweep_small(n_max, total):
    report = sweep(n_max)
    assert report.total_graphs == total and report.ok


def test_sweep_deterministic():
    assert sweep(5).to_json() == sweep(5).to_json()


def test_sweep_parallel_matches_serial():
    assert sweep(5, workers=2).to_json() == sweep(5).to_json()


def test_sweep_range():
    with pytest.raises(ValueError):
        sweep(9)


def test_failure_certificate_replays(monkeypatch):
    def broken(cx):
        return (FAIL, "too many edges") if cx.g.m >= 4 else (PASS, "")

    monkeypatch.setitem(oracle.CHECKS, "toy", broken)
    report = sweep(4, Limits())
    assert not report.ok
    assert report.checks["toy"][FAIL] == 4  # C_4, paw, diamond, K_4
    for f in report.failures:
        assert replay(f["graph"], f["check"]).status == FAIL


def test_degree_monotonicity_sample():
    graphs = [g for n in range(3, 6) for g in enumerate_connected_graphs(n)]
    pairs = degree_monotonicity_pairs(graphs, samples=30, seed=1)
    assert len(pairs) == 30
    for g, h, dg, dh in pairs:
        assert h.is_connected() and h.m < g.m
        assert dh <= dg
