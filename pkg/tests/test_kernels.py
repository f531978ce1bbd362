from __future__ import annotations

import itertools
import random

import pytest

from edgering import _pykernels, kernels
from edgering.errors import BudgetExceeded
from edgering.graph import complete_graph, cycle_graph
from edgering.oracle import enumerate_connected_graphs

from conftest import bowtie, petersen

compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")


def edges0(g):
    return [(u - 1, v - 1) for u, v in g.edges]


def bitmasks(g):
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return adj


def brute_canonical(n, adj):
    best = None
    for perm in itertools.permutations(range(n)):
        code = 0
        for j in range(1, n):
            for i in range(j):
                code = code << 1 | (adj[perm[i]] >> perm[j] & 1)
        if best is None or code < best:
            best = code
    return best


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")


def test_composition_count():
    assert _pykernels.composition_count(3, 2, 1) == 3
    assert _pykernels.composition_count(4, 4, 2) == 19


@pytest.mark.parametrize("impl", ["python", pytest.param("compiled", marks=compiled)])
def test_canonical_form_matches_brute_force(impl):
    mod = getattr(kernels, impl)
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 6)
        adj = [0] * n
        for i, j in itertools.combinations(range(n), 2):
            if rng.random() < 0.5:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        code, perm = mod.canonical_form(n, adj)
        assert code == brute_canonical(n, adj)
        assert sorted(perm) == list(range(n))


@compiled
def test_fiber_components_agree():
    for g in [cycle_graph(6), bowtie(), complete_graph(4), complete_graph(5)]:
        for d in range(2, g.n + 2):
            a = kernels.compiled.fiber_components(g.n, edges0(g), d, 10**8)
            b = kernels.python.fiber_components(g.n, edges0(g), d, 10**8)
            assert a == b


@compiled
def test_lattice_count_agree():
    for g in [cycle_graph(5), complete_graph(4), bowtie(), petersen()]:
        for t in range(1, 4):
            assert kernels.compiled.lattice_count(g.n, edges0(g), t, 10**8) == \
                kernels.python.lattice_count(g.n, edges0(g), t, 10**8)


@compiled
def test_canonical_form_agree_on_all_small_graphs():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            adj = bitmasks(g)
            assert kernels.compiled.canonical_form(n, adj)[0] == kernels.python.canonical_form(n, adj)[0]


def test_budget():
    with pytest.raises(BudgetExceeded) as info:
        kernels.fiber_components(10, edges0(petersen()), 6, 100)
    assert info.value.budget == 100
    with pytest.raises(BudgetExceeded):
        kernels.lattice_count(10, edges0(petersen()), 5, 100)


def test_degree_vector_feasible():
    tri = edges0(complete_graph(3))
    assert kernels.degree_vector_feasible((1, 1, 0), tri)
    assert kernels.degree_vector_feasible((2, 1, 1), tri)
    assert not kernels.degree_vector_feasible((3, 1, 0), tri)
    c4 = edges0(cycle_graph(4))
    # vertices 1 and 3 are opposite in C_4, so weight only there is not a degree vector
    assert not kernels.degree_vector_feasible((1, 0, 1, 0), c4)
