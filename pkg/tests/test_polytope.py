from __future__ import annotations

from fractions import Fraction

import pytest

from edgering.graph import GraphError, SimpleGraph, complete_bipartite, complete_graph, cycle_graph, path_graph
from edgering.oracle import enumerate_connected_graphs
from edgering.polytope import (
    codegree_by_search,
    contains,
    cycle_polytope,
    delta_from_counts,
    delta_polynomial,
    edge_polytope,
    even_cycle_interior_witness,
    interior_witness,
    lattice_point_count,
    relint_contains,
)
from edgering.graph import Cycle

from conftest import bowtie


def test_dimension_formula():
    assert edge_polytope(complete_graph(3)).dim == 2
    assert edge_polytope(cycle_graph(4)).dim == 2
    assert edge_polytope(path_graph(2)).dim == 0
    assert edge_polytope(complete_bipartite(2, 3)).dim == 3


def test_edgeless_rejected():
    with pytest.raises(GraphError):
        edge_polytope(SimpleGraph(1, ()))


def test_membership():
    p = edge_polytope(complete_graph(3))
    assert contains(p, (1, 1, 0))
    assert contains(p, (Fraction(2, 3),) * 3)
    assert not contains(p, (2, 0, 0))
    assert contains(p, (2, 2, 2), t=3)
    assert relint_contains(p, (Fraction(2, 3),) * 3)
    assert not relint_contains(p, (1, 1, 0))


def test_kernel_matches_lp_counts():
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            p = edge_polytope(g)
            for t in (1, 2):
                assert lattice_point_count(p, t) == lattice_point_count(p, t, method="lp")


def test_lattice_counts_small():
    p = edge_polytope(complete_graph(3))
    assert [lattice_point_count(p, t) for t in (1, 2, 3)] == [3, 6, 10]
    p = edge_polytope(cycle_graph(4))
    assert [lattice_point_count(p, t) for t in (1, 2, 3)] == [4, 9, 16]


def test_delta_from_counts():
    # unit square: L(t) = (t+1)^2
    assert delta_from_counts([1, 4, 9], 2) == (1, 1, 0)


@pytest.mark.parametrize("g, delta, degree, codegree", [
    (complete_graph(3), (1,), 0, 3),
    (cycle_graph(4), (1, 1), 1, 2),
    (cycle_graph(6), (1, 1, 1), 2, 3),
    (cycle_graph(8), (1, 1, 1, 1), 3, 4),
    (complete_bipartite(2, 3), (1, 2), 1, 3),
    (bowtie(), (1, 1, 1), 2, 3),
])
def test_delta_values(g, delta, degree, codegree):
    dp = delta_polynomial(edge_polytope(g), check_point=True)
    assert dp.trimmed == delta
    assert dp.degree == degree and dp.codegree == codegree
    assert codegree_by_search(edge_polytope(g)) == codegree


def test_delta_str():
    assert str(delta_polynomial(edge_polytope(cycle_graph(4)))) == "δ = (1, 1)"


@pytest.mark.parametrize("k", [4, 6, 8])
def test_even_cycle_witness(k):
    c = Cycle(tuple(range(1, k + 1)))
    x, r = even_cycle_interior_witness(c)
    assert x == (1,) * k and r == k // 2
    assert relint_contains(cycle_polytope(c), x, r)
    # nothing lies inside at a smaller dilation
    assert interior_witness(cycle_polytope(c), r - 1) is None


def test_odd_cycle_has_no_witness():
    with pytest.raises(GraphError):
        even_cycle_interior_witness(Cycle((1, 2, 3)))
