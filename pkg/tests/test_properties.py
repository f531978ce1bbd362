from __future__ import annotations

import os
import subprocess
import sys

from hypothesis import given, settings, strategies as st

from edgering.classify import classify, hypersurface_case
from edgering.graph import SimpleGraph, block_decomposition, cyclotomic_number, parse_edge_list
from edgering.oracle import canonical_code
from edgering.polytope import delta_polynomial, edge_polytope
from edgering.toric import Binomial, minimal_generators, parse_binomial


@st.composite
def connected_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    edges = set()
    # random spanning tree first, then extra edges
    for v in range(2, n + 1):
        edges.add((draw(st.integers(1, v - 1)), v))
    extra = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=8))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return SimpleGraph(n, tuple(edges))


@st.composite
def relabelled(draw, max_n=7):
    g = draw(connected_graphs(max_n))
    perm = draw(st.permutations(range(1, g.n + 1)))
    h = SimpleGraph(g.n, tuple((perm[u - 1], perm[v - 1]) for u, v in g.edges))
    return g, h


@settings(max_examples=80, deadline=None)
@given(relabelled())
def test_invariants_under_relabelling(pair):
    g, h = pair
    assert canonical_code(g) == canonical_code(h)
    a, b = classify(g), classify(h)
    assert (a.verdict, a.case, a.q) == (b.verdict, b.case, b.q)
    assert minimal_generators(g).degree_histogram == minimal_generators(h).degree_histogram


@settings(max_examples=60, deadline=None)
@given(connected_graphs(6))
def test_hypersurface_iff_one_generator(g):
    prof = minimal_generators(g)
    has_shape = hypersurface_case(g) is not None
    assert has_shape == (prof.codimension == 1) == (len(prof.generators) == 1)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(6))
def test_delta_sanity(g):
    if g.m == 0:
        return
    p = edge_polytope(g)
    dp = delta_polynomial(p, check_point=True)
    assert dp.coefficients[0] == 1
    if p.dim >= 1:
        assert dp.coefficients[1] == g.m - p.dim - 1
    assert sum(dp.coefficients) >= 1


@settings(max_examples=60, deadline=None)
@given(connected_graphs(7))
def test_structure_counts(g):
    bd = block_decomposition(g)
    assert sum(len(b) for b in bd.blocks) == g.m
    assert cyclotomic_number(g) == g.m - g.n + 1
    assert parse_edge_list(g.to_text()) == g


@given(st.integers(1, 6).flatmap(lambda m: st.tuples(
    st.lists(st.integers(0, 3), min_size=m, max_size=m),
    st.lists(st.integers(0, 3), min_size=m, max_size=m))))
def test_binomial_string_roundtrip(uv):
    u, v = uv
    b = Binomial.from_monomials(u, v)
    if not b.trivial and any(b.plus) and any(b.minus):
        assert parse_binomial(str(b), len(u)) == b


def test_pure_python_fallback_selected():
    env = dict(os.environ, EDGERING_PURE_PYTHON="1")
    code = ("from edgering import kernels; from edgering.toric import minimal_generators; "
            "from edgering.graph import cycle_graph; "
            "print(kernels.BACKEND, minimal_generators(cycle_graph(6)).degrees)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "[3]"]
