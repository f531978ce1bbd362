from __future__ import annotations

import pytest

from edgering.graph import SimpleGraph, complete_bipartite, cycle_graph, glue


def bowtie() -> SimpleGraph:
    return SimpleGraph.from_edges([(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)])


def triangles_with_path(ell: int) -> SimpleGraph:
    """Two disjoint triangles joined by a path with ``ell`` edges."""
    edges = [(1, 2), (2, 3), (1, 3)]
    prev = 3
    nxt = 4
    for _ in range(ell):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    edges += [(prev, nxt), (nxt, nxt + 1), (prev, nxt + 1)]
    return SimpleGraph.from_edges(edges)


def c6_c6_glued() -> SimpleGraph:
    a = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]
    b = [(1, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 1)]
    return glue(a, b)


def k23_plus_pendant() -> SimpleGraph:
    g = complete_bipartite(2, 3)
    return SimpleGraph(g.n + 1, g.edges + ((g.n, g.n + 1),))


def petersen() -> SimpleGraph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return SimpleGraph.from_edges(outer + spokes + inner)


@pytest.fixture
def c6():
    return cycle_graph(6)
