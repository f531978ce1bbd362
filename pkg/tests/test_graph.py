from __future__ import annotations

import networkx as nx
import pytest

from edgering.graph import (
    Cycle,
    DisconnectedGraphError,
    DuplicateEdgeError,
    GraphError,
    LoopEdgeError,
    MalformedLineError,
    SimpleGraph,
    VertexLabelError,
    Walk,
    bipartite_components,
    block_as_cycle,
    block_decomposition,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    cyclotomic_number,
    enumerate_cycles,
    induced_subgraph,
    parse_edge_list,
    path_graph,
    shortest_connector,
    two_core,
)
from edgering.oracle import enumerate_connected_graphs

from conftest import bowtie, petersen, triangles_with_path


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_parse_basic_and_header():
    g = parse_edge_list("# triangle\n1 2\n\n2 3\n3 1\n")
    assert g.n == 3 and g.edges == ((1, 2), (1, 3), (2, 3))
    g = parse_edge_list("n 5\n1 2\n")
    assert g.n == 5 and g.m == 1


@pytest.mark.parametrize("text, exc, line", [
    ("1 2\n2 2\n", LoopEdgeError, 2),
    ("1 2\n2 1\n", DuplicateEdgeError, 2),
    ("1 2 3\n", MalformedLineError, 1),
    ("a b\n", MalformedLineError, 1),
    ("0 1\n", VertexLabelError, 1),
    ("n x\n", MalformedLineError, 1),
])
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_header_smaller_than_labels():
    with pytest.raises(VertexLabelError):
        parse_edge_list("n 2\n1 3\n")


def test_roundtrip_text():
    g = petersen()
    assert parse_edge_list(g.to_text()) == g


def test_constructor_validation():
    with pytest.raises(GraphError):
        SimpleGraph(3, ((1, 1),))
    with pytest.raises(GraphError):
        SimpleGraph(2, ((1, 3),))
    with pytest.raises(GraphError):
        SimpleGraph(3, ((1, 2), (2, 1)))


def test_disconnected_message():
    g = parse_edge_list("1 2\n3 4\n")
    with pytest.raises(DisconnectedGraphError, match="graph must be connected"):
        g.require_connected()


def test_bipartite_profile():
    assert bipartite_components(cycle_graph(6)).r == 1
    assert bipartite_components(cycle_graph(5)).r == 0
    prof = bipartite_components(parse_edge_list("1 2\n3 4\n4 5\n5 3\n"))
    assert prof.component_count == 2 and prof.bipartite_count == 1 and prof.r == 1


def test_bipartite_agrees_with_networkx():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            assert g.is_bipartite() == nx.is_bipartite(to_nx(g))


def test_cyclotomic_number():
    assert cyclotomic_number(path_graph(5)) == 0
    assert cyclotomic_number(complete_graph(4)) == 3
    assert cyclotomic_number(petersen()) == 6


def test_blocks_match_networkx():
    for n in range(2, 7):
        for g in enumerate_connected_graphs(n):
            bd = block_decomposition(g)
            ours = sorted(tuple(sorted(b)) for b in bd.blocks)
            theirs = sorted(
                tuple(sorted(tuple(sorted(e)) for e in comp))
                for comp in nx.biconnected_component_edges(to_nx(g))
            )
            assert ours == theirs
            assert bd.cut_vertices == set(nx.articulation_points(to_nx(g)))


def test_bowtie_blocks():
    bd = block_decomposition(bowtie())
    assert bd.s == 2 and bd.cut_vertices == {1}
    assert all(block_as_cycle(b).length == 3 for b in bd.non_edge_blocks)


def test_cycle_counts_match_networkx():
    for g in [complete_graph(5), complete_bipartite(3, 3), petersen()]:
        ours = enumerate_cycles(g)
        theirs = list(nx.simple_cycles(to_nx(g)))
        assert len(ours) == len(theirs)
        assert sorted(c.length for c in ours) == sorted(len(c) for c in theirs)


def test_enumerate_cycles_length_cap():
    assert [c.length for c in enumerate_cycles(complete_graph(4), 3)] == [3, 3, 3, 3]


def test_cycle_normal_form():
    assert Cycle((3, 2, 1)) == Cycle((1, 2, 3))
    c = Cycle((4, 1, 2, 3))
    assert c.vertices[0] == 1 and c.is_even and c.parity == "even"
    assert c.rotated_to(3)[0] == 3
    with pytest.raises(GraphError):
        Cycle((1, 2))


def test_walk():
    w = Walk((1, 2, 3, 1))
    assert w.closed and w.length == 3
    assert w.in_graph(complete_graph(3))


def test_induced_subgraph():
    h = induced_subgraph(complete_graph(5), [2, 4, 5])
    assert h.n == 3 and h.m == 3


def test_shortest_connector():
    g = triangles_with_path(2)
    c1, c2 = enumerate_cycles(g)
    assert shortest_connector(g, c1, c2).length == 2
    with pytest.raises(GraphError):
        shortest_connector(g, c1, c1)


def test_two_core():
    g = parse_edge_list("1 2\n2 3\n3 1\n3 4\n4 5\n")
    assert two_core(g) == {(1, 2), (1, 3), (2, 3)}
    assert two_core(path_graph(4)) == set()
