"""Structural decision procedures for linear resolutions of edge rings.

Clause order is fixed: polynomial ring, then 2-linear, then q-linear with
q >= 3; the first clause that fires gives the verdict.  Tree appendages are
allowed in every clause (they only add bridge blocks).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .graph import (
    Cycle,
    SimpleGraph,
    block_as_cycle,
    block_decomposition,
    enumerate_cycles,
    shortest_connector,
    two_core,
)
from .polytope import InvariantError

POLYNOMIAL_RING = "polynomial-ring"
TWO_LINEAR = "2-linear"
Q_LINEAR = "q-linear"
NONE = "none"


@dataclass(frozen=True)
class HypersurfaceShape:
    case: str  # "a" | "b" | "c"
    blocks: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class Classification:
    verdict: str
    case: str | None = None
    q: int | None = None
    evidence: dict[str, Any] = field(default_factory=dict, compare=False)

    def __str__(self) -> str:
        if self.verdict == POLYNOMIAL_RING:
            return f"polynomial ring (case {self.case})"
        if self.verdict == TWO_LINEAR:
            return f"2-linear (case {self.case}, delta={self.evidence['delta']})"
        if self.verdict == Q_LINEAR:
            return f"q-linear (q={self.q}, case {self.case})"
        return "no linear resolution"


def simplex_case(g: SimpleGraph) -> str | None:
    """``"a"`` for a tree, ``"b"`` for a unicyclic graph whose cycle is odd."""
    g.require_connected()
    if g.m == g.n - 1:
        return "a"
    if g.m == g.n and not g.is_bipartite():
        return "b"
    return None


def _theta_parts(block) -> tuple[Cycle, list[Cycle]] | None:
    """For a theta block (two branch vertices of degree 3, rest degree 2), its cycles."""
    deg: dict[int, int] = {}
    for u, v in block:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    branch = [v for v, k in deg.items() if k == 3]
    if len(branch) != 2 or any(k not in (2, 3) for k in deg.values()):
        return None
    sub = SimpleGraph.from_edges(block)
    return enumerate_cycles(sub, sub.n)


def _odd_theta_even_cycle(block) -> Cycle | None:
    """The even cycle of a non-bipartite theta block, or None if the block is not one."""
    cycles = _theta_parts(block)
    if cycles is None or len(cycles) != 3:
        return None
    even = [c for c in cycles if c.is_even]
    if len(even) != 1:
        return None  # all three even means bipartite
    return even[0]


def hypersurface_case(g: SimpleGraph) -> HypersurfaceShape | None:
    """Codimension-one graphs, recognised from their non-edge blocks.

    Cross-checked against the edge count (``m = n`` bipartite, ``n + 1``
    otherwise); a disagreement raises :class:`InvariantError`.
    """
    g.require_connected()
    bd = block_decomposition(g)
    big = bd.non_edge_blocks
    shape = None
    if len(big) == 1:
        cyc = block_as_cycle(big[0])
        if cyc is not None and cyc.is_even:
            shape = HypersurfaceShape("a", big)
        elif cyc is None and _odd_theta_even_cycle(big[0]) is not None:
            shape = HypersurfaceShape("b", big)
    elif len(big) == 2:
        cycs = [block_as_cycle(b) for b in big]
        if all(c is not None for c in cycs) and any(not c.is_even for c in cycs):
            shape = HypersurfaceShape("c", big)
    by_count = g.m == (g.n if g.is_bipartite() else g.n + 1)
    if by_count != (shape is not None):
        raise InvariantError(f"edge-count test ({by_count}) and block test ({shape}) disagree on {g}")
    return shape


def _k2_delta(core: SimpleGraph) -> int | None:
    """delta if ``core`` is exactly K_{2,delta} (delta >= 2), else None."""
    k = core.n
    if k < 4 or core.m != 2 * (k - 2):
        return None
    for a, b in combinations(core.vertices, 2):
        if core.has_edge(a, b):
            continue
        rest = [v for v in core.vertices if v not in (a, b)]
        if all(core.adjacency[v] == {a, b} for v in rest):
            return k - 2
    return None


def _clause_i_delta(g: SimpleGraph) -> int | None:
    core_edges = two_core(g)
    if not core_edges:
        return None
    return _k2_delta(g.edge_subgraph(core_edges))


def classify_two_linear(g: SimpleGraph) -> tuple[str, int] | None:
    """``("i", delta)`` for trees hung on K_{2,delta}; ``("ii", delta)`` for one extra edge making it non-bipartite."""
    g.require_connected()
    delta = _clause_i_delta(g)
    if delta is not None:
        return "i", delta
    if g.is_bipartite():
        return None
    for e in g.edges:
        h = g.without_edge(e)
        if not h.is_connected():
            continue
        delta = _clause_i_delta(h)
        if delta is not None:
            return "ii", delta
    return None


def classify_q_linear(g: SimpleGraph) -> tuple[int, str, dict[str, Any]] | None:
    """``(q, clause, evidence)`` when one of the q >= 3 clauses holds; q comes from the structure."""
    g.require_connected()
    big = block_decomposition(g).non_edge_blocks
    if len(big) == 1:
        cyc = block_as_cycle(big[0])
        if cyc is not None:
            if cyc.is_even and cyc.length >= 6:
                return cyc.length // 2, "i", {"cycle": cyc.vertices}
            return None
        even = _odd_theta_even_cycle(big[0])
        if even is not None and even.length >= 6:
            return even.length // 2, "ii", {"even_cycle": even.vertices, "block": big[0]}
        return None
    if len(big) != 2:
        return None
    c1, c2 = (block_as_cycle(b) for b in big)
    if c1 is None or c2 is None:
        return None
    if c1.is_even != c2.is_even:
        even, odd = (c1, c2) if c1.is_even else (c2, c1)
        if even.length >= 6:
            return even.length // 2, "iii", {"even_cycle": even.vertices, "odd_cycle": odd.vertices}
        return None
    if c1.is_even:
        return None
    r1, r2 = c1.length, c2.length
    if c1.vertex_set & c2.vertex_set:
        q = (r1 + r2) // 2
        return q, "iv", {"r1": r1, "r2": r2, "ell": 0, "cycles": (c1.vertices, c2.vertices)}
    ell = shortest_connector(g, c1, c2).length
    q = (r1 + r2) // 2 + ell
    return q, "v", {"r1": r1, "r2": r2, "ell": ell, "cycles": (c1.vertices, c2.vertices)}


def classify(g: SimpleGraph) -> Classification:
    g.require_connected()
    bd = block_decomposition(g)
    base = {"s": bd.s, "blocks": [list(b) for b in bd.non_edge_blocks],
            "cut_vertices": sorted(bd.cut_vertices), "tree_appendages": len(bd.blocks) - bd.s}
    case = simplex_case(g)
    if case is not None:
        return Classification(POLYNOMIAL_RING, case, None, base)
    two = classify_two_linear(g)
    if two is not None:
        return Classification(TWO_LINEAR, two[0], 2, {**base, "delta": two[1]})
    ql = classify_q_linear(g)
    if ql is not None:
        q, clause, ev = ql
        if hypersurface_case(g) is None:
            raise InvariantError(f"q-linear clause {clause} fired on a non-hypersurface {g}")
        return Classification(Q_LINEAR, clause, q, {**base, **ev, "q": q})
    return Classification(NONE, None, None, base)
