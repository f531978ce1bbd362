"""Finite simple graphs and the structural analyses used by the classifier.

Vertices are labelled ``1..n``.  Edges are stored normalized (``u < v``) and
sorted, so the edge order doubles as the variable order of the edge ring.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when an operation's structural precondition does not hold."""


class DisconnectedGraphError(GraphError):
    def __init__(self, msg: str = "graph must be connected"):
        super().__init__(msg)


class ParseError(ValueError):
    """Base class for edge-list parse failures; carries the 1-based line number."""

    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class MalformedLineError(ParseError):
    pass


class LoopEdgeError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class VertexLabelError(ParseError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.n:
                raise GraphError(f"edge {{{u},{v}}} outside vertex range 1..{self.n}")
            norm.append((u, v))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {{{a[0]},{a[1]}}}")
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> SimpleGraph:
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges), default=1)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Map a normalized edge to its 0-based position in ``edges``."""
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError()

    def is_bipartite(self) -> bool:
        return bipartite_components(self).bipartite_count == len(self.components())

    def without_edge(self, e: Edge) -> SimpleGraph:
        e = tuple(sorted(e))
        return SimpleGraph(self.n, tuple(x for x in self.edges if x != e))

    def edge_subgraph(self, edges: Iterable[Edge]) -> SimpleGraph:
        """Subgraph on the vertices touched by ``edges``, relabelled in sorted order."""
        edges = sorted({tuple(sorted(e)) for e in edges})
        verts = sorted({v for e in edges for v in e})
        relabel = {v: i + 1 for i, v in enumerate(verts)}
        return SimpleGraph(len(verts), tuple((relabel[u], relabel[v]) for u, v in edges))

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"G(n={self.n}: {body})"


# ---------------------------------------------------------------------------
# cycles and walks

@dataclass(frozen=True)
class Cycle:
    """A simple cycle, stored as its lexicographically least rotation/reflection."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise GraphError(f"not a simple cycle: {vs}")
        object.__setattr__(self, "vertices", _least_rotation(vs))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(_norm(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def rotated_to(self, v: int) -> tuple[int, ...]:
        """The vertex sequence starting at ``v`` (closing vertex not repeated)."""
        i = self.vertices.index(v)
        return self.vertices[i:] + self.vertices[:i]

    def in_graph(self, g: SimpleGraph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _least_rotation(vs: tuple[int, ...]) -> tuple[int, ...]:
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


@dataclass(frozen=True)
class Walk:
    """A walk given by its vertex sequence ``v_1, ..., v_{k+1}``."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 1:
            raise GraphError("empty walk")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def closed(self) -> bool:
        return self.length > 0 and self.vertices[0] == self.vertices[-1]

    @property
    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(_norm(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def in_graph(self, g: SimpleGraph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges)


# ---------------------------------------------------------------------------
# parsing

_HEADER = re.compile(r"^n\s+(\S+)$")


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the ``u v`` per line edge-list format.

    ``#`` starts a comment line, blank lines are skipped, and an optional
    ``n <k>`` header fixes the vertex count (otherwise the largest label).
    """
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    n_header: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = _HEADER.match(line)
        if head:
            try:
                n_header = int(head.group(1))
            except ValueError:
                raise MalformedLineError(lineno, f"bad vertex count {head.group(1)!r}") from None
            if n_header < 1:
                raise VertexLabelError(lineno, "vertex count must be positive")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLineError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(lineno, f"non-integer label in {line!r}") from None
        if u < 1 or v < 1:
            raise VertexLabelError(lineno, f"vertex labels must be >= 1, got {line!r}")
        if u == v:
            raise LoopEdgeError(lineno, f"loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise DuplicateEdgeError(lineno, f"edge {u} {v} already given on line {seen[e]}")
        seen[e] = lineno
        edges.append(e)
    top = max((v for e in edges for v in e), default=1)
    if n_header is not None:
        if n_header < top:
            raise VertexLabelError(0, f"label {top} exceeds declared n={n_header}")
        return SimpleGraph(n_header, tuple(edges))
    return SimpleGraph(top, tuple(edges))


# ---------------------------------------------------------------------------
# bipartiteness

@dataclass(frozen=True)
class BipartiteProfile:
    component_count: int
    bipartite_count: int
    colorings: tuple[dict[int, int] | None, ...]
    odd_cycle_witnesses: tuple[Cycle | None, ...]

    @property
    def r(self) -> int:
        return self.bipartite_count


def bipartite_components(g: SimpleGraph) -> BipartiteProfile:
    colorings: list[dict[int, int] | None] = []
    witnesses: list[Cycle | None] = []
    for comp in g.components():
        root = comp[0]
        color = {root: 0}
        parent = {root: 0}
        depth = {root: 0}
        order = deque([root])
        conflict = None
        while order and conflict is None:
            x = order.popleft()
            for y in sorted(g.adjacency[x]):
                if y not in color:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    order.append(y)
                elif color[y] == color[x]:
                    conflict = (x, y)
                    break
        if conflict is None:
            colorings.append(color)
            witnesses.append(None)
            continue
        # BFS tree paths from both ends up to their common ancestor close an odd cycle
        a, b = conflict
        pa, pb = [a], [b]
        while depth[a] > depth[b]:
            a = parent[a]
            pa.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            pb.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            pa.append(a)
            pb.append(b)
        cyc = pa + list(reversed(pb[:-1]))
        colorings.append(None)
        witnesses.append(Cycle(tuple(cyc)))
    r = sum(c is not None for c in colorings)
    return BipartiteProfile(len(colorings), r, tuple(colorings), tuple(witnesses))


def cyclotomic_number(g: SimpleGraph) -> int:
    g.require_connected()
    return g.m - g.n + 1


# ---------------------------------------------------------------------------
# blocks

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[Edge, ...], ...]
    cut_vertices: frozenset[int]

    @property
    def non_edge_blocks(self) -> tuple[tuple[Edge, ...], ...]:
        return tuple(b for b in self.blocks if len(b) >= 2)

    @property
    def s(self) -> int:
        return len(self.non_edge_blocks)


def block_decomposition(g: SimpleGraph) -> BlockDecomposition:
    """Biconnected components via DFS lowpoints; bridges become one-edge blocks."""
    g.require_connected()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[tuple[Edge, ...]] = []
    stack: list[Edge] = []
    timer = 0

    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # iterative DFS: (vertex, parent, neighbour iterator)
        frames = [(root, 0, iter(sorted(g.adjacency[root])))]
        while frames:
            v, parent, it = frames[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    stack.append(_norm(v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, v, iter(sorted(g.adjacency[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    stack.append(_norm(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    top = _norm(u, v)
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == top:
                            break
                    blocks.append(tuple(sorted(block)))

    count: dict[int, int] = {}
    for b in blocks:
        for v in {x for e in b for x in e}:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, k in count.items() if k >= 2)
    blocks.sort()
    return BlockDecomposition(tuple(blocks), cuts)


def block_vertices(block: Sequence[Edge]) -> frozenset[int]:
    return frozenset(v for e in block for v in e)


def block_as_cycle(block: Sequence[Edge]) -> Cycle | None:
    """The block as a Cycle if it is one (connected, every vertex of degree 2)."""
    deg: dict[int, list[int]] = {}
    for u, v in block:
        deg.setdefault(u, []).append(v)
        deg.setdefault(v, []).append(u)
    if len(block) < 3 or any(len(ns) != 2 for ns in deg.values()):
        return None
    start = min(deg)
    seq, prev, cur = [start], None, start
    while True:
        nxt = [w for w in deg[cur] if w != prev][0] if prev is not None else min(deg[cur])
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    if len(seq) != len(deg):
        return None
    return Cycle(tuple(seq))


# ---------------------------------------------------------------------------
# cycle enumeration

def iter_cycles(g: SimpleGraph, max_length: int | None = None) -> Iterator[Cycle]:
    """Yield each simple cycle once, in its canonical (least) orientation.

    A cycle is found from its smallest vertex ``s`` through larger vertices
    only; requiring ``second < last`` discards the mirrored traversal.
    """
    if max_length is None:
        max_length = g.n
    adj = {v: sorted(g.adjacency[v]) for v in g.vertices}
    for s in g.vertices:
        path = [s]
        on_path = {s}

        def extend():
            x = path[-1]
            for y in adj[x]:
                if y == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield Cycle(tuple(path))
                elif y > s and y not in on_path and len(path) < max_length:
                    path.append(y)
                    on_path.add(y)
                    yield from extend()
                    on_path.discard(y)
                    path.pop()

        yield from extend()


def enumerate_cycles(g: SimpleGraph, max_length: int | None = None) -> list[Cycle]:
    if max_length is not None and max_length < 3:
        raise ValueError("max_length must be at least 3")
    return sorted(iter_cycles(g, max_length), key=lambda c: (c.length, c.vertices))


# ---------------------------------------------------------------------------
# subgraphs and connectors

def induced_subgraph(g: SimpleGraph, vertex_set: Iterable[int]) -> SimpleGraph:
    """Induced subgraph relabelled so the i-th smallest chosen vertex becomes i."""
    vs = sorted(set(vertex_set))
    if not vs:
        raise GraphError("empty vertex set")
    if vs[0] < 1 or vs[-1] > g.n:
        raise GraphError("vertex set not contained in 1..n")
    relabel = {v: i + 1 for i, v in enumerate(vs)}
    edges = tuple((relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel)
    return SimpleGraph(len(vs), edges)


def shortest_connector(g: SimpleGraph, a: Cycle | Iterable[int], b: Cycle | Iterable[int]) -> Walk:
    """A shortest path from some vertex of ``a`` to some vertex of ``b``."""
    va = a.vertex_set if isinstance(a, Cycle) else frozenset(a)
    vb = b.vertex_set if isinstance(b, Cycle) else frozenset(b)
    if va & vb:
        raise GraphError("the two vertex sets must be disjoint")
    parent: dict[int, int | None] = {v: None for v in sorted(va)}
    queue = deque(sorted(va))
    while queue:
        x = queue.popleft()
        if x in vb:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return Walk(tuple(reversed(path)))
        for y in sorted(g.adjacency[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    raise DisconnectedGraphError("no path joins the two vertex sets")


def two_core(g: SimpleGraph) -> set[Edge]:
    """Edges left after repeatedly deleting vertices of degree <= 1."""
    adj = {v: set(g.adjacency[v]) for v in g.vertices}
    queue = deque(v for v in adj if len(adj[v]) <= 1)
    removed: set[int] = set()
    while queue:
        v = queue.popleft()
        if v in removed:
            continue
        removed.add(v)
        for w in adj[v]:
            adj[w].discard(v)
            if len(adj[w]) <= 1 and w not in removed:
                queue.append(w)
        adj[v] = set()
    return {e for e in g.edges if e[0] not in removed and e[1] not in removed}


# named graphs used throughout tests and docs

def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def glue(*parts: Sequence[Edge]) -> SimpleGraph:
    """Union of edge lists over shared labels."""
    edges = {_norm(u, v) for part in parts for u, v in part}
    return SimpleGraph.from_edges(sorted(edges))
