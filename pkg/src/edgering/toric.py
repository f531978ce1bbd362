"""Toric ideal of the edge ring: walk binomials and minimal generators.

Variables ``y_1..y_m`` follow the canonical edge order of the graph.  A
binomial ``y^u - y^v`` lies in ``I_G`` iff ``A u = A v`` for the incidence
matrix ``A``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Sequence

from . import kernels
from .errors import BudgetExceeded
from .graph import GraphError, SimpleGraph, Walk, bipartite_components, enumerate_cycles

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Binomial:
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @classmethod
    def from_monomials(cls, u: Sequence[int], v: Sequence[int]) -> Binomial:
        """Reduce to lowest terms and orient so ``plus`` is the lex-greater monomial."""
        common = [min(a, b) for a, b in zip(u, v)]
        u = tuple(a - c for a, c in zip(u, common))
        v = tuple(b - c for b, c in zip(v, common))
        if u < v:
            u, v = v, u
        return cls(u, v)

    @property
    def degree(self) -> int:
        return sum(self.plus)

    @property
    def trivial(self) -> bool:
        return self.plus == self.minus

    def multidegree(self, g: SimpleGraph) -> tuple[int, ...]:
        return _apply_incidence(g, self.plus)

    def in_ideal(self, g: SimpleGraph) -> bool:
        return _apply_incidence(g, self.plus) == _apply_incidence(g, self.minus)

    def __str__(self) -> str:
        if self.trivial:
            return "0"
        return f"{_monomial_str(self.plus)} - {_monomial_str(self.minus)}"


def _monomial_str(u: Sequence[int]) -> str:
    parts = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"y{i}")
        elif a > 1:
            parts.append(f"y{i}^{a}")
    return "*".join(parts) or "1"


def _apply_incidence(g: SimpleGraph, u: Sequence[int]) -> tuple[int, ...]:
    b = [0] * g.n
    for (x, y), a in zip(g.edges, u):
        b[x - 1] += a
        b[y - 1] += a
    return tuple(b)


def parse_binomial(text: str, m: int) -> Binomial:
    """Inverse of ``str(Binomial)`` for ``m`` variables."""
    def mono(s):
        vec = [0] * m
        for f in s.strip().split("*"):
            name, _, power = f.partition("^")
            vec[int(name.strip()[1:]) - 1] += int(power) if power else 1
        return vec

    left, right = text.split(" - ")
    return Binomial.from_monomials(mono(left), mono(right))


@dataclass(frozen=True)
class GeneratorProfile:
    generators: tuple[Binomial, ...]
    codimension: int
    complete: bool
    max_degree: int
    scanned_degree: int  # every degree up to this one was fully scanned
    monomials_scanned: int = 0

    @property
    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(b.degree for b in self.generators).items()))

    @property
    def degrees(self) -> list[int]:
        return sorted(b.degree for b in self.generators)


def codimension(g: SimpleGraph) -> int:
    g.require_connected()
    return g.m - g.n + bipartite_components(g).r


def walk_binomial(g: SimpleGraph, w: Walk) -> Binomial:
    """``prod y_odd - prod y_even`` of an even closed walk, in lowest terms."""
    if not w.closed:
        raise GraphError("walk is not closed")
    if w.length % 2:
        raise GraphError(f"walk has odd length {w.length}")
    u = [0] * g.m
    v = [0] * g.m
    for k, (a, b) in enumerate(w.edges):
        if not g.has_edge(a, b):
            raise GraphError(f"walk uses non-edge {{{a},{b}}}")
        (u if k % 2 == 0 else v)[g.index_of(a, b)] += 1
    return Binomial.from_monomials(u, v)


def _canonical_closed(seq: Sequence[int]) -> tuple[int, ...]:
    """Least rotation/reflection of a cyclic vertex sequence (closing vertex dropped)."""
    k = len(seq)
    best = None
    for s in (list(seq), list(reversed(seq))):
        for i in range(k):
            rot = tuple(s[i:] + s[:i])
            if best is None or rot < best:
                best = rot
    return best


def _paths_between(g: SimpleGraph, a: int, b: int, avoid: frozenset[int], max_len: int) -> list[list[int]]:
    """Simple paths a..b whose interior avoids ``avoid``."""
    out = []
    path = [a]

    def rec():
        x = path[-1]
        if len(path) - 1 >= max_len:
            return
        for y in sorted(g.adjacency[x]):
            if y == b:
                out.append(path + [b])
            elif y not in avoid and y not in path:
                path.append(y)
                rec()
                path.pop()

    rec()
    return out


def primitive_walk_candidates(g: SimpleGraph, max_degree: int) -> list[Walk]:
    """Even closed walks of length <= 2*max_degree of the three minimal-generator shapes.

    (i) even cycles; (ii) two odd cycles sharing exactly one vertex; (iii) two
    vertex-disjoint odd cycles ``C, C'`` plus two paths ``v -> v'`` and
    ``v' -> v`` (``v`` on ``C``, ``v'`` on ``C'``) whose interiors avoid both
    cycles and which together visit no vertex more than twice.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    limit = 2 * max_degree
    cycles = enumerate_cycles(g, min(g.n, limit)) if g.n >= 3 else []
    seen: set[tuple[int, ...]] = set()
    walks: list[Walk] = []

    def add(seq: list[int]):
        if len(seq) > limit or len(seq) % 2:
            return
        key = _canonical_closed(seq)
        if key not in seen:
            seen.add(key)
            walks.append(Walk(key + (key[0],)))

    odd = [c for c in cycles if not c.is_even]
    for c in cycles:
        if c.is_even:
            add(list(c.vertices))
    for i, c in enumerate(odd):
        for c2 in odd[i + 1:]:
            if c.length + c2.length > limit:
                continue
            shared = c.vertex_set & c2.vertex_set
            if len(shared) == 1:
                (v,) = shared
                add(list(c.rotated_to(v)) + list(c2.rotated_to(v)))
            elif not shared:
                avoid = c.vertex_set | c2.vertex_set
                budget = limit - c.length - c2.length
                if budget < 2:
                    continue
                for v, v2 in product(sorted(c.vertex_set), sorted(c2.vertex_set)):
                    paths = _paths_between(g, v, v2, avoid, budget - 1)
                    for p1 in paths:
                        for p2 in paths:
                            if (len(p1) + len(p2) - 2) % 2 or len(p1) + len(p2) - 2 > budget:
                                continue
                            inner = Counter(p1[1:-1]) + Counter(p2[1:-1])
                            if any(k > 2 for k in inner.values()):
                                continue
                            seq = (list(c.rotated_to(v)) + p1[:-1]
                                   + list(c2.rotated_to(v2)) + list(reversed(p2))[:-1])
                            add(seq)
    walks.sort(key=lambda w: (w.length, w.vertices))
    return walks


def minimal_generators(g: SimpleGraph, max_degree: int | None = None, budget: int = DEFAULT_BUDGET) -> GeneratorProfile:
    """A minimal binomial generating set of ``I_G`` in degrees ``<= max_degree``.

    Degree by degree, every fiber ``{u : A u = b, |u| = d}`` is split into the
    classes that generators of degree < d connect.  Those classes are
    exactly the components of "shares a variable": a lower-degree move
    ``u -> v`` leaves a common factor of positive degree, and conversely two
    monomials with a common variable ``y_e`` reduce to the degree d-1 fiber of
    ``b - rho(e)``, already connected.  Each fiber with ``k`` classes needs
    ``k - 1`` new generators; class ``i > 0`` is joined to the class holding
    the lex-least element, each class represented by its lex-least member.

    Minimal generators have degree at most ``n`` (each is a walk binomial
    visiting every vertex at most twice), so ``complete`` holds once all
    degrees up to ``n`` were scanned.  Default ``max_degree`` is ``n + 1``.
    """
    g.require_connected()
    codim = g.m - g.n + bipartite_components(g).r
    if max_degree is None:
        max_degree = g.n + 1
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    edges0 = [(u - 1, v - 1) for u, v in g.edges]
    gens: list[Binomial] = []
    scanned = 1
    monomials = 0
    if g.m >= 2:
        for d in range(2, max_degree + 1):
            try:
                total, _, split = kernels.fiber_components(g.n, edges0, d, budget)
            except BudgetExceeded:
                break
            monomials += total
            for _, mins in split:
                root = mins[0]
                for other in mins[1:]:
                    gens.append(Binomial.from_monomials(root, other))
            scanned = d
    else:
        scanned = max_degree
    complete = g.m < 2 or scanned >= g.n
    return GeneratorProfile(tuple(gens), codim, complete, max_degree, scanned, monomials)


def eg_lower_bound(c: int, q: int) -> int:
    """Least possible number of generators of an ideal of codimension ``c`` with a ``q``-linear resolution."""
    if c < 1:
        raise ValueError("codimension must be positive")
    return comb(c + q - 1, c - 1)
