"""Edge polytopes: exact membership, Ehrhart counts and delta-polynomials.

Everything here is exact (ints and Fractions).  Membership in ``tP`` is an
LP over the edge weights; lattice-point counting uses the compiled
degree-vector kernel and can be switched to the LP route for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import kernels, lp
from .graph import Cycle, GraphError, SimpleGraph, bipartite_components
from .errors import BudgetExceeded

RationalPoint = tuple[Fraction, ...]

DEFAULT_BUDGET = 10**8


class InvariantError(AssertionError):
    """An internal consistency check failed; the computed data cannot be trusted."""


@dataclass(frozen=True)
class EdgePolytope:
    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_vectors: tuple[tuple[int, ...], ...]
    dim: int

    @property
    def m(self) -> int:
        return len(self.vertex_vectors)


@dataclass(frozen=True)
class EhrhartTable:
    counts: tuple[int, ...]  # L(0), L(1), ..., L(T)

    @property
    def max_dilation(self) -> int:
        return len(self.counts) - 1


@dataclass(frozen=True)
class DeltaPolynomial:
    coefficients: tuple[int, ...]
    dim: int
    ehrhart: EhrhartTable

    @property
    def degree(self) -> int:
        return max(i for i, c in enumerate(self.coefficients) if c)

    @property
    def codegree(self) -> int:
        return self.dim + 1 - self.degree

    @property
    def trimmed(self) -> tuple[int, ...]:
        """Coefficients up to the degree, without trailing zeros."""
        return self.coefficients[: self.degree + 1]

    def __str__(self) -> str:
        return "δ = (" + ", ".join(str(c) for c in self.trimmed) + ")"


def _affine_rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return -1
    base = vectors[0]
    rows = [[Fraction(a - b) for a, b in zip(v, base)] for v in vectors[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rank += 1
    return rank


def edge_polytope(g: SimpleGraph) -> EdgePolytope:
    g.require_connected()
    if g.m == 0:
        raise GraphError("the edge polytope of an edgeless graph is empty")
    vecs = []
    for u, v in g.edges:
        x = [0] * g.n
        x[u - 1] = x[v - 1] = 1
        vecs.append(tuple(x))
    formula = g.n - bipartite_components(g).r - 1
    rank = _affine_rank(vecs)
    if formula != rank:
        raise InvariantError(f"dim formula gives {formula} but affine rank is {rank} for {g}")
    return EdgePolytope(g.n, g.edges, tuple(vecs), formula)


def _as_point(x: Sequence) -> RationalPoint:
    return tuple(Fraction(a) for a in x)


def _membership_system(p: EdgePolytope, x: Sequence, t) -> tuple[list[list[int]], list[Fraction]]:
    if len(x) != p.n:
        raise ValueError(f"point has length {len(x)}, expected {p.n}")
    A = [[vec[i] for vec in p.vertex_vectors] for i in range(p.n)]
    A.append([1] * p.m)
    return A, list(_as_point(x)) + [Fraction(t)]


def contains(p: EdgePolytope, x: Sequence, t=1) -> bool:
    """Is ``x`` in ``t P``, i.e. ``x = sum lam_e rho(e)`` with ``lam >= 0``, ``sum lam = t``?"""
    A, b = _membership_system(p, x, t)
    return lp.solve(A, b).feasible


def relint_contains(p: EdgePolytope, x: Sequence, t=1) -> bool:
    """Is ``x`` in the relative interior of ``t P``?

    Uses relint(conv V) = {sum lam_v v : all lam_v > 0, sum lam_v = 1}, which
    holds when V is the full vertex set.  Every rho(e) is a vertex of P_G
    (no 0/1 vector with two ones is a convex combination of others), so it
    suffices to maximize eps subject to lam_e = eps + mu_e, mu >= 0.
    """
    A, b = _membership_system(p, x, t)
    # columns: mu_1..mu_m, eps
    A = [row + [sum(row)] for row in A]
    cost = [0] * p.m + [1]
    res = lp.solve(A, b, cost)
    return res.status == "optimal" and res.value > 0 or res.status == "unbounded"


def _kernel_edges(p: EdgePolytope) -> list[tuple[int, int]]:
    return [(u - 1, v - 1) for u, v in p.edges]


def lattice_points(p: EdgePolytope, t: int, budget: int = DEFAULT_BUDGET):
    """Yield the integer points of ``tP`` (LP route; small cases only)."""
    if t < 1:
        raise ValueError("dilation must be a positive integer")
    total = kernels.composition_count(p.n, 2 * t, t)
    if total > budget:
        raise BudgetExceeded(f"lattice enumeration at t={t}", total, budget)
    x = [0] * p.n

    def rec(i, left):
        if i == p.n - 1:
            if left <= t:
                x[i] = left
                if contains(p, x, t):
                    yield tuple(x)
            return
        for k in range(max(0, left - t * (p.n - 1 - i)), min(t, left) + 1):
            x[i] = k
            yield from rec(i + 1, left - k)

    yield from rec(0, 2 * t)


def lattice_point_count(p: EdgePolytope, t: int, budget: int = DEFAULT_BUDGET, method: str = "kernel") -> int:
    """``|tP ∩ Z^n|``.

    Candidates are the ``x`` with ``0 <= x_i <= t`` and ``sum x = 2t``.
    ``method="kernel"`` filters them with the degree-vector flow test,
    ``method="lp"`` with :func:`contains`.
    """
    if t < 1:
        raise ValueError("dilation must be a positive integer")
    if method == "lp":
        return sum(1 for _ in lattice_points(p, t, budget))
    if method != "kernel":
        raise ValueError(f"unknown method {method!r}")
    return kernels.lattice_count(p.n, _kernel_edges(p), t, budget)


def ehrhart_table(p: EdgePolytope, max_dilation: int, budget: int = DEFAULT_BUDGET,
                  method: str = "kernel") -> EhrhartTable:
    counts = [1] + [lattice_point_count(p, t, budget, method) for t in range(1, max_dilation + 1)]
    return EhrhartTable(tuple(counts))


def delta_from_counts(counts: Sequence[int], dim: int) -> tuple[int, ...]:
    return tuple(
        sum((-1) ** j * comb(dim + 1, j) * counts[i - j] for j in range(i + 1))
        for i in range(dim + 1)
    )


def delta_polynomial(p: EdgePolytope, budget: int = DEFAULT_BUDGET, method: str = "kernel",
                     check_point: bool = False) -> DeltaPolynomial:
    """The delta-vector from ``L(0..d)``; ``check_point`` also verifies polynomiality at ``d+1``."""
    d = p.dim
    table = ehrhart_table(p, max(1, d + 1 if check_point else d), budget, method)
    L = table.counts
    delta = delta_from_counts(L, d)
    if any(c < 0 for c in delta) or delta[0] != 1:
        raise InvariantError(f"delta-vector {delta} violates nonnegativity for {p.edges}")
    if L[1] != p.m:
        raise InvariantError(f"L(1) = {L[1]} but the polytope has {p.m} vertices")
    if check_point:
        diff = sum((-1) ** j * comb(d + 1, j) * L[d + 1 - j] for j in range(d + 2))
        if diff != 0:
            raise InvariantError(f"(d+1)-st difference of L is {diff}, not 0")
    return DeltaPolynomial(delta, d, table)


def _interior_candidates(n: int, r: int):
    """Points with ``sum = 2r`` and ``1 <= x_i <= r`` (interior points of rP_G cover every vertex)."""
    x = [0] * n

    def rec(i, left):
        if i == n - 1:
            if 1 <= left <= r:
                x[i] = left
                yield tuple(x)
            return
        for k in range(max(1, left - r * (n - 1 - i)), min(r, left - (n - 1 - i)) + 1):
            x[i] = k
            yield from rec(i + 1, left - k)

    yield from rec(0, 2 * r)


def interior_witness(p: EdgePolytope, r: int) -> tuple[int, ...] | None:
    edges = _kernel_edges(p)
    for x in _interior_candidates(p.n, r):
        if kernels.degree_vector_feasible(x, edges) and relint_contains(p, x, r):
            return x
    return None


def codegree_by_search(p: EdgePolytope) -> int:
    """Least ``r`` with an integer point in the relative interior of ``rP``."""
    for r in range(1, p.dim + 2):
        if interior_witness(p, r) is not None:
            return r
    raise InvariantError(f"no interior lattice point up to r = dim + 1 for {p.edges}")


def cycle_polytope(c: Cycle) -> EdgePolytope:
    """Edge polytope of the cycle itself, coordinates indexed by its sorted vertices."""
    verts = sorted(c.vertices)
    relabel = {v: i + 1 for i, v in enumerate(verts)}
    return edge_polytope(SimpleGraph(len(verts), tuple((relabel[u], relabel[v]) for u, v in c.edges)))


def even_cycle_interior_witness(c: Cycle, n: int | None = None) -> tuple[RationalPoint, int]:
    """Half the sum of the cycle's edge vectors: the 0/1 indicator of V(c), at dilation ``|c|/2``.

    With ``n`` given the point lives in ``R^n`` (ones on V(c)); otherwise in
    the cycle's own coordinates as used by :func:`cycle_polytope`.
    """
    if not c.is_even:
        raise GraphError(f"cycle of odd length {c.length} has no such witness")
    half = Fraction(1, 2)
    size = n if n is not None else c.length
    index = {v: v - 1 for v in c.vertices} if n is not None else {v: i for i, v in enumerate(sorted(c.vertices))}
    point = [Fraction(0)] * size
    for u, v in c.edges:
        point[index[u]] += half
        point[index[v]] += half
    return tuple(point), c.length // 2
