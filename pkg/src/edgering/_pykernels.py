"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built, and as the reference the compiled code is
tested against.  Vertices and edges are 0-based here.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations_with_replacement
from math import comb

from .errors import BudgetExceeded


def composition_count(n: int, total: int, cap: int) -> int:
    """Number of vectors in ``{0..cap}^n`` summing to ``total``."""
    ways = [1] + [0] * total
    for _ in range(n):
        nxt = [0] * (total + 1)
        for s, w in enumerate(ways):
            if w:
                for k in range(min(cap, total - s) + 1):
                    nxt[s + k] += w
        ways = nxt
    return ways[total]


# ---------------------------------------------------------------------------
# fibers of the edge-ring grading

def fiber_components(n, edges, degree, budget):
    """Scan all degree-``degree`` monomials in the edge variables.

    Monomials are grouped by multidegree ``b = A u``; within a fiber two
    monomials are linked when they share a variable.  Returns
    ``(monomials, fibers, split)`` where ``split`` lists ``(b, mins)`` for
    every fiber with at least two link-components and ``mins`` holds the
    lex-least exponent vector of each component, sorted.
    """
    m = len(edges)
    total = comb(m + degree - 1, degree)
    if total > budget:
        raise BudgetExceeded(f"degree-{degree} fiber scan", total, budget)
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for mono in combinations_with_replacement(range(m), degree):
        b = [0] * n
        for e in mono:
            u, v = edges[e]
            b[u] += 1
            b[v] += 1
        groups[tuple(b)].append(mono)

    split = []
    for b, members in groups.items():
        if len(members) < 2:
            continue
        parent = list(range(len(members)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        first: dict[int, int] = {}
        for k, mono in enumerate(members):
            for e in set(mono):
                if e in first:
                    ra, rb = find(k), find(first[e])
                    if ra != rb:
                        parent[ra] = rb
                else:
                    first[e] = k
        best: dict[int, tuple[int, ...]] = {}
        for k, mono in enumerate(members):
            vec = [0] * m
            for e in mono:
                vec[e] += 1
            vec = tuple(vec)
            r = find(k)
            if r not in best or vec < best[r]:
                best[r] = vec
        if len(best) >= 2:
            split.append((b, sorted(best.values())))
    split.sort()
    return total, len(groups), split


# ---------------------------------------------------------------------------
# lattice points of dilated edge polytopes

def _degree_vector_feasible(x, adj):
    """Is ``x`` the degree vector of a nonnegative real edge weighting?

    Decided by max-flow on the bipartite double cover: the left copy of ``v``
    supplies ``x_v``, the right copy demands ``x_v``, and each edge ``{u,v}``
    gives uncapacitated arcs ``u'->v''`` and ``v'->u''``.  A saturating flow
    ``f`` yields the weights ``(f(u'v'') + f(v'u''))/2``.
    """
    n = len(x)
    for v in range(n):
        if x[v] and x[v] > sum(x[u] for u in adj[v]):
            return False
    supply = list(x)
    demand = list(x)
    flow = [[0] * n for _ in range(n)]
    need = sum(x)
    while need:
        seen_left = [False] * n
        via_right = [-1] * n  # right node whose arc into it a left node would cancel
        reach_right = [-1] * n  # left node that first reached a right node
        queue = [u for u in range(n) if supply[u] > 0]
        for u in queue:
            seen_left[u] = True
        end = -1
        head = 0
        while head < len(queue) and end < 0:
            u = queue[head]
            head += 1
            for v in adj[u]:
                if reach_right[v] >= 0:
                    continue
                reach_right[v] = u
                if demand[v] > 0:
                    end = v
                    break
                for w in range(n):
                    if flow[w][v] > 0 and not seen_left[w]:
                        seen_left[w] = True
                        via_right[w] = v
                        queue.append(w)
        if end < 0:
            return False
        amt = demand[end]
        u = reach_right[end]
        while via_right[u] >= 0:
            w = via_right[u]
            amt = min(amt, flow[u][w])
            u = reach_right[w]
        amt = min(amt, supply[u])
        v = end
        u = reach_right[v]
        flow[u][v] += amt
        while via_right[u] >= 0:
            w = via_right[u]
            flow[u][w] -= amt
            u = reach_right[w]
            flow[u][w] += amt
        supply[u] -= amt
        demand[end] -= amt
        need -= amt
    return True


def degree_vector_feasible(x, edges):
    n = len(x)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return _degree_vector_feasible(list(x), adj)


def lattice_count(n, edges, t, budget):
    """``|tP_G ∩ Z^n|`` by enumerating ``x`` with ``sum x = 2t``, ``0 <= x_v <= t``."""
    total = composition_count(n, 2 * t, t)
    if total > budget:
        raise BudgetExceeded(f"lattice enumeration at t={t}", total, budget)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    x = [0] * n
    count = 0

    def rec(i, left):
        nonlocal count
        if i == n - 1:
            if left <= t:
                x[i] = left
                if _degree_vector_feasible(x, adj):
                    count += 1
            return
        for k in range(max(0, left - t * (n - 1 - i)), min(t, left) + 1):
            x[i] = k
            rec(i + 1, left - k)
        x[i] = 0

    rec(0, 2 * t)
    return count


# ---------------------------------------------------------------------------
# canonical form for graph isomorphism

def canonical_form(n, adj):
    """Lex-least upper-triangle adjacency bitstring over all relabellings.

    Bits are read column by column: ``(0,1), (0,2), (1,2), (0,3), ...``; the
    first bit is the most significant.  ``adj[v]`` is a neighbour bitmask.
    Returns ``(code, perm)`` with ``perm[i]`` the original vertex placed at
    position ``i``.
    """
    nbits = n * (n - 1) // 2
    best_code = None
    best_perm = None
    perm: list[int] = []

    def rec(k, used, code):
        nonlocal best_code, best_perm
        if k == n:
            if best_code is None or code < best_code:
                best_code, best_perm = code, tuple(perm)
            return
        done = k * (k - 1) // 2 + k
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            for i in range(k):
                col = (col << 1) | (adj[perm[i]] >> v & 1)
            new = (code << k) | col
            if best_code is not None and new > best_code >> (nbits - done):
                continue
            perm.append(v)
            rec(k + 1, used | 1 << v, new)
            perm.pop()

    rec(0, 0, 0)
    return best_code, best_perm
