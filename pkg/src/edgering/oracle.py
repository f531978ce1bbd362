"""Exhaustive small-graph sweeps cross-checking the classifier.

Every connected graph up to isomorphism is run through a suite of checks
that compare the structural verdict with independent computation: the fiber
oracle for generators and the lattice-point enumerator for delta-vectors.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator

from . import kernels
from .classify import (
    Q_LINEAR,
    TWO_LINEAR,
    classify,
    classify_q_linear,
    classify_two_linear,
    hypersurface_case,
    simplex_case,
)
from .errors import BudgetExceeded
from .graph import (
    SimpleGraph,
    bipartite_components,
    block_decomposition,
    enumerate_cycles,
    parse_edge_list,
)
from .polytope import InvariantError, codegree_by_search, delta_polynomial, edge_polytope
from .toric import minimal_generators, primitive_walk_candidates, walk_binomial

MAX_N = 8

PASS, FAIL, SKIP = "pass", "fail", "skip"


# ---------------------------------------------------------------------------
# enumeration

def _decode(code: int, n: int) -> list[int]:
    nbits = n * (n - 1) // 2
    adj = [0] * n
    p = 0
    for j in range(1, n):
        for i in range(j):
            if code >> (nbits - 1 - p) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            p += 1
    return adj


def graph_from_code(code: int, n: int) -> SimpleGraph:
    adj = _decode(code, n)
    edges = tuple((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1)
    return SimpleGraph(n, edges)


def canonical_code(g: SimpleGraph) -> int:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return kernels.canonical_form(g.n, adj)[0]


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    # every connected graph has a non-cut vertex, so deleting one lands in n-1
    if n == 1:
        return (0,)
    codes = set()
    for code in _connected_codes(n - 1):
        adj = _decode(code, n - 1) + [0]
        for nbrs in range(1, 1 << (n - 1)):
            ext = list(adj)
            ext[n - 1] = nbrs
            for v in range(n - 1):
                if nbrs >> v & 1:
                    ext[v] |= 1 << (n - 1)
            codes.add(kernels.canonical_form(n, ext)[0])
    return tuple(sorted(codes))


def enumerate_connected_graphs(n: int) -> Iterator[SimpleGraph]:
    """All connected simple graphs on ``n`` vertices, one per isomorphism class.

    Canonical form is the lex-least upper-triangle adjacency bitstring; graphs
    come out in increasing canonical order, relabelled to that form.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    for code in _connected_codes(n):
        yield graph_from_code(code, n)


# ---------------------------------------------------------------------------
# checks

@dataclass(frozen=True)
class Limits:
    max_degree: int | None = None  # None: n + 1
    max_dilation: int | None = None  # None: d + 1 (the extra polynomiality point)
    budget: int = 10**8
    polytope_max_n: int = 7
    codegree_max_n: int = 6

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""


class _Context:
    """Lazily computed data shared by the checks for one graph."""

    def __init__(self, g: SimpleGraph, limits: Limits):
        self.g = g
        self.limits = limits
        self._cache: dict[str, object] = {}

    def _get(self, key, fn):
        if key not in self._cache:
            try:
                self._cache[key] = ("ok", fn())
            except BudgetExceeded as exc:
                self._cache[key] = ("budget", exc)
            except InvariantError as exc:
                self._cache[key] = ("invariant", exc)
        status, value = self._cache[key]
        if status == "budget":
            raise value
        if status == "invariant":
            raise value
        return value

    @property
    def classification(self):
        return self._get("cls", lambda: classify(self.g))

    @property
    def profile(self):
        def run():
            d = self.limits.max_degree or self.g.n + 1
            return minimal_generators(self.g, d, self.limits.budget)
        return self._get("gens", run)

    @property
    def complete_profile(self):
        prof = self.profile
        if not prof.complete:
            raise BudgetExceeded("fiber oracle", prof.scanned_degree, self.g.n)
        return prof

    @property
    def cycles(self):
        return self._get("cycles", lambda: enumerate_cycles(self.g, self.g.n) if self.g.n >= 3 else [])

    @property
    def polytope(self):
        return self._get("poly", lambda: edge_polytope(self.g))

    @property
    def delta(self):
        def run():
            if self.g.m == 0:
                raise BudgetExceeded("empty edge polytope", 0, 0)
            if self.g.n > self.limits.polytope_max_n:
                raise BudgetExceeded("polytope size cap", self.g.n, self.limits.polytope_max_n)
            p = self.polytope
            extra = self.limits.max_dilation is None or self.limits.max_dilation > p.dim
            return delta_polynomial(p, self.limits.budget, check_point=extra)
        return self._get("delta", run)


def _check_edge_partition(cx):
    bd = block_decomposition(cx.g)
    total = sum(len(b) for b in bd.blocks)
    if total != cx.g.m or len({e for b in bd.blocks for e in b}) != cx.g.m:
        return FAIL, f"blocks cover {total} edges, m = {cx.g.m}"
    return PASS, f"{len(bd.blocks)} blocks"


def _check_cycle_counts(cx):
    c = cx.g.m - cx.g.n + 1
    k = len(cx.cycles)
    if c < 0:
        return FAIL, f"c(G) = {c} < 0"
    if (c == 0) != (k == 0):
        return FAIL, f"c(G) = {c} but {k} cycles"
    if c > 0 and not c <= k <= 2**c - 1:
        return FAIL, f"{k} cycles outside [{c}, {2**c - 1}]"
    return PASS, f"c = {c}, {k} cycles"


def _check_bipartite_cycles(cx):
    r = bipartite_components(cx.g).r
    all_even = all(c.is_even for c in cx.cycles)
    if (r == 1) != all_even:
        return FAIL, f"r = {r}, all cycles even = {all_even}"
    return PASS, ""


def _check_simplex(cx):
    prof = cx.complete_profile
    s = simplex_case(cx.g) is not None
    if not (s == (prof.codimension == 0) == (len(prof.generators) == 0)):
        return FAIL, f"simplex={s}, codim={prof.codimension}, generators={len(prof.generators)}"
    return PASS, ""


def _check_hypersurface(cx):
    prof = cx.complete_profile
    h = hypersurface_case(cx.g) is not None
    if not (h == (prof.codimension == 1) == (len(prof.generators) == 1)):
        return FAIL, f"hypersurface={h}, codim={prof.codimension}, generators={len(prof.generators)}"
    return PASS, ""


def _check_oracle_soundness(cx):
    for b in cx.profile.generators:
        if b.trivial or not b.in_ideal(cx.g) or any(p and q for p, q in zip(b.plus, b.minus)):
            return FAIL, f"bad generator {b}"
    return PASS, f"{len(cx.profile.generators)} generators"


def _check_exclusive(cx):
    fired = [simplex_case(cx.g) is not None, classify_two_linear(cx.g) is not None,
             classify_q_linear(cx.g) is not None]
    if fired[0] and (fired[1] or fired[2]) or fired[1] and fired[2]:
        return FAIL, f"clauses fired: {fired}"
    return PASS, ""


def _check_qlinear_generator(cx):
    cl = cx.classification
    if cl.verdict != Q_LINEAR:
        return PASS, "n/a"
    prof = cx.complete_profile
    if prof.degrees != [cl.q]:
        return FAIL, f"q={cl.q} but generator degrees {prof.degrees}"
    return PASS, ""


def _check_qlinear_even_cycles(cx):
    cl = cx.classification
    if cl.verdict != Q_LINEAR:
        return PASS, "n/a"
    bad = [c.length for c in cx.cycles if c.is_even and c.length != 2 * cl.q]
    if bad:
        return FAIL, f"q={cl.q} but even cycles of length {bad}"
    return PASS, ""


def _check_qlinear_delta(cx):
    cl = cx.classification
    if cl.verdict not in (Q_LINEAR, TWO_LINEAR):
        return PASS, "n/a"
    deg = cx.delta.degree
    if deg > cl.q - 1:
        return FAIL, f"q={cl.q} but delta-degree {deg}"
    return PASS, f"delta-degree {deg}"


def _check_qlinear_converse(cx):
    prof = cx.complete_profile
    cl = cx.classification
    if prof.codimension == 1 and len(prof.generators) == 1 and prof.degrees[0] >= 3:
        q = prof.degrees[0]
        if cl.verdict != Q_LINEAR or cl.q != q:
            return FAIL, f"single generator of degree {q} but verdict {cl}"
    return PASS, ""


def _check_two_linear(cx):
    prof = cx.complete_profile
    cl = cx.classification
    c = prof.codimension
    degs = prof.degrees
    if cl.verdict == TWO_LINEAR:
        if set(degs) != {2} or len(degs) != comb(c + 1, 2):
            return FAIL, f"2-linear but degrees {degs}, codim {c}"
        return PASS, ""
    # stronger than requiring a K_{2,c+1} core as well: the count alone must force 2-linear
    if c >= 1 and degs and set(degs) == {2} and len(degs) == comb(c + 1, 2):
        return FAIL, f"{len(degs)} quadrics in codimension {c} but verdict {cl}"
    return PASS, ""


def _check_walks(cx):
    prof = cx.profile
    if not prof.generators:
        return PASS, "no generators"
    top = max(b.degree for b in prof.generators)
    walks = primitive_walk_candidates(cx.g, top)
    found = {walk_binomial(cx.g, w) for w in walks}
    missing = [str(b) for b in prof.generators if b not in found]
    if missing:
        return FAIL, f"generators without a walk: {missing}"
    return PASS, f"{len(walks)} candidate walks"


def _check_eg_bound(cx):
    # the bound needs a linear resolution, not just generation in one degree
    # (K_4 has two quadrics in codimension 2)
    cl = cx.classification
    if cl.verdict not in (TWO_LINEAR, Q_LINEAR):
        return PASS, "n/a"
    prof = cx.complete_profile
    degs = set(prof.degrees)
    c = prof.codimension
    if degs != {cl.q} or c < 1:
        return FAIL, f"{cl} but generator degrees {sorted(degs)}, codim {c}"
    q = cl.q
    bound = comb(c + q - 1, c - 1)
    if len(prof.generators) < bound:
        return FAIL, f"{len(prof.generators)} generators in degree {q}, bound {bound}"
    return PASS, f"{len(prof.generators)} >= {bound}"


def _check_ehrhart(cx):
    dp = cx.delta
    m, d = cx.g.m, dp.dim
    co = dp.coefficients
    if co[0] != 1 or any(x < 0 for x in co) or (d >= 1 and co[1] != m - d - 1):
        return FAIL, f"delta {co} (m={m}, d={d})"
    return PASS, str(dp)


def _check_codegree(cx):
    if cx.g.n > cx.limits.codegree_max_n:
        raise BudgetExceeded("codegree search size cap", cx.g.n, cx.limits.codegree_max_n)
    dp = cx.delta
    r = codegree_by_search(cx.polytope)
    if r != dp.codegree:
        return FAIL, f"search {r} vs delta codegree {dp.codegree}"
    return PASS, f"codegree {r}"


CHECKS = {
    "edge-partition": _check_edge_partition,
    "cycle-count-bounds": _check_cycle_counts,
    "bipartite-cycles": _check_bipartite_cycles,
    "exclusive-verdict": _check_exclusive,
    "oracle-soundness": _check_oracle_soundness,
    "simplex-codim": _check_simplex,
    "hypersurface-codim": _check_hypersurface,
    "qlinear-generator": _check_qlinear_generator,
    "qlinear-even-cycles": _check_qlinear_even_cycles,
    "linear-delta-degree": _check_qlinear_delta,
    "qlinear-converse": _check_qlinear_converse,
    "two-linear": _check_two_linear,
    "walk-agreement": _check_walks,
    "eg-bound": _check_eg_bound,
    "ehrhart-sanity": _check_ehrhart,
    "codegree-agreement": _check_codegree,
}


def consistency_suite(g: SimpleGraph, limits: Limits | None = None,
                      only: list[str] | None = None) -> list[CheckResult]:
    """Run every cross-check on ``g``; budget-limited checks come back as ``skip``."""
    g.require_connected()
    cx = _Context(g, limits or Limits())
    out = []
    for name, fn in CHECKS.items():
        if only is not None and name not in only:
            continue
        try:
            status, detail = fn(cx)
        except BudgetExceeded as exc:
            status, detail = SKIP, str(exc)
        except InvariantError as exc:
            status, detail = FAIL, f"invariant: {exc}"
        out.append(CheckResult(name, status, detail))
    return out


def replay(certificate: str, check: str, limits: Limits | None = None) -> CheckResult:
    g = parse_edge_list(certificate)
    return consistency_suite(g, limits, only=[check])[0]


# ---------------------------------------------------------------------------
# sweeps

@dataclass
class SweepReport:
    n_range: list[int]
    graph_counts: dict[int, int] = field(default_factory=dict)
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    verdicts: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    limits: dict = field(default_factory=dict)

    @property
    def total_graphs(self) -> int:
        return sum(self.graph_counts.values())

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        data = {
            "n_range": self.n_range,
            "graph_counts": {str(k): v for k, v in self.graph_counts.items()},
            "total_graphs": self.total_graphs,
            "checks": self.checks,
            "verdicts": self.verdicts,
            "failures": self.failures,
            "limits": self.limits,
        }
        return json.dumps(data, indent=2)

    def summary(self) -> str:
        lines = [f"graphs: {self.total_graphs}  (" + ", ".join(f"n={n}: {c}" for n, c in self.graph_counts.items()) + ")"]
        lines.append(f"{'check':<22}{'pass':>8}{'fail':>8}{'skip':>8}")
        for name, c in self.checks.items():
            lines.append(f"{name:<22}{c[PASS]:>8}{c[FAIL]:>8}{c[SKIP]:>8}")
        lines.append("verdicts: " + ", ".join(f"{k}={v}" for k, v in sorted(self.verdicts.items())))
        lines.append("result: " + ("all checks passed" if self.ok else f"{len(self.failures)} failures"))
        return "\n".join(lines)


def _verdict_key(g: SimpleGraph) -> str:
    cl = classify(g)
    if cl.verdict == Q_LINEAR:
        return f"q-linear(q={cl.q},{cl.case})"
    if cl.case:
        return f"{cl.verdict}({cl.case})"
    return cl.verdict


def _run_one(args):
    g, limits = args
    return g, _verdict_key(g), consistency_suite(g, limits)


def sweep(n_max: int, limits: Limits | None = None, n_min: int = 1, workers: int = 1, progress=None) -> SweepReport:
    if not 1 <= n_max <= MAX_N:
        raise ValueError(f"n_max must be in 1..{MAX_N}")
    limits = limits or Limits()
    report = SweepReport(list(range(n_min, n_max + 1)), limits=limits.as_dict())
    report.checks = {name: {PASS: 0, FAIL: 0, SKIP: 0} for name in CHECKS}
    jobs = [(g, limits) for n in range(n_min, n_max + 1) for g in enumerate_connected_graphs(n)]
    for n in range(n_min, n_max + 1):
        report.graph_counts[n] = sum(1 for g, _ in jobs if g.n == n)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = pool.map(_run_one, jobs, chunksize=8)
            _collect(report, results, progress)
    else:
        _collect(report, map(_run_one, jobs), progress)
    report.verdicts = dict(sorted(report.verdicts.items()))
    return report


def _collect(report, results, progress):
    for k, (g, verdict, checks) in enumerate(results):
        report.verdicts[verdict] = report.verdicts.get(verdict, 0) + 1
        for res in checks:
            report.checks[res.name][res.status] += 1
            if res.status == FAIL:
                report.failures.append({"check": res.name, "detail": res.detail, "graph": g.to_text()})
        if progress:
            progress(k + 1, g)


def degree_monotonicity_pairs(graphs: list[SimpleGraph], samples: int = 200, seed: int = 0,
                              budget: int = 10**8) -> list[tuple[SimpleGraph, SimpleGraph, int, int]]:
    """Sample connected subgraph pairs ``G' ⊆ G`` and return their delta-degrees.

    ``G'`` keeps a random nonempty edge subset of ``G`` forming a connected
    subgraph (grown edge by edge from a random start edge).
    """
    rng = random.Random(seed)
    pool = [g for g in graphs if g.m >= 2]
    cache: dict[tuple, int] = {}

    def degree(h: SimpleGraph) -> int:
        key = (h.n, h.edges)
        if key not in cache:
            cache[key] = delta_polynomial(edge_polytope(h), budget).degree
        return cache[key]

    out = []
    while len(out) < samples:
        g = rng.choice(pool)
        size = rng.randint(1, g.m - 1)
        chosen = [rng.choice(g.edges)]
        touched = set(chosen[0])
        while len(chosen) < size:
            frontier = [e for e in g.edges if e not in chosen and (e[0] in touched or e[1] in touched)]
            e = rng.choice(frontier)
            chosen.append(e)
            touched.update(e)
        h = g.edge_subgraph(chosen)
        out.append((g, h, degree(g), degree(h)))
    return out
