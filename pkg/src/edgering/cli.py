"""``edgering`` command line: analyze, classify and sweep."""
from __future__ import annotations

import argparse
import json
import sys
import time
from math import comb
from pathlib import Path

from .classify import Classification, classify
from .errors import BudgetExceeded
from .graph import (
    GraphError,
    ParseError,
    SimpleGraph,
    bipartite_components,
    block_decomposition,
    cyclotomic_number,
    parse_edge_list,
)
from .oracle import MAX_N, Limits, sweep
from .polytope import DEFAULT_BUDGET, InvariantError, delta_from_counts, edge_polytope, ehrhart_table
from .toric import minimal_generators

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Partial(Exception):
    def __init__(self, report: dict, cause: BudgetExceeded):
        super().__init__(str(cause))
        self.report = report
        self.cause = cause


def _read_graph(path: str) -> SimpleGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    g = parse_edge_list(text)
    g.require_connected()
    return g


def _graph_section(g: SimpleGraph) -> dict:
    bd = block_decomposition(g)
    return {
        "n": g.n,
        "m": g.m,
        "r": bipartite_components(g).r,
        "cyclotomic_number": cyclotomic_number(g),
        "bipartite": g.is_bipartite(),
        "s": bd.s,
        "blocks": [[list(e) for e in b] for b in bd.blocks],
        "cut_vertices": sorted(bd.cut_vertices),
    }


def _polytope_section(g: SimpleGraph, max_dilation: int | None, budget: int) -> dict | None:
    if g.m == 0:
        return None
    p = edge_polytope(g)
    d = p.dim
    top = d + 1 if max_dilation is None else max_dilation
    out: dict = {"dim": d, "ehrhart": None, "delta": None, "degree": None, "codegree": None,
                 "polynomiality_checked": False}
    if top < d:
        table = ehrhart_table(p, top, budget)
        out["ehrhart"] = [str(c) for c in table.counts]
        raise BudgetExceeded(f"delta-vector needs dilations up to {d}", d, top)
    table = ehrhart_table(p, top, budget)
    L = table.counts
    delta = delta_from_counts(L, d)
    if any(c < 0 for c in delta) or delta[0] != 1 or L[1] != g.m:
        raise InvariantError(f"delta-vector {delta} fails sanity checks")
    if top >= d + 1:
        if sum((-1) ** j * comb(d + 1, j) * L[d + 1 - j] for j in range(d + 2)):
            raise InvariantError("Ehrhart counts are not polynomial at the extra point")
        out["polynomiality_checked"] = True
    degree = max(i for i, c in enumerate(delta) if c)
    out.update(ehrhart=[str(c) for c in L], delta=[str(c) for c in delta[: degree + 1]],
               degree=degree, codegree=d + 1 - degree)
    return out


def _toric_section(g: SimpleGraph, max_degree: int | None, budget: int) -> dict:
    prof = minimal_generators(g, max_degree, budget)
    return {
        "codimension": prof.codimension,
        "max_degree": prof.max_degree,
        "scanned_degree": prof.scanned_degree,
        "complete": prof.complete,
        "generator_degrees": prof.degrees,
        "generators": [str(b) for b in sorted(prof.generators, key=lambda b: (b.degree, str(b)))],
        "monomials_scanned": str(prof.monomials_scanned),
    }


def _classification_section(cl: Classification) -> dict:
    return {"verdict": cl.verdict, "case": cl.case, "q": cl.q, "summary": str(cl), "evidence": cl.evidence}


def analyze(g: SimpleGraph, max_dilation: int | None = None, max_degree: int | None = None,
            budget: int = DEFAULT_BUDGET) -> dict:
    """The full report for ``g``; raises ``_Partial`` carrying what was computed before a budget hit."""
    report: dict = {"input": g.to_text(), "graph": None, "polytope": None, "toric": None,
                    "classification": None, "timing": {}}
    timing = report["timing"]
    t0 = time.perf_counter()

    def stage(key, fn):
        start = time.perf_counter()
        try:
            report[key] = fn()
        except BudgetExceeded as exc:
            timing[key] = round(time.perf_counter() - start, 6)
            timing["total"] = round(time.perf_counter() - t0, 6)
            raise _Partial(report, exc) from exc
        timing[key] = round(time.perf_counter() - start, 6)

    stage("graph", lambda: _graph_section(g))
    stage("classification", lambda: _classification_section(classify(g)))
    stage("toric", lambda: _toric_section(g, max_degree, budget))
    stage("polytope", lambda: _polytope_section(g, max_dilation, budget))
    timing["total"] = round(time.perf_counter() - t0, 6)
    # fixed key order
    return {k: report[k] for k in ("input", "graph", "polytope", "toric", "classification", "timing")}


def format_report(r: dict) -> str:
    lines = []
    gr = r["graph"]
    if gr:
        kind = "bipartite" if gr["bipartite"] else "non-bipartite"
        lines.append(f"graph: n={gr['n']} m={gr['m']} r={gr['r']} c(G)={gr['cyclotomic_number']} {kind}")
        lines.append(f"blocks: {gr['s']} non-edge, {len(gr['blocks']) - gr['s']} bridges")
    p = r["polytope"]
    if p and p["delta"] is not None:
        lines.append(f"polytope: dim {p['dim']}, δ = ({', '.join(p['delta'])}), "
                     f"degree {p['degree']}, codegree {p['codegree']}")
    elif p:
        lines.append(f"polytope: dim {p['dim']}, delta-vector not computed")
    elif gr and gr["m"] == 0:
        lines.append("polytope: empty (no edges)")
    else:
        lines.append("polytope: not computed")
    t = r["toric"]
    if t:
        status = "complete" if t["complete"] else f"truncated at degree {t['scanned_degree']}"
        lines.append(f"toric: codimension {t['codimension']}, {len(t['generators'])} minimal generators ({status})")
        for s in t["generators"]:
            lines.append(f"  {s}")
    c = r["classification"]
    if c:
        lines.append(f"verdict: {c['summary']}")
    return "\n".join(lines)


def _limits(args) -> Limits:
    kw = {"budget": args.budget}
    if args.max_degree is not None:
        kw["max_degree"] = args.max_degree
    if args.max_dilation is not None:
        kw["max_dilation"] = args.max_dilation
    return Limits(**kw)


def _emit(text: str, path: str | None):
    if path:
        Path(path).write_text(text + "\n")
    else:
        print(text)


def cmd_analyze(args) -> int:
    g = _read_graph(args.path)
    code = EXIT_OK
    try:
        report = analyze(g, args.max_dilation, args.max_degree, args.budget)
    except _Partial as exc:
        report = {k: exc.report[k] for k in ("input", "graph", "polytope", "toric", "classification", "timing")}
        print(f"error: {exc.cause}", file=sys.stderr)
        code = EXIT_BUDGET
    if args.json_out:
        _emit(json.dumps(report, indent=2), args.json_out)
    if args.json:
        print(json.dumps(report, indent=2))
    elif args.quiet:
        if report["classification"]:
            print(report["classification"]["summary"])
    else:
        print(format_report(report))
    return code


def cmd_classify(args) -> int:
    g = _read_graph(args.path)
    cl = classify(g)
    if args.json:
        print(json.dumps(_classification_section(cl), indent=2))
    else:
        print(cl)
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = sweep(args.n_max, _limits(args), workers=args.workers)
    text = report.to_json()
    if args.json_out:
        _emit(text, args.json_out)
    if args.json:
        print(text)
    elif args.quiet:
        print(f"{report.total_graphs} graphs, {len(report.failures)} failures")
    else:
        print(report.summary())
        for f in report.failures:
            print(f"FAIL {f['check']}: {f['detail']}\n{f['graph']}")
    return EXIT_OK if report.ok else EXIT_CHECK


def _n_max(text: str) -> int:
    n = int(text)
    if not 1 <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"n_max must be in 1..{MAX_N}")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    common.add_argument("--json-out", metavar="FILE", help="also write the JSON report to FILE")
    common.add_argument("--max-dilation", type=_positive, metavar="T", help="largest dilation counted (default d+1)")
    common.add_argument("--max-degree", type=int, metavar="D", help="fiber-oracle degree cap (default n+1)")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, metavar="N",
                        help="work budget per computation (default 10^8)")
    common.add_argument("--quiet", action="store_true", help="print only the verdict / final line")

    parser = argparse.ArgumentParser(prog="edgering", description="Linear resolutions of edge rings of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("analyze", parents=[common], help="full report for one graph")
    p.add_argument("path", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("classify", parents=[common], help="structural verdict only")
    p.add_argument("path", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("sweep", parents=[common], help="cross-check all connected graphs up to n_max vertices")
    p.add_argument("n_max", type=_n_max)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_degree", None) is not None and args.max_degree < 2:
        print("error: --max-degree must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
