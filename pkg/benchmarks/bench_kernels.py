"""Time the compiled kernels against the pure-Python reference.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

from edgering import kernels
from edgering.graph import complete_bipartite, complete_graph, cycle_graph
from edgering.oracle import enumerate_connected_graphs


def edges0(g):
    return [(u - 1, v - 1) for u, v in g.edges]


def bitmasks(g):
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return adj


def cases():
    k6, k7, k33, c8 = complete_graph(6), complete_graph(7), complete_bipartite(3, 3), cycle_graph(8)
    graphs7 = list(enumerate_connected_graphs(7))
    return [
        ("fiber_components K6 deg 6", lambda mod: mod.fiber_components(6, edges0(k6), 6, 10**8)),
        ("fiber_components K7 deg 6", lambda mod: mod.fiber_components(7, edges0(k7), 6, 10**8)),
        ("fiber_components K33 deg 8", lambda mod: mod.fiber_components(6, edges0(k33), 8, 10**8)),
        ("lattice_count C8 t=7", lambda mod: mod.lattice_count(8, edges0(c8), 7, 10**8)),
        ("lattice_count K7 t=6", lambda mod: mod.lattice_count(7, edges0(k7), 6, 10**8)),
        ("canonical_form 853 graphs n=7", lambda mod: [mod.canonical_form(7, bitmasks(g)) for g in graphs7]),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'kernel':<32}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, fn in cases():
        tp, a = best_of(lambda: fn(kernels.python), args.repeat)
        tc, b = best_of(lambda: fn(kernels.compiled), args.repeat)
        if a != b:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<32}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
