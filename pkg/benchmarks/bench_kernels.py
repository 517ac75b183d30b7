"""Benchmark the compiled branch-and-bound kernels against the pure-Python
reference on the workloads that dominate suite runtime.

Run:  python benchmarks/bench_kernels.py [--quick]

Each case is solved by both backends; results (values and witnesses) must
match exactly, and the table reports the wall-clock ratio.
"""

from __future__ import annotations

import argparse
import random
import sys
from time import perf_counter

from didom import _bnb_py, bitset, kernels
from didom.auxgraph import closed_in_neighborhood_graph
from didom.core import UndirectedGraph
from didom.families import gen_G_m, gen_H_m, random_digraph
from didom.products import cartesian_product

try:
    from didom import _kernels
except ImportError:
    _kernels = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = perf_counter()
        fn()
        best = min(best, perf_counter() - start)
    return best


def cover_case(name, digraph, repeat):
    sets = [digraph.out_closed(v) for v in range(digraph.n)]
    universe = bitset.full(digraph.n)
    return (
        name,
        lambda: _bnb_py.min_set_cover(sets, universe),
        lambda: _kernels.min_set_cover(sets, universe),
        repeat,
    )


def mis_case(name, graph, repeat):
    return (
        name,
        lambda: _bnb_py.max_independent_set(graph.adj, graph.n),
        lambda: _kernels.max_independent_set(list(graph.adj), graph.n),
        repeat,
    )


def build_cases(quick: bool):
    cases = []
    h9 = gen_H_m(3)
    cases.append(cover_case("cover: domination H_9 (36v)", h9, 3))
    g3sq, _ = cartesian_product(gen_G_m(3), gen_G_m(3))
    cases.append(cover_case("cover: domination G_3[]G_3 (49v)", g3sq, 1 if quick else 3))
    cases.append(mis_case("mis: packing aux of H_9 (36v)", closed_in_neighborhood_graph(h9), 5))

    rng = random.Random(2024)
    n = 40
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.25:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    cases.append(mis_case("mis: random G(40, .25)", UndirectedGraph(n, tuple(adj)), 3))

    batch = [random_digraph(10, 0.3, seed) for seed in range(40 if quick else 400)]

    def batch_pure():
        for d in batch:
            _bnb_py.min_set_cover([d.out_closed(v) for v in range(d.n)], bitset.full(d.n))

    def batch_compiled():
        for d in batch:
            _kernels.min_set_cover([d.out_closed(v) for v in range(d.n)], bitset.full(d.n))

    cases.append((f"cover: {len(batch)} random digraphs n=10", batch_pure, batch_compiled, 1))
    return cases


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()
    print(f"compiled kernels available: {kernels.has_compiled_kernels()}")
    if _kernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'case':42s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, pure, compiled, repeat in build_cases(args.quick):
        assert pure() == compiled(), f"backend mismatch on {name}"
        t_pure = _time(pure, repeat)
        t_comp = _time(compiled, repeat)
        print(f"{name:42s} {t_pure * 1e3:9.2f}ms {t_comp * 1e3:9.2f}ms {t_pure / t_comp:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
