#!/usr/bin/env python3
"""Benchmark: compiled vs pure-Python permutation-search kernel.

Times the full automorphism enumeration on a few named graphs and on
the whole 6-vertex corpus slice used by the exhaustive verifier.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from homrep import Graph, enumerate_connected_graphs, named_family
from homrep import _kernels_py

try:
    from homrep import _speedups
except ImportError:
    _speedups = None


def petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def decorated_cycle_12():
    from homrep import RootedTreeSpec, build_periodic_unicyclic
    specs = [RootedTreeSpec((-1, 0)), RootedTreeSpec((-1, 0, 1)),
             RootedTreeSpec((-1, 0, 0))]
    return build_periodic_unicyclic(12, 3, specs)[0]


CASES = [
    ("K7", named_family("complete", 7)),
    ("C12", named_family("cycle", 12)),
    ("star-8", named_family("star", 8)),
    ("petersen", petersen()),
    ("decorated-12", decorated_cycle_12()),
]


def time_one(fn, graphs, repeat):
    best = float("inf")
    count = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        count = 0
        for g in graphs:
            count += len(fn(g.n, g.adjacency_masks(), 10 ** 7))
        best = min(best, time.perf_counter() - t0)
    return best, count


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rows = list(CASES)
    corpus = list(enumerate_connected_graphs(6))
    rows.append(("corpus n=6 (26704 graphs)", None))

    print(f"{'case':<28}{'|Aut|':>8}{'python':>12}{'cython':>12}{'speedup':>9}")
    for name, g in rows:
        graphs = corpus if g is None else [g]
        t_py, count = time_one(_kernels_py.search_automorphisms, graphs, args.repeat)
        if _speedups is None:
            print(f"{name:<28}{count:>8}{t_py:>11.4f}s{'-':>12}{'-':>9}")
            continue
        t_cy, count_cy = time_one(_speedups.search_automorphisms, graphs, args.repeat)
        assert count == count_cy, "backends disagree"
        print(f"{name:<28}{count:>8}{t_py:>11.4f}s{t_cy:>11.4f}s"
              f"{t_py / t_cy:>8.1f}x")
    if _speedups is None:
        print("\ncompiled kernel not built; showing the pure backend only")


if __name__ == "__main__":
    main()
