#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot census paths -- canonical labeling, one-vertex
augmentation, and per-graph spectral invariants -- over the real connected
census at a chosen order, then reports per-call costs and the projected
census build time at n=9.

Usage: python benchmarks/bench_kernels.py [--n 7] [--parents 120]
"""

import argparse
import importlib
import time


def _load_backends():
    backends = {}
    pure = importlib.import_module("eccspec._kernels_py")
    backends[pure.BACKEND] = pure
    try:
        compiled = importlib.import_module("eccspec._kernels")
        backends[compiled.BACKEND] = compiled
    except ImportError:
        print("note: compiled extension not importable; benchmarking the "
              "fallback only")
    return backends


def _census_bits(n):
    from eccspec import census
    return census._level_bits(n), census.bits_to_graph


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=7,
                        help="census order to benchmark on")
    parser.add_argument("--parents", type=int, default=120,
                        help="how many census graphs to drive through each "
                             "kernel")
    args = parser.parse_args()

    backends = _load_backends()
    bits, to_graph = _census_bits(args.n)
    sample = bits[:: max(1, len(bits) // args.parents)][:args.parents]
    graphs = [to_graph(args.n, b).adj for b in sample]
    print(f"benchmarking on {len(graphs)} connected graphs of order {args.n}\n")

    results = {}
    for name, mod in backends.items():
        timings = {}
        t0 = time.perf_counter()
        for adj in graphs:
            mod.canon_bits(args.n, adj)
        timings["canon_bits"] = time.perf_counter() - t0
        t0 = time.perf_counter()
        children = 0
        for adj in graphs:
            children += len(mod.children_canon(args.n, adj))
        timings["children_canon"] = time.perf_counter() - t0
        t0 = time.perf_counter()
        for adj in graphs:
            mod.census_stats(args.n, adj)
        timings["census_stats"] = time.perf_counter() - t0
        results[name] = (timings, children)

    ref = None
    for name, (timings, children) in results.items():
        print(f"[{name}]")
        print(f"  canon_bits     {timings['canon_bits']*1e6/len(graphs):9.1f} us/graph")
        print(f"  children_canon {timings['children_canon']*1e6/children:9.1f} us/child "
              f"({children} children)")
        print(f"  census_stats   {timings['census_stats']*1e6/len(graphs):9.1f} us/graph")
        per_child = timings["children_canon"] / children
        # the n=9 build canonicalizes ~2.8M augmentation candidates and
        # classifies 261080 graphs
        projected = per_child * 2_846_952 + \
            timings["census_stats"] / len(graphs) * 261_080
        print(f"  projected n=9 census core work: {projected:8.1f} s")
        if ref is None:
            ref = timings
        else:
            for key in timings:
                print(f"  speedup vs {list(results)[0]} on {key}: "
                      f"{ref[key] / timings[key]:6.1f}x")
        print()


if __name__ == "__main__":
    main()
