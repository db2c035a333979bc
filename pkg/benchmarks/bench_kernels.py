#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot kernels (Laguerre recurrence over node arrays, structured
twisted sphere mean) on a representative workload and prints a comparison
table. Select what the library itself uses via TWISTMEANS_BACKEND.

Usage: python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from twistmeans import _kernels_numba, _kernels_numpy
from twistmeans.harmonics import Poly
from twistmeans.profiles import RadialProfile, StructuredFunction, encode_terms, encode_weight
from twistmeans.spheres import unit_rule

BACKENDS = (("numba", _kernels_numba), ("numpy", _kernels_numpy))


def time_call(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_laguerre(repeats):
    x = np.linspace(0.0, 40.0, 200_000)
    results = {}
    for name, mod in BACKENDS:
        mod.laguerre_values(8, 1.0, x[:16])  # jit warm-up
        results[name] = time_call(lambda m=mod: m.laguerre_values(8, 1.0, x), repeats)
    return "laguerre_values (k=8, 200k points)", results


def bench_structured_mean(repeats):
    n = 2
    rule = unit_rule(2 * n, 40)
    f = StructuredFunction(RadialProfile.phi(4, n),
                           Poly.monomial(n, (1, 0), (0, 1)))
    enc = encode_terms(f.terms(), n)
    wt = encode_weight(None, n)
    rng = np.random.default_rng(0)
    centers = rng.normal(size=(100, 2 * n))

    def run(mod):
        total = 0.0 + 0.0j
        for c in centers:
            total += mod.structured_mean(rule.nodes, rule.weights, 1.5, c,
                                         1.0, 1, -1, *enc, *wt)
        return total

    results = {}
    values = {}
    for name, mod in BACKENDS:
        run(mod)  # warm-up / jit
        results[name] = time_call(lambda m=mod: run(m), repeats)
        values[name] = run(mod)
    assert abs(values["numba"] - values["numpy"]) < 1e-10 * max(
        1.0, abs(values["numpy"])), "backend values diverged"
    return f"structured_mean (order-40 rule, {len(rule)} nodes, 100 centers)", results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print(f"{'kernel':<58} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for bench in (bench_laguerre, bench_structured_mean):
        label, res = bench(args.repeats)
        speedup = res["numpy"] / res["numba"]
        print(f"{label:<58} {res['numba'] * 1e3:>8.2f}ms {res['numpy'] * 1e3:>8.2f}ms "
              f"{speedup:>7.1f}x")


if __name__ == "__main__":
    main()
