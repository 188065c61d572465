#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the hot inner loops of the library (pseudo-remainder resultant
scans, the cyclotomic division chain, Bareiss elimination) on both
backends and prints a side-by-side table.

Usage:  python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from ringunits import _kernels_py

try:
    from ringunits import _kernels
except ImportError:
    _kernels = None


def resultant_scan(k, limit):
    f = [-1, -1, 1]  # x^2 - x - 1
    acc = 0
    for n in range(1, limit + 1):
        g = [-1] + [0] * (n - 1) + [1]
        acc ^= k.resultant(g, f) & 1
    return acc


def resultant_scan_nonmonic(k, limit):
    f = [-8, 1, 3, 2]  # leading coefficient 2 exercises the lazy scaling
    acc = 0
    for n in range(1, limit + 1):
        g = [-3] + [0] * (n - 1) + [1]
        acc ^= k.resultant(g, f) & 1
    return acc


def cyclotomic_chain(k, limit):
    # division-chain generation of every Phi_m up to the limit
    cache = {}
    acc = 0
    for m in range(1, limit + 1):
        poly = [-1] + [0] * (m - 1) + [1]
        for d in range(1, m):
            if m % d == 0:
                poly, _ = k.try_divmod(poly, cache[d])
        cache[m] = poly
        acc ^= len(poly)
    return acc


def bareiss_dets(k, size, rounds):
    rng = random.Random(4242)
    acc = 0
    for _ in range(rounds):
        m = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        acc ^= k.bareiss_det(m) & 1
    return acc


def bezout_solves(k, rounds):
    # Sylvester system of (x^11 - 1, Phi_6 * Phi_10): 11 is coprime to 6
    # and 10, so the system is unimodular and the witness exists
    f = _kernels_py.mul([1, -1, 1], [1, -1, 1, -1, 1])
    n, d = 11, len(f) - 1
    size = n + d
    rows = [[0] * size for _ in range(size)]
    for j in range(n):
        for i, c in enumerate(f):
            rows[j + i][j] = c
    for j in range(d):
        rows[j][n + j] = -1
        rows[j + n][n + j] = 1
    rhs = [1] + [0] * (size - 1)
    acc = 0
    for _ in range(rounds):
        acc ^= k.solve_unimodular([row[:] for row in rows], rhs)[0]
    return acc


def run(name, fn, backends, *args):
    times = {}
    results = {}
    for label, k in backends:
        t0 = time.perf_counter()
        results[label] = fn(k, *args)
        times[label] = time.perf_counter() - t0
    labels = [label for label, _ in backends]
    assert len(set(results[label] for label in labels)) == 1, f"{name}: outputs differ"
    line = f"{name:<28}"
    for label in labels:
        line += f"  {label}: {times[label]*1000:9.1f} ms"
    if len(labels) == 2:
        line += f"  speedup: {times[labels[0]] / times[labels[1]]:.2f}x"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled kernels not built; timing the pure backend only")

    scan = 200 if args.quick else 600
    cyclo = 60 if args.quick else 150
    det_rounds = 10 if args.quick else 40

    run("resultant scan (monic)", resultant_scan, backends, scan)
    run("resultant scan (lc=2)", resultant_scan_nonmonic, backends, scan // 2)
    run("cyclotomic division chain", cyclotomic_chain, backends, cyclo)
    run("bareiss det 25x25", bareiss_dets, backends, 25, det_rounds)
    run("bezout solve 17x17", bezout_solves, backends, det_rounds * 5)


if __name__ == "__main__":
    main()
