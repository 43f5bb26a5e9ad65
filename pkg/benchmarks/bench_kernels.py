#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twin.

Runs the two hot paths on representative workloads:
  * ordered-pair progression scans over construction outputs
  * branch-and-bound exact search for small groups

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from capkit import GroupParams, coding_system, equal_frequency_set, materialize
from capkit import kernels
from capkit.constructions import mod11_k4, primepower_digits_A
from capkit.search import completion_masks


def time_scan(s, k, force_python):
    t0 = time.perf_counter()
    ia, ib, pairs = kernels.scan_pairs(
        s.members, s.params.m, s.params.n, k, s.bitset, force_python=force_python
    )
    dt = time.perf_counter() - t0
    assert ia == -1, "benchmark sets are progression-free"
    return pairs, dt


def time_bb(p, force_python):
    comp = completion_masks(p)
    card = p.cardinality
    t0 = time.perf_counter()
    best, nodes, exhausted = kernels.bb_run(
        comp, card, [0], ((1 << card) - 1) & ~1, 3600.0, 1, force_python=force_python
    )
    dt = time.perf_counter() - t0
    assert exhausted
    return len(best), nodes, dt


def fmt_rate(count, dt):
    return f"{count / dt / 1e6:8.2f} M/s" if dt > 0 else "      inf"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if kernels.cython_kernels is None:
        print("note: compiled extension unavailable; both columns run the pure twin")

    scans = [
        ("coding system n=6 (344 pts, k=3)", materialize(coding_system(6, 3)), 3),
        ("coding system n=8 (2832 pts, k=3)", materialize(coding_system(8, 4)), 3),
    ]
    if not args.quick:
        scans += [
            ("digit alphabet Z_11^7 (5040 pts, k=4)", mod11_k4(7), 4),
            ("digit alphabet Z_8^7 (5040 pts, k=5)",
             equal_frequency_set(primepower_digits_A(2, 3), 7), 5),
        ]

    print(f"{'pair scan':44} {'pairs':>10} {'compiled':>12} {'pure':>12} {'speedup':>8}")
    for label, s, k in scans:
        pairs, dt_c = time_scan(s, k, force_python=False)
        _, dt_p = time_scan(s, k, force_python=True)
        print(f"{label:44} {pairs:>10} {dt_c:>10.3f} s {dt_p:>10.3f} s {dt_p / dt_c:>7.1f}x")

    searches = [("Z_4^2 k=3", GroupParams(4, 2)), ("Z_3^3 k=3", GroupParams(3, 3))]
    if not args.quick:
        searches.append(("Z_4^3 k=3", GroupParams(4, 3)))

    print(f"\n{'branch and bound':44} {'nodes':>10} {'compiled':>12} {'pure':>12} {'speedup':>8}")
    for label, p in searches:
        size_c, nodes_c, dt_c = time_bb(p, force_python=False)
        size_p, nodes_p, dt_p = time_bb(p, force_python=True)
        assert (size_c, nodes_c) == (size_p, nodes_p), "twins diverged"
        print(f"{label + f' (max {size_c})':44} {nodes_c:>10} {dt_c:>10.3f} s {dt_p:>10.3f} s {dt_p / dt_c:>7.1f}x")


if __name__ == "__main__":
    main()
