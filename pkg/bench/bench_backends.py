#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-Python fallback.

Runs the splitting-cycle search on the bundled K_19 embeddings with both
backends, reports wall times, and checks the tables agree. The full
embedding-B tree is numba-only by default (the Python fallback takes
minutes there); pass --full-python to time it anyway.
"""
import argparse
import time

import splitcycles as sc


def run(map_, root, backend, max_length=0):
    opts = sc.SearchOptions(max_length=max_length, backend=backend)
    t0 = time.perf_counter()
    table = sc.enumerate_cycles(map_, root, opts)
    return table, time.perf_counter() - t0


def fmt(table):
    return (tuple((r.nsc, r.min_length) for r in table.rows),
            table.visited, table.contractible_directed,
            table.splitting_directed)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full-python", action="store_true",
                    help="also run the unbounded searches on the Python "
                         "backend (slow)")
    args = ap.parse_args()

    emb = {name: sc.derive(sc.bundled_base(name)) for name in "ABC"}
    k7 = sc.derive(sc.VoltageBaseMap(7, (1, 3, 2, 6, 4, 5)))

    print("warm-up / compile ...")
    run(k7, 0, "numba")

    cases = [("K_7 full", k7, 0, 0, True),
             ("K_19 B, max length 10", emb["B"], 0, 10, True),
             ("K_19 A full", emb["A"], 0, 0, args.full_python),
             ("K_19 B full", emb["B"], 0, 0, args.full_python),
             ("K_19 C full", emb["C"], 0, 0, args.full_python)]

    print(f"{'case':<24} {'numba':>10} {'python':>10} {'speedup':>9}")
    for name, m, root, lmax, both in cases:
        tn, dn = run(m, root, "numba", lmax)
        if both:
            tp, dp = run(m, root, "python", lmax)
            assert fmt(tn) == fmt(tp), f"backend mismatch on {name}"
            print(f"{name:<24} {dn:>9.2f}s {dp:>9.2f}s {dp / dn:>8.1f}x")
        else:
            print(f"{name:<24} {dn:>9.2f}s {'skipped':>10} {'-':>9}")
    print("tables identical across backends where both ran")


if __name__ == "__main__":
    main()
