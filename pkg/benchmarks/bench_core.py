#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure Python twin.

Times the primitives that dominate real runs (closures, adversarial leak
scans, candidate searches, fort enumeration) plus one end-to-end solve, and
prints the speedups.  Run after building the extension:

    python benchmarks/bench_core.py [--repeat N]
"""

import argparse
import statistics
import sys
import time

from forceps.families import grid, hypercube, petersen_gp, wheel
from forceps.solve import leaky_number
from forceps._core import _pykernel

try:
    from forceps._core import _ckernel
except ImportError:
    print("compiled kernel not built; nothing to compare", file=sys.stderr)
    sys.exit(1)


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def scaled(fn, loops, *args):
    def run():
        for _ in range(loops):
            fn(*args)

    return run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    gp8 = petersen_gp(8)
    q4 = hypercube(4)
    g44 = grid(4, 4)
    w8 = wheel(8)
    even16 = sum(1 << v for v in range(16) if bin(v).count("1") % 2 == 0)

    cases = [
        (
            "psd closure, 16-vertex prism (x20000)",
            lambda k: scaled(k.closure_mask, 20000, gp8.n, gp8.adj, 0b10101, 0b11, False)(),
        ),
        (
            "3-leak full scan, 4-cube even half",
            lambda k: k.first_failing_leaks(q4.n, q4.adj, even16, 3, False),
        ),
        (
            "candidate search k=5, 4x4 grid, 1 leak",
            lambda k: k.search_min_superset(g44.n, g44.adj, 0, 5, 1, False),
        ),
        (
            "minimal forts, 9-vertex wheel, 1 leak",
            lambda k: k.minimal_fort_masks(w8.n, w8.adj, 1),
        ),
    ]

    print(f"{'workload':<42} {'c':>10} {'python':>10} {'speedup':>8}")
    for name, runner in cases:
        tc = best_of(args.repeat, runner, _ckernel)
        tp = best_of(max(1, args.repeat // 2), runner, _pykernel)
        print(f"{name:<42} {tc * 1e3:>8.2f}ms {tp * 1e3:>8.2f}ms {tp / tc:>7.1f}x")

    # end-to-end: exact 2-leak value of the 4-cube through the full solver
    import forceps._core as core

    def solve():
        return leaky_number(q4, 2).value

    saved = (core.closure_mask, core.first_failing_leaks, core.search_min_superset,
             core.is_fort_mask, core.minimal_fort_masks)
    names = ("closure_mask", "first_failing_leaks", "search_min_superset",
             "is_fort_mask", "minimal_fort_masks")
    timings = {}
    for label, module in (("c", _ckernel), ("python", _pykernel)):
        for attr in names:
            setattr(core, attr, getattr(module, attr))
        timings[label] = best_of(max(1, args.repeat // 2), solve)
    for attr, fn in zip(names, saved):
        setattr(core, attr, fn)
    print(
        f"{'end-to-end 2-leak value of the 4-cube':<42} "
        f"{timings['c'] * 1e3:>8.2f}ms {timings['python'] * 1e3:>8.2f}ms "
        f"{timings['python'] / timings['c']:>7.1f}x"
    )


if __name__ == "__main__":
    main()
