"""Timing comparison of the pure-Python and compiled sequence kernels.

Run as: python benchmarks/bench_kernels.py [--repeat N]
Both backends produce identical integer tables; this script reports the
best-of-N wall time for each and the resulting speedup.
"""

import argparse
import time

from bellgamma import _pure
from bellgamma.numerics import lcm_upto

try:
    from bellgamma import _native
except ImportError:
    _native = None

CASES = (
    (3, 150, 2),
    (4, 150, 3),
    (5, 150, 4),
    (3, 400, 2),
    (2, 600, 1),
)


def best_time(mod, a, n_max, mu_max, repeat):
    d = lcm_upto(n_max) if mu_max else 1
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        mod.seq_tables(a, n_max, mu_max, d)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _native is None:
        print("compiled backend not available; timing pure backend only")
    print("%-24s %10s %10s %8s" % ("case", "pure", "native", "speedup"))
    for a, n_max, mu_max in CASES:
        tp = best_time(_pure, a, n_max, mu_max, args.repeat)
        label = "a=%d n<=%d mu<=%d" % (a, n_max, mu_max)
        if _native is None:
            print("%-24s %9.1fms %10s %8s" % (label, tp * 1e3, "-", "-"))
            continue
        tn = best_time(_native, a, n_max, mu_max, args.repeat)
        print("%-24s %9.1fms %9.1fms %7.2fx" % (label, tp * 1e3, tn * 1e3,
                                                tp / tn))


if __name__ == "__main__":
    main()
