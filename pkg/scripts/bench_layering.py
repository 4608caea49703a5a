#!/usr/bin/env python3
"""Measure greedy layered-cover runtime against input size.

Builds chain posets of increasing size (dense transitive DAGs, so
|V| + |arcs| grows quadratically in n) and times the layering pass alone.
A roughly constant time/size column indicates linear scaling.
"""

import argparse
import time

from ccwidth.incomparability import greedy_layered_cover, random_transitive_dag


def best_time(orientation, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        greedy_layered_cover(orientation, check=False)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 446, 800, 1414])
    ap.add_argument("--density", type=float, default=1.0)
    ap.add_argument("--seed", type=int, default=5)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print(f"{'n':>6} {'size':>9} {'time_ms':>9} {'ns/size':>9}")
    for n in args.sizes:
        o = random_transitive_dag(n, args.density, args.seed)
        size = n + len(o.arcs)
        t = best_time(o, args.repeats)
        print(f"{n:>6} {size:>9} {t * 1000:>9.2f} {t * 1e9 / size:>9.1f}")


if __name__ == "__main__":
    main()
