#!/usr/bin/env python3
"""Compare the greedy layered-cover width against the exact clique cover width.

Samples random incomparability graphs at oracle scale and reports how often
the greedy upper bound is tight, one off, or worse, together with the
largest-induced-star lower bound.
"""

import argparse
import collections

from ccwidth import approximate_ccw, clique_cover_width_exact, largest_induced_star
from ccwidth.incomparability import random_poset_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--density", type=float, default=0.4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    gaps = collections.Counter()
    worst = None
    for t in range(args.trials):
        g, ghat = random_poset_graph(args.n, args.density, args.seed + t)
        if g.edge_count() == 0:
            continue
        exact, _ = clique_cover_width_exact(g)
        res = approximate_ccw(g, ghat, check=False)
        s, _ = largest_induced_star(g)
        gap = res.upper - exact
        gaps[gap] += 1
        if worst is None or gap > worst[0]:
            worst = (gap, args.seed + t, exact, res.upper, res.lower, s)

    total = sum(gaps.values())
    print(f"{total} graphs, n={args.n}, density={args.density}")
    for gap in sorted(gaps):
        print(f"  greedy - exact = {gap}: {gaps[gap]:>4} ({100 * gaps[gap] / total:.0f}%)")
    if worst:
        gap, seed, exact, upper, lower, s = worst
        print(
            f"worst case: seed={seed} exact={exact} greedy={upper} "
            f"lower={lower} star_leaves={s}"
        )


if __name__ == "__main__":
    main()
