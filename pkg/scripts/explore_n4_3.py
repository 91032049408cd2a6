"""Best-effort look at 4-colorings of K_n without a monochromatic degree-monotone path of order 3.

Two sources of evidence per n: lifted constructions (seeded by searched
3-colorings) and a budgeted pruned search.
"""

import argparse

from dmramsey.coloring import verify
from dmramsey.constructions import SeedSet, m3_family, remark1_lift
from dmramsey.search import BudgetExceeded, SearchOptions, SearchQuery, decide

ORDERS = (3, 3, 3, 3)


def lifted_sizes():
    seeds = {}
    for n in range(3, 7):
        out = decide(SearchQuery(n, 3, (3, 3, 3), SearchOptions(prune_bipartite=True, deterministic=True)))
        seeds[n] = out.counterexample
    sizes = {}
    for t in (5, 6):
        for c in remark1_lift(SeedSet((seeds[t], seeds[t - 1], seeds[t - 2]), 3)).members:
            sizes[c.n] = not verify(c, ORDERS)
    for c in m3_family(4).members:
        sizes[c.n] = not verify(c, ORDERS)
    return sizes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=6)
    ap.add_argument("--hi", type=int, default=10)
    ap.add_argument("--budget-seconds", type=float, default=300.0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for n, clean in sorted(lifted_sizes().items()):
        print(f"lift  n={n:2d}  {'counterexample' if clean else 'has path'}")
    for n in range(args.lo, args.hi + 1):
        opts = SearchOptions(prune_bipartite=True, budget_seconds=args.budget_seconds, workers=args.workers)
        try:
            out = decide(SearchQuery(n, 4, ORDERS, opts))
        except BudgetExceeded as exc:
            print(f"search n={n:2d}  timeout after {exc.stats.nodes} nodes", flush=True)
            continue
        print(f"search n={n:2d}  {out.verdict}  nodes {out.stats.nodes}  {out.stats.wall_time:.1f}s", flush=True)


if __name__ == "__main__":
    main()
