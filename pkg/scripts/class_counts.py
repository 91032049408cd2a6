"""Print canonical class counts per n, for comparing with known sequences."""

import argparse
import time

from dmramsey.canon import VERTEX_ONLY, WITH_COLORS
from dmramsey.search import enumerate_classes


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--mode", choices=["vertex", "colors"], default="vertex")
    args = ap.parse_args()

    mode = VERTEX_ONLY if args.mode == "vertex" else WITH_COLORS
    orders = None if mode == VERTEX_ONLY else (3,) * args.k
    for n in range(1, args.max_n + 1):
        t = time.monotonic()
        count = sum(1 for _ in enumerate_classes(n, args.k, orders, mode))
        print(f"n={n}  classes={count}  {time.monotonic() - t:.2f}s", flush=True)


if __name__ == "__main__":
    main()
