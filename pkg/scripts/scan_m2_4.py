"""Scan n for 2-colorings and paths of order 4, writing a JSON table."""

import argparse
import json
import time

from dmramsey.coloring import write_coloring
from dmramsey.search import SearchOptions, scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=6)
    ap.add_argument("--hi", type=int, default=9)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="scan_m2_4.json")
    args = ap.parse_args()

    rows = []
    for row in scan(2, 4, (args.lo, args.hi), SearchOptions(workers=args.workers)):
        entry = {"n": row.n, "verdict": row.verdict, "error": row.error}
        if row.stats is not None:
            entry |= {"nodes": row.stats.nodes, "classes": row.stats.classes, "seconds": round(row.stats.wall_time, 2)}
        if row.counterexample is not None:
            path = f"m2_4_n{row.n}.kcol"
            write_coloring(row.counterexample, path)
            entry["witness"] = path
        print(entry, flush=True)
        rows.append(entry)
    with open(args.out, "w") as fh:
        json.dump({"k": 2, "m": 4, "generated": time.strftime("%Y-%m-%d %H:%M:%S"), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
