"""Recompute the stored 3-colorings of K_7, K_6, K_5 and compare or overwrite."""

import argparse
from pathlib import Path

from dmramsey.coloring import format_coloring
from dmramsey.constructions import FIXTURE_FILES
from dmramsey.search import SearchOptions, SearchQuery, decide

ROOT = Path(__file__).resolve().parents[1]
TARGETS = [ROOT / "src" / "dmramsey" / "fixtures", ROOT / "fixtures"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--write", action="store_true", help="overwrite the fixture files")
    args = ap.parse_args()

    stale = 0
    for n, name in sorted(FIXTURE_FILES.items()):
        q = SearchQuery(n, 3, (3, 3, 3), SearchOptions(prune_bipartite=True, deterministic=True))
        text = format_coloring(decide(q).counterexample)
        for d in TARGETS:
            path = d / name
            same = path.exists() and path.read_text() == text
            print(f"{path.relative_to(ROOT)}: {'ok' if same else 'differs'}")
            if not same:
                stale += 1
                if args.write:
                    path.write_text(text)
    raise SystemExit(1 if stale and not args.write else 0)


if __name__ == "__main__":
    main()
