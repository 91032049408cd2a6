"""Command-line entry point: ``dmramsey <command> ...``.

Exit codes: 0 on success (or the queried outcome), 1 when a verification or
claim fails, 2 on usage errors and malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import certify as cert
from .coloring import ColoringError, format_coloring, read_coloring, verify, write_coloring
from .constructions import (
    ConstructionError,
    SeedSet,
    lower_bound_coloring,
    m3_family,
    offdiag_tight,
    remark1_lift,
)
from .graph import GraphError, read_graph
from .illusive import check_balanced_regular, check_k_kplus1, lemma36_margin, scan_illusive
from .paths import mp_exact
from .search import (
    ALL_GOOD,
    COUNTEREXAMPLE,
    BudgetExceeded,
    SearchError,
    SearchOptions,
    SearchQuery,
    decide,
    decide_brute,
    scan,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"orders must be comma-separated integers, got {text!r}") from None


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("range is empty")
    return lo, hi


def _emit(c, out: str | None) -> None:
    if out:
        write_coloring(c, out)
    else:
        sys.stdout.write(format_coloring(c))


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_mp(args) -> int:
    g = read_graph(args.graph)
    res = mp_exact(g)
    w = res.witness
    print(f"mp = {res.value}")
    print("witness: " + " ".join(map(str, w.vertices)) + "  degrees: " + " ".join(map(str, w.degrees)))
    return EXIT_OK


def cmd_verify(args) -> int:
    c = read_coloring(args.coloring)
    verdict = verify(c, args.orders)
    if verdict:
        j, path = verdict.found
        print(f"MDM-PATH color {j}: " + " ".join(map(str, path.vertices)))
    else:
        print("NO-MDM-PATH")
    expect_found = args.expect == "found"
    return EXIT_OK if bool(verdict) == expect_found else EXIT_FAIL


def _write_seeds(seeds: SeedSet, out: str | None) -> None:
    if out is None:
        for c in seeds.members:
            sys.stdout.write(format_coloring(c))
        return
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    for c in seeds.members:
        write_coloring(c, d / f"k{c.k}_n{c.n}.kcol")
        print(d / f"k{c.k}_n{c.n}.kcol")


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "lower-bound":
        _need(args, "k", "m")
        _emit(lower_bound_coloring(args.k, args.m, args.t), args.output)
    elif kind == "offdiag-tight":
        _need(args, "m")
        _emit(offdiag_tight(args.m), args.output)
    elif kind == "m3-family":
        _need(args, "k")
        _write_seeds(m3_family(args.k), args.output)
    elif kind == "lift":
        if not args.seeds:
            raise UsageError("lift needs --seeds FILE ...")
        members = tuple(sorted((read_coloring(p) for p in args.seeds), key=lambda c: -c.n))
        m = args.m if args.m is not None else len(members)
        _write_seeds(remark1_lift(SeedSet(members, m), m), args.output)
    return EXIT_OK


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs {' '.join(missing)}")


def _query_orders(args) -> tuple[int, ...]:
    if args.orders is not None:
        return args.orders
    if args.m is None or args.k is None:
        raise UsageError("give --orders, or --k with --m")
    return (args.m,) * args.k


def _options(args) -> SearchOptions:
    return SearchOptions(
        prune_bipartite=args.prune == "bipartite",
        deterministic=args.deterministic,
        brute=getattr(args, "brute", False),
        workers=args.workers,
        budget_seconds=args.budget_seconds,
    )


def cmd_search_decide(args) -> int:
    if args.n is None:
        raise UsageError("decide needs --n")
    orders = _query_orders(args)
    k = args.k if args.k is not None else len(orders)
    opts = _options(args)
    q = SearchQuery(args.n, k, orders, opts)
    start = time.monotonic()
    report = {
        "query": {"n": q.n, "k": q.k, "orders": list(q.orders)},
        "prune_flags": {"bipartite": opts.prune_bipartite},
        "witness_path": None,
    }
    try:
        out = decide_brute(q) if opts.brute else decide(q)
    except BudgetExceeded as exc:
        report |= {"verdict": "TIMEOUT", "stats": vars(exc.stats),
                   "runtime_ms": round((time.monotonic() - start) * 1000)}
        _write_json(args.report, report)
        print("TIMEOUT")
        return EXIT_FAIL
    report["verdict"] = out.verdict
    report["stats"] = vars(out.stats)
    report["runtime_ms"] = round((time.monotonic() - start) * 1000)
    print(out.verdict, flush=True)
    if out.counterexample is not None:
        if args.output:
            write_coloring(out.counterexample, args.output)
            report["witness_path"] = str(args.output)
        else:
            sys.stdout.write(format_coloring(out.counterexample))
    s = out.stats
    print(f"nodes {s.nodes}  classes {s.classes}  pruned {s.pruned_bipartite}  time {s.wall_time:.2f}s",
          file=sys.stderr)
    _write_json(args.report, report)
    want = COUNTEREXAMPLE if args.expect == "counterexample" else ALL_GOOD
    return EXIT_OK if out.verdict == want else EXIT_FAIL


def cmd_search_scan(args) -> int:
    if args.k is None or args.m is None or args.range is None:
        raise UsageError("scan needs --k, --m and --range LO..HI")
    opts = _options(args)
    outdir = Path(args.output) if args.output else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    status = EXIT_OK
    for row in scan(args.k, args.m, args.range, opts, args.orders):
        entry = {"n": row.n, "verdict": row.verdict or "ERROR", "witness_path": None}
        if row.error:
            entry["error"] = row.error
            status = EXIT_FAIL
        if row.stats is not None:
            entry["stats"] = vars(row.stats)
        if row.counterexample is not None and outdir:
            p = outdir / f"k{args.k}_m{args.m}_n{row.n}.kcol"
            write_coloring(row.counterexample, p)
            entry["witness_path"] = str(p)
        print(f"{row.n}\t{entry['verdict']}" + (f"\t{row.error}" if row.error else ""), flush=True)
        rows.append(entry)
    _write_json(args.report, {"k": args.k, "m": args.m, "range": list(args.range),
                              "prune_flags": {"bipartite": opts.prune_bipartite}, "rows": rows})
    return status


def cmd_illusive(args) -> int:
    what = args.what
    if what == "scan":
        hit = scan_illusive(args.max_vertices)
        if hit is None:
            print(f"no illusive graph with at most {args.max_vertices} vertices")
            return EXIT_OK
        print("ILLUSIVE " + " ".join(f"{u}-{v}" for u, v in hit.graph.edges()))
        return EXIT_FAIL
    if what == "k-kplus1":
        ok = check_k_kplus1(args.k)
    elif what == "balanced-regular":
        ok = check_balanced_regular(args.max_vertices)
    else:
        ks = [args.k] if args.k is not None else list(range(4, 21))
        ok = True
        for k in ks:
            r = lemma36_margin(k)
            print(f"k={k}  ceil({r.root}/{r.divisor}) = {r.lhs}  vs  {r.rhs}  {'holds' if r.holds else 'FAILS'}")
            ok = ok and r.holds
        return EXIT_OK if ok else EXIT_FAIL
    print(str(ok).lower())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_certify(args) -> int:
    log = (lambda s: print(s, file=sys.stderr, flush=True)) if args.verbose else None
    report = cert.run_certify(args.profile, args.report, args.seed, args.budget_seconds, log)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--orders", type=_orders)
    p.add_argument("--prune", choices=["bipartite"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--deterministic", action="store_true")
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("-o", "--output")
    p.add_argument("--report")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dmramsey", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mp", help="maximum degree-monotone path of a graph file")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("verify", help="look for a required mdm-path in a coloring file")
    p.add_argument("--coloring", required=True)
    p.add_argument("--orders", type=_orders, required=True)
    p.add_argument("--expect", choices=["none", "found"], default="none")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build an extremal coloring")
    p.add_argument("kind", choices=["lower-bound", "lift", "offdiag-tight", "m3-family"])
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--seeds", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive decision and range scans")
    ss = p.add_subparsers(dest="action", required=True)
    d = ss.add_parser("decide")
    d.add_argument("--n", type=int)
    _search_flags(d)
    d.add_argument("--brute", action="store_true")
    d.add_argument("--expect", choices=["all-good", "counterexample"], default="all-good")
    d.set_defaults(func=cmd_search_decide)
    s = ss.add_parser("scan")
    _search_flags(s)
    s.add_argument("--range", type=_range, help="inclusive LO..HI")
    s.set_defaults(func=cmd_search_scan)

    p = sub.add_parser("illusive", help="structural checks on bipartite graphs")
    p.add_argument("what", choices=["scan", "k-kplus1", "balanced-regular", "margin"])
    p.add_argument("--max-vertices", type=int, default=10)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_illusive)

    p = sub.add_parser("certify", help="replay every verifiable claim")
    p.add_argument("--profile", choices=[cert.QUICK, cert.FULL], default=cert.QUICK)
    p.add_argument("--report")
    p.add_argument("--seed", type=int, default=cert.DEFAULT_SEED)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_certify)
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "illusive" and args.what == "k-kplus1" and args.k is None:
        parser.print_usage(sys.stderr)
        print("error: k-kplus1 needs --k", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphError, ColoringError, ConstructionError, SearchError, ValueError, OSError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
