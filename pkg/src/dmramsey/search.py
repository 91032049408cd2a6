"""Isomorph-free exhaustive search over k-colorings of K_n.

Colorings are grown one vertex at a time by canonical augmentation: a child
``P + v`` is kept only if ``v`` can be the first vertex of the child's
canonical labeling, and children of one parent are deduplicated by code
unless the parent is rigid. Every isomorphism class (under vertex
permutations and swaps of colors with equal required order) is reached
exactly once. Leaves at the target order are checked with ``verify``.

With ``prune_bipartite`` (all orders equal to 3) a branch dies as soon as some
color class closes an odd cycle: such a class has chromatic number at least 3
and therefore a degree-monotone path of order 3, and bipartiteness is
inherited by every induced subcoloring.
"""

from __future__ import annotations

import math
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .canon import WITH_COLORS, CanonicalCode, canonical_form, color_group, label_matrix
from .coloring import EdgeColoring, check_orders, num_slots, verify
from .graph import _from_rows
from .paths import has_mdm
from .unionfind import ParityUnionFind

ALL_GOOD = "ALL-GOOD"
COUNTEREXAMPLE = "COUNTEREXAMPLE"

BRUTE_LIMIT = 1 << 24
DEFAULT_MAX_CLASSES = 5_000_000
SPLIT_DEPTH = 5


class SearchError(ValueError):
    pass


class SearchTooLarge(SearchError):
    pass


class BudgetExceeded(SearchError):
    def __init__(self, message: str, stats: "SearchStats"):
        super().__init__(message)
        self.stats = stats


@dataclass
class SearchOptions:
    prune_bipartite: bool = False
    deterministic: bool = False
    brute: bool = False
    workers: int = 1
    budget_seconds: float | None = None
    max_estimated_classes: float = DEFAULT_MAX_CLASSES


@dataclass
class SearchQuery:
    n: int
    k: int
    orders: tuple[int, ...]
    options: SearchOptions = field(default_factory=SearchOptions)

    def __post_init__(self) -> None:
        if self.n < 2 or self.k < 1:
            raise SearchError("need n >= 2 and k >= 1")
        self.orders = check_orders(self.orders, self.k)
        if self.options.prune_bipartite and any(m != 3 for m in self.orders):
            raise SearchError("bipartite pruning is only sound when every order is 3")


@dataclass
class SearchStats:
    nodes: int = 0
    classes: int = 0
    pruned_bipartite: int = 0
    wall_time: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.classes += other.classes
        self.pruned_bipartite += other.pruned_bipartite
        self.wall_time = max(self.wall_time, other.wall_time)


@dataclass
class SearchOutcome:
    verdict: str
    counterexample: EdgeColoring | None
    stats: SearchStats

    @property
    def all_good(self) -> bool:
        return self.verdict == ALL_GOOD

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "stats": asdict(self.stats)}


def estimated_classes(n: int, k: int, group_order: int = 1) -> float:
    """Raw coloring count divided by the symmetry group order."""
    return k ** num_slots(n) / (math.factorial(n) * group_order)


# ---------------------------------------------------------------------------
# one node of the generation tree


class _Node:
    __slots__ = ("m", "size", "dsu", "rigid")

    def __init__(self, m: list[list[int]], dsu: list[ParityUnionFind] | None, rigid: bool):
        self.m = m
        self.size = len(m)
        self.dsu = dsu
        self.rigid = rigid


def _root_node(k: int, prune: bool, sigmas) -> _Node:
    # every allowed color map fixes a single vertex
    return _Node([[-1]], [ParityUnionFind(1) for _ in range(k)] if prune else None, len(sigmas) == 1)


def _node_from_matrix(m: list[list[int]], k: int, prune: bool, sigmas) -> _Node:
    dsu = None
    if prune:
        dsu = [ParityUnionFind(len(m)) for _ in range(k)]
        for u in range(len(m)):
            for v in range(u + 1, len(m)):
                dsu[m[u][v]].union(u, v)
    rigid = label_matrix(m, len(m), sigmas)[4]
    return _Node(m, dsu, rigid)


def _key_function(k: int, sigmas):
    # lexicographically least first row of a vertex <=> largest color-count vector
    if len(sigmas) == 1:
        return tuple
    if len(sigmas) == math.factorial(k):
        return lambda counts: tuple(sorted(counts, reverse=True))

    def key(counts):
        return max(tuple(counts[s.index(j)] for j in range(k)) for s in sigmas)

    return key


class _Engine:
    def __init__(self, n: int, k: int, orders: tuple[int, ...], prune: bool, sigmas, deadline: float | None, stop=None):
        self.n, self.k, self.orders = n, k, orders
        self.prune = prune
        self.sigmas = sigmas
        self.key = _key_function(k, sigmas)
        self.deadline = deadline
        self.stop = stop
        self.stats = SearchStats()
        self._tick = 0

    def _check_budget(self) -> None:
        self._tick += 1
        if self._tick & 1023:
            return
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("wall-clock budget exhausted", self.stats)

    def children(self, node: _Node) -> Iterator[_Node]:
        """Canonical children of ``node``, one per isomorphism class."""
        m, s, k = node.m, node.size, self.k
        last = s + 1 == self.n
        counts = [[0] * k for _ in range(s)]
        for u in range(s):
            for v in range(s):
                if u != v:
                    counts[u][m[u][v]] += 1
        seen: set[tuple] = set()
        key = self.key
        for x in product(range(k), repeat=s):
            self.stats.nodes += 1
            self._check_budget()
            if self.prune and not self._stays_bipartite(node, x):
                self.stats.pruned_bipartite += 1
                continue
            new = [0] * k
            for c in x:
                new[c] += 1
            top = key(new)
            unique = True
            bad = False
            for u in range(s):
                cu = counts[u][:]
                cu[x[u]] += 1
                ku = key(cu)
                if ku > top:
                    bad = True
                    break
                if ku == top:
                    unique = False
            if bad:
                continue
            child = [row + [x[u]] for u, row in enumerate(m)]
            child.append(list(x) + [-1])
            if unique and last and node.rigid:
                yield _Node(child, None, True)
                continue
            rows, _, _, firsts, rigid = label_matrix(child, s + 1, self.sigmas)
            if s not in firsts:
                continue
            if not node.rigid:
                code = tuple(rows)
                if code in seen:
                    continue
                seen.add(code)
            yield _Node(child, self._extend_dsu(node, x) if self.prune and not last else None, rigid)

    def _stays_bipartite(self, node: _Node, x: Sequence[int]) -> bool:
        # the new vertex must see every component of each color from one side
        sides: list[dict[int, int]] = [{} for _ in range(self.k)]
        for u, c in enumerate(x):
            root, par = node.dsu[c].find(u)
            seen = sides[c].setdefault(root, par)
            if seen != par:
                return False
        return True

    def _extend_dsu(self, node: _Node, x: Sequence[int]) -> list[ParityUnionFind]:
        out = []
        for c in range(self.k):
            d = node.dsu[c].copy()
            v = d.add()
            for u, xc in enumerate(x):
                if xc == c:
                    d.union(u, v)
            out.append(d)
        return out

    def is_counterexample(self, m: list[list[int]]) -> bool:
        n = len(m)
        for j in range(self.k):
            rows = [0] * n
            for u in range(n):
                mu = m[u]
                r = 0
                for v in range(n):
                    if mu[v] == j:
                        r |= 1 << v
                rows[u] = r
            if has_mdm(_from_rows(n, rows), self.orders[j]) is not None:
                return False
        return True

    def walk(self, node: _Node, deterministic: bool) -> list[list[list[int]]]:
        """Depth-first over the subtree of ``node``; returns counterexample matrices."""
        found = []
        stack = [node]
        while stack:
            cur = stack.pop()
            if self.stop is not None and self.stop.is_set():
                break
            if cur.size == self.n:
                self.stats.classes += 1
                if self.is_counterexample(cur.m):
                    found.append(cur.m)
                    if not deterministic:
                        if self.stop is not None:
                            self.stop.set()
                        break
                continue
            kids = list(self.children(cur))
            stack.extend(reversed(kids))
        return found

    def level(self, depth: int) -> list[_Node]:
        """All canonical nodes with ``depth`` vertices, in generation order."""
        layer = [_root_node(self.k, self.prune, self.sigmas)]
        while layer and layer[0].size < depth:
            nxt = []
            for node in layer:
                nxt.extend(self.children(node))
            layer = nxt
        return layer


def _to_coloring(m: list[list[int]], k: int) -> EdgeColoring:
    n = len(m)
    return EdgeColoring(n, k, tuple(m[u][v] for u in range(n) for v in range(u + 1, n)))


# worker-process state
_STOP = None


def _init_worker(stop) -> None:
    global _STOP
    _STOP = stop


def _run_task(args):
    n, k, orders, prune, sigmas, deadline, deterministic, m = args
    engine = _Engine(n, k, orders, prune, sigmas, deadline, _STOP)
    node = _node_from_matrix(m, k, prune, sigmas)
    try:
        found = engine.walk(node, deterministic)
    except BudgetExceeded:
        return None, engine.stats
    return found, engine.stats


def decide(q: SearchQuery) -> SearchOutcome:
    """Does every k-coloring of K_n contain a required mdm-path?"""
    if q.options.brute:
        return decide_brute(q)
    opts = q.options
    sigmas = color_group(q.k, q.orders, WITH_COLORS)
    if not opts.prune_bipartite:
        est = estimated_classes(q.n, q.k, len(sigmas))
        if est > opts.max_estimated_classes:
            raise SearchTooLarge(f"about {est:.3g} classes exceed the limit {opts.max_estimated_classes:.3g}")
    start = time.monotonic()
    deadline = start + opts.budget_seconds if opts.budget_seconds is not None else None
    engine = _Engine(q.n, q.k, q.orders, opts.prune_bipartite, sigmas, deadline)
    split = min(SPLIT_DEPTH, q.n)
    try:
        tasks = engine.level(split)
    except BudgetExceeded as exc:
        exc.stats.wall_time = time.monotonic() - start
        raise
    stats = engine.stats
    found: list[list[list[int]]] = []
    timed_out = False
    if opts.workers <= 1:
        for node in tasks:
            try:
                hits = engine.walk(node, opts.deterministic)
            except BudgetExceeded:
                timed_out = True
                break
            found.extend(hits)
            if found and not opts.deterministic:
                break
        # engine.stats is the same object as stats; children and leaves already counted
    else:
        stop = mp.get_context("fork").Event()
        payload = [(q.n, q.k, q.orders, opts.prune_bipartite, sigmas, deadline, opts.deterministic, t.m) for t in tasks]
        with ProcessPoolExecutor(opts.workers, mp_context=mp.get_context("fork"), initializer=_init_worker, initargs=(stop,)) as pool:
            for hits, sub in pool.map(_run_task, payload):
                stats.merge(sub)
                if hits is None:
                    timed_out = True
                else:
                    found.extend(hits)
    stats.wall_time = time.monotonic() - start
    if not found:
        if timed_out:
            raise BudgetExceeded("wall-clock budget exhausted", stats)
        return SearchOutcome(ALL_GOOD, None, stats)
    colorings = [_to_coloring(m, q.k) for m in found]
    if opts.deterministic:
        witness = min(colorings, key=lambda c: canonical_form(c, WITH_COLORS, q.orders))
        witness = EdgeColoring(q.n, q.k, tuple(canonical_form(witness, WITH_COLORS, q.orders).code))
    else:
        witness = colorings[0]
    if verify(witness, q.orders):
        raise AssertionError("search returned a coloring that contains a required path")
    return SearchOutcome(COUNTEREXAMPLE, witness, stats)


def decide_brute(q: SearchQuery) -> SearchOutcome:
    """Check every raw coloring, no symmetry reduction."""
    total = q.k ** num_slots(q.n)
    if total > BRUTE_LIMIT:
        raise SearchTooLarge(f"{total} raw colorings exceed the brute-force limit {BRUTE_LIMIT}")
    start = time.monotonic()
    stats = SearchStats()
    for colors in product(range(q.k), repeat=num_slots(q.n)):
        stats.nodes += 1
        c = EdgeColoring(q.n, q.k, colors)
        if not verify(c, q.orders):
            stats.classes = stats.nodes
            stats.wall_time = time.monotonic() - start
            return SearchOutcome(COUNTEREXAMPLE, c, stats)
    stats.classes = stats.nodes
    stats.wall_time = time.monotonic() - start
    return SearchOutcome(ALL_GOOD, None, stats)


def enumerate_classes(n: int, k: int, orders: Sequence[int] | None = None, mode: str = WITH_COLORS,
                      prune_bipartite: bool = False) -> Iterator[EdgeColoring]:
    """One representative coloring per isomorphism class."""
    sigmas = color_group(k, orders, mode)
    engine = _Engine(n, k, tuple(orders or (0,) * k), prune_bipartite, sigmas, None)
    if n == 1:
        yield EdgeColoring(1, k, ())
        return
    for node in engine.level(n):
        yield _to_coloring(node.m, k)


# ---------------------------------------------------------------------------
# scans over n


@dataclass
class ScanRow:
    n: int
    verdict: str | None
    counterexample: EdgeColoring | None = None
    stats: SearchStats | None = None
    error: str | None = None


def scan(k: int, m: int, n_range: Sequence[int], options: SearchOptions | None = None,
         orders: Sequence[int] | None = None) -> Iterator[ScanRow]:
    """Decide each n separately; having the property is not hereditary in n."""
    options = options or SearchOptions()
    orders = tuple(orders) if orders is not None else (m,) * k
    lo, hi = n_range
    for n in range(lo, hi + 1):
        try:
            out = decide(SearchQuery(n, k, orders, options))
        except SearchError as exc:
            yield ScanRow(n, None, None, getattr(exc, "stats", None), str(exc))
            continue
        yield ScanRow(n, out.verdict, out.counterexample, out.stats)


__all__ = [
    "ALL_GOOD",
    "COUNTEREXAMPLE",
    "BudgetExceeded",
    "CanonicalCode",
    "ScanRow",
    "SearchError",
    "SearchOptions",
    "SearchOutcome",
    "SearchQuery",
    "SearchStats",
    "SearchTooLarge",
    "decide",
    "decide_brute",
    "enumerate_classes",
    "estimated_classes",
    "scan",
]
