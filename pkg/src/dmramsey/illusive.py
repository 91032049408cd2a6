"""Exhaustive checks of degree-dominance statements about bipartite graphs.

A bipartite graph with sides A, B is *illusive* when A has no isolated
vertex, every v in A has degree at least that of each neighbour, and either
|A| > |B|, or |A| = |B| with at least one strict inequality across an edge.
The functions here search small cases for illusive graphs and for the
related structures, and evaluate the integer inequality used when ruling
out 2^k - 1 vertices for paths of order 3.

Bipartite graphs are enumerated as biadjacency matrices: row i is a bitmask
over the B side. Rows are generated in nonincreasing order and column
prefixes are kept nonincreasing; a final canonicity check keeps one matrix
per class under row and column permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from .graph import Bipartition, Graph, bits, build_graph, components

SCAN_MAX_VERTICES = 14
KK1_MAX = 5
BALANCED_MAX_VERTICES = 12


@dataclass(frozen=True)
class IllusiveCandidate:
    graph: Graph
    bipartition: Bipartition

    def __post_init__(self) -> None:
        a, b = self.bipartition.left, self.bipartition.right
        if a & b or (a | b) != frozenset(range(self.graph.n)):
            raise ValueError("bipartition must split the vertex set")
        for u, v in self.graph.edges():
            if (u in a) == (v in a):
                raise ValueError(f"edge ({u}, {v}) lies inside one side")


def is_illusive(cand: IllusiveCandidate) -> bool:
    g = cand.graph
    a, b = cand.bipartition.left, cand.bipartition.right
    if len(a) < len(b):
        return False
    deg = g.degrees()
    strict = False
    for v in a:
        if deg[v] == 0:
            return False
        for u in bits(g.adj[v]):
            if deg[v] < deg[u]:
                return False
            if deg[v] > deg[u]:
                strict = True
    return len(a) > len(b) or strict


def biadjacency_graph(rows: tuple[int, ...], q: int) -> IllusiveCandidate:
    """Graph with A = 0..p-1 and B = p..p+q-1 from row bitmasks over B."""
    p = len(rows)
    g = build_graph(p + q, [(i, p + j) for i, r in enumerate(rows) for j in bits(r)])
    return IllusiveCandidate(g, Bipartition(frozenset(range(p)), frozenset(range(p, p + q))))


def _canonical(rows: tuple[int, ...], q: int) -> bool:
    # canonical = rows sorted descending and maximal over column permutations
    for perm in permutations(range(q)):
        image = []
        for r in rows:
            x = 0
            for j in bits(r):
                x |= 1 << perm[j]
            image.append(x)
        if tuple(sorted(image, reverse=True)) > rows:
            return False
    return True


def _column_code(rows: list[int], j: int) -> int:
    code = 0
    for r in rows:
        code = code << 1 | (r >> j & 1)
    return code


def biadjacency_classes(p: int, q: int, *, min_row_degree: int = 0,
                        dominance: Optional[str] = None, exact: bool = True) -> Iterator[tuple[int, ...]]:
    """Biadjacency matrices p x q, one per class under row/column permutations.

    ``dominance`` prunes partial matrices: ``"weak"`` keeps deg(v) >= deg(u)
    across every edge, ``"strict"`` keeps deg(v) > deg(u). Column degrees only
    grow as rows are added, so a violated bound never recovers.
    """
    full = (1 << q) - 1
    masks = sorted(range(full + 1), key=lambda r: -r)
    masks = [r for r in masks if r.bit_count() >= min_row_degree]
    strict = dominance == "strict"

    def rec(rows: list[int], start: int, colcount: list[int], cap: list[int]) -> Iterator[tuple[int, ...]]:
        if len(rows) == p:
            out = tuple(rows)
            if not exact or _canonical(out, q):
                yield out
            return
        for idx in range(start, len(masks)):
            r = masks[idx]
            d = r.bit_count()
            counts = colcount[:]
            caps = cap[:]
            ok = True
            for j in bits(r):
                counts[j] += 1
                caps[j] = min(caps[j], d)
            if dominance is not None:
                for j in bits(r):
                    if counts[j] > caps[j] or (strict and counts[j] == caps[j]):
                        ok = False
                        break
            if not ok:
                continue
            new_rows = rows + [r]
            # column prefixes must stay nonincreasing, high bit first
            codes = [_column_code(new_rows, j) for j in range(q)]
            if any(codes[j] > codes[j + 1] for j in range(q - 1)):
                continue
            yield from rec(new_rows, idx, counts, caps)

    big = 1 << 30
    yield from rec([], 0, [0] * q, [big] * q)


def _dominance_holds(rows: tuple[int, ...], q: int, strict: bool) -> bool:
    colcount = [0] * q
    for r in rows:
        for j in bits(r):
            colcount[j] += 1
    for r in rows:
        d = r.bit_count()
        for j in bits(r):
            if colcount[j] > d or (strict and colcount[j] == d):
                return False
    return True


def scan_illusive(max_vertices: int) -> Optional[IllusiveCandidate]:
    """Search every bipartite graph with |A| >= |B|, |A| + |B| <= max_vertices; None if none is illusive."""
    if not 0 <= max_vertices <= SCAN_MAX_VERTICES:
        raise ValueError(f"bound must lie in 0..{SCAN_MAX_VERTICES}")
    for total in range(1, max_vertices + 1):
        for q in range(0, total // 2 + 1):
            p = total - q
            for rows in biadjacency_classes(p, q, min_row_degree=1, dominance="weak", exact=False):
                cand = biadjacency_graph(rows, q)
                if is_illusive(cand):
                    return cand
    return None


def check_k_kplus1(k: int) -> bool:
    """True iff K_{k,k+1} is the only graph with |A|=k, |B|=k+1 and strict dominance from A."""
    if not 1 <= k <= KK1_MAX:
        raise ValueError(f"k must lie in 1..{KK1_MAX}")
    found = [rows for rows in biadjacency_classes(k, k + 1, min_row_degree=1, dominance="strict")
             if _dominance_holds(rows, k + 1, strict=True)]
    complete = (1 << (k + 1)) - 1
    return found == [(complete,) * k]


def check_balanced_regular(max_vertices: int) -> bool:
    """Connected bipartite graphs with |A| >= |B| and weak dominance from A are balanced and regular."""
    if not 2 <= max_vertices <= BALANCED_MAX_VERTICES:
        raise ValueError(f"bound must lie in 2..{BALANCED_MAX_VERTICES}")
    for cand in balanced_regular_instances(max_vertices):
        g = cand.graph
        degs = set(g.degrees())
        if len(cand.bipartition.left) != len(cand.bipartition.right) or len(degs) != 1:
            return False
    return True


def balanced_regular_instances(max_vertices: int) -> Iterator[IllusiveCandidate]:
    """Every connected graph meeting the hypothesis, sides at least one vertex each."""
    for total in range(2, max_vertices + 1):
        for q in range(1, total // 2 + 1):
            p = total - q
            for rows in biadjacency_classes(p, q, min_row_degree=1, dominance="weak"):
                cand = biadjacency_graph(rows, q)
                if len(components(cand.graph)) == 1 and _dominance_holds(rows, q, strict=False):
                    yield cand


@dataclass(frozen=True)
class Margin:
    k: int
    root: int  # ceil(sqrt((2^(k-1)-1)(2^k-k-1)/k))
    divisor: int  # 2^floor((k-1)/2)
    lhs: int
    rhs: int
    holds: bool


def ceil_sqrt_ratio(num: int, den: int) -> int:
    """Least s >= 0 with s*s*den >= num, by monotone search."""
    lo, hi = 0, 1
    while hi * hi * den < num:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid * mid * den >= num:
            hi = mid
        else:
            lo = mid + 1
    return lo


def lemma36_margin(k: int) -> Margin:
    """Compare ceil(root / 2^floor((k-1)/2)) with k - floor((k-1)/2).

    Strict inequality is required unless the left side is odd, in which case
    equality suffices.
    """
    if not 4 <= k <= 20:
        raise ValueError("k must lie in 4..20")
    num = (2 ** (k - 1) - 1) * (2 ** k - k - 1)
    root = ceil_sqrt_ratio(num, k)
    divisor = 2 ** ((k - 1) // 2)
    lhs = -(-root // divisor)
    rhs = k - (k - 1) // 2
    holds = lhs > rhs or (lhs % 2 == 1 and lhs >= rhs)
    return Margin(k, root, divisor, lhs, rhs, holds)


__all__ = [
    "IllusiveCandidate",
    "Margin",
    "balanced_regular_instances",
    "biadjacency_classes",
    "check_balanced_regular",
    "check_k_kplus1",
    "is_illusive",
    "lemma36_margin",
    "scan_illusive",
]
