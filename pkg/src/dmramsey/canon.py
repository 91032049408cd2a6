"""Canonical codes for edge colorings of K_n.

The code is the lexicographically least slot string (slots in row order
``(0,1), (0,2), ..., (n-2,n-1)``) over all vertex relabellings, optionally
also over color permutations that exchange colors with equal required order.

The search picks the vertex for position 0, 1, ... in turn. Once positions
``0..d-1`` are fixed, the remaining positions split into cells by their colors
to the fixed vertices, and row ``d`` is least when each cell is sorted by the
color to the vertex placed at ``d``. Only candidates giving the least row
are expanded. Twins (vertices with identical color vectors) and automorphisms
found along the way cut the branching.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .coloring import EdgeColoring

CANON_MAX_VERTICES = 12

VERTEX_ONLY = "vertex_only"
WITH_COLORS = "vertex_and_equal_order_colors"


@dataclass(frozen=True, order=True)
class CanonicalCode:
    code: bytes

    def hex(self) -> str:
        return self.code.hex()


@dataclass(frozen=True)
class Labeling:
    code: CanonicalCode
    perm: tuple[int, ...]  # perm[i] = original vertex placed at position i
    sigma: tuple[int, ...]  # color map applied before relabelling
    firsts: frozenset[int]  # original vertices that can occupy position 0


def color_group(k: int, orders: Sequence[int] | None, mode: str) -> list[tuple[int, ...]]:
    """Color maps allowed by ``mode``; maps only exchange colors with equal order."""
    if mode == VERTEX_ONLY:
        return [tuple(range(k))]
    if mode != WITH_COLORS:
        raise ValueError(f"unknown canonical mode {mode!r}")
    orders = tuple(orders) if orders is not None else (0,) * k
    if len(orders) != k:
        raise ValueError("orders length must equal k")
    return [s for s in permutations(range(k)) if all(orders[s[j]] == orders[j] for j in range(k))]


def matrix(c: EdgeColoring, sigma: Sequence[int] | None = None) -> list[list[int]]:
    n = c.n
    m = [[-1] * n for _ in range(n)]
    it = iter(c.colors)
    for u in range(n):
        for v in range(u + 1, n):
            x = next(it)
            if sigma is not None:
                x = sigma[x]
            m[u][v] = m[v][u] = x
    return m


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def _twin_classes(m: list[list[int]], n: int) -> list[int]:
    # class id per vertex; twins have identical colors to every third vertex
    cls = list(range(n))
    for u in range(n):
        if cls[u] != u:
            continue
        mu = m[u]
        for w in range(u + 1, n):
            if cls[w] != w:
                continue
            mw = m[w]
            if all(mu[x] == mw[x] for x in range(n) if x != u and x != w):
                cls[w] = u
    return cls


def _min_rows(m: list[list[int]], n: int):
    """Least row sequence over vertex orders, a permutation reaching it, and its first-position orbit."""
    if n == 1:
        return [], [0], frozenset([0]), True
    twin = _twin_classes(m, n)
    orbits = _UnionFind(n)
    for v in range(n):
        orbits.union(v, twin[v])
    best: list = []
    best_perm: list[int] = []
    symmetric = any(twin[v] != v for v in range(n))

    def expand(v: int, cells: list[list[int]]):
        mv = m[v]
        row: list[int] = []
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                x = cell[0]
                if x != v:
                    row.append(mv[x])
                    out.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for x in cell:
                if x != v:
                    buckets.setdefault(mv[x], []).append(x)
            for col in sorted(buckets):
                b = buckets[col]
                row.extend([col] * len(b))
                out.append(b)
        return tuple(row), out

    def leaf(prefix: list[int], rows: list, cells: list[list[int]]) -> None:
        nonlocal best, best_perm, symmetric
        # all remaining cells are singletons: the order is forced
        perm = prefix + [c[0] for c in cells]
        for d in range(len(prefix), n - 1):
            mv = m[perm[d]]
            rows.append(tuple(mv[x] for x in perm[d + 1:]))
        if not best or rows < best:
            best, best_perm = rows, perm
        elif rows == best:
            # best_perm -> perm is an automorphism
            symmetric = True
            for a, b in zip(best_perm, perm):
                orbits.union(a, b)

    def search(prefix: list[int], cells: list[list[int]], rows: list) -> None:
        if all(len(c) == 1 for c in cells):
            leaf(prefix, rows, cells)
            return
        depth = len(prefix)
        options = []
        tried = set()
        for v in cells[0]:
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            row, out = expand(v, cells)
            options.append((row, v, out))
        low = min(o[0] for o in options)
        for row, v, out in options:
            if row != low:
                continue
            cur = rows + [row]
            if best and cur > best[: depth + 1]:
                continue
            search(prefix + [v], out, cur)

    # position 0: every vertex is a candidate; skip those in a known orbit
    options = []
    for v in range(n):
        row, out = expand(v, [list(range(n))])
        options.append((row, v, out))
    low = min(o[0] for o in options)
    starters = [v for row, v, _ in options if row == low]
    explored: list[int] = []
    for row, v, out in options:
        if row != low:
            continue
        if any(orbits.find(v) == orbits.find(u) for u in explored):
            continue
        explored.append(v)
        if best and [row] > best[:1]:
            continue
        search([v], out, [row])
    firsts = frozenset(v for v in starters if orbits.find(v) == orbits.find(best_perm[0]))
    return best, best_perm, firsts, not symmetric


def label_matrix(m: list[list[int]], n: int, sigmas: Sequence[Sequence[int]]):
    """Canonical rows of a color matrix over ``sigmas``.

    Returns ``(rows, perm, sigma, firsts, rigid)`` where ``rigid`` is True iff
    the only symmetry of the matrix in the group is the identity.
    """
    found = None
    firsts: set[int] = set()
    rigid = True
    if len(sigmas) > 1 and n > 1:
        # row 0 under sigma is least for the vertex with the largest permuted color counts
        k = len(sigmas[0])
        counts = []
        for row in m:
            cnt = [0] * k
            for x in row:
                if x >= 0:
                    cnt[x] += 1
            counts.append(cnt)
        tops = []
        for sigma in sigmas:
            inv = [0] * k
            for j, s in enumerate(sigma):
                inv[s] = j
            tops.append(max(tuple(cnt[inv[j]] for j in range(k)) for cnt in counts))
        best_top = max(tops)
        sigmas = [s for s, top in zip(sigmas, tops) if top == best_top]
    for sigma in sigmas:
        mm = m if _is_identity(sigma) else [[sigma[x] if x >= 0 else x for x in row] for row in m]
        rows, perm, first, alone = _min_rows(mm, n)
        if found is None or rows < found[0]:
            found = (rows, perm, sigma)
            firsts = set(first)
            rigid = alone
        elif rows == found[0]:
            firsts |= first
            rigid = False
    rows, perm, sigma = found
    return rows, perm, sigma, frozenset(firsts), rigid


def _is_identity(sigma: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(sigma))


def labeling(c: EdgeColoring, mode: str = VERTEX_ONLY, orders: Sequence[int] | None = None) -> Labeling:
    if c.n > CANON_MAX_VERTICES:
        raise ValueError(f"exact canonical form limited to {CANON_MAX_VERTICES} vertices, got {c.n}")
    rows, perm, sigma, firsts, _ = label_matrix(matrix(c), c.n, color_group(c.k, orders, mode))
    code = CanonicalCode(bytes(x for row in rows for x in row))
    return Labeling(code, tuple(perm), tuple(sigma), frozenset(firsts))


def canonical_form(c: EdgeColoring, mode: str = VERTEX_ONLY, orders: Sequence[int] | None = None) -> CanonicalCode:
    """Least slot string of ``c`` over the symmetry group selected by ``mode``."""
    return labeling(c, mode, orders).code


def canonical_coloring(c: EdgeColoring, mode: str = VERTEX_ONLY, orders: Sequence[int] | None = None) -> EdgeColoring:
    """The representative whose slot string is the canonical code."""
    lab = labeling(c, mode, orders)
    return EdgeColoring(c.n, c.k, tuple(lab.code.code))


def brute_canonical_form(c: EdgeColoring, mode: str = VERTEX_ONLY, orders: Sequence[int] | None = None) -> CanonicalCode:
    """Minimum over every vertex permutation and allowed color map; for small n only."""
    if c.n > 8:
        raise ValueError("brute-force canonical form limited to 8 vertices")
    best = None
    for sigma in color_group(c.k, orders, mode):
        for perm in permutations(range(c.n)):
            s = bytes(sigma[c.color(perm[u], perm[v])] for u in range(c.n) for v in range(u + 1, c.n))
            if best is None or s < best:
                best = s
    return CanonicalCode(best if best is not None else b"")


def isomorphic(a: EdgeColoring, b: EdgeColoring, mode: str = VERTEX_ONLY, orders: Sequence[int] | None = None) -> bool:
    return (a.n, a.k) == (b.n, b.k) and canonical_form(a, mode, orders) == canonical_form(b, mode, orders)


def decode(n: int, k: int, code: CanonicalCode) -> EdgeColoring:
    return EdgeColoring(n, k, tuple(code.code))


__all__ = [
    "CanonicalCode",
    "Labeling",
    "VERTEX_ONLY",
    "WITH_COLORS",
    "brute_canonical_form",
    "canonical_coloring",
    "canonical_form",
    "color_group",
    "decode",
    "isomorphic",
    "labeling",
]
