"""Degree-monotone paths.

A path ``v_1 .. v_m`` is degree-monotone when ``deg(v_1) <= ... <= deg(v_m)``
with degrees taken in the host graph. ``mp(G)`` is the largest order (vertex
count) of such a path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits

ORACLE_MAX_VERTICES = 12
CHROMATIC_MAX_VERTICES = 25


@dataclass(frozen=True)
class DegreeMonotonePath:
    vertices: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        """Check the witness against ``g`` without trusting how it was found."""
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs) or len(self.degrees) != len(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        if any(g.degree(v) != d for v, d in zip(vs, self.degrees)):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        return all(a <= b for a, b in zip(self.degrees, self.degrees[1:]))


@dataclass(frozen=True)
class MpResult:
    value: int
    witness: DegreeMonotonePath


def _witness(g: Graph, vertices) -> DegreeMonotonePath:
    vs = tuple(vertices)
    return DegreeMonotonePath(vs, tuple(g.degree(v) for v in vs))


def mp_exact(g: Graph) -> MpResult:
    """Longest degree-monotone path, with a witness.

    Once a path steps to a strictly larger degree, no earlier vertex can be
    revisited, so the only state that matters is the current vertex and the
    set already used inside its degree class. That state is memoised.
    """
    if g.n == 0:
        raise ValueError("mp is undefined on the empty graph")
    deg = g.degrees()
    n = g.n
    same = {}
    for v in range(n):
        same[deg[v]] = same.get(deg[v], 0) | 1 << v
    at_least = {d: sum(m for e, m in same.items() if e >= d) for d in same}
    memo: dict[tuple[int, int], tuple[int, int]] = {}

    def longest(v: int, used: int) -> int:
        # used: vertices of v's degree class already on the path (v included)
        key = (v, used)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        d = deg[v]
        cap = 1 + (at_least[d] & ~used).bit_count()
        best, nxt = 1, -1
        for w in bits(g.adj[v] & at_least[d] & ~used):
            if deg[w] == d:
                length = 1 + longest(w, used | 1 << w)
            else:
                length = 1 + longest(w, 1 << w)
            if length > best:
                best, nxt = length, w
                if best == cap:
                    break
        memo[key] = (best, nxt)
        return best

    best, start = 0, 0
    for v in sorted(range(n), key=lambda x: deg[x]):
        length = longest(v, 1 << v)
        if length > best:
            best, start = length, v
            if best == n:
                break
    walk = [start]
    used = 1 << start
    while True:
        nxt = memo[(walk[-1], used)][1]
        if nxt < 0:
            break
        used = used | 1 << nxt if deg[nxt] == deg[walk[-1]] else 1 << nxt
        walk.append(nxt)
    return MpResult(best, _witness(g, walk))


def mp_oracle(g: Graph) -> int:
    """Reference mp by enumerating simple paths one vertex at a time.

    Extensions that break monotonicity are dropped, which loses nothing since
    every prefix of a monotone path is monotone.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        raise ValueError("mp is undefined on the empty graph")
    deg = g.degrees()
    nbrs = [g.neighbors(v) for v in range(g.n)]
    best = 1
    stack = [(v, (v,)) for v in range(g.n)]
    while stack:
        v, walk = stack.pop()
        best = max(best, len(walk))
        for w in nbrs[v]:
            if w not in walk and deg[w] >= deg[v]:
                stack.append((w, walk + (w,)))
    return best


def has_mdm(g: Graph, m: int) -> DegreeMonotonePath | None:
    """A degree-monotone path of order exactly ``m`` if ``mp(g) >= m``, else None."""
    if m < 1:
        raise ValueError("order must be at least 1")
    if m > g.n:
        return None
    deg = g.degrees()
    if m == 1:
        return _witness(g, [0])
    if m == 2:
        for u in range(g.n):
            if g.adj[u]:
                v = next(iter(bits(g.adj[u])))
                return _witness(g, sorted((u, v), key=lambda x: deg[x]))
        return None
    if m == 3:
        # a middle vertex with one neighbour no larger and another no smaller
        for v in range(g.n):
            lo = hi = 0
            for w in bits(g.adj[v]):
                if deg[w] <= deg[v]:
                    lo |= 1 << w
                if deg[w] >= deg[v]:
                    hi |= 1 << w
            if lo and hi and (lo | hi).bit_count() >= 2:
                a = next(iter(bits(lo)))
                b = next(iter(bits(hi & ~(1 << a)))) if hi & ~(1 << a) else None
                if b is None:
                    b = next(iter(bits(hi)))
                    a = next(iter(bits(lo & ~(1 << b))))
                return _witness(g, [a, v, b])
        return None
    for v in range(g.n):
        found = _extend(g, deg, [v], 1 << v, m)
        if found:
            return _witness(g, found)
    return None


def _extend(g: Graph, deg: list[int], walk: list[int], used: int, m: int) -> list[int] | None:
    if len(walk) == m:
        return walk
    v = walk[-1]
    for w in bits(g.adj[v] & ~used):
        if deg[w] >= deg[v]:
            found = _extend(g, deg, walk + [w], used | 1 << w, m)
            if found:
                return found
    return None


def degree_orientation_lower(g: Graph) -> int:
    """Longest directed path after orienting every edge towards larger (degree, index)."""
    if g.n == 0:
        return 0
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (deg[v], v))
    rank = {v: i for i, v in enumerate(order)}
    longest = [1] * g.n
    for v in order:
        for w in bits(g.adj[v]):
            if rank[w] < rank[v]:
                longest[v] = max(longest[v], longest[w] + 1)
    return max(longest)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR branch and bound."""
    n = g.n
    if n > CHROMATIC_MAX_VERTICES:
        raise ValueError(f"exact colouring limited to {CHROMATIC_MAX_VERTICES} vertices, got {n}")
    if n == 0:
        return 0
    if not any(g.adj):
        return 1
    lower = len(_greedy_clique(g))
    best = _greedy_colors(g)
    if best == lower:
        return best
    color = [-1] * n
    deg = g.degrees()

    def search(colored: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if colored == n:
            best = used
            return
        # most saturated uncoloured vertex, ties broken by degree
        pick, pick_sat, pick_mask = -1, -1, 0
        for v in range(n):
            if color[v] >= 0:
                continue
            mask = 0
            for w in bits(g.adj[v]):
                if color[w] >= 0:
                    mask |= 1 << color[w]
            sat = mask.bit_count()
            if sat > pick_sat or (sat == pick_sat and deg[v] > deg[pick]):
                pick, pick_sat, pick_mask = v, sat, mask
        for c in range(min(used + 1, best - 1)):
            if pick_mask >> c & 1:
                continue
            color[pick] = c
            search(colored + 1, max(used, c + 1))
            color[pick] = -1
            if best == lower:
                return

    search(0, 0)
    return best


def _greedy_clique(g: Graph) -> list[int]:
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(bits(cand), key=lambda x: (g.adj[x] & cand).bit_count())
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _greedy_colors(g: Graph) -> int:
    color = [-1] * g.n
    for v in sorted(range(g.n), key=lambda x: -g.degree(x)):
        taken = {color[w] for w in bits(g.adj[v])}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return max(color) + 1
