"""Immutable undirected simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit-row per vertex: bit ``v`` of
``adj[u]`` is set iff ``uv`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class GraphFormatError(GraphError):
    """Malformed graph text; ``line`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex outside the graph")
            if row >> u & 1:
                raise GraphError(f"self-loop at {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, rejecting bad endpoints, loops and repeats."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _from_rows(n: int, adj: Sequence[int]) -> Graph:
    # rows are trusted here; skips the symmetric check on hot paths
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def empty(n: int) -> Graph:
    return build_graph(n, [])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; vertices 0..a-1 form the left side."""
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def matching(edges: int) -> Graph:
    """``edges`` disjoint copies of K_2; edge i joins 2i and 2i+1."""
    return build_graph(2 * edges, [(2 * i, 2 * i + 1) for i in range(edges)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


_FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "matching": (matching, 1),
}


def family(kind: str, params: Sequence[int]) -> Graph:
    """Named graph families: complete, complete_bipartite, path, cycle, matching."""
    try:
        make, arity = _FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}") from None
    if len(params) != arity:
        raise GraphError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if any(p < 0 for p in params):
        raise GraphError(f"negative size in {kind}{tuple(params)}")
    return make(*params)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with ``h`` relabelled by offset ``g.n``."""
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"union would have {g.n + h.n} > {MAX_VERTICES} vertices")
    return _from_rows(g.n + h.n, list(g.adj) + [row << g.n for row in h.adj])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return _from_rows(g.n, [full & ~row & ~(1 << u) for u, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled 0.. in increasing vertex order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in bits(g.adj[v]):
            if w in index:
                row |= 1 << index[w]
        rows.append(row)
    return _from_rows(len(keep), rows)


def graph_algebra(op: str, *operands) -> Graph:
    if op == "disjoint_union":
        return disjoint_union(*operands)
    if op == "complement":
        return complement(*operands)
    if op == "induced_subgraph":
        return induced_subgraph(*operands)
    raise GraphError(f"unknown graph operation {op!r}")


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[u]`` plays the role of old vertex ``u``."""
    rows = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in bits(g.adj[u]):
            row |= 1 << perm[v]
        rows[perm[u]] = row
    return _from_rows(g.n, rows)


# ---------------------------------------------------------------------------
# components and bipartiteness


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by least vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


@dataclass(frozen=True)
class OddCycleWitness:
    cycle: tuple[int, ...]


def bipartition_of(g: Graph) -> Bipartition | OddCycleWitness:
    """Two-colour ``g`` by BFS, or return an odd cycle.

    In every component the least vertex goes on the left side.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = [root]
        for u in queue:
            for v in bits(g.adj[u]):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    return OddCycleWitness(_odd_cycle(parent, u, v))
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    # u, v are adjacent with equal BFS parity: join their tree paths at the LCA
    up = [u]
    while parent[up[-1]] >= 0:
        up.append(parent[up[-1]])
    on_u = {x: i for i, x in enumerate(up)}
    vp = [v]
    while vp[-1] not in on_u:
        vp.append(parent[vp[-1]])
    return tuple(up[: on_u[vp[-1]] + 1] + vp[-2::-1])


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition_of(g), Bipartition)


# ---------------------------------------------------------------------------
# text format


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse ``graph <n>`` followed by ``e <u> <v>`` lines (u < v)."""
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if n is None:
            if len(tok) != 2 or tok[0] != "graph" or not tok[1].isdigit():
                raise GraphFormatError("expected header 'graph <n>'", lineno)
            n = int(tok[1])
            if n > MAX_VERTICES:
                raise GraphFormatError(f"vertex count {n} exceeds {MAX_VERTICES}", lineno)
            continue
        if len(tok) != 3 or tok[0] != "e":
            raise GraphFormatError("expected 'e <u> <v>'", lineno)
        try:
            u, v = int(tok[1]), int(tok[2])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range 0..{n - 1}", lineno)
        if u >= v:
            raise GraphFormatError("edge must be written with u < v", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'graph <n>' header")
    return build_graph(n, edges)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
