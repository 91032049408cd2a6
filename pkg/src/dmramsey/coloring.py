"""Edge colorings of complete graphs and monochromatic degree-monotone paths.

Colors are 0-indexed. Slots are the pairs ``(u, v)`` with ``u < v`` in
lexicographic order ``(0,1), (0,2), ..., (n-2, n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .graph import MAX_VERTICES, Graph, _from_rows
from .paths import DegreeMonotonePath, has_mdm


class ColoringError(ValueError):
    pass


class ColoringFormatError(ColoringError):
    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def num_slots(n: int) -> int:
    return n * (n - 1) // 2


def slot_index(n: int, u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def slot_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@dataclass(frozen=True)
class EdgeColoring:
    n: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ColoringError("need n >= 1 and k >= 1")
        if self.n > MAX_VERTICES:
            raise ColoringError(f"n = {self.n} exceeds {MAX_VERTICES}")
        if len(self.colors) != num_slots(self.n):
            raise ColoringError(f"expected {num_slots(self.n)} slots, got {len(self.colors)}")
        for c in self.colors:
            if not 0 <= c < self.k:
                raise ColoringError(f"color {c} outside 0..{self.k - 1}")

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ColoringError("no slot for a loop")
        return self.colors[slot_index(self.n, u, v)]

    def rows(self) -> list[list[int]]:
        """Per color, the adjacency bit-rows of its spanning subgraph."""
        rows = [[0] * self.n for _ in range(self.k)]
        it = iter(self.colors)
        for u in range(self.n):
            for v in range(u + 1, self.n):
                r = rows[next(it)]
                r[u] |= 1 << v
                r[v] |= 1 << u
        return rows

    def __str__(self) -> str:
        return format_coloring(self)


def from_function(n: int, k: int, color: Callable[[int, int], int]) -> EdgeColoring:
    return EdgeColoring(n, k, tuple(color(u, v) for u, v in slot_pairs(n)))


def from_rows(rows: Sequence[Sequence[int]]) -> EdgeColoring:
    """Inverse of ``EdgeColoring.rows``; every pair must be covered exactly once."""
    k, n = len(rows), len(rows[0])
    colors = []
    for u, v in slot_pairs(n):
        hit = [j for j in range(k) if rows[j][u] >> v & 1]
        if len(hit) != 1:
            raise ColoringError(f"pair ({u}, {v}) has {len(hit)} colors")
        colors.append(hit[0])
    return EdgeColoring(n, k, tuple(colors))


def relabel(c: EdgeColoring, perm: Sequence[int]) -> EdgeColoring:
    """Coloring in which vertex ``perm[u]`` takes the role of old vertex ``u``."""
    inv = [0] * c.n
    for u, p in enumerate(perm):
        inv[p] = u
    return from_function(c.n, c.k, lambda a, b: c.color(inv[a], inv[b]))


def recolor(c: EdgeColoring, sigma: Sequence[int]) -> EdgeColoring:
    """Apply the color map ``j -> sigma[j]``."""
    return EdgeColoring(c.n, c.k, tuple(sigma[x] for x in c.colors))


def color_subgraph(c: EdgeColoring, j: int) -> Graph:
    """Spanning graph on all n vertices formed by the edges colored ``j``."""
    if not 0 <= j < c.k:
        raise ColoringError(f"color {j} outside 0..{c.k - 1}")
    return _from_rows(c.n, c.rows()[j])


@dataclass(frozen=True)
class Verdict:
    found: tuple[int, DegreeMonotonePath] | None

    def __bool__(self) -> bool:
        return self.found is not None


def check_orders(orders: Sequence[int], k: int) -> tuple[int, ...]:
    orders = tuple(orders)
    if len(orders) != k:
        raise ColoringError(f"need {k} orders, got {len(orders)}")
    if any(m < 1 for m in orders):
        raise ColoringError("orders must be at least 1")
    return orders


def verify(c: EdgeColoring, orders: Sequence[int]) -> Verdict:
    """Least color j whose spanning subgraph has a degree-monotone path of order orders[j]."""
    orders = check_orders(orders, c.k)
    for j, rows in enumerate(c.rows()):
        g = _from_rows(c.n, rows)
        path = has_mdm(g, orders[j])
        if path is not None:
            if not path.is_valid_in(g) or path.order < orders[j]:
                raise AssertionError(f"invalid witness {path} in color {j}")
            return Verdict((j, path))
    return Verdict(None)


# ---------------------------------------------------------------------------
# text format


def format_coloring(c: EdgeColoring) -> str:
    lines = [f"kcoloring {c.n} {c.k}"]
    lines += [f"{u} {v} {x}" for (u, v), x in zip(slot_pairs(c.n), c.colors)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    """Parse ``kcoloring <n> <k>`` then one ``u v c`` line per slot in lexicographic order."""
    header = None
    expected: list[tuple[int, int]] = []
    colors: list[int] = []
    seen: set[tuple[int, int]] = set()
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        tok = line.split()
        if header is None:
            if len(tok) != 3 or tok[0] != "kcoloring" or not (tok[1].isdigit() and tok[2].isdigit()):
                raise ColoringFormatError("expected header 'kcoloring <n> <k>'", lineno)
            header = (int(tok[1]), int(tok[2]))
            n, k = header
            if n < 1 or k < 1 or n > MAX_VERTICES:
                raise ColoringFormatError(f"bad size n={n}, k={k}", lineno)
            expected = slot_pairs(n)
            continue
        n, k = header
        try:
            u, v, x = (int(t) for t in tok)
        except ValueError:
            raise ColoringFormatError("expected '<u> <v> <c>'", lineno) from None
        if not (0 <= u < v < n):
            raise ColoringFormatError(f"slot ({u}, {v}) invalid for n={n}", lineno)
        if (u, v) in seen:
            raise ColoringFormatError(f"duplicate slot ({u}, {v})", lineno)
        if not 0 <= x < k:
            raise ColoringFormatError(f"color {x} outside 0..{k - 1}", lineno)
        i = len(colors)
        if i >= len(expected) or expected[i] != (u, v):
            want = expected[i] if i < len(expected) else None
            raise ColoringFormatError(f"slot ({u}, {v}) out of order, expected {want}", lineno)
        seen.add((u, v))
        colors.append(x)
    if header is None:
        raise ColoringFormatError("missing 'kcoloring <n> <k>' header")
    if len(colors) != len(expected):
        missing = expected[len(colors)]
        raise ColoringFormatError(f"missing slot {missing}", last)
    return EdgeColoring(header[0], header[1], tuple(colors))


def read_coloring(path: str | Path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())


def write_coloring(c: EdgeColoring, path: str | Path) -> None:
    Path(path).write_text(format_coloring(c))
