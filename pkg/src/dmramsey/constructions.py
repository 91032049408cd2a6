"""Colorings of K_n with no monochromatic degree-monotone path of a given order.

Every generator checks its own output with ``verify`` before returning it.
Blocks are laid out in ascending block order, each keeping its internal
labeling shifted by an offset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .coloring import EdgeColoring, from_function, parse_coloring, verify
from .graph import MAX_VERTICES


class ConstructionError(ValueError):
    pass


def lower_bound_size(k: int, m: int, t: int = 0) -> int:
    """((m-1)^k + (m-1)) / 2 - t, which is always an integer."""
    return ((m - 1) ** k + (m - 1)) // 2 - t


def join_blocks(blocks: Sequence[EdgeColoring], k: int, cross: int) -> EdgeColoring:
    """Disjoint union of ``blocks`` (each using colors < k) with every cross pair colored ``cross``."""
    owner: list[tuple[int, int]] = []
    for b, block in enumerate(blocks):
        owner.extend((b, i) for i in range(block.n))
    n = len(owner)
    if n > MAX_VERTICES:
        raise ConstructionError(f"construction needs {n} > {MAX_VERTICES} vertices")

    def color(u: int, v: int) -> int:
        (bu, iu), (bv, iv) = owner[u], owner[v]
        if bu != bv:
            return cross
        return blocks[bu].color(iu, iv)

    return from_function(n, k, color)


def _assert_clean(c: EdgeColoring, m: int) -> EdgeColoring:
    hit = verify(c, (m,) * c.k)
    if hit:
        raise AssertionError(f"construction on {c.n} vertices has an mdm-path in color {hit.found[0]}")
    return c


def _check_km(k: int, m: int) -> None:
    if k < 2:
        raise ConstructionError("need at least 2 colors")
    if m < 3:
        raise ConstructionError("need path order m >= 3")


def lower_bound_coloring(k: int, m: int, t: int = 0) -> EdgeColoring:
    """k-coloring of K_N, N = ((m-1)^k + (m-1))/2 - t, without an mdm-path of order m.

    For two colors the vertex set is split into cliques of sizes 1..m-1 (the
    clique of size t dropped when t >= 1), colored 0 inside and 1 across.
    For more colors, m such colorings with one color fewer and sizes N', N'-1,
    ..., N'-m+1 are joined with the new color, leaving out the one of size
    N' - (m-1-t).
    """
    _check_km(k, m)
    if not 0 <= t <= m - 1:
        raise ConstructionError(f"t must lie in 0..{m - 1}")
    size = lower_bound_size(k, m, t)
    if size > MAX_VERTICES:
        raise ConstructionError(f"construction needs {size} > {MAX_VERTICES} vertices")
    return _assert_clean(_lower_bound(k, m, t), m)


@lru_cache(maxsize=None)
def _lower_bound(k: int, m: int, t: int) -> EdgeColoring:
    if k == 2:
        sizes = [j for j in range(1, m) if j != t]
        blocks = [EdgeColoring(s, 2, (0,) * (s * (s - 1) // 2)) for s in sizes]
        return join_blocks(blocks, 2, 1)
    seeds = [_lower_bound(k - 1, m, s) for s in range(m)]
    blocks = [seeds[s] for s in range(m) if s != m - 1 - t]
    blocks = [EdgeColoring(b.n, k, b.colors) for b in blocks]
    return join_blocks(blocks, k, k - 1)


@dataclass(frozen=True)
class SeedSet:
    """m colorings on t, t-1, ..., t-m+1 vertices, none with an mdm-path of order m."""

    members: tuple[EdgeColoring, ...]
    m: int

    def __post_init__(self) -> None:
        if len(self.members) != self.m:
            raise ConstructionError(f"need {self.m} seeds, got {len(self.members)}")
        ks = {c.k for c in self.members}
        if len(ks) != 1:
            raise ConstructionError("seeds must share the color count")
        top = self.members[0].n
        if [c.n for c in self.members] != list(range(top, top - self.m, -1)):
            raise ConstructionError("seed sizes must be consecutive and descending")

    @property
    def k(self) -> int:
        return self.members[0].k

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.n for c in self.members)

    def check(self) -> None:
        for c in self.members:
            _assert_clean(c, self.m)


def remark1_lift(seeds: SeedSet, m: int | None = None) -> SeedSet:
    """Lift m seed colorings with k colors to m colorings with k+1 colors.

    Output j leaves out the seed of size t-(m-1-j) and joins the others with
    the new color, giving sizes q, q-1, ..., q-m+1 where
    q = (m-1)t - (m-1)(m-2)/2 and t is the largest seed size.
    """
    m = seeds.m if m is None else m
    if m != seeds.m:
        raise ConstructionError("order does not match the seed set")
    t, k = seeds.sizes[0], seeds.k
    q = (m - 1) * t - (m - 1) * (m - 2) // 2
    if q > MAX_VERTICES:
        raise ConstructionError(f"lift needs {q} > {MAX_VERTICES} vertices")
    widened = [EdgeColoring(c.n, k + 1, c.colors) for c in seeds.members]
    out = []
    for j in range(m):
        drop = m - 1 - j
        blocks = [c for i, c in enumerate(widened) if i != drop]
        out.append(_assert_clean(join_blocks(blocks, k + 1, k), m))
    lifted = SeedSet(tuple(out), m)
    if lifted.sizes[0] != q:
        raise AssertionError(f"lifted size {lifted.sizes[0]} != {q}")
    return lifted


def offdiag_tight(m: int) -> EdgeColoring:
    """2-coloring of K_{2m-3}: color 1 is K_{m-1,m-2}, color 0 the two cliques.

    Color 0 has no degree-monotone path of order m and color 1 none of order 3.
    """
    if m < 3:
        raise ConstructionError("need m >= 3")
    n = 2 * m - 3
    if n > MAX_VERTICES:
        raise ConstructionError(f"construction needs {n} > {MAX_VERTICES} vertices")
    left = m - 1
    c = from_function(n, 2, lambda u, v: int((u < left) != (v < left)))
    if verify(c, (m, 3)):
        raise AssertionError("tight coloring has a required path")
    return c


FIXTURE_FILES = {7: "fig1_k7.kcol", 6: "fig2_k6.kcol", 5: "fig2_k5.kcol"}


def load_fixture(name: str) -> str:
    return resources.files("dmramsey").joinpath("fixtures", name).read_text()


def figure_colorings() -> SeedSet:
    """The stored 3-colorings of K_7, K_6, K_5 without an mdm-path of order 3."""
    members = tuple(parse_coloring(load_fixture(FIXTURE_FILES[n])) for n in (7, 6, 5))
    return SeedSet(members, 3)


M3_MAX_COLORS = 6


def m3_family(k: int) -> SeedSet:
    """k-colorings of K_q, K_{q-1}, K_{q-2}, q = 3*2^(k-2) + 1, without an mdm-path of order 3."""
    if not 3 <= k <= M3_MAX_COLORS:
        raise ConstructionError(f"k must lie in 3..{M3_MAX_COLORS}")
    seeds = figure_colorings()
    seeds.check()
    for _ in range(k - 3):
        seeds = remark1_lift(seeds, 3)
    return seeds
