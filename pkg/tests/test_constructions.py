import filecmp
from pathlib import Path

import pytest

from dmramsey import graph as G
from dmramsey.coloring import EdgeColoring, color_subgraph, verify
from dmramsey.constructions import (
    FIXTURE_FILES,
    ConstructionError,
    SeedSet,
    figure_colorings,
    join_blocks,
    lower_bound_coloring,
    lower_bound_size,
    m3_family,
    offdiag_tight,
    remark1_lift,
)
from dmramsey.paths import mp_exact

ROOT = Path(__file__).resolve().parents[1]


def _cases():
    for k in range(2, 5):
        for m in range(3, 6):
            for t in range(m):
                if lower_bound_size(k, m, t) <= 64:
                    yield k, m, t


@pytest.mark.parametrize("k,m,t", list(_cases()))
def test_lower_bound_clean_and_sized(k, m, t):
    c = lower_bound_coloring(k, m, t)
    assert c.n == lower_bound_size(k, m, t) and c.k == k
    assert not verify(c, (m,) * k)


def test_lower_bound_examples():
    assert lower_bound_coloring(2, 3, 0).n == 3
    k6 = lower_bound_coloring(2, 4, 0)
    assert k6.n == 6
    assert sorted(len(x) for x in G.components(color_subgraph(k6, 0))) == [1, 2, 3]
    assert lower_bound_coloring(3, 3, 0).n == 5


def test_lower_bound_top_color_is_complete_multipartite():
    for k, m, t in [(3, 3, 0), (3, 4, 1), (4, 3, 2)]:
        c = lower_bound_coloring(k, m, t)
        top = color_subgraph(c, k - 1)
        parts = G.components(G.complement(top))
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                assert all(top.has_edge(u, v) for u in a for v in b)
        assert len(parts) == m - 1


def test_lower_bound_errors():
    with pytest.raises(ConstructionError):
        lower_bound_coloring(2, 3, 3)
    with pytest.raises(ConstructionError):
        lower_bound_coloring(4, 6, 0)
    with pytest.raises(ConstructionError):
        lower_bound_coloring(1, 3, 0)


def test_lift_examples():
    fam = figure_colorings()
    assert remark1_lift(fam, 3).sizes == (13, 12, 11)
    small = SeedSet(tuple(lower_bound_coloring(2, 3, t) for t in (0, 1, 2)), 3)
    assert small.sizes == (3, 2, 1)
    lifted = remark1_lift(small, 3)
    assert lifted.sizes == (5, 4, 3) and lifted.k == 3
    assert all(not verify(c, (3, 3, 3)) for c in lifted.members)
    assert remark1_lift(remark1_lift(fam)).sizes == (25, 24, 23)


def test_lift_rejects_bad_seeds():
    fam = figure_colorings()
    with pytest.raises(ConstructionError):
        SeedSet(fam.members[:2], 3)
    with pytest.raises(ConstructionError):
        SeedSet((fam.members[0], fam.members[2], fam.members[1]), 3)
    with pytest.raises(ConstructionError):
        remark1_lift(fam, 4)
    with pytest.raises(ConstructionError):
        remark1_lift(m3_family(6))


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_offdiag_tight(m):
    c = offdiag_tight(m)
    assert c.n == 2 * m - 3
    assert color_subgraph(c, 1) == G.complete_bipartite(m - 1, m - 2)
    assert mp_exact(color_subgraph(c, 0)).value == m - 1
    assert mp_exact(color_subgraph(c, 1)).value == 2
    assert not verify(c, (m, 3))


@pytest.mark.parametrize("k,sizes", [(3, (7, 6, 5)), (4, (13, 12, 11)), (5, (25, 24, 23)), (6, (49, 48, 47))])
def test_m3_family(k, sizes):
    fam = m3_family(k)
    assert fam.sizes == sizes and fam.k == k
    fam.check()


def test_m3_family_range():
    for k in (2, 7):
        with pytest.raises(ConstructionError):
            m3_family(k)


def test_join_blocks_layout():
    a = EdgeColoring(2, 2, (0,))
    b = EdgeColoring(3, 2, (0, 0, 0))
    c = join_blocks([a, b], 2, 1)
    assert c.color(0, 1) == 0 and c.color(1, 2) == 1 and c.color(2, 4) == 0


def test_top_level_fixtures_match_package():
    pkg = ROOT / "src" / "dmramsey" / "fixtures"
    for name in list(FIXTURE_FILES.values()) + ["k23_u_k2.graph"]:
        assert filecmp.cmp(pkg / name, ROOT / "fixtures" / name, shallow=False)
