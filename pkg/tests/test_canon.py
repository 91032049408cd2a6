from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given

from dmramsey.canon import (
    VERTEX_ONLY,
    WITH_COLORS,
    brute_canonical_form,
    canonical_coloring,
    canonical_form,
    color_group,
    decode,
    isomorphic,
    labeling,
)
from dmramsey.coloring import EdgeColoring, recolor, relabel
from dmramsey.constructions import figure_colorings
from dmramsey.search import enumerate_classes

from conftest import colorings


def burnside(n, k, sigmas):
    """Orbit count of k-colorings of the pairs of K_n under S_n x <sigmas>."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    total = Fraction(0)
    for perm in permutations(range(n)):
        # cycle lengths of the induced permutation on pairs
        seen, lengths = set(), []
        for p in pairs:
            if p in seen:
                continue
            length, q = 0, p
            while q not in seen:
                seen.add(q)
                length += 1
                a, b = perm[q[0]], perm[q[1]]
                q = (min(a, b), max(a, b))
            lengths.append(length)
        for sigma in sigmas:
            fixed = 1
            for length in lengths:
                count = 0
                for x in range(k):
                    y = x
                    for _ in range(length):
                        y = sigma[y]
                    count += y == x
                fixed *= count
            total += fixed
    return total / (factorial(n) * len(sigmas))


def test_k3_code_counts():
    all8 = [EdgeColoring(3, 2, c) for c in product(range(2), repeat=3)]
    assert len({canonical_form(c, WITH_COLORS, (3, 3)) for c in all8}) == 2
    assert len({canonical_form(c, VERTEX_ONLY) for c in all8}) == 4


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k,orders,mode", [
    (2, None, VERTEX_ONLY),
    (2, (3, 3), WITH_COLORS),
    (2, (3, 4), WITH_COLORS),
    (3, (3, 3, 3), WITH_COLORS),
    (3, (3, 3, 4), WITH_COLORS),
])
def test_class_counts_match_burnside(n, k, orders, mode):
    sigmas = color_group(k, orders, mode)
    got = sum(1 for _ in enumerate_classes(n, k, orders, mode))
    assert got == burnside(n, k, sigmas)


def test_graph_counts_vertex_only():
    known = [1, 2, 4, 11, 34, 156, 1044]
    for n, want in enumerate(known, start=1):
        assert sum(1 for _ in enumerate_classes(n, 2, None, VERTEX_ONLY)) == want


def test_enumerated_classes_distinct_and_canonical():
    reps = list(enumerate_classes(5, 3, (3, 3, 3)))
    codes = [canonical_form(c, WITH_COLORS, (3, 3, 3)) for c in reps]
    assert len(set(codes)) == len(codes)


@given(colorings(max_n=6))
def test_matches_brute_force(c):
    for mode, orders in ((VERTEX_ONLY, None), (WITH_COLORS, (3,) * c.k)):
        assert canonical_form(c, mode, orders) == brute_canonical_form(c, mode, orders)


@given(colorings(max_n=6))
def test_firsts_match_brute_force(c):
    lab = labeling(c, VERTEX_ONLY)
    best = lab.code.code
    firsts = set()
    for perm in permutations(range(c.n)):
        s = bytes(c.color(perm[u], perm[v]) for u in range(c.n) for v in range(u + 1, c.n))
        if s == best:
            firsts.add(perm[0])
    assert lab.firsts == firsts


@given(colorings(max_n=7))
def test_labeling_reproduces_code(c):
    lab = labeling(c, WITH_COLORS, (3,) * c.k)
    moved = recolor(c, lab.sigma)
    inv = [0] * c.n
    for i, v in enumerate(lab.perm):
        inv[v] = i
    assert relabel(moved, inv).colors == tuple(lab.code.code)


def test_fixture_invariant_under_relabel(rng):
    for c in figure_colorings().members:
        code = canonical_form(c, WITH_COLORS, (3, 3, 3))
        vcode = canonical_form(c, VERTEX_ONLY)
        for _ in range(1000):
            perm = list(range(c.n))
            rng.shuffle(perm)
            d = relabel(c, perm)
            assert canonical_form(d, VERTEX_ONLY) == vcode
            if rng.random() < 0.2:
                sigma = list(range(3))
                rng.shuffle(sigma)
                assert canonical_form(recolor(d, sigma), WITH_COLORS, (3, 3, 3)) == code


@given(colorings(max_n=7, k=2))
def test_off_diagonal_colors_not_swapped(c):
    swapped = recolor(c, (1, 0))
    assert isomorphic(c, swapped, WITH_COLORS, (3, 3))
    assert isomorphic(c, swapped, WITH_COLORS, (3, 4)) == isomorphic(c, swapped, VERTEX_ONLY)


def test_decode_and_canonical_coloring():
    c = figure_colorings().members[2]
    cc = canonical_coloring(c, WITH_COLORS, (3, 3, 3))
    assert decode(c.n, c.k, canonical_form(c, WITH_COLORS, (3, 3, 3))) == cc
    assert canonical_form(cc, WITH_COLORS, (3, 3, 3)) == canonical_form(c, WITH_COLORS, (3, 3, 3))


def test_size_guard():
    with pytest.raises(ValueError):
        canonical_form(EdgeColoring(13, 1, (0,) * 78))
    with pytest.raises(ValueError):
        color_group(2, (3,), WITH_COLORS)
    with pytest.raises(ValueError):
        color_group(2, (3, 3), "bogus")
