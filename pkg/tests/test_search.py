from itertools import product

import pytest

from dmramsey.canon import WITH_COLORS, canonical_form
from dmramsey.coloring import verify
from dmramsey.constructions import figure_colorings, offdiag_tight
from dmramsey.coloring import recolor
from dmramsey.search import (
    ALL_GOOD,
    COUNTEREXAMPLE,
    BudgetExceeded,
    SearchError,
    SearchOptions,
    SearchQuery,
    SearchTooLarge,
    decide,
    decide_brute,
    scan,
)


def q(n, k, orders, **opts):
    return SearchQuery(n, k, tuple(orders), SearchOptions(**opts))


@pytest.mark.parametrize("n,k,orders,want", [
    (3, 2, (3, 3), COUNTEREXAMPLE),
    (4, 2, (3, 3), ALL_GOOD),
    (5, 2, (3, 4), COUNTEREXAMPLE),
    (6, 2, (3, 4), ALL_GOOD),
    (2, 2, (3, 3), COUNTEREXAMPLE),
    (6, 2, (4, 4), COUNTEREXAMPLE),
    (7, 2, (4, 4), ALL_GOOD),
])
def test_decide_examples(n, k, orders, want):
    out = decide(q(n, k, orders))
    assert out.verdict == want
    if want == COUNTEREXAMPLE:
        assert not verify(out.counterexample, orders)
        assert out.counterexample.n == n


@pytest.mark.parametrize("n,want", [(2, COUNTEREXAMPLE), (4, ALL_GOOD), (5, ALL_GOOD)])
def test_brute_examples(n, want):
    assert decide_brute(q(n, 2, (3, 3))).verdict == want


def test_decide_equals_brute_everywhere():
    for k, top in ((2, 5), (3, 4)):
        for n in range(2, top + 1):
            for orders in product((3, 4), repeat=k):
                a = decide(q(n, k, orders))
                b = decide_brute(q(n, k, orders))
                assert a.verdict == b.verdict, (n, k, orders)


def test_pruning_agrees():
    for k in (1, 2, 3):
        for n in range(2, 7):
            if k == 3 and n == 7:
                continue
            a = decide(q(n, k, (3,) * k))
            b = decide(q(n, k, (3,) * k, prune_bipartite=True))
            assert a.verdict == b.verdict, (n, k)


def test_prune_requires_order_three():
    with pytest.raises(SearchError):
        q(5, 2, (3, 4), prune_bipartite=True)


def test_query_validation():
    with pytest.raises(SearchError):
        q(1, 2, (3, 3))
    with pytest.raises(ValueError):
        q(4, 2, (3,))


def test_brute_guard():
    with pytest.raises(SearchTooLarge):
        decide_brute(q(8, 2, (3, 3)))


def test_feasibility_guard():
    with pytest.raises(SearchTooLarge):
        decide(q(10, 3, (3, 3, 3)))


def test_budget_reports_stats():
    with pytest.raises(BudgetExceeded) as exc:
        decide(q(9, 4, (3,) * 4, prune_bipartite=True, budget_seconds=0.3))
    assert exc.value.stats.nodes > 0


def test_deterministic_witness_independent_of_workers():
    w1 = decide(q(6, 3, (3, 3, 3), prune_bipartite=True, deterministic=True))
    w2 = decide(q(6, 3, (3, 3, 3), prune_bipartite=True, deterministic=True, workers=2))
    assert w1.counterexample == w2.counterexample
    assert w1.stats.classes == w2.stats.classes


def test_verdict_independent_of_workers():
    for n, orders in ((6, (3, 3)), (6, (4, 4)), (7, (4, 4))):
        a = decide(q(n, 2, orders))
        b = decide(q(n, 2, orders, workers=2))
        assert a.verdict == b.verdict


def test_off_diagonal_witness_is_tight_coloring():
    out = decide(q(5, 2, (3, 4), deterministic=True))
    tight = recolor(offdiag_tight(4), (1, 0))
    assert canonical_form(out.counterexample, WITH_COLORS, (3, 4)) == canonical_form(tight, WITH_COLORS, (3, 4))


def test_n5_off_diagonal_counterexample_unique():
    from dmramsey.search import enumerate_classes
    bad = [c for c in enumerate_classes(5, 2, (3, 4)) if not verify(c, (3, 4))]
    assert len(bad) == 1


def test_fixture_regeneration():
    # fixtures are the least-code counterexamples of a deterministic pruned search
    for c in figure_colorings().members:
        out = decide(q(c.n, 3, (3, 3, 3), prune_bipartite=True, deterministic=True))
        assert out.counterexample == c


@pytest.mark.parametrize("k,m,rng,want", [
    (2, 3, (3, 6), {3: COUNTEREXAMPLE, 4: ALL_GOOD, 5: ALL_GOOD, 6: ALL_GOOD}),
    (2, 4, (6, 7), {6: COUNTEREXAMPLE, 7: ALL_GOOD}),
])
def test_scan(k, m, rng, want):
    rows = {r.n: r.verdict for r in scan(k, m, rng)}
    assert rows == want


def test_scan_k3_with_pruning():
    rows = list(scan(3, 3, (5, 7), SearchOptions(prune_bipartite=True)))
    assert [r.verdict for r in rows] == [COUNTEREXAMPLE] * 3
    assert all(r.counterexample is not None for r in rows)


def test_scan_reports_errors_per_row():
    rows = list(scan(3, 3, (9, 10), SearchOptions(max_estimated_classes=10)))
    assert [r.verdict for r in rows] == [None, None]
    assert all(r.error for r in rows)


def test_outcome_dict():
    d = decide(q(4, 2, (3, 3))).to_dict()
    assert d["verdict"] == ALL_GOOD and d["stats"]["classes"] == 6
