from hypothesis import given, strategies as st

from dmramsey import graph as G
from dmramsey.unionfind import ParityUnionFind


def test_triangle_contradiction():
    d = ParityUnionFind(3)
    assert d.union(0, 1) and d.union(1, 2)
    assert not d.union(0, 2)


def test_even_cycle_ok():
    d = ParityUnionFind(4)
    assert all(d.union(i, (i + 1) % 4) for i in range(4))


def test_copy_is_independent():
    d = ParityUnionFind(3)
    d.union(0, 1)
    e = d.copy()
    e.union(1, 2)
    assert d.find(2)[0] == 2 and e.find(2)[0] != 2
    assert d.add() == 3 and len(d) == 4


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20))))
def test_incremental_matches_bipartite_check(case):
    n, raw = case
    edges = []
    d = ParityUnionFind(n)
    ok = True
    for u, v in raw:
        if u == v or (min(u, v), max(u, v)) in edges:
            continue
        edges.append((min(u, v), max(u, v)))
        ok = d.union(u, v) and ok
        assert ok == G.is_bipartite(G.build_graph(n, edges))
        if not ok:
            break
