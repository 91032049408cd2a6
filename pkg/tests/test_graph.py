from itertools import combinations

import pytest
from hypothesis import given

from dmramsey import graph as G
from dmramsey.graph import Bipartition, GraphError, GraphFormatError, OddCycleWitness

from conftest import graphs


def test_build_examples():
    k3 = G.build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == G.complete(3)
    e2 = G.build_graph(2, [])
    assert e2.num_edges == 0 and e2.n == 2
    p4 = G.build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.degrees() == [1, 2, 2, 1]


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(0, 1), (1, 0)], [(-1, 0)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        G.build_graph(3, edges)


def test_build_errors_are_distinct():
    msgs = set()
    for edges in ([(0, 5)], [(2, 2)], [(0, 1), (0, 1)]):
        with pytest.raises(GraphError) as exc:
            G.build_graph(3, edges)
        msgs.add(str(exc.value).split()[0])
    assert len(msgs) == 3


def test_families():
    assert set(G.family("complete", [5]).degrees()) == {4}
    assert G.family("complete_bipartite", [2, 3]).degrees() == [3, 3, 2, 2, 2]
    m = G.family("matching", [3])
    assert m.n == 6 and set(m.degrees()) == {1}
    assert G.family("cycle", [5]).degrees() == [2] * 5
    with pytest.raises(GraphError):
        G.family("complete", [1, 2])
    with pytest.raises(GraphError):
        G.family("path", [-1])
    with pytest.raises(GraphError):
        G.family("wheel", [4])


def test_algebra():
    assert G.graph_algebra("complement", G.complete(5)) == G.empty(5)
    u = G.graph_algebra("disjoint_union", G.complete_bipartite(2, 3), G.complete(2))
    assert u.n == 7 and u.has_edge(5, 6) and not u.has_edge(4, 5)
    e = G.graph_algebra("induced_subgraph", G.path(4), {1, 2})
    assert e == G.complete(2)
    with pytest.raises(GraphError):
        G.disjoint_union(G.empty(40), G.empty(30))
    with pytest.raises(GraphError):
        G.induced_subgraph(G.path(3), [5])


def test_bipartition_examples():
    b = G.bipartition_of(G.complete_bipartite(2, 3))
    assert isinstance(b, Bipartition)
    assert sorted([len(b.left), len(b.right)]) == [2, 3]
    w = G.bipartition_of(G.cycle(5))
    assert isinstance(w, OddCycleWitness) and len(w.cycle) == 5
    p = G.bipartition_of(G.path(4))
    assert p.left == {0, 2} and p.right == {1, 3}


def test_bipartition_component_roots_left():
    g = G.disjoint_union(G.path(3), G.path(2))
    b = G.bipartition_of(g)
    assert {0, 3} <= b.left


def test_components_examples():
    g = G.disjoint_union(G.complete_bipartite(2, 3), G.complete(2))
    assert [len(c) for c in G.components(g)] == [5, 2]
    assert G.components(G.empty(3)) == [[0], [1], [2]]
    assert len(G.components(G.complete(7))) == 1


def _has_odd_cycle(g):
    # brute force over vertex subsets of odd size
    for size in range(3, g.n + 1, 2):
        for sub in combinations(range(g.n), size):
            if _odd_cycle_on(g, sub):
                return True
    return False


def _odd_cycle_on(g, verts):
    from itertools import permutations
    first, rest = verts[0], verts[1:]
    for order in permutations(rest):
        cyc = (first,) + order
        if all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])):
            return True
    return False


@given(graphs(max_n=10))
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.num_edges


@given(graphs(max_n=12))
def test_double_complement(g):
    assert G.complement(G.complement(g)) == g


@given(graphs(max_n=7))
def test_bipartition_matches_brute_force(g):
    res = G.bipartition_of(g)
    assert isinstance(res, OddCycleWitness) == _has_odd_cycle(g)
    if isinstance(res, OddCycleWitness):
        c = res.cycle
        assert len(c) % 2 == 1 and len(c) >= 3 and len(set(c)) == len(c)
        assert all(g.has_edge(a, b) for a, b in zip(c, c[1:] + c[:1]))
    else:
        assert res.left | res.right == set(range(g.n)) and not res.left & res.right
        assert all((u in res.left) != (v in res.left) for u, v in g.edges())


@given(graphs(max_n=10))
def test_components_partition(g):
    comps = G.components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.n))
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)


@given(graphs(max_n=10))
def test_text_round_trip(g):
    assert G.parse_graph(G.format_graph(g)) == g


@pytest.mark.parametrize("text,line", [
    ("graph 3\ne 0 3\n", 2),
    ("graph 3\ne 1 0\n", 2),
    ("graph 3\ne 0 1\n# c\ne 0 1\n", 4),
    ("grph 3\n", 1),
    ("graph 3\nx 0 1\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as exc:
        G.parse_graph(text)
    assert exc.value.line == line


def test_immutable():
    g = G.complete(3)
    with pytest.raises(Exception):
        g.n = 4
