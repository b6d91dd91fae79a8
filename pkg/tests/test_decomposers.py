from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from chibound.constructions import IntervalFamily, random_bipartite_graph, random_unit_interval_family, unit_interval_graph
from chibound.decomposers import (
    Decomposition,
    bipartition,
    decompose_line_of_bipartite,
    decompose_unit_interval,
    interval_integers,
    line_bipartite_decomposition,
    unit_interval_decomposition,
    verify_decomposable,
)
from chibound.graph import Graph, complete, cycle, disjoint_union, induced_subgraph, line_graph, star, union
from chibound.recognizers import is_cluster


def fam(*lefts):
    return IntervalFamily(tuple((Fraction(a), Fraction(a) + 1) for a in lefts))


def test_parity_colours():
    col = decompose_unit_interval(fam("0.5", "1.2"))
    assert col[0] == 2 and col[1] == 1
    with pytest.raises(ValueError):
        decompose_unit_interval(fam(0))


def test_parity_classes_do_not_union_to_the_graph():
    # [0.5,1.5] and [1.2,2.2] overlap but sit in different classes, so the
    # union of the two induced class graphs misses that edge; the graph is
    # recovered as the single part of the (1,2,2) decomposition instead
    f = fam("0.5", "1.2")
    g = unit_interval_graph(f)
    col = decompose_unit_interval(f)
    pieces = [induced_subgraph(g, c) for c in col.classes()]
    assert Graph(g.vertices, [e for p in pieces for e in p.edges]) != g
    assert verify_decomposable(g, unit_interval_decomposition(f))[0]


def test_line_of_bipartite_k12():
    g = star(2)
    sides = (frozenset({0}), frozenset({1, 2}))
    p1, p2 = decompose_line_of_bipartite(g, sides)
    assert p1.num_edges == 1 and p2.num_edges == 0


def test_line_of_bipartite_c4():
    g = cycle(4)
    p1, p2 = decompose_line_of_bipartite(g, bipartition(g))
    lg = line_graph(g)
    assert p1.num_edges == p2.num_edges == 2
    assert union(p1, p2) == lg
    for p in (p1, p2):
        assert all(p.degree(v) == 1 for v in p)


def test_line_of_bipartite_rejects_bad_sides():
    g = cycle(4)
    with pytest.raises(ValueError):
        decompose_line_of_bipartite(g, (frozenset({0, 1}), frozenset({2, 3})))
    with pytest.raises(ValueError):
        decompose_line_of_bipartite(g, (frozenset({0, 2}), frozenset({1})))
    with pytest.raises(ValueError):
        bipartition(cycle(5))


def test_verify_decomposable_examples():
    g = disjoint_union([complete(3), complete(2)])
    ok, report = verify_decomposable(g, Decomposition(g, (g,), (1, 1, 2)))
    assert ok and report["union_check"] and report["parts"][0]["method"] == "exhaustive"
    p3 = Graph(range(3), [(0, 1), (1, 2)])
    ok, _ = verify_decomposable(p3, Decomposition(p3, (p3,), (1, 1, 2)))
    assert not ok
    missing = Graph(range(3), [(0, 1)])
    ok, report = verify_decomposable(p3, Decomposition(p3, (missing,), (1, 1, 2)))
    assert not ok and not report["union_check"]
    with pytest.raises(ValueError):
        verify_decomposable(p3, Decomposition(p3, (complete(2),), (1, 1, 2)))


@pytest.mark.parametrize("seed", range(10))
def test_pipelines_verify(seed):
    f = random_unit_interval_family(15, seed=seed)
    assert verify_decomposable(unit_interval_graph(f), unit_interval_decomposition(f))[0]
    g, sides = random_bipartite_graph(5, 5, 0.5, seed=seed)
    assert verify_decomposable(line_graph(g), line_bipartite_decomposition(g, sides))[0]


@given(st.integers(1, 20), st.integers(0, 10**9))
def test_unit_interval_parity_rule(n, seed):
    f = random_unit_interval_family(n, seed=seed)
    g = unit_interval_graph(f)
    col = decompose_unit_interval(f)
    ints = interval_integers(f)
    for c in col.classes():
        assert is_cluster(induced_subgraph(g, c))
    for i in range(n):
        assert ints[i] % 2 == (0 if col[i] == 1 else 1)
        for j in range(i + 1, n):
            if col[i] == col[j]:
                assert g.has_edge(i, j) == (ints[i] == ints[j])


@given(st.integers(1, 8), st.integers(1, 8), st.floats(0, 1), st.integers(0, 10**9))
def test_line_bipartite_parts(a, b, p, seed):
    g, sides = random_bipartite_graph(a, b, p, seed=seed)
    p1, p2 = decompose_line_of_bipartite(g, sides)
    lg = line_graph(g)
    assert not (p1.edge_set() & p2.edge_set())
    assert p1.edge_set() | p2.edge_set() == lg.edge_set()
    for part in (p1, p2):
        assert is_cluster(part)
        # adjacency is transitive within each part
        for e, f, h in permutations(part.vertices, 3) if len(part) <= 12 else ():
            if part.has_edge(e, f) and part.has_edge(f, h):
                assert part.has_edge(e, h)
