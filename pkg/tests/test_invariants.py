import math

import pytest
from hypothesis import given

from chibound.constructions import random_graph, shift_graph, unit_interval_graph, random_unit_interval_family
from chibound.decomposers import decompose_line_of_bipartite
from chibound.constructions import random_bipartite_graph
from chibound.graph import Graph, complement, complete, cycle, disjoint_union, edgeless, induced_subgraph, line_graph, path, star, union
from chibound.invariants import (
    BudgetExceeded,
    Coloring,
    chromatic_number,
    clique_number,
    components,
    componentwise_r_dependent_chromatic_number,
    girth,
    independence_number,
    is_componentwise_r_dependent,
    is_proper_coloring,
    is_t_k_r_decomposition,
    k_colorable,
    product_coloring,
)
from conftest import graphs
from oracles import brute_alpha, brute_chromatic, brute_clique, brute_k_colorings


def test_chromatic_examples():
    assert chromatic_number(complete(4))[0] == 4
    assert chromatic_number(cycle(5))[0] == 3
    assert brute_k_colorings(cycle(5), 3) and not brute_k_colorings(cycle(5), 2)
    assert chromatic_number(shift_graph(8, 2))[0] == 3


def test_chromatic_degenerate_graphs():
    assert chromatic_number(Graph())[0] == 0
    assert chromatic_number(edgeless(4))[0] == 1


def test_chromatic_budget_error_carries_bounds():
    g = random_graph(30, 0.5, seed=1)
    with pytest.raises(BudgetExceeded) as info:
        chromatic_number(g, max_vertices=10)
    e = info.value
    assert e.lower <= e.upper and is_proper_coloring(g, e.best)
    assert e.best.num_colors == e.upper


def test_chromatic_is_deterministic():
    g = random_graph(14, 0.4, seed=3)
    assert chromatic_number(g) == chromatic_number(g)


def test_k_colorable():
    assert k_colorable(cycle(5), 2) is None
    c = k_colorable(cycle(5), 3)
    assert c is not None and is_proper_coloring(cycle(5), c)


def test_clique_examples():
    assert clique_number(complete(5))[0] == 5
    assert clique_number(cycle(5))[0] == 2
    for n in range(5, 13):
        assert clique_number(shift_graph(n, 2))[0] == 2


def test_independence_examples():
    assert independence_number(edgeless(4))[0] == 4
    assert independence_number(complete(5))[0] == 1
    assert independence_number(cycle(5))[0] == 2


def test_empty_graph_invariants():
    g = Graph()
    assert clique_number(g)[0] == 0 and independence_number(g)[0] == 0
    assert girth(g) == math.inf


def test_is_proper_coloring_examples():
    k2 = complete(2)
    assert is_proper_coloring(k2, Coloring((0, 1), (1, 2), 2))
    assert not is_proper_coloring(k2, Coloring((0, 1), (1, 1), 2))
    with pytest.raises(ValueError):
        is_proper_coloring(k2, Coloring((0,), (1,), 1))


def test_coloring_validation_and_json():
    with pytest.raises(ValueError):
        Coloring((0, 1), (1, 3), 2)
    c = Coloring(((1, 2), "a"), (2, 1), 2)
    back = Coloring.from_json(c.to_json())
    assert back == c and back[(1, 2)] == 2
    assert c.classes() == [frozenset({"a"}), frozenset({(1, 2)})]


def test_product_coloring_examples():
    c = Coloring((0, 1, 2), (1, 2, 1), 2)
    single = product_coloring([c])
    assert single.assignment == c.assignment
    g1 = Graph(range(3), [(0, 1)])
    g2 = Graph(range(3), [(1, 2)])
    c1 = Coloring((0, 1, 2), (1, 2, 1), 2)
    c2 = Coloring((0, 1, 2), (1, 1, 2), 2)
    p = product_coloring([c1, c2])
    assert p.num_colors == 4 and is_proper_coloring(union(g1, g2), p)
    with pytest.raises(ValueError):
        product_coloring([c1, Coloring((0, 1), (1, 2), 2)])


@pytest.mark.parametrize("seed", range(20))
def test_product_coloring_of_optimal_colorings(seed):
    g1 = random_graph(8, 0.4, seed=seed)
    g2 = random_graph(8, 0.4, seed=seed + 100)
    (k1, c1), (k2, c2) = chromatic_number(g1), chromatic_number(g2)
    p = product_coloring([c1, c2])
    assert is_proper_coloring(union(g1, g2), p)
    assert len(set(p.colors)) <= k1 * k2


def test_girth_examples():
    assert girth(complete(3)) == 3
    assert girth(star(4)) == math.inf
    assert girth(path(6)) == math.inf
    assert girth(cycle(7)) == 7
    assert girth(shift_graph(6, 2)) == 4


def test_components_examples():
    assert components(complete(3)) == [frozenset({0, 1, 2})]
    assert sorted(map(len, components(edgeless(3)))) == [1, 1, 1]
    assert sorted(map(len, components(Graph(range(3), [(1, 2)])))) == [1, 2]


def test_componentwise_r_dependent_examples():
    assert is_componentwise_r_dependent(disjoint_union([complete(3), complete(2)]), 2)
    assert not is_componentwise_r_dependent(path(3), 2)
    assert is_componentwise_r_dependent(cycle(5), 3)
    with pytest.raises(ValueError):
        is_componentwise_r_dependent(path(3), 1)


def test_componentwise_chromatic_examples():
    assert componentwise_r_dependent_chromatic_number(complete(4), 2)[0] == 1
    assert componentwise_r_dependent_chromatic_number(path(3), 2)[0] == 2
    for seed in range(20):
        g = unit_interval_graph(random_unit_interval_family(12, seed=seed))
        k, col = componentwise_r_dependent_chromatic_number(g, 2)
        assert k <= 2
        assert all(is_componentwise_r_dependent(induced_subgraph(g, c), 2) for c in col.classes())
    with pytest.raises(BudgetExceeded):
        componentwise_r_dependent_chromatic_number(edgeless(20), 2)


def test_t_k_r_decomposition_examples():
    g = disjoint_union([complete(3), complete(1)])
    assert is_t_k_r_decomposition(g, [g], 1, 2)
    p3 = path(3)
    parts = [Graph(range(3), [(0, 1)]), Graph(range(3), [(1, 2)])]
    assert is_t_k_r_decomposition(p3, parts, 1, 2)
    assert not is_t_k_r_decomposition(p3, parts[:1], 1, 2)
    b, sides = random_bipartite_graph(4, 4, 0.6, seed=2)
    p1, p2 = decompose_line_of_bipartite(b, sides)
    assert is_t_k_r_decomposition(line_graph(b), [p1, p2], 1, 2)
    with pytest.raises(ValueError):
        is_t_k_r_decomposition(p3, [complete(2)], 1, 2)


@given(graphs(max_n=8))
def test_solvers_match_brute_force(g):
    chi, col = chromatic_number(g)
    omega, clique = clique_number(g)
    alpha, indep = independence_number(g)
    assert chi == brute_chromatic(g) and is_proper_coloring(g, col)
    assert omega == brute_clique(g) and alpha == brute_alpha(g)
    assert omega <= chi
    assert len(clique) == omega and all(g.has_edge(u, v) for u in clique for v in clique if u != v)
    assert len(indep) == alpha and not any(g.has_edge(u, v) for u in indep for v in indep)


@given(graphs(max_n=8))
def test_alpha_is_omega_of_complement(g):
    assert independence_number(g)[0] == clique_number(complement(g))[0]


@given(graphs(min_n=1, max_n=8), graphs(max_n=8))
def test_chi_monotone_under_induced_subgraphs(g, mask_source):
    x = [v for v in g.vertices if v % 2 == len(mask_source) % 2]
    assert chromatic_number(induced_subgraph(g, x))[0] <= chromatic_number(g)[0]


@given(graphs(max_n=7), graphs(max_n=7))
def test_product_coloring_property(a, b):
    n = max(len(a), len(b))
    a = Graph(range(n), a.edges)
    b = Graph(range(n), b.edges)
    (ka, ca), (kb, cb) = chromatic_number(a), chromatic_number(b)
    if n == 0:
        return
    p = product_coloring([ca, cb])
    assert is_proper_coloring(union(a, b), p) and p.num_colors == ka * kb
