import pytest
from hypothesis import given

from chibound.constructions import directed_shift_graph, shift_graph
from chibound.graph import (
    Digraph,
    Graph,
    add_universal_vertex,
    complement,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    induced_subgraph,
    intersect,
    label_key,
    line_digraph,
    line_graph,
    path,
    relabel,
    star,
    underlying,
    union,
)
from chibound.invariants import chromatic_number, clique_number
from conftest import graphs
from oracles import brute_chromatic


def test_graph_basics():
    g = Graph([1, 2, 3], [(1, 2), (3, 2)])
    assert g.vertices == (1, 2, 3)
    assert g.num_edges == 2
    assert g.has_edge(2, 3) and not g.has_edge(1, 3)
    assert g.neighbors(2) == (1, 3)
    assert g.closed_neighborhood(1) == {1, 2}
    assert g.degree(2) == 2
    assert 4 not in g and 1 in g
    assert g == Graph([3, 2, 1], [(2, 1), (2, 3)])
    assert hash(g) == hash(Graph([1, 2, 3], [(2, 1), (2, 3)]))


def test_graph_rejects_loops_and_bad_edges():
    with pytest.raises(ValueError):
        Graph([1], [(1, 1)])
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 2, 3)])


def test_parallel_edges_collapse():
    assert Graph([1, 2], [(1, 2), (2, 1), (1, 2)]).num_edges == 1


def test_mixed_labels_have_total_order():
    g = Graph([(1, 2), "a", 3, (1, (2, 3))])
    assert g.vertices == (3, "a", (1, 2), (1, (2, 3)))
    with pytest.raises(TypeError):
        label_key(None)


def test_intersect_examples():
    k3, p3 = complete(3, start=1), path(3, start=1)
    assert intersect(k3, p3) == p3
    assert intersect(k3, k3) == k3


def test_intersect_restricts_to_common_vertices():
    g = Graph([1, 2, 3], [(1, 2), (2, 3)])
    h = Graph([2, 3, 4], [(2, 3), (3, 4)])
    assert intersect(g, h) == Graph([2, 3], [(2, 3)])


def test_union_examples():
    assert union(Graph([1, 2], [(1, 2)]), Graph([2, 3], [(2, 3)])) == path(3, start=1)
    g = cycle(5)
    assert union(g, edgeless(5)) == g


def test_complement_examples():
    assert complement(complete(3)) == edgeless(3)
    p3 = Graph("abc", [("a", "b"), ("b", "c")])
    assert complement(p3) == Graph("abc", [("a", "c")])


def test_disjoint_union_examples():
    g = disjoint_union([complete(1), complete(2)])
    assert len(g) == 3 and g.num_edges == 1
    p4 = disjoint_union([path(4)])
    assert p4 == relabel(path(4), lambda v: (0, v))
    two_k3 = disjoint_union([complete(3), complete(3)])
    assert clique_number(two_k3)[0] == 3
    assert chromatic_number(two_k3)[0] == 3


def test_induced_subgraph_examples():
    g = cycle(5)
    assert induced_subgraph(g, g.vertices) == g
    assert induced_subgraph(complete(4), [0, 2, 3]) == Graph([0, 2, 3], [(0, 2), (0, 3), (2, 3)])
    assert induced_subgraph(g, [0, 1, 2]) == path(3)
    with pytest.raises(ValueError):
        induced_subgraph(g, [0, 9])


def test_line_graph_examples():
    assert len(line_graph(path(3))) == 2 and line_graph(path(3)).num_edges == 1
    lc = line_graph(star(3))
    assert len(lc) == 3 and lc.num_edges == 3
    l5 = line_graph(cycle(5))
    assert len(l5) == 5 and all(l5.degree(v) == 2 for v in l5)
    assert chromatic_number(l5)[0] == 3


def test_line_digraph_examples():
    d = Digraph(["u", "v"], [("u", "v")])
    ld = line_digraph(d)
    assert len(ld) == 1 and ld.num_arcs == 0
    p = Digraph("uvw", [("u", "v"), ("v", "w")])
    assert line_digraph(p).arcs == ((("u", "v"), ("v", "w")),)


@pytest.mark.parametrize("n", range(5, 10))
def test_line_digraph_of_shift_digraph_is_next_shift_digraph(n):
    ld = line_digraph(directed_shift_graph(n, 2))
    relabelled = Digraph(
        [(a, b, c) for (a, b), (_, c) in ld.vertices],
        [((a, b, c), (b2, c2, d)) for ((a, b), (_, c)), ((b2, c2), (_, d)) in ld.arcs],
    )
    assert relabelled == directed_shift_graph(n, 3)


def test_underlying_examples():
    assert underlying(Digraph("uv", [("u", "v")])) == Graph("uv", [("u", "v")])
    assert underlying(Digraph("uv", [("u", "v"), ("v", "u")])) == Graph("uv", [("u", "v")])
    assert underlying(directed_shift_graph(5, 2)) == shift_graph(5, 2)


def test_add_universal_vertex_examples():
    assert add_universal_vertex(complete(1), 1) == complete(2)
    assert add_universal_vertex(edgeless(2), "c") == Graph([0, 1, "c"], [(0, "c"), (1, "c")])
    with pytest.raises(ValueError):
        add_universal_vertex(complete(2), 0)


@given(graphs(max_n=7))
def test_add_universal_vertex_raises_chi(g):
    assert brute_chromatic(add_universal_vertex(g, "u")) == brute_chromatic(g) + 1


@given(graphs(), graphs())
def test_intersect_union_laws(g, h):
    assert intersect(g, h) == intersect(h, g)
    assert union(g, h) == union(h, g)
    assert intersect(g, g) == g and union(g, g) == g
    assert intersect(g, h).edge_set() <= g.edge_set() & h.edge_set()
    assert union(g, h).edge_set() >= g.edge_set() | h.edge_set()


@given(graphs(), graphs(), graphs())
def test_intersect_union_associative(a, b, c):
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
    assert union(union(a, b), c) == union(a, union(b, c))


@given(graphs(), graphs())
def test_union_clique_dominates_parts_on_common_vertices(g, h):
    common = [v for v in g.vertices if v in h]
    u = induced_subgraph(union(g, h), common)
    wg = clique_number(induced_subgraph(g, common))[0]
    wh = clique_number(induced_subgraph(h, common))[0]
    assert clique_number(u)[0] >= max(wg, wh)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_line_graph_degrees(g):
    lg = line_graph(g)
    assert len(lg) == g.num_edges
    for u, v in lg.vertices:
        assert lg.degree((u, v)) == g.degree(u) + g.degree(v) - 2


@given(graphs(max_n=7))
def test_underlying_line_digraph_inside_line_graph(g):
    # orient each edge both ways and one way; both must embed
    for arcs in (g.edges, [(v, u) for u, v in g.edges] + list(g.edges)):
        d = Digraph(g.vertices, arcs)
        uld = underlying(line_digraph(d))
        lg = line_graph(underlying(d))
        for a, b in uld.edges:
            assert lg.has_edge(tuple(sorted(a)), tuple(sorted(b))) or set(a) == set(b)
