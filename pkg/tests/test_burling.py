from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from chibound.burling import (
    BurlingTree,
    attach_root_clique,
    attach_root_sibling,
    bottom_left_vertices,
    clique_closure,
    combine_trees,
    derive_bundle,
    fully_derived,
    fully_derived_oriented,
    generate_random_burling_tree,
    left_principal_branch,
    realize_trivially_perfect,
    sibling_closure,
    single_vertex_tree,
    top_left_vertices,
    validate_burling_tree,
)
from chibound.constructions import build_trivially_perfect, random_tp_recipe
from chibound.graph import Graph, add_universal_vertex, induced_subgraph, intersect, relabel, union
from chibound.recognizers import (
    are_compatible,
    is_net_free,
    is_simple_vertex,
    is_strongly_chordal,
    is_triangle_free,
    is_trivially_perfect,
)

# r has children u and w, w is last-born, u chooses the branch [w]
THREE = BurlingTree("r", {"u": "r", "w": "r"}, {"r": "w"}, {"u": ("w",)})
PATH = BurlingTree("r", {"a": "r", "b": "a"}, {"r": "a", "a": "b"}, {})

trees = st.builds(generate_random_burling_tree, st.integers(1, 30), st.integers(0, 10**9))


def prefixed(t, p):
    return BurlingTree(
        f"{p}{t.root}",
        {f"{p}{c}": f"{p}{q}" for c, q in t.parent.items()},
        {f"{p}{v}": f"{p}{c}" for v, c in t.lastborn.items()},
        {f"{p}{v}": tuple(f"{p}{u}" for u in b) for v, b in t.choose.items()},
    )


def test_validate_examples():
    assert validate_burling_tree(single_vertex_tree()) == (True, [])
    assert validate_burling_tree(THREE)[0]
    bad = BurlingTree("r", {"u": "r", "w": "r", "x": "r"}, {"r": "w"}, {"u": ("x",)})
    ok, report = validate_burling_tree(bad)
    assert not ok and any("'u'" in line for line in report)


def test_validate_reports_structural_errors():
    assert not validate_burling_tree(BurlingTree("r", {"a": "r"}, {}, {}))[0]
    assert not validate_burling_tree(BurlingTree("r", {"a": "r"}, {"r": "a"}, {"a": ("a",)}))[0]
    assert not validate_burling_tree(BurlingTree("r", {"a": "b", "b": "a"}, {}, {}))[0]
    with pytest.raises(ValueError):
        fully_derived(BurlingTree("r", {"a": "r"}, {}, {}))


def test_fully_derived_examples():
    assert fully_derived_oriented(PATH).num_arcs == 0
    assert fully_derived_oriented(THREE).arcs == (("u", "w"),)
    assert fully_derived(THREE) == Graph("ruw", [("u", "w")])


def test_clique_closure_examples():
    assert clique_closure(PATH) == Graph("rab", [("r", "a"), ("a", "b"), ("r", "b")])
    assert clique_closure(THREE).num_edges == 3


def test_sibling_closure_examples():
    assert sibling_closure(PATH) == Graph("rab")
    assert sibling_closure(THREE).edge_set() == {frozenset("uw")}


def test_derive_bundle_examples():
    b = derive_bundle(single_vertex_tree("x"))
    assert len(b.G) == len(b.C) == len(b.I) == 1
    b = derive_bundle(THREE)
    assert b.G.edge_set() == {frozenset("uw")}
    assert b.C.num_edges == 3 and b.I.edge_set() == {frozenset("uw")}
    assert intersect(b.C, b.I) == b.G


def test_left_principal_branch_examples():
    assert left_principal_branch(PATH) == ["r", "a", "b"]
    assert left_principal_branch(THREE) == ["r", "u"]


def test_bottom_left_examples():
    assert bottom_left_vertices(PATH, PATH.vertices) == {"b"}
    assert bottom_left_vertices(THREE, THREE.vertices) == {"u"}
    # x without leaves gives the empty set
    assert bottom_left_vertices(PATH, ["r"]) == frozenset()


def test_top_left_examples():
    assert top_left_vertices(THREE, ["r"]) == {"r"}
    assert top_left_vertices(THREE, ["u", "w"]) == {"u"}
    with pytest.raises(ValueError):
        top_left_vertices(THREE, [])


def test_combine_single_vertex_trees():
    t, removed = combine_trees(single_vertex_tree("a"), single_vertex_tree("b"))
    assert len(t) == 5 and len(removed) == 3 and validate_burling_tree(t)[0]
    rest = induced_subgraph(clique_closure(t), set(t.vertices) - removed)
    assert rest == Graph("ab")


def test_combine_path_trees():
    t, removed = combine_trees(prefixed(PATH, "x"), prefixed(PATH, "y"))
    rest = induced_subgraph(clique_closure(t), set(t.vertices) - removed)
    assert rest == union(clique_closure(prefixed(PATH, "x")), clique_closure(prefixed(PATH, "y")))
    assert rest.num_edges == 6
    with pytest.raises(ValueError):
        combine_trees(PATH, PATH)


def test_attach_root_clique_examples():
    assert clique_closure(attach_root_clique(single_vertex_tree())).num_edges == 1
    assert clique_closure(attach_root_clique(PATH)).num_edges == 6


def test_attach_root_sibling_examples():
    t, removed = attach_root_sibling(single_vertex_tree("a"))
    rest = induced_subgraph(sibling_closure(t), set(t.vertices) - removed)
    assert len(rest) == 2 and rest.num_edges == 1
    t, removed = attach_root_sibling(PATH)
    (rp,) = [c for c in t.children(t.root) if c != "r"]
    assert all(sibling_closure(t).has_edge(rp, d) for d in t.descendants("r"))


def test_generator_examples():
    t = generate_random_burling_tree(1, seed=5)
    assert len(t) == 1 and not t.parent
    assert generate_random_burling_tree(20, 3) == generate_random_burling_tree(20, 3)
    with pytest.raises(ValueError):
        generate_random_burling_tree(0, 1)


@given(trees)
def test_bundle_invariants(t):
    assert validate_burling_tree(t)[0]
    b = derive_bundle(t)
    assert b.G == intersect(b.C, b.I)
    assert b.A.num_arcs == sum(len(t.chosen(v)) for v in t.vertices)
    assert is_triangle_free(b.G)
    assert is_strongly_chordal(b.C) is not None and is_net_free(b.C)
    assert is_trivially_perfect(b.I)


@given(trees)
def test_ancestors_are_compatible_in_clique_closure(t):
    c = clique_closure(t)
    for v in t.vertices:
        for a in t.path_to_root(v)[1:]:
            assert are_compatible(c, v, a)
            assert c.closed_neighborhood(v) <= c.closed_neighborhood(a)


@given(trees)
def test_triangles_of_clique_closure_have_collinear_pair(t):
    c = clique_closure(t)
    anc = {v: set(t.path_to_root(v)) for v in t.vertices}
    collinear = lambda x, y: x in anc[y] or y in anc[x]  # noqa: E731
    for x, y, z in combinations(t.vertices, 3):
        if c.has_edge(x, y) and c.has_edge(y, z) and c.has_edge(x, z):
            assert collinear(x, y) or collinear(y, z) or collinear(x, z)


@given(trees)
def test_left_branch_and_bottom_left(t):
    branch = left_principal_branch(t)
    on = set(branch)
    assert all(not set(t.chosen(u)) & on for u in t.vertices if u not in on)
    bl = bottom_left_vertices(t, t.vertices)
    assert bl and branch[-1] in bl
    c = clique_closure(t)
    assert all(is_simple_vertex(c, v) for v in bl)


@given(trees, st.randoms(use_true_random=False))
def test_top_left_vertices_are_sources(t, rnd):
    assert top_left_vertices(t, t.vertices) == {t.root}
    x = rnd.sample(t.vertices, rnd.randint(1, len(t)))
    out = top_left_vertices(t, x)
    a = fully_derived_oriented(t)
    for v in out:
        assert not any(a.has_arc(u, v) for u in x)
    if not out:
        # every closest vertex is last-born, which the literal definition excludes
        dmin = min(t.depth(v) for v in x)
        assert all(t.is_last_born(v) for v in x if t.depth(v) == dmin)


@given(trees, trees)
def test_surgery_contracts(t1, t2):
    t1, t2 = prefixed(t1, "a"), prefixed(t2, "b")
    t, removed = combine_trees(t1, t2)
    assert validate_burling_tree(t)[0]
    keep = set(t.vertices) - removed
    assert induced_subgraph(clique_closure(t), keep) == union(clique_closure(t1), clique_closure(t2))
    assert induced_subgraph(sibling_closure(t), keep) == union(sibling_closure(t1), sibling_closure(t2))
    t = attach_root_clique(t1)
    assert clique_closure(t) == add_universal_vertex(clique_closure(t1), t.root)
    t, removed = attach_root_sibling(t1)
    (rp,) = [c for c in t.children(t.root) if c != t1.root]
    assert induced_subgraph(sibling_closure(t), set(t.vertices) - removed) == add_universal_vertex(
        sibling_closure(t1), rp
    )


@pytest.mark.parametrize("seed", range(30))
def test_trivially_perfect_realised_by_both_closures(seed):
    recipe = random_tp_recipe(5, seed=seed)
    g = relabel(build_trivially_perfect(recipe), lambda k: f"v{k}")
    for name, fn in (("C", clique_closure), ("I", sibling_closure)):
        t, removed = realize_trivially_perfect(recipe, name)
        assert validate_burling_tree(t)[0]
        assert induced_subgraph(fn(t), set(t.vertices) - removed) == g
    with pytest.raises(ValueError):
        realize_trivially_perfect(recipe, "X")
