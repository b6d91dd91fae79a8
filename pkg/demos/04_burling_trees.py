"""
Burling trees and their derived graphs
======================================

A Burling tree is a rooted tree with a last-born child per internal
vertex and a chosen downward branch per ordinary vertex.  From it come
the derived graph G(T), the clique closure C(T) and the sibling closure
I(T), with G(T) = C(T) & I(T).
"""

from chibound.burling import (
    BurlingTree,
    attach_root_clique,
    clique_closure,
    combine_trees,
    derive_bundle,
    generate_random_burling_tree,
    left_principal_branch,
    sibling_closure,
    single_vertex_tree,
)
from chibound.graph import induced_subgraph, intersect
from chibound.io import format_burling_tree
from chibound.recognizers import is_strongly_chordal, is_triangle_free, is_trivially_perfect

# The smallest interesting tree: r has children u and w (w last-born),
# and u chooses the branch [w].
t = BurlingTree("r", {"u": "r", "w": "r"}, {"r": "w"}, {"u": ("w",)})
b = derive_bundle(t)
print("G edges:", b.G.edges, " C edges:", b.C.edges, " I edges:", b.I.edges)
print("left principal branch:", left_principal_branch(t))

# The text format: header, parent lines, last-born lines, choose lines.
print(format_burling_tree(t))

# A larger random tree keeps every structural property.
big = generate_random_burling_tree(25, seed=3)
b = derive_bundle(big)
print("G == C & I:", b.G == intersect(b.C, b.I))
print("G triangle-free:", is_triangle_free(b.G))
print("C strongly chordal:", is_strongly_chordal(b.C) is not None)
print("I trivially perfect:", is_trivially_perfect(b.I))

# Surgeries return the helper vertices to delete afterwards.
joined, helpers = combine_trees(single_vertex_tree("a"), single_vertex_tree("b"))
rest = induced_subgraph(clique_closure(joined), set(joined.vertices) - helpers)
print("combining two points gives", len(rest), "vertices and", rest.num_edges, "edges")
print("new root is universal in C:", clique_closure(attach_root_clique(big)).degree("r") == len(big))
print("sibling closure of the joined tree:", sibling_closure(joined).num_edges, "edges")
