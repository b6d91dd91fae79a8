"""Exact solvers, recognizers and constructions for checking chi-boundedness
results about graph intersections at desk scale."""

from .graph import (
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
    line_digraph,
    line_graph,
    path,
    relabel,
    star,
    underlying,
    union,
)
from .invariants import (
    BudgetExceeded,
    Coloring,
    chromatic_number,
    clique_number,
    componentwise_r_dependent_chromatic_number,
    girth,
    independence_number,
    is_proper_coloring,
    k_colorable,
    product_coloring,
)
from .constructions import (
    IntervalFamily,
    TPRecipe,
    build_trivially_perfect,
    complete_multipartite,
    directed_shift_graph,
    intersection_construction,
    random_graph,
    shift_graph,
    unit_interval_graph,
)
from .burling import BurlingTree, derive_bundle, generate_random_burling_tree
from .bounds import BoundFn, fr_recursion, ramsey_exact, ramsey_upper, self_guard_bound

__version__ = "0.1.0"
