"""
Decomposing unit interval graphs and line graphs of bipartite graphs
====================================================================

Both classes split into pieces whose components have bounded
independence number, which is what makes them chi-bounded after
intersection with other classes.
"""

from fractions import Fraction

from chibound.constructions import IntervalFamily, random_bipartite_graph, unit_interval_graph
from chibound.decomposers import (
    decompose_line_of_bipartite,
    decompose_unit_interval,
    line_bipartite_decomposition,
    unit_interval_decomposition,
    verify_decomposable,
)
from chibound.graph import induced_subgraph, line_graph
from chibound.recognizers import is_cluster

# Intervals containing an even integer get colour 1, odd ones colour 2.
lefts = ["0.5", "1.2", "1.7", "2.4", "3.1"]
f = IntervalFamily(tuple((Fraction(a), Fraction(a) + 1) for a in lefts))
g = unit_interval_graph(f)
col = decompose_unit_interval(f)
print("parity colours:", col.colors)
for c in col.classes():
    print("  class", sorted(c), "is a cluster graph:", is_cluster(induced_subgraph(g, c)))

# Edges between classes are not inside either class graph, so the check is
# that the colouring covers the graph as one (1,2,2) part.
ok, report = verify_decomposable(g, unit_interval_decomposition(f))
print("(1,2,2)-decomposition verified:", ok)

# Edges of L(B) split by the side on which two edges of B meet.
b, sides = random_bipartite_graph(4, 4, 0.5, seed=1)
e1, e2 = decompose_line_of_bipartite(b, sides)
print("L(B) has", line_graph(b).num_edges, "edges =", e1.num_edges, "+", e2.num_edges)
print("both parts cluster graphs:", is_cluster(e1) and is_cluster(e2))
print("(2,1,2)-decomposition verified:", verify_decomposable(line_graph(b), line_bipartite_decomposition(b, sides))[0])
