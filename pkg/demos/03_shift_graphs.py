"""
Shift graphs and the line-digraph construction
==============================================

Shift graphs are triangle-free yet need about log2 n colours.  The
line digraph of the directed shift graph sits inside the intersection
of a line graph and a complete multipartite graph.
"""

import math

from chibound.constructions import directed_shift_graph, intersection_construction, shift_graph
from chibound.graph import intersect
from chibound.invariants import chromatic_number
from chibound.recognizers import is_triangle_free

# chi(G(n,2)) grows like ceil(log2 n) even though there are no triangles.
for n in (4, 8, 9, 16):
    g = shift_graph(n, 2)
    chi, _ = chromatic_number(g, max_vertices=None)
    print(f"G({n},2): {len(g)} vertices, triangle-free={is_triangle_free(g)}, chi={chi}, ceil(log2 n)={math.ceil(math.log2(n))}")

# Arcs go (a,b) -> (b,c); relabelling each arc by its triple (a,b,c) puts the
# three graphs on one vertex set so that gL = line & multipartite is exact.
h = directed_shift_graph(8, 2)
line, multi, gl = intersection_construction(h)
print("gL == line & multipartite:", gl == intersect(line, multi))
print("gL triangle-free:", is_triangle_free(gl))
chi_gl, _ = chromatic_number(gl, max_vertices=None)
print("chi(gL) =", chi_gl, ">= log2 chi(G(8,2)) =", math.log2(3))
