"""
Graphs, colourings and exact invariants
=======================================

Graphs in chibound are immutable and carry arbitrary hashable labels.
Exact solvers return a certificate alongside every value.
"""

from chibound import Graph, chromatic_number, clique_number, independence_number
from chibound.graph import complement, cycle, intersect, union
from chibound.invariants import is_proper_coloring, product_coloring

# The 5-cycle is the smallest graph where chi exceeds omega.
c5 = cycle(5)
chi, coloring = chromatic_number(c5)
omega, clique = clique_number(c5)
alpha, indep = independence_number(c5)
print("C5: chi =", chi, "omega =", omega, "alpha =", alpha)
print("optimal colouring:", dict(zip(coloring.vertices, coloring.colors)))
print("certificate checks out:", is_proper_coloring(c5, coloring))

# Intersection and union act on edge sets (intersection keeps common vertices).
a = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
b = Graph(range(4), [(1, 2), (2, 3), (3, 0)])
print("edges of a & b:", intersect(a, b).edges)
print("edges of a | b:", union(a, b).edges)

# Colouring each piece and pairing the colours colours the union; this is
# the product colouring, with at most k1 * k2 colours.
(_, ca), (_, cb) = chromatic_number(a), chromatic_number(b)
p = product_coloring([ca, cb])
print("product colouring uses", len(set(p.colors)), "colours; proper:", is_proper_coloring(union(a, b), p))

# alpha(G) is omega of the complement.
print("alpha(C5) == omega(complement):", alpha == clique_number(complement(c5))[0])
