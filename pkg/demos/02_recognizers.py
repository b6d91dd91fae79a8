"""
Recognising hereditary graph classes
====================================

Each recogniser answers membership; chordal and strongly chordal tests
also return an elimination order as a certificate.
"""

from chibound.graph import cycle, path, star
from chibound.recognizers import (
    NET,
    P3,
    contains_induced,
    is_chordal,
    is_cluster,
    is_complete_multipartite,
    is_strongly_chordal,
    is_trivially_perfect,
)
from chibound.constructions import complete_multipartite

# Induced-subgraph search returns the vertices of a copy, or None.
print("P3 inside C5 at:", sorted(contains_induced(cycle(5), P3)))

# Cluster graphs are exactly the P3-free graphs.
print("C5 is a cluster graph:", is_cluster(cycle(5)))

# Complete multipartite graphs are exactly the (K1+K2)-free graphs.
print("K_{2,3} complete multipartite:", is_complete_multipartite(complete_multipartite([2, 3])))

# Trivially perfect: no induced P4 and no induced C4.
print("star is trivially perfect:", is_trivially_perfect(star(4)), " P4:", is_trivially_perfect(path(4)))

# Perfect elimination order for a chordal graph.
print("PEO of P5:", is_chordal(path(5)))
print("C4 chordal:", is_chordal(cycle(4)) is not None)

# The net (a triangle with a pendant vertex at each corner) is strongly chordal;
# the elimination order lists simple vertices first.
print("net simple-vertex order:", is_strongly_chordal(NET))
