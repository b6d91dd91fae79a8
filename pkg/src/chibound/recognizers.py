"""Membership tests for the hereditary classes used throughout the package.

Most tests have a structural implementation; where a class is defined by
forbidden induced subgraphs, :func:`contains_induced` provides the pattern
search that the structural test can be checked against.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, _bits, complete, cycle, disjoint_union, edgeless, path, star
from .invariants import _component_masks, independence_number

MAX_PATTERN_SIZE = 10


class InconsistentRecognition(AssertionError):
    """Two independent recognition procedures disagreed (a bug signal)."""


# -- named patterns -------------------------------------------------------

P2 = path(2)
P3 = path(3)
P4 = path(4)
C4 = cycle(4)
K3 = complete(3)
CLAW = star(3)
K1_PLUS_K2 = Graph([0, 1, 2], [(1, 2)])
# The net: a triangle with one pendant vertex on each triangle vertex.
NET = Graph(range(6), [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
# The chair: a P4 with a pendant vertex on one of its middle vertices.
CHAIR = Graph(range(5), [(0, 1), (1, 2), (2, 3), (1, 4)])


def rK1(r: int) -> Graph:
    return edgeless(r)


def P3_plus_rK2(r: int) -> Graph:
    return disjoint_union([P3] + [complete(2)] * r)


# -- induced subgraph search -------------------------------------------------

def contains_induced(g: Graph, h: Graph) -> frozenset | None:
    """Return a vertex set X with g[X] isomorphic to h, or None.

    Backtracking over injective maps; pattern vertices are placed in an
    order that keeps each new vertex attached to already-placed ones, and
    candidates are cut down by adjacency and non-adjacency masks.
    """
    k = len(h)
    if k > MAX_PATTERN_SIZE:
        raise ValueError(f"pattern has {k} vertices; limit is {MAX_PATTERN_SIZE}")
    n = len(g)
    if k == 0:
        return frozenset()
    if k > n:
        return None
    hm = h.masks
    gm = g.masks
    full = (1 << n) - 1

    # connectivity-first placement order, higher degree first
    order: list[int] = []
    placed = 0
    while len(order) < k:
        frontier = 0
        for i in order:
            frontier |= hm[i]
        frontier &= ~placed
        pool = frontier if frontier else ((1 << k) - 1) & ~placed
        nxt = max(_bits(pool), key=lambda i: (hm[i].bit_count(), -i))
        order.append(nxt)
        placed |= 1 << nxt
    hdeg = [m.bit_count() for m in hm]
    gdeg = [m.bit_count() for m in gm]
    by_degree = [0] * (k + 1)
    for d in range(k + 1):
        by_degree[d] = sum(1 << v for v in range(n) if gdeg[v] >= d)

    image = [0] * k

    def rec(t: int, used: int) -> bool:
        if t == k:
            return True
        p = order[t]
        cand = full & ~used & by_degree[hdeg[p]]
        for s in range(t):
            q = order[s]
            if hm[p] >> q & 1:
                cand &= gm[image[q]]
            else:
                cand &= ~gm[image[q]]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            image[p] = v
            if rec(t + 1, used | low):
                return True
        return False

    if rec(0, 0):
        return frozenset(g.label(image[i]) for i in range(k))
    return None


def is_H_free(g: Graph, hs: Iterable[Graph]) -> bool:
    return all(contains_induced(g, h) is None for h in hs)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if len(g) != len(h) or g.num_edges != h.num_edges:
        return False
    if sorted(m.bit_count() for m in g.masks) != sorted(m.bit_count() for m in h.masks):
        return False
    return contains_induced(g, h) is not None


# -- structural classes --------------------------------------------------

def _components(g: Graph) -> list[int]:
    return _component_masks(g.masks, (1 << len(g)) - 1)


def is_cluster(g: Graph) -> bool:
    """Disjoint union of complete graphs."""
    masks = g.masks
    for comp in _components(g):
        for v in _bits(comp):
            if masks[v] | (1 << v) != comp:
                return False
    return True


def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacency is an equivalence relation (parts are its classes)."""
    n = len(g)
    full = (1 << n) - 1
    masks = g.masks
    closed_non = [full & ~m for m in masks]
    for v in range(n):
        for u in _bits(closed_non[v]):
            if closed_non[u] != closed_non[v]:
                return False
    return True


def is_triangle_free(g: Graph) -> bool:
    masks = g.masks
    for u in range(len(g)):
        for v in _bits(masks[u] >> (u + 1)):
            if masks[u] & masks[u + 1 + v]:
                return False
    return True


def _wolk(masks: Sequence[int], within: int) -> bool:
    # each component needs a universal vertex, then recurse without it
    for comp in _component_masks(masks, within):
        if comp & (comp - 1) == 0:
            continue
        hub = next((v for v in _bits(comp) if (masks[v] | (1 << v)) & comp == comp), None)
        if hub is None:
            return False
        if not _wolk(masks, comp & ~(1 << hub)):
            return False
    return True


def is_trivially_perfect_wolk(g: Graph) -> bool:
    """Every connected induced subgraph has a universal vertex."""
    return _wolk(g.masks, (1 << len(g)) - 1)


def is_trivially_perfect_patterns(g: Graph) -> bool:
    return is_H_free(g, (P4, C4))


def is_trivially_perfect(g: Graph) -> bool:
    """{P4, C4}-freeness, cross-checked against the universal-vertex recursion."""
    a = is_trivially_perfect_patterns(g)
    b = is_trivially_perfect_wolk(g)
    if a != b:
        raise InconsistentRecognition(f"pattern test says {a}, universal-vertex test says {b} on {g.edges!r}")
    return a


def is_chordal(g: Graph) -> list | None:
    """Perfect elimination ordering via maximum cardinality search, or None."""
    n = len(g)
    masks = g.masks
    weight = [0] * n
    unnumbered = (1 << n) - 1
    visit: list[int] = []
    while unnumbered:
        v = max(_bits(unnumbered), key=lambda i: (weight[i], -i))
        visit.append(v)
        unnumbered &= ~(1 << v)
        for u in _bits(masks[v] & unnumbered):
            weight[u] += 1
    peo = visit[::-1]
    later = (1 << n) - 1
    for v in peo:
        later &= ~(1 << v)
        nbrs = masks[v] & later
        for u in _bits(nbrs):
            if nbrs & ~masks[u] & ~(1 << u):
                return None
    return [g.label(v) for v in peo]


def are_compatible(g: Graph, u, v) -> bool:
    nu, nv = g.closed_neighborhood(u), g.closed_neighborhood(v)
    return nu <= nv or nv <= nu


def _simple_in(masks: Sequence[int], within: int, v: int) -> bool:
    closed = [(masks[u] | (1 << u)) & within for u in _bits((masks[v] | (1 << v)) & within)]
    closed.sort(key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(closed, closed[1:]))


def is_simple_vertex(g: Graph, v) -> bool:
    """The closed neighbourhoods of N[v] form a chain under inclusion."""
    return _simple_in(g.masks, (1 << len(g)) - 1, g.index(v))


def is_strongly_chordal(g: Graph) -> list | None:
    """Simple elimination ordering, or None if some stage has no simple vertex.

    Greedy removal is complete: induced subgraphs of strongly chordal graphs
    are strongly chordal and so always keep a simple vertex.
    """
    masks = g.masks
    within = (1 << len(g)) - 1
    order = []
    while within:
        v = next((u for u in _bits(within) if _simple_in(masks, within, u)), None)
        if v is None:
            return None
        order.append(g.label(v))
        within &= ~(1 << v)
    return order


def is_claw_free(g: Graph) -> bool:
    return contains_induced(g, CLAW) is None


def is_net_free(g: Graph) -> bool:
    return contains_induced(g, NET) is None


def is_rK1_free(g: Graph, r: int, *, max_vertices: int | None = None) -> bool:
    if r < 1:
        raise ValueError("r must be positive")
    return independence_number(g, max_vertices=max_vertices)[0] <= r - 1


def is_forest(g: Graph) -> bool:
    return g.num_edges == len(g) - len(_components(g))


def is_linear_forest(g: Graph) -> bool:
    return is_forest(g) and all(m.bit_count() <= 2 for m in g.masks)


def is_star(g: Graph) -> bool:
    """K_{1,t} for some t >= 1."""
    n = len(g)
    if n < 2 or g.num_edges != n - 1:
        return False
    return any(m.bit_count() == n - 1 for m in g.masks)


RECOGNIZERS = {
    "cluster": is_cluster,
    "complete-multipartite": is_complete_multipartite,
    "trivially-perfect": is_trivially_perfect,
    "chordal": lambda g: is_chordal(g) is not None,
    "strongly-chordal": lambda g: is_strongly_chordal(g) is not None,
    "claw-free": is_claw_free,
    "triangle-free": is_triangle_free,
    "net-free": is_net_free,
    "forest": is_forest,
    "linear-forest": is_linear_forest,
    "star": is_star,
}

