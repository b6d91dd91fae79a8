"""Constructive decompositions of unit interval graphs and of line graphs of
bipartite graphs into componentwise r-dependent pieces, plus a verifier."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions import IntervalFamily, unit_interval_graph
from .graph import Graph, induced_subgraph, line_graph
from .invariants import (
    Coloring,
    componentwise_r_dependent_chromatic_number,
    is_componentwise_r_dependent,
)


def _integer_in(a, b) -> int:
    """The unique integer in [a, b] for a normalized unit interval."""
    k = math.ceil(a)
    if not (k <= b and k + 1 > b):
        raise AssertionError(f"[{a}, {b}] does not contain exactly one integer")
    return k


def decompose_unit_interval(f: IntervalFamily) -> Coloring:
    """Colour 1 for intervals containing an even integer, colour 2 for odd.

    Each colour class induces a cluster graph: two same-class intervals
    meet iff they contain the same integer.
    """
    if not f.unit:
        raise ValueError("family is not a unit interval family")
    if not f.is_normalized:
        raise ValueError("family has integer endpoints; call .normalized() first")
    colors = tuple(1 if _integer_in(a, b) % 2 == 0 else 2 for a, b in f.intervals)
    return Coloring(tuple(range(len(f))), colors, 2)


def interval_integers(f: IntervalFamily) -> list[int]:
    return [_integer_in(a, b) for a, b in f.intervals]


def decompose_line_of_bipartite(
    g: Graph, bipartition: tuple[frozenset, frozenset]
) -> tuple[Graph, Graph]:
    """Split L(g) into two graphs on E(g): ef goes to part i iff e and f
    meet in side i.  Both parts are cluster graphs."""
    a1, a2 = (frozenset(s) for s in bipartition)
    if a1 & a2 or (a1 | a2) != set(g.vertices):
        raise ValueError("bipartition must partition the vertex set")
    for u, v in g.edges:
        if (u in a1) == (v in a1):
            raise ValueError(f"edge {u!r}-{v!r} lies inside one side")
    lg = line_graph(g)
    e1, e2 = [], []
    for e, f in lg.edges:
        (shared,) = set(e) & set(f)
        (e1 if shared in a1 else e2).append((e, f))
    return Graph(lg.vertices, e1), Graph(lg.vertices, e2)


@dataclass(frozen=True)
class Decomposition:
    """``parts`` are graphs on V(base); ``params`` is (t, k, r).

    ``witnesses`` optionally holds, per part, a colouring whose classes are
    claimed componentwise r-dependent; with it the verifier checks the
    certificate instead of searching.
    """

    base: Graph
    parts: tuple
    params: tuple[int, int, int]
    witnesses: tuple = field(default=())


def verify_decomposable(g: Graph, d: Decomposition) -> tuple[bool, dict]:
    t, k, r = d.params
    report: dict = {"params": [t, k, r], "union_check": False, "parts": []}
    for p in d.parts:
        if set(p.vertices) != set(g.vertices):
            raise ValueError("part vertex set differs from the graph's")
    ok = len(d.parts) <= t
    report["part_count_check"] = ok
    covered = set()
    for p in d.parts:
        covered |= p.edge_set()
    report["union_check"] = covered == g.edge_set()
    ok = ok and report["union_check"]
    for i, p in enumerate(d.parts):
        w = d.witnesses[i] if i < len(d.witnesses) else None
        if w is not None:
            classes = [c for c in w.classes() if c]
            good = len(classes) <= k and all(
                is_componentwise_r_dependent(induced_subgraph(p, c), r) for c in classes
            )
            report["parts"].append({"method": "witness", "classes": len(classes), "ok": good})
        else:
            value, _ = componentwise_r_dependent_chromatic_number(p, r)
            good = value <= k
            report["parts"].append({"method": "exhaustive", "value": value, "ok": good})
        ok = ok and good
    return ok, report


def unit_interval_decomposition(f: IntervalFamily) -> Decomposition:
    """The (1, 2, 2)-decomposition: the graph itself with the parity colouring."""
    g = unit_interval_graph(f)
    return Decomposition(g, (g,), (1, 2, 2), (decompose_unit_interval(f),))


def line_bipartite_decomposition(g: Graph, bipartition) -> Decomposition:
    """The (2, 1, 2)-decomposition of L(g) into two cluster graphs."""
    p1, p2 = decompose_line_of_bipartite(g, bipartition)
    one = lambda p: Coloring(p.vertices, (1,) * len(p), 1)  # noqa: E731
    return Decomposition(line_graph(g), (p1, p2), (2, 1, 2), (one(p1), one(p2)))


def bipartition(g: Graph) -> tuple[frozenset, frozenset]:
    """Two sides of a bipartite graph (BFS 2-colouring); ValueError otherwise."""
    side: dict = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for w in g.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    raise ValueError(f"graph is not bipartite (odd cycle through {u!r}-{w!r})")
    return (
        frozenset(v for v, c in side.items() if c == 0),
        frozenset(v for v, c in side.items() if c == 1),
    )
