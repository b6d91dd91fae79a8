"""Graph generators: shift graphs, the line-digraph intersection construction,
complete multipartite graphs, unit interval graphs and trivially perfect graphs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .graph import Digraph, Graph, intersect, line_digraph, line_graph, relabel, underlying
from .invariants import girth


def _check_shift_params(n: int, k: int) -> None:
    # n < 2k is allowed (small cases are still well defined); n < k is empty
    if k < 2 or n < k:
        raise ValueError(f"shift graph needs k >= 2 and n >= k, got n={n}, k={k}")


def _shift_arcs(n: int, k: int):
    for t in combinations(range(1, n + 1), k):
        for last in range(t[-1] + 1, n + 1):
            yield t, t[1:] + (last,)


def shift_graph(n: int, k: int) -> Graph:
    """Increasing k-tuples over 1..n; t ~ t' when t' is t shifted by one place."""
    _check_shift_params(n, k)
    return Graph(combinations(range(1, n + 1), k), _shift_arcs(n, k))


def directed_shift_graph(n: int, k: int) -> Digraph:
    """Orientation of :func:`shift_graph` with arcs t -> t' where t'_i = t_{i+1}."""
    _check_shift_params(n, k)
    return Digraph(combinations(range(1, n + 1), k), _shift_arcs(n, k))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Vertices ``(part, i)``; two vertices adjacent iff their parts differ."""
    if not part_sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in part_sizes):
        raise ValueError("part sizes must be positive")
    vs = [(p, i) for p, s in enumerate(part_sizes) for i in range(s)]
    return Graph(vs, [(u, v) for u, v in combinations(vs, 2) if u[0] != v[0]])


def middle_coordinate_multipartite(vertexset) -> Graph:
    """Triples, adjacent iff their middle coordinates differ."""
    vs = list(vertexset)
    for v in vs:
        if not (isinstance(v, tuple) and len(v) == 3):
            raise ValueError(f"label {v!r} is not a triple")
    return Graph(vs, [(u, v) for u, v in combinations(vs, 2) if u[1] != v[1]])


def _triple(arc) -> tuple:
    (x, y), (y2, z) = arc
    return (x, y, z)


def intersection_construction(h: Digraph) -> tuple[Graph, Graph, Graph]:
    """Line graph, middle-coordinate multipartite graph and underlying line digraph.

    ``h`` must be a subdigraph of a directed shift graph on pairs: every
    arc has the form (x, y) -> (y, z).  Each arc is relabelled by the
    triple (x, y, z), so the three returned graphs share one vertex set and
    the returned ``gL`` equals ``intersect(line, multipartite)``; this is
    asserted before returning.
    """
    for v in h.vertices:
        if not (isinstance(v, tuple) and len(v) == 2 and v[0] < v[1]):
            raise ValueError(f"vertex {v!r} is not an increasing pair")
    for a, b in h.arcs:
        if a[1] != b[0]:
            raise ValueError(f"arc {a!r}->{b!r} does not follow the shift orientation")
    to_triple = {arc: _triple(arc) for arc in h.arcs}
    # an undirected edge of h is an arc read either way; arcs are unique per pair here
    edge_to_triple = {frozenset(arc): t for arc, t in to_triple.items()}
    lg = line_graph(underlying(h))
    line = relabel(lg, lambda e: edge_to_triple[frozenset(e)])
    multipartite = middle_coordinate_multipartite(line.vertices)
    gl = relabel(underlying(line_digraph(h)), to_triple.__getitem__)
    if gl != intersect(line, multipartite):
        raise AssertionError("line digraph is not the intersection of line graph and multipartite graph")
    return line, multipartite, gl


def random_shift_subdigraph(
    n: int, p: float, *, min_girth: int = 3, seed: int, max_tries: int = 1000
) -> Digraph:
    """Keep each arc of the directed shift graph G(n,2) with probability p,
    retrying until the underlying graph has girth at least ``min_girth``."""
    rng = random.Random(seed)
    full = directed_shift_graph(n, 2)
    for _ in range(max_tries):
        arcs = [a for a in full.arcs if rng.random() < p]
        d = Digraph(full.vertices, arcs)
        if girth(underlying(d)) >= min_girth:
            return d
    raise RuntimeError(f"no subdigraph of girth >= {min_girth} after {max_tries} tries")


# -- intervals ---------------------------------------------------------

@dataclass(frozen=True)
class IntervalFamily:
    """Closed intervals with rational endpoints, listed in vertex order."""

    intervals: tuple[tuple[Fraction, Fraction], ...]
    unit: bool = True

    def __post_init__(self):
        ivs = tuple((Fraction(a), Fraction(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        for a, b in ivs:
            if not a < b:
                raise ValueError(f"interval [{a}, {b}] is empty or reversed")
            if self.unit and b - a != 1:
                raise ValueError(f"interval [{a}, {b}] is not of unit length")

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def is_normalized(self) -> bool:
        return all(x.denominator != 1 for iv in self.intervals for x in iv)

    def normalized(self) -> "IntervalFamily":
        """Translate every interval by a common epsilon so no endpoint is an integer.

        A common translation keeps the overlap relation unchanged.
        """
        if self.is_normalized:
            return self
        ends = {x for iv in self.intervals for x in iv}
        fracs = {x - math.floor(x) for x in ends}
        base = 4 * len(ends)
        j = 0
        while True:
            eps = Fraction(1, base + j)
            if 1 - eps not in fracs:
                break
            j += 1
        return IntervalFamily(tuple((a + eps, b + eps) for a, b in self.intervals), self.unit)


def unit_interval_graph(f: IntervalFamily) -> Graph:
    """Intersection graph of a normalized unit family; vertex i is interval i."""
    if not f.unit:
        raise ValueError("family is not a unit interval family")
    if not f.is_normalized:
        raise ValueError("family has integer endpoints; call .normalized() first")
    ivs = f.intervals
    edges = [
        (i, j)
        for i, j in combinations(range(len(ivs)), 2)
        if max(ivs[i][0], ivs[j][0]) <= min(ivs[i][1], ivs[j][1])
    ]
    return Graph(range(len(ivs)), edges)


def random_unit_interval_family(n: int, *, seed: int, span: int = 8, denominator: int = 7) -> IntervalFamily:
    """n unit intervals with left ends drawn from multiples of 1/denominator in [0, span)."""
    rng = random.Random(seed)
    lefts = [Fraction(rng.randrange(span * denominator), denominator) for _ in range(n)]
    return IntervalFamily(tuple((a, a + 1) for a in lefts)).normalized()


# -- trivially perfect graphs ---------------------------------------------

@dataclass(frozen=True)
class TPRecipe:
    """Expression tree: ``vertex``, ``union`` of children, or ``universal`` over one child."""

    op: str
    children: tuple["TPRecipe", ...] = ()

    def __post_init__(self):
        if self.op == "vertex" and self.children:
            raise ValueError("a single vertex takes no children")
        if self.op == "union" and not self.children:
            raise ValueError("disjoint union needs at least one child")
        if self.op == "universal" and len(self.children) != 1:
            raise ValueError("add-universal takes exactly one child")
        if self.op not in ("vertex", "union", "universal"):
            raise ValueError(f"unknown recipe operation {self.op!r}")


def build_trivially_perfect(recipe: TPRecipe) -> Graph:
    """Evaluate a recipe; vertices are numbered 0, 1, ... in creation order."""
    counter = [0]
    edges: list[tuple[int, int]] = []

    def build(r: TPRecipe) -> list[int]:
        if r.op == "vertex":
            counter[0] += 1
            return [counter[0] - 1]
        if r.op == "union":
            out: list[int] = []
            for c in r.children:
                out.extend(build(c))
            return out
        inner = build(r.children[0])
        hub = counter[0]
        counter[0] += 1
        edges.extend((hub, v) for v in inner)
        return inner + [hub]

    vs = build(recipe)
    return Graph(vs, edges)


def random_tp_recipe(depth: int, *, seed: int, max_children: int = 3) -> TPRecipe:
    rng = random.Random(seed)

    def gen(d: int) -> TPRecipe:
        if d == 0 or rng.random() < 0.2:
            return TPRecipe("vertex")
        if rng.random() < 0.5:
            return TPRecipe("universal", (gen(d - 1),))
        return TPRecipe("union", tuple(gen(d - 1) for _ in range(rng.randint(1, max_children))))

    return gen(depth)


# -- random instances --------------------------------------------------------

def random_graph(n: int, p: float, *, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) on vertices 0..n-1, deterministic per seed."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph(range(n), [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def random_bipartite_graph(a: int, b: int, p: float, *, seed: int) -> tuple[Graph, tuple[frozenset, frozenset]]:
    """Random bipartite graph with sides ``('a', i)`` and ``('b', j)``."""
    rng = random.Random(seed)
    left = [("a", i) for i in range(a)]
    right = [("b", j) for j in range(b)]
    edges = [(u, v) for u in left for v in right if rng.random() < p]
    return Graph(left + right, edges), (frozenset(left), frozenset(right))
