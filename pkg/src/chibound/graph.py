"""Immutable simple graphs and digraphs over structured vertex labels.

Labels may be integers, strings, or (nested) tuples of labels.  They are
kept in a canonical total order (see :func:`label_key`) and every graph
carries a dense index with one adjacency bitmask per vertex, which is what
the solvers in :mod:`chibound.invariants` work on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Any, Hashable, Iterable, Iterator, Sequence

Label = Hashable


def label_key(label: Any) -> tuple:
    """Sort key giving a total order on mixed labels.

    Numbers sort before strings, strings before tuples; tuples compare
    element-wise under the same rule.
    """
    if isinstance(label, (bool, int, Fraction, float)):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(label_key(x) for x in label))
    raise TypeError(f"unsupported vertex label {label!r}")


def _sorted_labels(labels: Iterable[Label]) -> tuple:
    return tuple(sorted(set(labels), key=label_key))


def _ordered_pair(u: Label, v: Label) -> tuple:
    return (u, v) if label_key(u) <= label_key(v) else (v, u)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple undirected graph.

    >>> g = Graph([1, 2, 3], [(1, 2), (2, 3)])
    >>> g.num_edges, g.has_edge(3, 2)
    (2, True)
    """

    __slots__ = ("_labels", "_index", "_adj", "_hash")

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[tuple] = ()):
        edges = [tuple(e) for e in edges]
        labels = set(vertices)
        labels.update(x for e in edges for x in e)
        self._labels = _sorted_labels(labels)
        self._index = {v: i for i, v in enumerate(self._labels)}
        adj = [0] * len(self._labels)
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} does not have two endpoints")
            u, v = e
            if u == v:
                raise ValueError(f"loop at {u!r}")
            i, j = self._index[u], self._index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_masks(cls, labels: Sequence[Label], masks: Sequence[int]) -> "Graph":
        """Build from labels already in canonical order plus adjacency masks."""
        g = cls.__new__(cls)
        g._labels = tuple(labels)
        g._index = {v: i for i, v in enumerate(g._labels)}
        g._adj = tuple(masks)
        g._hash = None
        return g

    # -- basic access -------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return self._labels

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitmask per vertex index."""
        return self._adj

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self._labels)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def index(self, v: Label) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise KeyError(f"vertex {v!r} not in graph") from None

    def label(self, i: int) -> Label:
        return self._labels[i]

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(self._labels[i] for i in _bits(mask))

    def mask_of(self, vs: Iterable[Label]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    @property
    def edges(self) -> tuple:
        out = []
        for i, m in enumerate(self._adj):
            for j in _bits(m >> (i + 1)):
                out.append((self._labels[i], self._labels[i + 1 + j]))
        return tuple(out)

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges)

    def has_edge(self, u: Label, v: Label) -> bool:
        i, j = self._index.get(u), self._index.get(v)
        if i is None or j is None:
            return False
        return bool(self._adj[i] >> j & 1)

    def neighbors(self, v: Label) -> tuple:
        return tuple(self._labels[j] for j in _bits(self._adj[self.index(v)]))

    def closed_neighborhood(self, v: Label) -> frozenset:
        return frozenset(self.neighbors(v)) | {v}

    def degree(self, v: Label) -> int:
        return self._adj[self.index(v)].bit_count()

    # -- value semantics ---------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._labels, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges})"


class Digraph:
    """A finite loopless digraph with at most one arc per ordered pair."""

    __slots__ = ("_labels", "_index", "_out", "_in")

    def __init__(self, vertices: Iterable[Label] = (), arcs: Iterable[tuple] = ()):
        arcs = [tuple(a) for a in arcs]
        labels = set(vertices)
        labels.update(x for a in arcs for x in a)
        self._labels = _sorted_labels(labels)
        self._index = {v: i for i, v in enumerate(self._labels)}
        out = [0] * len(self._labels)
        inn = [0] * len(self._labels)
        for a in arcs:
            if len(a) != 2:
                raise ValueError(f"arc {a!r} does not have two endpoints")
            u, v = a
            if u == v:
                raise ValueError(f"loop at {u!r}")
            i, j = self._index[u], self._index[v]
            out[i] |= 1 << j
            inn[j] |= 1 << i
        self._out = tuple(out)
        self._in = tuple(inn)

    @property
    def vertices(self) -> tuple:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self._labels)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    @property
    def arcs(self) -> tuple:
        return tuple(
            (self._labels[i], self._labels[j]) for i, m in enumerate(self._out) for j in _bits(m)
        )

    @property
    def num_arcs(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def has_arc(self, u: Label, v: Label) -> bool:
        i, j = self._index.get(u), self._index.get(v)
        if i is None or j is None:
            return False
        return bool(self._out[i] >> j & 1)

    def successors(self, v: Label) -> tuple:
        return tuple(self._labels[j] for j in _bits(self._out[self._index[v]]))

    def predecessors(self, v: Label) -> tuple:
        return tuple(self._labels[j] for j in _bits(self._in[self._index[v]]))

    def in_degree(self, v: Label) -> int:
        return self._in[self._index[v]].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._labels == other._labels and self._out == other._out

    def __hash__(self) -> int:
        return hash((self._labels, self._out))

    def __repr__(self) -> str:
        return f"Digraph(n={len(self)}, arcs={self.num_arcs})"


# -- operators --------------------------------------------------------

def intersect(g: Graph, h: Graph) -> Graph:
    """Graph on V(g) & V(h) whose edges lie in both g and h."""
    common = [v for v in g.vertices if v in h]
    edges = [e for e in g.edges if e[0] in h and h.has_edge(*e)]
    return Graph(common, edges)


def union(g: Graph, h: Graph) -> Graph:
    return Graph(list(g.vertices) + list(h.vertices), list(g.edges) + list(h.edges))


def complement(g: Graph) -> Graph:
    n = len(g)
    full = (1 << n) - 1
    return Graph.from_masks(g.vertices, [full & ~m & ~(1 << i) for i, m in enumerate(g.masks)])


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Disjoint union; each vertex ``v`` of ``gs[i]`` becomes ``(i, v)``."""
    vertices = [(i, v) for i, g in enumerate(gs) for v in g.vertices]
    edges = [((i, u), (i, v)) for i, g in enumerate(gs) for u, v in g.edges]
    return Graph(vertices, edges)


def induced_subgraph(g: Graph, x: Iterable[Label]) -> Graph:
    x = set(x)
    missing = [v for v in x if v not in g]
    if missing:
        raise ValueError(f"vertices not in graph: {sorted(missing, key=label_key)!r}")
    keep = [i for i, v in enumerate(g.vertices) if v in x]
    pos = {i: k for k, i in enumerate(keep)}
    masks = []
    for i in keep:
        m = 0
        for j in _bits(g.masks[i]):
            if j in pos:
                m |= 1 << pos[j]
        masks.append(m)
    return Graph.from_masks([g.label(i) for i in keep], masks)


def relabel(g: Graph, mapping) -> Graph:
    """Apply an injective relabeling given as a dict or a callable."""
    f = mapping if callable(mapping) else mapping.__getitem__
    new = {v: f(v) for v in g.vertices}
    if len(set(new.values())) != len(new):
        raise ValueError("relabeling is not injective")
    return Graph(new.values(), [(new[u], new[v]) for u, v in g.edges])


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` (as ordered label pairs)."""
    edges = g.edges
    by_vertex: dict = {}
    for e in edges:
        for x in e:
            by_vertex.setdefault(x, []).append(e)
    adj = set()
    for incident in by_vertex.values():
        for e, f in combinations(incident, 2):
            adj.add((e, f))
    return Graph(edges, adj)


def line_digraph(d: Digraph) -> Digraph:
    """Arcs of ``d`` become vertices; (u,v) -> (v,w) for consecutive arcs."""
    arcs = d.arcs
    out = [((u, v), (v, w)) for u, v in arcs for w in d.successors(v)]
    return Digraph(arcs, out)


def underlying(d: Digraph) -> Graph:
    return Graph(d.vertices, d.arcs)


def add_universal_vertex(g: Graph, label: Label) -> Graph:
    if label in g:
        raise ValueError(f"label {label!r} already in graph")
    return Graph(list(g.vertices) + [label], list(g.edges) + [(label, v) for v in g.vertices])


# -- small named graphs ------------------------------------------------

def edgeless(n: int, start: int = 0) -> Graph:
    return Graph(range(start, start + n))


def complete(n: int, start: int = 0) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, combinations(vs, 2))


def path(n: int, start: int = 0) -> Graph:
    vs = list(range(start, start + n))
    return Graph(vs, zip(vs, vs[1:]))


def cycle(n: int, start: int = 0) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star(t: int) -> Graph:
    """K_{1,t} with centre 0."""
    return Graph(range(t + 1), [(0, i) for i in range(1, t + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])
