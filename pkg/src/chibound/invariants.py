"""Exact chromatic, clique and independence numbers plus related invariants.

The chromatic number is found by iterative deepening on ``k``: a clique
gives the starting lower bound, a DSATUR greedy colouring the upper bound,
and each ``k`` in between is settled by an exact k-colourability search.

The k-colourability search branches DSATUR-style (or along a fixed vertex
order) and caches every residual sub-problem it has refuted.  A residual
problem is the set ``U`` of uncoloured vertices plus their remaining colour
domains.  Uncoloured false twins (same neighbourhood inside ``U``) are
interchangeable, and a twin whose domain contains another twin's domain can
always copy that twin's colour, so the cache key keeps only the
inclusion-minimal domains of each twin class.  Several vertex orders are
tried round-robin with growing node budgets; they share one cache, which is
sound because keys describe the residual problem exactly.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, _bits, label_key

DEFAULT_MAX_VERTICES = 64
DEFAULT_MAX_NODES = 2_000_000
CLIQUE_MAX_VERTICES = 1024


class BudgetExceeded(RuntimeError):
    """A solver hit its size or node budget before proving optimality.

    ``lower`` and ``upper`` bracket the true value; ``best`` holds the best
    witness found so far (a :class:`Coloring` or a vertex set), if any.
    """

    def __init__(self, message: str, lower: int, upper: int, best=None):
        super().__init__(f"{message} (bounds {lower}..{upper})")
        self.lower = lower
        self.upper = upper
        self.best = best


@dataclass(frozen=True)
class Coloring:
    """Assignment of 1-based colour indices to the vertices of a graph."""

    vertices: tuple
    colors: tuple
    num_colors: int
    _map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.vertices) != len(self.colors):
            raise ValueError("vertices and colors differ in length")
        bad = [c for c in self.colors if not 1 <= c <= self.num_colors]
        if bad:
            raise ValueError(f"color indices {bad[:3]} outside 1..{self.num_colors}")
        object.__setattr__(self, "_map", dict(zip(self.vertices, self.colors)))

    @classmethod
    def from_mapping(cls, assignment: dict, num_colors: int | None = None) -> "Coloring":
        vs = tuple(sorted(assignment, key=label_key))
        cs = tuple(assignment[v] for v in vs)
        k = num_colors if num_colors is not None else max(cs, default=0)
        return cls(vs, cs, k)

    def __getitem__(self, v):
        return self._map[v]

    def __contains__(self, v) -> bool:
        return v in self._map

    @property
    def assignment(self) -> dict:
        return dict(self._map)

    def classes(self) -> list[frozenset]:
        out = [set() for _ in range(self.num_colors)]
        for v, c in self._map.items():
            out[c - 1].add(v)
        return [frozenset(s) for s in out]

    def to_json(self) -> str:
        return json.dumps(
            {"labels": [_jsonable(v) for v in self.vertices], "colors": list(self.colors), "k": self.num_colors}
        )

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        obj = json.loads(text)
        return cls(tuple(_from_jsonable(v) for v in obj["labels"]), tuple(obj["colors"]), obj["k"])


def _jsonable(v):
    return [_jsonable(x) for x in v] if isinstance(v, tuple) else v


def _from_jsonable(v):
    return tuple(_from_jsonable(x) for x in v) if isinstance(v, list) else v


# -- cliques and independent sets ---------------------------------------

def _greedy_clique(masks: Sequence[int], within: int) -> int:
    best = 0
    for start in _bits(within):
        clique = 1 << start
        cand = masks[start] & within
        while cand:
            v = max(_bits(cand), key=lambda i: (masks[i] & cand).bit_count())
            clique |= 1 << v
            cand &= masks[v]
        if clique.bit_count() > best.bit_count():
            best = clique
    return best


def _max_clique(masks: Sequence[int], within: int, max_nodes: int | None) -> tuple[int, bool]:
    """Branch and bound with greedy colour-class bounds (Tomita style).

    Returns ``(clique_mask, complete)``; ``complete`` is False when the node
    budget ran out, in which case the mask is only the best found.
    """
    best = [_greedy_clique(masks, within)]
    nodes = [0]

    def color_sort(cand: int) -> list[tuple[int, int]]:
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            q = rest
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~masks[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append((v, color))
        return order

    def expand(clique: int, size: int, cand: int) -> None:
        nodes[0] += 1
        if max_nodes is not None and nodes[0] > max_nodes:
            raise _OutOfNodes
        order = color_sort(cand)
        for v, bound in reversed(order):
            if size + bound <= best[0].bit_count():
                return
            new_clique = clique | (1 << v)
            new_cand = cand & masks[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best[0].bit_count():
                best[0] = new_clique
            cand &= ~(1 << v)

    try:
        if within:
            expand(0, 0, within)
    except _OutOfNodes:
        return best[0], False
    return best[0], True


class _OutOfNodes(Exception):
    pass


def _check_size(g: Graph, max_vertices: int | None, what: str, lower: int, upper: int) -> None:
    if max_vertices is not None and len(g) > max_vertices:
        raise BudgetExceeded(f"{what}: {len(g)} vertices exceeds budget {max_vertices}", lower, upper)


def clique_number(
    g: Graph, *, max_vertices: int | None = CLIQUE_MAX_VERTICES, max_nodes: int | None = DEFAULT_MAX_NODES
) -> tuple[int, frozenset]:
    """Exact clique number with a witnessing clique."""
    full = (1 << len(g)) - 1
    if max_vertices is not None and len(g) > max_vertices:
        lb = _greedy_clique(g.masks, full).bit_count()
        _check_size(g, max_vertices, "clique_number", lb, len(g))
    mask, done = _max_clique(g.masks, full, max_nodes)
    if not done:
        raise BudgetExceeded("clique_number: node budget exhausted", mask.bit_count(), len(g), g.labels_of(mask))
    return mask.bit_count(), g.labels_of(mask)


def independence_number(
    g: Graph, *, max_vertices: int | None = DEFAULT_MAX_VERTICES, max_nodes: int | None = DEFAULT_MAX_NODES
) -> tuple[int, frozenset]:
    """Exact independence number with a witnessing independent set."""
    n = len(g)
    full = (1 << n) - 1
    non_adj = [full & ~m & ~(1 << i) for i, m in enumerate(g.masks)]
    if max_vertices is not None and n > max_vertices:
        lb = _greedy_clique(non_adj, full).bit_count()
        _check_size(g, max_vertices, "independence_number", lb, n)
    mask, done = _max_clique(non_adj, full, max_nodes)
    if not done:
        raise BudgetExceeded("independence_number: node budget exhausted", mask.bit_count(), n, g.labels_of(mask))
    return mask.bit_count(), g.labels_of(mask)


# -- colouring -----------------------------------------------------------

def _dsatur_greedy(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    colors = [-1] * n
    seen = [0] * n
    uncolored = set(range(n))
    while uncolored:
        v = min(uncolored, key=lambda i: (-seen[i].bit_count(), -masks[i].bit_count(), i))
        c = 0
        while seen[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in _bits(masks[v]):
            seen[u] |= 1 << c
    return colors


class _KColorSearch:
    """Exact k-colourability with a shared cache of refuted residual problems."""

    def __init__(self, masks: Sequence[int], k: int):
        self.masks = masks
        self.n = len(masks)
        self.k = k
        self.failed: set = set()
        self.nodes = 0
        # bitset of proper subsets of each domain, when the table is small
        if k <= 8:
            size = 1 << k
            self._proper_subsets = [
                sum(1 << e for e in range(size) if e != d and e & d == e) for d in range(size)
            ]
        else:
            self._proper_subsets = None

    def _key(self, U: int, B: int, dom: list[int]):
        # Only boundary vertices (domain already restricted) need listing:
        # a full-domain vertex is dominated by any restricted twin, and a
        # class with no restricted member is fixed by U alone.  Each class's
        # domains are packed as a bitset over the 2^k possible domains.
        classes: dict[int, int] = {}
        masks = self.masks
        get = classes.get
        while B:
            low = B & -B
            v = low.bit_length() - 1
            B ^= low
            nb = masks[v] & U
            classes[nb] = get(nb, 0) | (1 << dom[v])
        sub = self._proper_subsets
        if sub is not None:
            items = []
            for nb, ds in classes.items():
                if ds & (ds - 1):
                    kept = 0
                    rest = ds
                    while rest:
                        low = rest & -rest
                        rest ^= low
                        if not ds & sub[low.bit_length() - 1]:
                            kept |= low
                    ds = kept
                items.append((nb, ds))
        else:
            items = []
            for nb, ds in classes.items():
                doms = [d for d in range(ds.bit_length()) if ds >> d & 1]
                kept = 0
                for d in doms:
                    if not any(e != d and e & d == e for e in doms):
                        kept |= 1 << d
                items.append((nb, kept))
        return U, frozenset(items)

    def run(self, order: Sequence[int] | None, node_limit: int) -> list[int] | None:
        """Search once; ``order=None`` means dynamic DSATUR branching.

        Returns 0-based colours, None if not k-colourable, and raises
        ``_OutOfNodes`` when ``node_limit`` nodes were spent.
        """
        n, k, masks = self.n, self.k, self.masks
        full = (1 << k) - 1
        dom = [full] * n
        color: list = [None] * n
        limit = self.nodes + node_limit
        pos = None if order is None else list(order)

        def pick(U: int, i: int) -> tuple[int, int]:
            if pos is not None:
                while not U >> pos[i] & 1:
                    i += 1
                return pos[i], i
            best_v, best_key = -1, None
            rest = U
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                key = (dom[v].bit_count(), -(masks[v] & U).bit_count())
                if best_key is None or key < best_key:
                    best_v, best_key = v, key
            return best_v, i

        def find_twin(v: int, U: int, B: int, rest: int) -> int:
            # a false twin whose domain is inside v's lets v copy its colour
            nb = masks[v] & U
            dv = dom[v]
            scan = rest if dv == full else B & rest
            while scan:
                low = scan & -scan
                w = low.bit_length() - 1
                scan ^= low
                if masks[w] & U == nb and dom[w] & dv == dom[w]:
                    return w
            return -1

        def rec(U: int, B: int, i: int, used: int) -> bool:
            if not U:
                return True
            self.nodes += 1
            if self.nodes > limit:
                raise _OutOfNodes
            key = self._key(U, B, dom)
            if key in self.failed:
                return False
            v, i = pick(U, i)
            rest = U & ~(1 << v)
            nb = masks[v] & U
            w = find_twin(v, U, B, rest)
            if w >= 0:
                if rec(rest, B & rest, i, used):
                    color[v] = ("copy", w)
                    return True
                self.failed.add(key)
                return False
            d = dom[v]
            B2 = (B | nb) & rest
            for c in range(min(k, used + 1)):
                if not d >> c & 1:
                    continue
                bit = 1 << c
                changed = []
                ok = True
                for u in _bits(masks[v] & rest):
                    if dom[u] & bit:
                        dom[u] &= ~bit
                        changed.append(u)
                        if not dom[u]:
                            ok = False
                if ok and rec(rest, B2, i, max(used, c + 1)):
                    color[v] = c
                    return True
                for u in changed:
                    dom[u] |= bit
            self.failed.add(key)
            return False

        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 4 * n + 1000))
        try:
            found = rec((1 << n) - 1, 0, 0, 0)
        finally:
            sys.setrecursionlimit(old_limit)
        if not found:
            return None

        def resolve(v: int) -> int:
            c = color[v]
            while isinstance(c, tuple):
                c = color[c[1]]
            return c

        return [resolve(v) for v in range(n)]


def _orders(g: Graph) -> list[Sequence[int] | None]:
    n = len(g)
    return [None, list(range(n - 1, -1, -1)), list(range(n))]


def k_colorable(g: Graph, k: int, *, max_nodes: int | None = DEFAULT_MAX_NODES) -> Coloring | None:
    """Return a proper k-colouring of ``g`` or None if none exists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = len(g)
    if n == 0:
        return Coloring((), (), k)
    if k == 0:
        return None
    search = _KColorSearch(g.masks, k)
    orders = _orders(g)
    budget = 2000
    while True:
        for order in orders:
            step = budget if max_nodes is None else min(budget, max(1, max_nodes - search.nodes))
            try:
                result = search.run(order, step)
            except _OutOfNodes:
                if max_nodes is not None and search.nodes >= max_nodes:
                    raise BudgetExceeded(f"{k}-colourability: node budget exhausted", 0, n) from None
                continue
            if result is None:
                return None
            return Coloring(g.vertices, tuple(c + 1 for c in result), k)
        budget *= 2


def chromatic_number(
    g: Graph, *, max_vertices: int | None = DEFAULT_MAX_VERTICES, max_nodes: int | None = DEFAULT_MAX_NODES
) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring as certificate."""
    n = len(g)
    if n == 0:
        return 0, Coloring((), (), 0)
    greedy = _dsatur_greedy(g.masks)
    upper = max(greedy) + 1
    best = Coloring(g.vertices, tuple(c + 1 for c in greedy), upper)
    clique, _ = _max_clique(g.masks, (1 << n) - 1, 20_000)
    lower = clique.bit_count()
    if max_vertices is not None and n > max_vertices:
        raise BudgetExceeded(f"chromatic_number: {n} vertices exceeds budget {max_vertices}", lower, upper, best)
    k = lower
    while k < upper:
        try:
            c = k_colorable(g, k, max_nodes=max_nodes)
        except BudgetExceeded:
            raise BudgetExceeded("chromatic_number: node budget exhausted", k, upper, best) from None
        if c is not None:
            return k, c
        k += 1
    return upper, best


def is_proper_coloring(g: Graph, c: Coloring) -> bool:
    missing = [v for v in g.vertices if v not in c]
    if missing:
        raise ValueError(f"coloring misses vertices {missing[:5]!r}")
    return all(c[u] != c[v] for u, v in g.edges)


def product_coloring(colorings: Sequence[Coloring]) -> Coloring:
    """Colour each vertex by the tuple of its colours, re-indexed to 1..prod(k_i).

    Tuples are indexed in mixed radix, so the index range is exactly the
    product of the input colour counts.
    """
    if not colorings:
        raise ValueError("need at least one coloring")
    vs = set(colorings[0].vertices)
    for c in colorings[1:]:
        if set(c.vertices) != vs:
            raise ValueError("colorings are over different vertex sets")
    total = math.prod(c.num_colors for c in colorings)
    assignment = {}
    for v in colorings[0].vertices:
        idx = 0
        for c in colorings:
            idx = idx * c.num_colors + (c[v] - 1)
        assignment[v] = idx + 1
    return Coloring.from_mapping(assignment, total)


# -- structure -------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    masks = g.masks
    for s in range(len(g)):
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in _bits(masks[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def _component_masks(masks: Sequence[int], within: int) -> list[int]:
    out = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= masks[v]
            frontier = grow & within & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[frozenset]:
    return [g.labels_of(m) for m in _component_masks(g.masks, (1 << len(g)) - 1)]


def _alpha_at_most(masks: Sequence[int], within: int, bound: int) -> bool:
    """True iff the subgraph induced by ``within`` has no independent set of size bound+1."""
    if within.bit_count() <= bound:
        return True
    n = max(within.bit_length(), 1)
    full = (1 << n) - 1
    non_adj = [(full & ~m & ~(1 << i)) if within >> i & 1 else 0 for i, m in enumerate(masks[:n])]
    best, done = _max_clique(non_adj, within, None)
    return best.bit_count() <= bound


def is_componentwise_r_dependent(g: Graph, r: int) -> bool:
    """Every component has independence number at most r-1."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return all(_alpha_at_most(g.masks, comp, r - 1) for comp in _component_masks(g.masks, (1 << len(g)) - 1))


def componentwise_r_dependent_chromatic_number(
    g: Graph, r: int, *, max_vertices: int | None = 16
) -> tuple[int, Coloring]:
    """Fewest classes in a partition of V(g) into componentwise r-dependent parts.

    Exhaustive search; classes are opened in order (symmetry pruning) and a
    partial class is abandoned as soon as it stops being componentwise
    r-dependent, which is safe because that property is hereditary.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    n = len(g)
    if n == 0:
        return 0, Coloring((), (), 0)
    if max_vertices is not None and n > max_vertices:
        raise BudgetExceeded(f"{n} vertices exceeds budget {max_vertices}", 1, n)
    masks = g.masks

    def ok(cls: int) -> bool:
        return all(_alpha_at_most(masks, comp, r - 1) for comp in _component_masks(masks, cls))

    order = sorted(range(n), key=lambda v: -masks[v].bit_count())

    def solve(k: int) -> list[int] | None:
        classes = [0] * k
        assign = [0] * n

        def rec(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            for c in range(min(k, used + 1)):
                classes[c] |= 1 << v
                if ok(classes[c]) and rec(i + 1, max(used, c + 1)):
                    assign[v] = c
                    return True
                classes[c] &= ~(1 << v)
            return False

        return assign if rec(0, 0) else None

    for k in range(1, n + 1):
        res = solve(k)
        if res is not None:
            return k, Coloring(g.vertices, tuple(c + 1 for c in res), k)
    raise AssertionError("unreachable: singletons are always r-dependent")


def is_t_k_r_decomposition(g: Graph, parts: Sequence[Graph], k: int, r: int) -> bool:
    """Check that ``parts`` cover ``g`` exactly and each has cw-r-dep chromatic number <= k."""
    for p in parts:
        if set(p.vertices) != set(g.vertices):
            raise ValueError("part vertex set differs from the graph's")
    covered = set()
    for p in parts:
        covered |= p.edge_set()
    if covered != g.edge_set():
        return False
    return all(componentwise_r_dependent_chromatic_number(p, r, max_vertices=None)[0] <= k for p in parts)


__all__ = [
    "BudgetExceeded",
    "Coloring",
    "chromatic_number",
    "clique_number",
    "components",
    "componentwise_r_dependent_chromatic_number",
    "girth",
    "independence_number",
    "is_componentwise_r_dependent",
    "is_proper_coloring",
    "is_t_k_r_decomposition",
    "k_colorable",
    "product_coloring",
]
