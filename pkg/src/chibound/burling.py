"""Burling trees, the graphs derived from them, and the tree surgeries that
realise disjoint unions and universal vertices inside their closures.

A Burling tree is a rooted tree together with

* ``lastborn``: for every non-leaf vertex, one designated child;
* ``choose``: for every vertex that is neither the root nor a last-born
  child, a (possibly empty) downward path that starts at the last-born
  child of its parent.  Last-born vertices and the root choose nothing.

From it we derive the oriented graph ``A`` (u -> v for v in choose(u)),
its underlying graph ``G``, the clique closure ``C`` (add every
ancestor/descendant pair) and the sibling closure ``I`` (add sibling pairs
and join each non-last-born vertex to every descendant of its last-born
sibling).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

from .graph import Digraph, Graph, intersect, label_key, underlying

Label = Hashable


@dataclass(frozen=True)
class BurlingTree:
    root: Label
    parent: dict  # child -> parent; the root has no entry
    lastborn: dict  # non-leaf vertex -> one of its children
    choose: dict  # vertex -> tuple of vertices (a branch), missing means empty
    _children: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        kids: dict = {self.root: []}
        for c, p in self.parent.items():
            kids.setdefault(p, []).append(c)
            kids.setdefault(c, [])
        for v in kids:
            kids[v].sort(key=label_key)
        object.__setattr__(self, "_children", {v: tuple(cs) for v, cs in kids.items()})
        object.__setattr__(self, "choose", {v: tuple(b) for v, b in self.choose.items() if b})

    # -- shape ------------------------------------------------------
    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self._children, key=label_key))

    def __len__(self) -> int:
        return len(self._children)

    def __contains__(self, v) -> bool:
        return v in self._children

    def children(self, v) -> tuple:
        return self._children[v]

    def is_leaf(self, v) -> bool:
        return not self._children[v]

    def leaves(self) -> tuple:
        return tuple(v for v in self.vertices if self.is_leaf(v))

    def is_last_born(self, v) -> bool:
        p = self.parent.get(v)
        return p is not None and self.lastborn.get(p) == v

    def chosen(self, v) -> tuple:
        return self.choose.get(v, ())

    def path_to_root(self, v) -> list:
        out = [v]
        while out[-1] in self.parent:
            out.append(self.parent[out[-1]])
        return out

    def depth(self, v) -> int:
        return len(self.path_to_root(v)) - 1

    def descendants(self, v) -> list:
        out: list = []
        stack = list(self._children[v])
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self._children[u])
        return out

    def principal_branches(self) -> Iterator[list]:
        """Root-to-leaf paths, one per leaf."""
        for leaf in self.leaves():
            yield self.path_to_root(leaf)[::-1]


@dataclass(frozen=True)
class DerivedGraphBundle:
    tree: BurlingTree
    A: Digraph
    G: Graph
    C: Graph
    I: Graph


# -- validation -------------------------------------------------------------

def validate_burling_tree(t: BurlingTree) -> tuple[bool, list[str]]:
    """Check the tree, last-born and choose conditions; report every violation."""
    report: list[str] = []
    for v in t.parent:
        seen = {v}
        u = v
        while u in t.parent:
            u = t.parent[u]
            if u in seen:
                report.append(f"{v!r}: parent chain has a cycle")
                break
            seen.add(u)
        else:
            if u != t.root:
                report.append(f"{v!r}: parent chain ends at {u!r}, not the root")
    if t.root in t.parent:
        report.append(f"root {t.root!r} has a parent")
    if report:
        return False, report
    for v in t.vertices:
        kids = t.children(v)
        lb = t.lastborn.get(v)
        if kids and lb not in kids:
            report.append(f"{v!r}: last-born {lb!r} is not a child")
        if not kids and lb is not None:
            report.append(f"{v!r}: leaf has a last-born {lb!r}")
    for v in t.lastborn:
        if v not in t:
            report.append(f"last-born entry for unknown vertex {v!r}")
    for v, branch in t.choose.items():
        if v not in t:
            report.append(f"choose entry for unknown vertex {v!r}")
            continue
        if not branch:
            continue
        if v == t.root or t.is_last_born(v):
            report.append(f"{v!r}: root or last-born vertex chooses {branch!r}")
            continue
        start = t.lastborn.get(t.parent[v])
        if branch[0] != start:
            report.append(f"{v!r}: branch starts at {branch[0]!r}, not at last-born {start!r}")
        for a, b in zip(branch, branch[1:]):
            if t.parent.get(b) != a:
                report.append(f"{v!r}: {a!r} is not the parent of {b!r} in its branch")
    return not report, report


def _require_valid(t: BurlingTree) -> None:
    ok, report = validate_burling_tree(t)
    if not ok:
        raise ValueError("invalid Burling tree: " + "; ".join(report))


# -- derived graphs ----------------------------------------------------------

def fully_derived_oriented(t: BurlingTree) -> Digraph:
    _require_valid(t)
    return Digraph(t.vertices, [(u, v) for u in t.vertices for v in t.chosen(u)])


def fully_derived(t: BurlingTree) -> Graph:
    return underlying(fully_derived_oriented(t))


def clique_closure(t: BurlingTree) -> Graph:
    g = fully_derived(t)
    extra = [(v, a) for v in t.vertices for a in t.path_to_root(v)[1:]]
    return Graph(g.vertices, list(g.edges) + extra)


def sibling_closure(t: BurlingTree) -> Graph:
    """G(T) plus sibling pairs plus non-last-born -> descendants of its last-born sibling.

    A last-born vertex is not its own last-born sibling, so it gains no
    edges to its own descendants.
    """
    g = fully_derived(t)
    extra = []
    for v in t.vertices:
        kids = t.children(v)
        extra.extend((a, b) for i, a in enumerate(kids) for b in kids[i + 1 :])
        if kids:
            below = t.descendants(t.lastborn[v])
            extra.extend((a, d) for a in kids if a != t.lastborn[v] for d in below)
    return Graph(g.vertices, list(g.edges) + extra)


def derive_bundle(t: BurlingTree) -> DerivedGraphBundle:
    a = fully_derived_oriented(t)
    g = underlying(a)
    c = clique_closure(t)
    i = sibling_closure(t)
    if intersect(c, i) != g:
        raise AssertionError("fully derived graph differs from C(T) & I(T)")
    return DerivedGraphBundle(t, a, g, c, i)


# -- distinguished vertices ---------------------------------------------------

def _is_left(t: BurlingTree, branch: Iterable) -> bool:
    on = set(branch)
    return all(not (set(t.chosen(u)) & on) for u in t.vertices if u not in on)


def left_principal_branch(t: BurlingTree) -> list:
    """Walk down from the root, preferring the smallest non-last-born child."""
    _require_valid(t)
    branch = [t.root]
    while not t.is_leaf(branch[-1]):
        v = branch[-1]
        kids = t.children(v)
        if len(kids) >= 2:
            branch.append(next(c for c in kids if c != t.lastborn[v]))
        else:
            branch.append(kids[0])
    if not _is_left(t, branch):
        raise AssertionError(f"constructed branch {branch!r} is not left")
    return branch


def bottom_left_vertices(t: BurlingTree, x: Iterable) -> frozenset:
    """Leaves of ``t`` in ``x`` that end some left principal branch.

    Non-empty whenever ``x`` holds every leaf of ``t``; otherwise it may be
    empty.
    """
    x = set(x)
    return frozenset(b[-1] for b in t.principal_branches() if b[-1] in x and _is_left(t, b))


def top_left_vertices(t: BurlingTree, x: Iterable) -> frozenset:
    """Vertices of ``x`` closest to the root that are either not last-born or
    the unique closest vertex.  Each returned vertex is checked to be a
    source of ``A(T)[x]``."""
    x = set(x)
    if not x:
        raise ValueError("x must be non-empty")
    depth = {v: t.depth(v) for v in x}
    dmin = min(depth.values())
    closest = [v for v in x if depth[v] == dmin]
    if len(closest) == 1:
        out = frozenset(closest)
    else:
        out = frozenset(v for v in closest if not t.is_last_born(v))
    for v in out:
        for u in x:
            if v in t.chosen(u):
                raise AssertionError(f"top-left vertex {v!r} has in-neighbour {u!r}")
    return out


# -- surgeries --------------------------------------------------------------

def _fresh(taken: set, base: str) -> str:
    name, i = base, 0
    while name in taken:
        i += 1
        name = f"{base}_{i}"
    taken.add(name)
    return name


def combine_trees(t1: BurlingTree, t2: BurlingTree) -> tuple[BurlingTree, frozenset]:
    """Join two trees under three helper vertices r, r1', r2'.

    r has children r1' and r2' (last-born r2'); r1' and r2' sit above the
    old roots.  r1' chooses the branch (r2', root of t2).  Deleting the
    helpers from either closure of the result leaves the disjoint union of
    the closures of t1 and t2.
    """
    if set(t1.vertices) & set(t2.vertices):
        raise ValueError("trees share vertex labels")
    taken = set(t1.vertices) | set(t2.vertices)
    r, r1p, r2p = _fresh(taken, "r"), _fresh(taken, "r1'"), _fresh(taken, "r2'")
    parent = {**t1.parent, **t2.parent, r1p: r, r2p: r, t1.root: r1p, t2.root: r2p}
    lastborn = {**t1.lastborn, **t2.lastborn, r: r2p, r1p: t1.root, r2p: t2.root}
    choose = {**t1.choose, **t2.choose, r1p: (r2p, t2.root)}
    return BurlingTree(r, parent, lastborn, choose), frozenset({r, r1p, r2p})


def attach_root_clique(t1: BurlingTree) -> BurlingTree:
    """New root above the old one; its clique closure gains a universal vertex."""
    r = _fresh(set(t1.vertices), "r")
    return BurlingTree(r, {**t1.parent, t1.root: r}, {**t1.lastborn, r: t1.root}, dict(t1.choose))


def attach_root_sibling(t1: BurlingTree) -> tuple[BurlingTree, frozenset]:
    """New root r with children r' and the old root (last-born).

    After deleting r, the sibling closure is that of ``t1`` plus r' joined
    to everything.
    """
    taken = set(t1.vertices)
    r, rp = _fresh(taken, "r"), _fresh(taken, "r'")
    tree = BurlingTree(r, {**t1.parent, t1.root: r, rp: r}, {**t1.lastborn, r: t1.root}, dict(t1.choose))
    return tree, frozenset({r})


def single_vertex_tree(label: Label = 0) -> BurlingTree:
    return BurlingTree(label, {}, {}, {})


def realize_trivially_perfect(recipe, closure: str) -> tuple[BurlingTree, frozenset]:
    """Compose surgeries so that a closure of the result realises ``recipe``.

    ``closure`` is ``"C"`` (clique closure) or ``"I"`` (sibling closure).
    Returns the tree and the helper vertices to delete.  Recipe vertex
    ``k`` (numbered as in :func:`chibound.constructions.build_trivially_perfect`)
    is the tree vertex ``f"v{k}"``.
    """
    if closure not in ("C", "I"):
        raise ValueError("closure must be 'C' or 'I'")
    counter = [0]

    def build(r) -> tuple[BurlingTree, frozenset]:
        if r.op == "vertex":
            counter[0] += 1
            return single_vertex_tree(f"v{counter[0] - 1}"), frozenset()
        if r.op == "union":
            tree, removed = build(r.children[0])
            for child in r.children[1:]:
                t2, rem2 = build(child)
                t2, rem2 = _rename_apart(t2, rem2, set(tree.vertices))
                tree, helpers = combine_trees(tree, t2)
                removed = removed | rem2 | helpers
            return tree, removed
        inner, removed = build(r.children[0])
        hub = f"v{counter[0]}"
        counter[0] += 1
        if closure == "C":
            tree = attach_root_clique(inner)
            return _relabel_tree(tree, {tree.root: hub}), removed
        tree, helpers = attach_root_sibling(inner)
        rp = next(c for c in tree.children(tree.root) if c != inner.root)
        return _relabel_tree(tree, {rp: hub}), removed | helpers

    return build(recipe)


def _rename_apart(t: BurlingTree, removed: frozenset, taken: set) -> tuple[BurlingTree, frozenset]:
    """Rename helper vertices of ``t`` that collide with ``taken``."""
    mapping = {}
    pool = taken | set(t.vertices)
    for v in sorted(removed, key=label_key):
        if v in taken:
            mapping[v] = _fresh(pool, str(v))
    if not mapping:
        return t, removed
    return _relabel_tree(t, mapping), frozenset(mapping.get(v, v) for v in removed)


def _relabel_tree(t: BurlingTree, mapping: dict) -> BurlingTree:
    f = lambda v: mapping.get(v, v)  # noqa: E731
    return BurlingTree(
        f(t.root),
        {f(c): f(p) for c, p in t.parent.items()},
        {f(v): f(c) for v, c in t.lastborn.items()},
        {f(v): tuple(f(u) for u in b) for v, b in t.choose.items()},
    )


# -- random instances ----------------------------------------------------------

def generate_random_burling_tree(n: int, seed: int) -> BurlingTree:
    """Random recursive tree on 0..n-1 (root 0) with random last-borns and branches."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    parent = {i: rng.randrange(i) for i in range(1, n)}
    kids: dict[int, list[int]] = {i: [] for i in range(n)}
    for c, p in parent.items():
        kids[p].append(c)
    lastborn = {v: rng.choice(cs) for v, cs in kids.items() if cs}
    choose = {}
    for v in range(1, n):
        if lastborn[parent[v]] == v:
            continue
        branch = []
        u = lastborn[parent[v]]
        while rng.random() < 0.7:
            branch.append(u)
            if not kids[u]:
                break
            u = rng.choice(kids[u])
        choose[v] = tuple(branch)
    return BurlingTree(0, parent, lastborn, choose)
