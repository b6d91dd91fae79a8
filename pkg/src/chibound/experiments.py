"""Named, seeded experiments that check the library's claims in bulk and
produce machine-checkable JSON reports."""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import bounds, burling, constructions, decomposers, io, recognizers
from .graph import Graph, add_universal_vertex, induced_subgraph, intersect, line_graph, relabel, union
from .invariants import chromatic_number, clique_number, is_proper_coloring

SCHEMA = 1


class UnknownExperiment(KeyError):
    pass


@dataclass(frozen=True)
class ExperimentSpec:
    name: str
    parameters: dict = field(default_factory=dict)
    seed: int = 0
    budget_seconds: float | None = None


@dataclass
class Case:
    key: str
    inputs: dict
    values: dict
    predicate: str
    passed: bool
    witness: dict | None = None

    def as_dict(self) -> dict:
        out = {
            "key": self.key,
            "inputs": self.inputs,
            "values": self.values,
            "predicate": self.predicate,
            "passed": self.passed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    spec: ExperimentSpec
    cases: list[Case]
    complete: bool
    seconds: float

    @property
    def all_passed(self) -> bool:
        return self.complete and all(c.passed for c in self.cases)

    def as_dict(self, *, timing: bool = True) -> dict:
        cases = sorted(self.cases, key=lambda c: c.key)
        devs = [c.values["deviation"] for c in cases if isinstance(c.values.get("deviation"), (int, float))]
        out: dict[str, Any] = {
            "schema": SCHEMA,
            "experiment": {"name": self.spec.name, "parameters": self.spec.parameters, "seed": self.spec.seed},
            "cases": [c.as_dict() for c in cases],
            "summary": {
                "cases": len(cases),
                "passed": sum(c.passed for c in cases),
                "failed": sum(not c.passed for c in cases),
                "complete": self.complete,
                "all_passed": self.all_passed,
                "max_deviation": max(devs) if devs else None,
            },
        }
        if timing:
            out["timing"] = {"seconds": round(self.seconds, 3)}
        return out

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.as_dict(timing=timing), indent=2, sort_keys=True)


def _graph_witness(g: Graph, **values) -> dict:
    return {"graph": io.format_edge_list(g), **values}


def _seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**31) for _ in range(count)]


# -- experiments -----------------------------------------------------------------
# each is a generator of Case objects, so a time budget can stop it between cases

def _shift_chi(p: dict, seed: int) -> Iterator[Case]:
    for n in range(p["n_min"], p["n_max"] + 1):
        g = constructions.shift_graph(n, 2)
        chi, col = chromatic_number(g, max_vertices=None)
        expected = math.ceil(math.log2(n))
        ok = chi == expected and is_proper_coloring(g, col)
        yield Case(
            f"n={n:04d}",
            {"n": n, "k": 2},
            {"chi": chi, "expected": expected, "deviation": abs(chi - expected)},
            "chi(G(n,2)) == ceil(log2 n)",
            ok,
            None if ok else _graph_witness(g, chi=chi, expected=expected),
        )


def _intersection(p: dict, seed: int) -> Iterator[Case]:
    for i, n in enumerate(range(p["n_min"], p["n_max"] + 1)):
        if p.get("subsample") is not None:
            h = constructions.random_shift_subdigraph(
                n, p["subsample"], min_girth=p.get("girth", 3), seed=_seeds(seed, i + 1)[i]
            )
        else:
            h = constructions.directed_shift_graph(n, 2)
        line, multi, gl = constructions.intersection_construction(h)
        identity = gl == intersect(line, multi)
        tri_free = recognizers.is_triangle_free(gl)
        chi_l, _ = chromatic_number(gl, max_vertices=None)
        chi_d, _ = chromatic_number(Graph(h.vertices, h.arcs), max_vertices=None)
        log_bound = math.log2(chi_d) if chi_d > 0 else 0.0
        ok = identity and tri_free and chi_l >= log_bound
        yield Case(
            f"n={n:04d}",
            {"n": n, "subsample": p.get("subsample")},
            {"identity": identity, "triangle_free": tri_free, "chi_gL": chi_l, "chi_D": chi_d, "log2_chi_D": log_bound},
            "gL == L & C, gL triangle-free, chi(gL) >= log2 chi(D)",
            ok,
            None if ok else _graph_witness(gl, identity=identity, triangle_free=tri_free),
        )


def check_burling_tree(t: burling.BurlingTree) -> dict:
    b = burling.derive_bundle(t)
    nested = all(_closed_subset(b.C, v, a) for v in t.vertices for a in t.path_to_root(v)[1:])
    return {
        "G_eq_C_and_I": intersect(b.C, b.I) == b.G,
        "G_triangle_free": recognizers.is_triangle_free(b.G),
        "C_strongly_chordal": recognizers.is_strongly_chordal(b.C) is not None,
        "C_net_free": recognizers.is_net_free(b.C),
        "I_trivially_perfect": recognizers.is_trivially_perfect(b.I),
        "ancestor_nesting": nested,
    }


def _closed_subset(g: Graph, v, a) -> bool:
    return g.closed_neighborhood(v) <= g.closed_neighborhood(a)


def _burling_verify(p: dict, seed: int) -> Iterator[Case]:
    for i, s in enumerate(_seeds(seed, p["count"])):
        n = 1 + s % p["max_vertices"]
        t = burling.generate_random_burling_tree(n, s)
        checks = check_burling_tree(t)
        ok = all(checks.values())
        yield Case(
            f"tree={i:05d}",
            {"n": n, "seed": s},
            checks,
            "all Burling bundle identities hold",
            ok,
            None if ok else {"tree": io.format_burling_tree(t), **checks},
        )


def _prefixed(t: burling.BurlingTree, prefix: str) -> burling.BurlingTree:
    return burling._relabel_tree(t, {v: f"{prefix}{v}" for v in t.vertices})


def check_surgeries(t1: burling.BurlingTree, t2: burling.BurlingTree) -> dict:
    """Induced-subgraph contracts of the three surgeries (labels of t1, t2 must be disjoint)."""
    out = {}
    t, removed = burling.combine_trees(t1, t2)
    keep = set(t.vertices) - removed
    for name, closure in (("C", burling.clique_closure), ("I", burling.sibling_closure)):
        out[f"combine_{name}"] = induced_subgraph(closure(t), keep) == union(closure(t1), closure(t2))
    t = burling.attach_root_clique(t1)
    out["attach_clique"] = burling.clique_closure(t) == add_universal_vertex(burling.clique_closure(t1), t.root)
    t, removed = burling.attach_root_sibling(t1)
    (rp,) = [c for c in t.children(t.root) if c != t1.root]
    out["attach_sibling"] = induced_subgraph(burling.sibling_closure(t), set(t.vertices) - removed) == (
        add_universal_vertex(burling.sibling_closure(t1), rp)
    )
    return out


def _tree_surgery(p: dict, seed: int) -> Iterator[Case]:
    for i, s in enumerate(_seeds(seed, p["count"])):
        rng = random.Random(s)
        t1 = _prefixed(burling.generate_random_burling_tree(rng.randint(1, p["max_vertices"]), s), "a")
        t2 = _prefixed(burling.generate_random_burling_tree(rng.randint(1, p["max_vertices"]), s + 1), "b")
        checks = check_surgeries(t1, t2)
        ok = all(checks.values())
        yield Case(
            f"pair={i:05d}",
            {"seed": s, "n1": len(t1), "n2": len(t2)},
            checks,
            "surgery contracts hold",
            ok,
            None if ok else {"t1": io.format_burling_tree(t1), "t2": io.format_burling_tree(t2)},
        )


def check_unit_interval(f: constructions.IntervalFamily) -> dict:
    g = constructions.unit_interval_graph(f)
    col = decomposers.decompose_unit_interval(f)
    ints = decomposers.interval_integers(f)
    classes = [induced_subgraph(g, c) for c in col.classes()]
    parity_rule = all(
        g.has_edge(i, j) == (ints[i] == ints[j])
        for i in range(len(f))
        for j in range(i + 1, len(f))
        if col[i] == col[j]
    )
    ok_d, report = decomposers.verify_decomposable(g, decomposers.unit_interval_decomposition(f))
    return {
        "classes_cluster": all(recognizers.is_cluster(c) for c in classes),
        "union_reconstructs": report["union_check"] and _covers(g, col),
        "parity_rule": parity_rule,
        "decomposition_1_2_2": ok_d,
    }


def _covers(g: Graph, col) -> bool:
    # every vertex coloured, colours partition V(g)
    return sorted(v for c in col.classes() for v in c) == sorted(g.vertices)


def _decompose_unit_interval(p: dict, seed: int) -> Iterator[Case]:
    for i, s in enumerate(_seeds(seed, p["count"])):
        n = 1 + s % p["max_n"]
        f = constructions.random_unit_interval_family(n, seed=s)
        checks = check_unit_interval(f)
        ok = all(checks.values())
        yield Case(
            f"family={i:05d}",
            {"n": n, "seed": s},
            checks,
            "parity classes are cluster graphs covering the intersection graph",
            ok,
            None if ok else {"intervals": io.format_intervals(f)},
        )


def check_line_bipartite(g: Graph, sides) -> dict:
    lg = line_graph(g)
    p1, p2 = decomposers.decompose_line_of_bipartite(g, sides)
    e1, e2 = p1.edge_set(), p2.edge_set()
    ok_d, _ = decomposers.verify_decomposable(lg, decomposers.line_bipartite_decomposition(g, sides))
    return {
        "parts_cluster": recognizers.is_cluster(p1) and recognizers.is_cluster(p2),
        "partition": not (e1 & e2) and (e1 | e2) == lg.edge_set(),
        "decomposition_2_1_2": ok_d,
    }


def _decompose_line_bipartite(p: dict, seed: int) -> Iterator[Case]:
    for i, s in enumerate(_seeds(seed, p["count"])):
        rng = random.Random(s)
        a, b = rng.randint(1, p["max_side"]), rng.randint(1, p["max_side"])
        g, sides = constructions.random_bipartite_graph(a, b, rng.random(), seed=s)
        checks = check_line_bipartite(g, sides)
        ok = all(checks.values())
        yield Case(
            f"graph={i:05d}",
            {"a": a, "b": b, "seed": s},
            checks,
            "E1, E2 are cluster graphs partitioning E(L(g))",
            ok,
            None if ok else _graph_witness(g),
        )


def random_rk1_free(n: int, r: int, rng: random.Random) -> Graph:
    """Random graph with alpha < r: start dense and add edges until no rK1 remains."""
    from .invariants import independence_number

    g = constructions.random_graph(n, rng.uniform(0.4, 1.0), seed=rng.randrange(2**31))
    while True:
        alpha, witness = independence_number(g)
        if alpha < r:
            return g
        u, v = rng.sample(sorted(witness, key=str), 2)
        g = Graph(g.vertices, list(g.edges) + [(u, v)])


def _ramsey_known(s: int, t: int) -> bool:
    a, b = sorted((s, t))
    return a <= 2 or (a, b) in bounds.EXACT_FRONTIER


def draw_guard_pair(n: int, r: int, rng: random.Random, max_tries: int = 1000) -> tuple[Graph, Graph, int]:
    """Random (G, H) with G rK1-free; pairs whose Ramsey number lies outside the
    exactly computable range are redrawn.  The filter looks only at
    omega(G&H), never at omega(H).  Returns the pair and the redraw count."""
    for tries in range(max_tries):
        g = random_rk1_free(n, r, rng)
        h = constructions.random_graph(n, rng.random(), seed=rng.randrange(2**31))
        if _ramsey_known(clique_number(intersect(g, h))[0] + 1, r):
            return g, h, tries
    raise RuntimeError(f"no pair with a computable Ramsey number after {max_tries} draws")


def _rk1_guard(p: dict, seed: int) -> Iterator[Case]:
    for r in p["r"]:
        for i, s in enumerate(_seeds(seed * 10 + r, p["count"])):
            rng = random.Random(s)
            n = rng.randint(1, p["max_n"])
            g, h, redraws = draw_guard_pair(n, r, rng)
            w_gh = clique_number(intersect(g, h))[0]
            w_h = clique_number(h)[0]
            ramsey = bounds.ramsey_exact(w_gh + 1, r)
            ok = w_h < ramsey
            yield Case(
                f"r={r}:pair={i:05d}",
                {"r": r, "n": n, "seed": s, "redraws": redraws},
                {"omega_H": w_h, "omega_GH": w_gh, "R": ramsey},
                "omega(H) < R(omega(G&H)+1, r)",
                ok,
                None if ok else {"G": io.format_edge_list(g), "H": io.format_edge_list(h)},
            )


def _bounds_table(p: dict, seed: int) -> Iterator[Case]:
    f = bounds.named_bound(p["bound"], p.get("params", []))
    prev = None
    for n in range(1, p["upto"] + 1):
        v = f.raw(n)
        ok = prev is None or v >= prev
        yield Case(f"n={n:06d}", {"n": n}, {"value": str(v)}, "non-decreasing", ok)
        prev = v


def _tp_closure(p: dict, seed: int) -> Iterator[Case]:
    for i, s in enumerate(_seeds(seed, p["count"])):
        recipe = constructions.random_tp_recipe(p["depth"], seed=s)
        g = relabel(constructions.build_trivially_perfect(recipe), lambda k: f"v{k}")
        values = {"trivially_perfect": recognizers.is_trivially_perfect(g)}
        for closure, fn in (("C", burling.clique_closure), ("I", burling.sibling_closure)):
            t, removed = burling.realize_trivially_perfect(recipe, closure)
            values[f"realized_by_{closure}"] = induced_subgraph(fn(t), set(t.vertices) - removed) == g
        ok = all(values.values())
        yield Case(
            f"recipe={i:05d}",
            {"seed": s, "depth": p["depth"], "n": len(g)},
            values,
            "recipe graph is trivially perfect and an induced subgraph of C(T) and I(T)",
            ok,
            None if ok else _graph_witness(g),
        )


def _linegraph_clawfree(p: dict, seed: int) -> Iterator[Case]:
    for i, s in enumerate(_seeds(seed, p["count"])):
        rng = random.Random(s)
        n = rng.randint(1, p["max_n"])
        g = constructions.random_graph(n, rng.random(), seed=s)
        lg = line_graph(g)
        claw_free = recognizers.is_claw_free(lg)
        chi, _ = chromatic_number(lg)
        omega = clique_number(lg)[0]
        ok = claw_free and chi <= omega + 1
        yield Case(
            f"graph={i:05d}",
            {"n": n, "seed": s},
            {"claw_free": claw_free, "chi": chi, "omega": omega},
            "L(g) is claw-free and chi(L(g)) <= omega(L(g)) + 1",
            ok,
            None if ok else _graph_witness(g),
        )


@dataclass(frozen=True)
class _Registered:
    run: Callable[[dict, int], Iterator[Case]]
    defaults: dict
    description: str


EXPERIMENTS: dict[str, _Registered] = {
    "shift-chi": _Registered(_shift_chi, {"n_min": 3, "n_max": 20}, "chi(G(n,2)) = ceil(log2 n)"),
    "intersection-construction": _Registered(
        _intersection,
        {"n_min": 5, "n_max": 12, "subsample": None, "girth": 3},
        "gL = L(H) & C, triangle-free, chi(gL) >= log2 chi(H)",
    ),
    "burling-verify": _Registered(
        _burling_verify, {"count": 200, "max_vertices": 30}, "Burling bundle identities on random trees"
    ),
    "tree-surgery": _Registered(_tree_surgery, {"count": 100, "max_vertices": 15}, "tree surgery contracts"),
    "decompose-unit-interval": _Registered(
        _decompose_unit_interval, {"count": 200, "max_n": 20}, "parity decomposition of unit interval graphs"
    ),
    "decompose-line-bipartite": _Registered(
        _decompose_line_bipartite, {"count": 200, "max_side": 8}, "line graphs of bipartite graphs"
    ),
    "rk1-guard-claim": _Registered(
        _rk1_guard, {"r": [2, 3], "count": 100, "max_n": 10}, "omega(H) < R(omega(G&H)+1, r)"
    ),
    "bounds-table": _Registered(_bounds_table, {"bound": "fr", "params": [1], "upto": 10}, "tabulate a named bound"),
    "tp-closure": _Registered(_tp_closure, {"count": 100, "depth": 5}, "trivially perfect generators vs closures"),
    "linegraph-clawfree": _Registered(
        _linegraph_clawfree, {"count": 100, "max_n": 8}, "line graphs are claw-free with chi <= omega+1"
    ),
}


def experiment_names() -> list[str]:
    return sorted(EXPERIMENTS)


def run_experiment(spec: ExperimentSpec) -> Report:
    if spec.name not in EXPERIMENTS:
        raise UnknownExperiment(f"unknown experiment {spec.name!r}; registered: {', '.join(experiment_names())}")
    entry = EXPERIMENTS[spec.name]
    unknown = set(spec.parameters) - set(entry.defaults)
    if unknown:
        raise ValueError(f"unknown parameters for {spec.name}: {sorted(unknown)}")
    params = {**entry.defaults, **spec.parameters}
    start = time.monotonic()
    cases: list[Case] = []
    complete = True
    for case in entry.run(params, spec.seed):
        cases.append(case)
        if spec.budget_seconds is not None and time.monotonic() - start > spec.budget_seconds:
            complete = False
            break
    resolved = ExperimentSpec(spec.name, params, spec.seed, spec.budget_seconds)
    return Report(resolved, cases, complete, time.monotonic() - start)
