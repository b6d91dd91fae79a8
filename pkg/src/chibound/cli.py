"""Command-line front end.

    chibound [--format F] [--seed S] [--budget-seconds T] [--out PATH] <command> ...

Every command exits 0 when its checks pass (for ``recognize``: when the
graph belongs to the class) and 1 otherwise; usage and input errors exit 2.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import json
import sys
from pathlib import Path
from typing import Sequence

from . import bounds, burling, constructions, decomposers, experiments, io, recognizers
from .graph import Graph, induced_subgraph
from .invariants import BudgetExceeded, chromatic_number, clique_number, girth, independence_number


class CliError(Exception):
    pass


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _graph_format(args) -> str:
    return args.format


def _read_graph(path: str) -> Graph:
    return io.read_graph(path)


def _labels(vs) -> list:
    return [io._to_json(v) for v in vs]


# -- construct ----------------------------------------------------------------

def cmd_construct(args) -> int:
    kind, rest = args.kind, args.params
    try:
        if kind in ("shift", "dshift"):
            n, k = map(int, rest)
            if kind == "shift":
                g = constructions.shift_graph(n, k)
            else:
                d = constructions.directed_shift_graph(n, k)
                # arcs are written tail-first, so the edge list records the orientation
                g = Graph(d.vertices, d.arcs)
        elif kind == "intersection":
            (n,) = map(int, rest)
            if args.subsample is not None:
                h = constructions.random_shift_subdigraph(n, args.subsample, min_girth=args.girth, seed=args.seed)
            else:
                h = constructions.directed_shift_graph(n, 2)
            line, multi, gl = constructions.intersection_construction(h)
            g = {"gL": gl, "line": line, "multipartite": multi}[args.part]
        elif kind == "multipartite":
            g = constructions.complete_multipartite([int(x) for x in rest])
        elif kind == "unit-interval":
            (path,) = rest
            f = io.parse_intervals(Path(path).read_text()).normalized()
            g = constructions.unit_interval_graph(f)
        elif kind == "tp-random":
            depth, seed = map(int, rest)
            g = constructions.build_trivially_perfect(constructions.random_tp_recipe(depth, seed=seed))
        else:
            raise CliError(f"unknown construction {kind!r}")
    except ValueError as e:
        if "unpack" in str(e) or "invalid literal" in str(e):
            raise CliError(f"bad arguments for 'construct {kind}': {' '.join(rest)}") from None
        raise
    _emit(args, io.format_graph(g, _graph_format(args)))
    return 0


# -- recognize ----------------------------------------------------------------

def cmd_recognize(args) -> int:
    g = _read_graph(args.graph)
    cert = None
    if args.cls == "h-free":
        if not args.pattern:
            raise CliError("h-free needs --pattern FILE")
        patterns = [_read_graph(p) for p in args.pattern]
        hits = [recognizers.contains_induced(g, h) for h in patterns]
        member = all(x is None for x in hits)
        cert = next((_labels(sorted(x, key=io.dump_label)) for x in hits if x is not None), None)
    elif args.cls in ("chordal", "strongly-chordal"):
        fn = recognizers.is_chordal if args.cls == "chordal" else recognizers.is_strongly_chordal
        order = fn(g)
        member = order is not None
        cert = None if order is None else _labels(order)
    elif args.cls in recognizers.RECOGNIZERS:
        member = bool(recognizers.RECOGNIZERS[args.cls](g))
    else:
        raise CliError(f"unknown class {args.cls!r}; known: {', '.join(sorted(recognizers.RECOGNIZERS))}, h-free")
    _emit_json(args, {"class": args.cls, "member": member, "certificate": cert, "n": len(g), "m": g.num_edges})
    return 0 if member else 1


# -- invariants -----------------------------------------------------------------

def cmd_invariants(args) -> int:
    g = _read_graph(args.graph)
    out: dict = {"invariant": args.which, "n": len(g), "m": g.num_edges}
    try:
        if args.which == "chi":
            value, col = chromatic_number(g, max_vertices=args.max_vertices)
            out["value"] = value
            out["coloring"] = json.loads(col.to_json())
        elif args.which in ("omega", "alpha"):
            fn = clique_number if args.which == "omega" else independence_number
            value, witness = fn(g)
            out["value"] = value
            out["witness"] = sorted(_labels(witness), key=json.dumps)
        else:
            value = girth(g)
            out["value"] = None if value == float("inf") else value
    except BudgetExceeded as e:
        out.update(error=str(e), lower=e.lower, upper=e.upper)
        _emit_json(args, out)
        return 1
    _emit_json(args, out)
    return 0


# -- decompose --------------------------------------------------------------------

def cmd_decompose(args) -> int:
    if args.kind == "unit-interval":
        f = io.parse_intervals(Path(args.input).read_text()).normalized()
        g = constructions.unit_interval_graph(f)
        col = decomposers.decompose_unit_interval(f)
        ok, report = decomposers.verify_decomposable(g, decomposers.unit_interval_decomposition(f))
        classes = [induced_subgraph(g, c) for c in col.classes()]
        out = {
            "parts": [sorted(c) for c in col.classes()],
            "cluster_check": [recognizers.is_cluster(c) for c in classes],
            "union_check": report["union_check"],
            "verify": report,
        }
    elif args.kind == "line-bipartite":
        g = _read_graph(args.input)
        sides = decomposers.bipartition(g)
        d = decomposers.line_bipartite_decomposition(g, sides)
        p1, p2 = d.parts
        ok, report = decomposers.verify_decomposable(d.base, d)
        out = {
            "parts": [[_labels(e) for e in p.edges] for p in (p1, p2)],
            "cluster_check": [recognizers.is_cluster(p1), recognizers.is_cluster(p2)],
            "union_check": report["union_check"],
            "verify": report,
        }
    else:
        raise CliError(f"unknown decomposition {args.kind!r}")
    ok = ok and all(out["cluster_check"]) and out["union_check"]
    out["passed"] = ok
    _emit_json(args, out)
    return 0 if ok else 1


# -- bounds -------------------------------------------------------------------------

def cmd_bounds(args) -> int:
    try:
        values = [int(x) for x in args.args]
    except ValueError:
        raise CliError("bound arguments must be integers") from None
    if args.action == "eval":
        if not values:
            raise CliError("bounds eval needs the evaluation point as last argument")
        f = bounds.named_bound(args.name, values[:-1])
        _emit(args, f"{f(values[-1])}\n")
        return 0
    if args.upto is None:
        raise CliError("bounds table needs --upto N")
    f = bounds.named_bound(args.name, values)
    buf = _stdio.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for n, v in f.table(args.upto):
        w.writerow([n, v])
    _emit(args, buf.getvalue())
    return 0


# -- burling --------------------------------------------------------------------------

def cmd_burling(args) -> int:
    if args.action == "random":
        n, seed = map(int, args.params)
        _emit(args, io.format_burling_tree(burling.generate_random_burling_tree(n, seed)))
        return 0
    (path,) = args.params
    t = io.parse_burling_tree(Path(path).read_text())
    if args.action == "validate":
        ok, report = burling.validate_burling_tree(t)
        _emit_json(args, {"valid": ok, "violations": report})
        return 0 if ok else 1
    if args.action == "derive":
        b = burling.derive_bundle(t)
        _emit(args, io.format_graph({"G": b.G, "C": b.C, "I": b.I}[args.graph], _graph_format(args)))
        return 0
    ok, report = burling.validate_burling_tree(t)
    if not ok:
        _emit_json(args, {"valid": False, "violations": report})
        return 1
    checks = experiments.check_burling_tree(t)
    checks["left_principal_branch"] = _labels(burling.left_principal_branch(t))
    checks["bottom_left"] = sorted(_labels(burling.bottom_left_vertices(t, t.vertices)), key=json.dumps)
    checks["top_left"] = sorted(_labels(burling.top_left_vertices(t, t.vertices)), key=json.dumps)
    passed = all(v for v in checks.values() if isinstance(v, bool))
    _emit_json(args, {"valid": True, "checks": checks, "passed": passed})
    return 0 if passed else 1


# -- experiment -------------------------------------------------------------------------

def _scalar(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def cmd_experiment(args) -> int:
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise CliError(f"--param expects key=value, got {item!r}")
        params[key.replace("-", "_")] = _scalar(value)
    spec = experiments.ExperimentSpec(args.name, params, args.seed, args.budget_seconds)
    report = experiments.run_experiment(spec)
    _emit(args, report.to_json(timing=not args.no_timing) + "\n")
    return 0 if report.all_passed else 1


# -- parser -------------------------------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, *, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=["edge-list", "graph6", "json"], default=d("edge-list"))
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized commands (default 0)")
    p.add_argument("--budget-seconds", type=float, default=d(None), help="stop experiments after this many seconds")
    p.add_argument("--out", default=d(None), help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    parser = argparse.ArgumentParser(prog="chibound", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a graph and print it")
    p.add_argument("kind", choices=["shift", "dshift", "intersection", "multipartite", "unit-interval", "tp-random"])
    p.add_argument("params", nargs="*")
    p.add_argument("--subsample", type=float, help="intersection: keep each arc with this probability")
    p.add_argument("--girth", type=int, default=3, help="intersection: minimum girth when subsampling")
    p.add_argument("--part", choices=["gL", "line", "multipartite"], default="gL")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("recognize", parents=[common], help="test class membership")
    p.add_argument("cls", metavar="class")
    p.add_argument("graph")
    p.add_argument("--pattern", action="append", help="pattern graph file for h-free (repeatable)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("invariants", parents=[common], help="exact chi, omega, alpha or girth")
    p.add_argument("which", choices=["chi", "omega", "alpha", "girth"])
    p.add_argument("graph")
    p.add_argument("--max-vertices", type=int, default=None, help="refuse chi above this many vertices")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decompose", parents=[common], help="run a decomposition and verify it")
    p.add_argument("kind", choices=["unit-interval", "line-bipartite"])
    p.add_argument("input")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bounds", parents=[common], help="evaluate or tabulate a bounding function")
    p.add_argument("action", choices=["eval", "table"])
    p.add_argument("name", help=f"one of: {', '.join(bounds.bound_names())}")
    p.add_argument("args", nargs="*", help="parameters, then (for eval) the argument")
    p.add_argument("--upto", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("burling", parents=[common], help="Burling tree tools")
    p.add_argument("action", choices=["random", "validate", "derive", "verify"])
    p.add_argument("params", nargs="+", help="random: N SEED; otherwise: TREE-FILE")
    p.add_argument("--graph", choices=["G", "C", "I"], default="G", help="derive: which graph")
    p.set_defaults(func=cmd_burling)

    p = sub.add_parser("experiment", parents=[common], help="run a named experiment")
    p.add_argument("name", help=f"one of: {', '.join(experiments.experiment_names())}")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="override a parameter (JSON value)")
    p.add_argument("--no-timing", action="store_true", help="omit timing so reports are byte-identical")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, io.ParseError, experiments.UnknownExperiment, KeyError, ValueError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"chibound: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
