"""Text formats: edge lists, graph6, Burling trees and interval families.

Vertex labels are written as JSON values (integers, strings, and arrays
for tuples), so structured labels survive an edge-list round trip.
graph6 only carries the vertex count, so labels there are 0..n-1.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .burling import BurlingTree
from .constructions import IntervalFamily
from .graph import Graph

_decoder = json.JSONDecoder()


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _to_json(v) -> object:
    if isinstance(v, tuple):
        return [_to_json(x) for x in v]
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise TypeError(f"label {v!r} cannot be written (use int, str or tuples of them)")
    return v


def _from_json(v) -> object:
    return tuple(_from_json(x) for x in v) if isinstance(v, list) else v


def dump_label(v) -> str:
    return json.dumps(_to_json(v), separators=(",", ":"))


def _tokens(text: str, lineno: int, *, dash: bool = False) -> list:
    """Split a line into JSON values; a bare ``-`` is returned as None when allowed."""
    out = []
    i = 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i == len(text):
            return out
        if dash and text[i] == "-" and (i + 1 == len(text) or text[i + 1].isspace()):
            out.append(None)
            i += 1
            continue
        try:
            value, i = _decoder.raw_decode(text, i)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad label: {e.msg}", lineno, e.colno) from None
        if not isinstance(value, (int, str, list)) or isinstance(value, bool):
            raise ParseError(f"unsupported label {value!r}", lineno, i + 1)
        out.append(_from_json(value))


def _ints(text: str, lineno: int, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {len(parts)}", lineno)
    out = []
    col = 1
    for p in parts:
        col = text.index(p, col - 1) + 1
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"not an integer: {p!r}", lineno, col) from None
    return out


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with their 1-based numbers; ``#`` starts a comment line."""
    return [
        (i, line.rstrip("\n"))
        for i, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]


# -- edge list --------------------------------------------------------------

def format_edge_list(g: Graph) -> str:
    lines = [f"{len(g)} {g.num_edges}"]
    lines.extend(dump_label(v) for v in g.vertices)
    lines.extend(f"{g.index(u)} {g.index(v)}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    n, m = _ints(lines[0][1], lines[0][0], 2)
    if n < 0 or m < 0:
        raise ParseError("negative count", lines[0][0])
    if len(lines) != 1 + n + m:
        last = lines[-1][0]
        raise ParseError(f"expected {n} label lines and {m} edge lines, found {len(lines) - 1} lines", last)
    labels = []
    for lineno, line in lines[1 : 1 + n]:
        toks = _tokens(line, lineno)
        if len(toks) != 1:
            raise ParseError("expected exactly one label", lineno)
        labels.append(toks[0])
    if len(set(labels)) != n:
        raise ParseError("duplicate vertex label", lines[1][0])
    edges = []
    for lineno, line in lines[1 + n :]:
        i, j = _ints(line, lineno, 2)
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"index out of range 0..{n - 1}", lineno)
        if i == j:
            raise ParseError("loop", lineno)
        edges.append((labels[i], labels[j]))
    return Graph(labels, edges)


# -- graph6 -------------------------------------------------------------------

def _g6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    raise ValueError("graph6 supports at most 258047 vertices here")


def format_graph6(g: Graph) -> str:
    """Encode with vertices in label order; labels themselves are dropped."""
    n = len(g)
    bits = [g.masks[j] >> i & 1 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6))
    return (_g6_size(n) + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise ParseError("empty graph6 string", 1)
    for col, b in enumerate(data, 1):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b} outside graph6 range", 1, col)
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ParseError("unsupported graph6 size header", 1, 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", 1, len(data) - len(body) + 1)
    bits = [(b - 63) >> (5 - k) & 1 for b in body for k in range(6)]
    edges = []
    pos = 0
    for j in range(n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(range(n), edges)


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    path = Path(path)
    fmt = fmt or ("graph6" if path.suffix in (".g6", ".graph6") else "edge-list")
    text = path.read_text()
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, path: str | Path, fmt: str = "edge-list") -> None:
    Path(path).write_text(format_graph(g, fmt))


def format_graph(g: Graph, fmt: str = "edge-list") -> str:
    """``fmt`` is ``edge-list``, ``graph6`` or ``json`` (labels plus index pairs)."""
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    if fmt == "edge-list":
        return format_edge_list(g)
    if fmt == "json":
        obj = {"vertices": [_to_json(v) for v in g.vertices], "edges": [[g.index(u), g.index(v)] for u, v in g.edges]}
        return json.dumps(obj, separators=(",", ":")) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")


# -- Burling trees ------------------------------------------------------------

def format_burling_tree(t: BurlingTree) -> str:
    lines = [f"{len(t)} {dump_label(t.root)}"]
    lines.extend(f"{dump_label(c)} {dump_label(t.parent[c])}" for c in t.vertices if c in t.parent)
    lines.extend(
        f"{dump_label(v)} {dump_label(t.lastborn[v]) if v in t.lastborn else '-'}" for v in t.vertices
    )
    lines.extend(" ".join([dump_label(v), *map(dump_label, t.chosen(v))]) for v in t.vertices)
    return "\n".join(lines) + "\n"


def parse_burling_tree(text: str) -> BurlingTree:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    lineno, head = lines[0]
    parts = head.split(None, 1)
    if len(parts) != 2:
        raise ParseError("expected 'n root'", lineno)
    n = _ints(parts[0], lineno, 1)[0]
    root = _tokens(parts[1], lineno)
    if len(root) != 1:
        raise ParseError("expected one root label", lineno)
    if len(lines) != 1 + (n - 1) + 2 * n:
        raise ParseError(f"expected {3 * n} lines for n={n}, found {len(lines)}", lines[-1][0])
    parent = {}
    for lineno, line in lines[1:n]:
        toks = _tokens(line, lineno)
        if len(toks) != 2:
            raise ParseError("expected 'child parent'", lineno)
        parent[toks[0]] = toks[1]
    lastborn = {}
    for lineno, line in lines[n : 2 * n]:
        toks = _tokens(line, lineno, dash=True)
        if len(toks) != 2 or toks[0] is None:
            raise ParseError("expected 'vertex lastborn-or-dash'", lineno)
        if toks[1] is not None:
            lastborn[toks[0]] = toks[1]
    choose = {}
    for lineno, line in lines[2 * n :]:
        toks = _tokens(line, lineno)
        if not toks:
            raise ParseError("expected 'vertex branch...'", lineno)
        if len(toks) > 1:
            choose[toks[0]] = tuple(toks[1:])
    t = BurlingTree(root[0], parent, lastborn, choose)
    if len(t) != n:
        raise ParseError(f"header says {n} vertices, tree has {len(t)}", lines[0][0])
    return t


# -- interval families --------------------------------------------------------

def format_intervals(f: IntervalFamily) -> str:
    return "".join(f"{a} {b}\n" for a, b in f.intervals)


def parse_intervals(text: str, *, unit: bool = True) -> IntervalFamily:
    """One closed interval per line: two rationals such as ``1/2`` or ``0.5``."""
    ivs = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two endpoints", lineno)
        try:
            ivs.append((Fraction(parts[0]), Fraction(parts[1])))
        except ValueError as e:
            raise ParseError(str(e), lineno) from None
    try:
        return IntervalFamily(tuple(ivs), unit)
    except ValueError as e:
        raise ParseError(str(e), 1) from None
