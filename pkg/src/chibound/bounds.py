"""Chi-bounding functions and the Ramsey numbers they are built from.

All arithmetic is on Python integers, so the towers produced by the
self-guarding recursion never overflow; a bit budget guards against
accidentally materialising numbers that would exhaust memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .graph import Graph
from .invariants import clique_number, independence_number

DEFAULT_MAX_BITS = 1 << 22


class BoundFn:
    """A memoised map from positive integers to positive integers.

    Calling ``f(n)`` evaluates (and caches) every argument up to ``n`` the
    first time a new maximum is requested, and raises ``ValueError`` if
    the values fail to be non-decreasing on that prefix.
    """

    def __init__(self, evaluator: Callable[[int], int], description: str, *, start: int = 1):
        self.evaluator = evaluator
        self.description = description
        self.start = start
        self._cache: dict[int, int] = {}
        self._checked = start - 1

    def raw(self, n: int) -> int:
        if n not in self._cache:
            self._cache[n] = self.evaluator(n)
        return self._cache[n]

    def __call__(self, n: int) -> int:
        if n < self.start:
            raise ValueError(f"{self.description}: argument {n} below {self.start}")
        if n > self._checked:
            prev = self.raw(self._checked) if self._checked >= self.start else None
            for m in range(self._checked + 1, n + 1):
                v = self.raw(m)
                if prev is not None and v < prev:
                    raise ValueError(f"{self.description} decreases at {m}: {prev} > {v}")
                prev = v
            self._checked = n
        return self.raw(n)

    def table(self, upto: int) -> list[tuple[int, int]]:
        return [(n, self(n)) for n in range(self.start, upto + 1)]

    def __repr__(self) -> str:
        return f"BoundFn({self.description!r})"


def identity_bound() -> BoundFn:
    return BoundFn(lambda n: n, "omega")


def vizing_bound() -> BoundFn:
    """omega + 1, the bound for line graphs."""
    return BoundFn(lambda n: n + 1, "omega+1")


def product_bound(fs: Sequence[BoundFn]) -> BoundFn:
    if not fs:
        raise ValueError("need at least one bounding function")
    fs = list(fs)
    return BoundFn(lambda n: math.prod(f(n) for f in fs), " * ".join(f"({f.description})" for f in fs))


# -- Ramsey numbers -----------------------------------------------------------

def _extend(graphs: list[tuple[int, ...]], n: int, s: int, t: int) -> list[tuple[int, ...]]:
    """All graphs on n vertices with omega < s and alpha < t, one per isomorphism class.

    Every such graph arises from one on n-1 vertices by adding vertex n-1
    with some neighbourhood, since both properties are hereditary.
    """
    out: list[Graph] = []
    seen: dict[tuple, list[Graph]] = {}
    from .recognizers import is_isomorphic

    for masks in graphs:
        for nb in range(1 << (n - 1)):
            new = list(masks) + [nb]
            for j in range(n - 1):
                if nb >> j & 1:
                    new[j] |= 1 << (n - 1)
            g = Graph.from_masks(range(n), new)
            if clique_number(g)[0] >= s or independence_number(g)[0] >= t:
                continue
            key = tuple(sorted(m.bit_count() for m in new))
            bucket = seen.setdefault(key, [])
            if any(is_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            out.append(g)
    return [g.masks for g in out]


# non-trivial pairs (s <= t) that ramsey_exact will enumerate
EXACT_FRONTIER = frozenset({(3, 3), (3, 4)})


@lru_cache(maxsize=None)
def ramsey_exact(s: int, t: int) -> int:
    """R(s, t) by enumerating (s, t)-Ramsey graphs vertex by vertex.

    Only small cases are feasible; (3, 3), (3, 4) and (4, 3) are the
    non-trivial ones inside the frontier.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if s > t:
        return ramsey_exact(t, s)
    if s == 1:
        return 1
    if s == 2:
        return t
    if (s, t) not in EXACT_FRONTIER:
        raise ValueError(f"R({s},{t}) is outside the enumeration frontier")
    level: list[tuple[int, ...]] = [(0,)]
    n = 1
    while level:
        n += 1
        level = _extend(level, n, s, t)
    return n


def ramsey_upper_plain(s: int, t: int) -> int:
    """binomial(s+t-2, s-1), the closed form of the plain recurrence."""
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    return math.comb(s + t - 2, s - 1)


_KNOWN = {(3, 3): 6, (3, 4): 9}
_DP_CELLS = 200_000


@lru_cache(maxsize=None)
def _dp_row(s: int, tmax: int) -> tuple[int, ...]:
    # row[t] for the recurrence R(s,t) <= R(s-1,t) + R(s,t-1) seeded by exact values
    if s == 1:
        return (0,) + (1,) * tmax
    prev = _dp_row(s - 1, tmax)
    row = [0] * (tmax + 1)
    row[1] = 1
    for t in range(2, tmax + 1):
        a, b = min(s, t), max(s, t)
        if a == 2:
            row[t] = b
        elif (a, b) in _KNOWN:
            row[t] = _KNOWN[(a, b)]
        else:
            row[t] = prev[t] + row[t - 1]
    return tuple(row)


def ramsey_upper(s: int, t: int) -> int:
    """Upper bound on R(s,t): the two-term recurrence seeded with exact small values.

    Falls back to the binomial closed form when the table would be large;
    both are valid upper bounds and the fallback is never smaller.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    a, b = min(s, t), max(s, t)
    if a == 1:
        return 1
    if a == 2:
        return b
    if a * b > _DP_CELLS:
        return ramsey_upper_plain(a, b)
    return _dp_row(a, b)[b]


def multicolor_ramsey_upper(k: int, t: int) -> int:
    """Upper bound on R_k(t) by merging colours: R_k(t) <= R(t, R_{k-1}(t))."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    value = t
    for _ in range(k - 1):
        value = ramsey_upper(t, value)
    return value


# -- composed bounds -----------------------------------------------------------

def rk1_guard_bound(f: BoundFn, r: int) -> BoundFn:
    """omega -> f(R(omega+1, r) - 1), with the argument clamped to at least 1.

    Intersecting a class bounded by ``f`` with rK1-free graphs gives this
    bound: a clique of H inside G∩H is forced to be small by Ramsey.
    """
    if r < 1:
        raise ValueError("r must be positive")
    return BoundFn(lambda w: f(max(1, ramsey_upper(w + 1, r) - 1)), f"{f.description} o (R(w+1,{r})-1)")


def fr_recursion(base: BoundFn, r: int) -> BoundFn:
    """f_0 = base; f_j(1) = 1 and f_j(n) = 2 f_j(n-1) + f_{j-1}(n)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return base
    lower = fr_recursion(base, r - 1)
    memo: dict[int, int] = {1: 1}

    def ev(n: int) -> int:
        for m in range(max(memo) + 1, n + 1):
            memo[m] = 2 * memo[m - 1] + lower(m)
        return memo[n]

    return BoundFn(ev, f"f_{r}[{base.description}]")


@dataclass
class SelfGuard:
    """Evaluator for the t-fold self-guarding recursion f(n, n_1, ..., n_t).

    ``guards`` are the g_i.  Values are cached on the full argument tuple;
    re-entering an argument tuple that is still being evaluated is a bug.
    """

    guards: Sequence[BoundFn]
    t: int
    max_bits: int | None = DEFAULT_MAX_BITS
    _memo: dict = field(default_factory=dict)
    _active: set = field(default_factory=set)

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be positive")
        if len(self.guards) != self.t:
            raise ValueError(f"need {self.t} guard functions, got {len(self.guards)}")
        self.R = multicolor_ramsey_upper(2 ** self.t, self.t + 2)
        self._factor: int | None = None

    @property
    def factor(self) -> int:
        """(t+2)^(t(R-1)) * R, built on first use; base cases never need it."""
        if self._factor is None:
            t, R = self.t, self.R
            if self.max_bits is not None and t * (R - 1) * math.log2(t + 2) > self.max_bits:
                raise OverflowError(f"(t+2)^(t(R-1)) with R={R} exceeds {self.max_bits} bits")
            self._factor = (t + 2) ** (t * (R - 1)) * R
        return self._factor

    def __call__(self, n: int, *ns: int) -> int:
        if len(ns) != self.t:
            raise ValueError(f"expected {self.t} values n_i, got {len(ns)}")
        if n < 1 or any(x < 0 for x in ns):
            raise ValueError("need n >= 1 and every n_i >= 0")
        key = (n, *ns)
        if key in self._memo:
            return self._memo[key]
        if key in self._active:
            raise AssertionError(f"cyclic dependency at {key}")
        self._active.add(key)
        try:
            value = self._eval(n, ns)
        finally:
            self._active.discard(key)
        self._memo[key] = value
        return value

    def _eval(self, n: int, ns: tuple[int, ...]) -> int:
        if n == 1:
            return 1
        zero = [i for i, x in enumerate(ns) if x == 0]
        if zero:
            return min(self.guards[i](n) for i in zero)
        t = self.t
        c = max(self(n, *ns[:i], ns[i] - 1, *ns[i + 1 :]) for i in range(t))
        m = max(t ** (t + 1) + 1, (t + 1) * self(n - 1, *ns) + 1, c * (t + 1) * (t + 2))
        value = m * self.factor
        if self.max_bits is not None and value.bit_length() > self.max_bits:
            raise OverflowError(f"f{(n, *ns)} exceeds {self.max_bits} bits")
        return value


def self_guard_bound(guard_fns: Sequence[BoundFn], t: int, args: Sequence[int], **kw) -> int:
    return SelfGuard(list(guard_fns), t, **kw)(*args)


# -- named bounds for the command line --------------------------------------------

NAMED_BOUNDS: dict[str, tuple[int, str, Callable[..., BoundFn]]] = {
    # name: (number of parameters, help, factory(params) -> BoundFn of one argument)
    "identity": (0, "omega", identity_bound),
    "vizing": (0, "omega+1", vizing_bound),
    "fr": (1, "fr R N: f_R(N) with base omega", lambda r: fr_recursion(identity_bound(), r)),
    "rk1-guard": (1, "rk1-guard R W: identity o (R(W+1,R)-1)", lambda r: rk1_guard_bound(identity_bound(), r)),
    "ramsey-upper": (1, "ramsey-upper S T", lambda s: BoundFn(lambda t: ramsey_upper(s, t), f"R({s},t)")),
    "ramsey-exact": (1, "ramsey-exact S T", lambda s: BoundFn(lambda t: ramsey_exact(s, t), f"R({s},t) exact")),
    "multicolor-ramsey": (
        1,
        "multicolor-ramsey K T: upper bound on R_K(T)",
        lambda k: BoundFn(lambda t: multicolor_ramsey_upper(k, t), f"R_{k}(t)"),
    ),
}


def named_bound(name: str, params: Sequence[int]) -> BoundFn:
    if name == "self-guard":
        # self-guard T N1 .. NT, evaluated at n, guards all omega
        if not params:
            raise ValueError("self-guard needs T followed by T values n_i")
        t, ns = params[0], tuple(params[1:])
        if len(ns) != t:
            raise ValueError(f"self-guard {t} needs {t} values n_i")
        sg = SelfGuard([identity_bound() for _ in range(t)], t)
        return BoundFn(lambda n: sg(n, *ns), f"self-guard t={t} n_i={ns}")
    if name not in NAMED_BOUNDS:
        raise KeyError(f"unknown bound {name!r}; known: {', '.join(bound_names())}")
    arity, _, factory = NAMED_BOUNDS[name]
    if len(params) != arity:
        raise ValueError(f"bound {name!r} takes {arity} parameter(s), got {len(params)}")
    return factory(*params)


def bound_names() -> list[str]:
    return sorted([*NAMED_BOUNDS, "self-guard"])
