"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

from itertools import combinations

from chibound.graph import Graph


def _masks(g: Graph) -> tuple[int, ...]:
    return g.masks


def brute_independent_sets(g: Graph) -> list[int]:
    n = len(g)
    m = _masks(g)
    out = []
    for s in range(1 << n):
        if all(not (m[v] & s) for v in range(n) if s >> v & 1):
            out.append(s)
    return out


def brute_chromatic(g: Graph) -> int:
    """Minimum number of independent sets covering V, by DP over vertex subsets."""
    n = len(g)
    if n == 0:
        return 0
    indep = set(brute_independent_sets(g))
    full = (1 << n) - 1
    best = [0] + [n + 1] * full
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        sub = rest
        # every class containing the lowest vertex of s
        while True:
            cls = sub | low
            if cls in indep:
                best[s] = min(best[s], best[s ^ cls] + 1)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return best[full]


def brute_clique(g: Graph) -> int:
    n = len(g)
    m = _masks(g)
    best = 0
    for s in range(1 << n):
        k = s.bit_count()
        if k > best and all((m[v] | 1 << v) & s == s for v in range(n) if s >> v & 1):
            best = k
    return best


def brute_alpha(g: Graph) -> int:
    return max(s.bit_count() for s in brute_independent_sets(g))


def brute_k_colorings(g: Graph, k: int) -> bool:
    """Any proper k-colouring, by trying all k^n assignments."""
    from itertools import product

    vs = g.vertices
    return any(all(c[g.index(u)] != c[g.index(v)] for u, v in g.edges) for c in product(range(k), repeat=len(vs)))


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every cycle (length >= 3) once, as an index tuple starting at its minimum."""
    n = len(g)
    m = _masks(g)
    out = []

    def extend(path: list[int], used: int) -> None:
        last = path[-1]
        for w in range(path[0] + 1, n):
            if m[last] >> w & 1 and not used >> w & 1:
                path.append(w)
                if len(path) >= 3 and m[w] >> path[0] & 1 and path[1] < w:
                    out.append(tuple(path))
                extend(path, used | 1 << w)
                path.pop()

    for s in range(n):
        extend([s], 1 << s)
    return out


def definitional_chordal(g: Graph) -> bool:
    """No cycle of length >= 4 without a chord."""
    m = _masks(g)
    for c in simple_cycles(g):
        k = len(c)
        if k >= 4 and not any(m[c[i]] >> c[j] & 1 for i in range(k) for j in range(i + 2, k) if (i, j) != (0, k - 1)):
            return False
    return True


def definitional_strongly_chordal(g: Graph) -> bool:
    """Chordal, and every even cycle of length >= 6 has an odd chord."""
    if not definitional_chordal(g):
        return False
    m = _masks(g)
    for c in simple_cycles(g):
        k = len(c)
        if k >= 6 and k % 2 == 0:
            odd = any(
                m[c[i]] >> c[j] & 1 and (j - i) % 2 == 1
                for i in range(k)
                for j in range(i + 3, k)
                if (i, j) != (0, k - 1)
            )
            if not odd:
                return False
    return True


def brute_ramsey(s: int, t: int, max_n: int) -> int | None:
    """Smallest n <= max_n such that every labelled graph on n vertices has a
    clique of size s or an independent set of size t."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        subsets_s = [[pairs.index(p) for p in combinations(sub, 2)] for sub in combinations(range(n), s)]
        subsets_t = [[pairs.index(p) for p in combinations(sub, 2)] for sub in combinations(range(n), t)]
        forced = True
        for mask in range(1 << len(pairs)):
            has_clique = any(all(mask >> e & 1 for e in es) for es in subsets_s)
            if has_clique:
                continue
            if any(all(not mask >> e & 1 for e in es) for es in subsets_t):
                continue
            forced = False
            break
        if forced:
            return n
    return None


def brute_contains_induced(g: Graph, h: Graph) -> bool:
    """Try every injective map from V(h) into V(g)."""
    from itertools import permutations

    k = len(h)
    hm = h.masks
    gm = g.masks
    for image in permutations(range(len(g)), k):
        if all(
            (hm[i] >> j & 1) == (gm[image[i]] >> image[j] & 1) for i in range(k) for j in range(i + 1, k)
        ):
            return True
    return False
