"""Exact invariants and induced-subgraph search on small graphs."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import OrderTooLargeForColoring, OrderTooLargeForPerfection
from .graphs import Graph, NamedPattern, complement, is_isomorphic, induced

COLORING_MAX_ORDER = 12
PERFECTION_MAX_ORDER = 12


def clique_number(g: Graph) -> int:
    """Exact maximum clique size, branch and bound on candidate bitmasks."""
    return len(max_clique(g))


def max_clique(g: Graph) -> tuple[int, ...]:
    """One maximum clique, the first found in lowest-vertex-first order."""
    rows = g.rows
    best: list[int] = []
    cur: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        if len(cur) > len(best):
            best = cur.copy()
        while cand:
            if len(cur) + cand.bit_count() <= len(best):
                return
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            cur.append(v)
            expand(cand & rows[v])
            cur.pop()

    expand(g.full_mask)
    return tuple(best)


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def _greedy_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -g.rows[v].bit_count())
    color = {}
    used = 0
    for v in order:
        taken = {color[w] for w in color if g.rows[v] >> w & 1}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; order capped at 12.

    Seeds a maximum clique with distinct colours, then backtracks over the
    remaining vertices with new colours introduced in increasing order only.
    """
    if g.n > COLORING_MAX_ORDER:
        raise OrderTooLargeForColoring(f"order {g.n} exceeds {COLORING_MAX_ORDER}")
    clique = max_clique(g)
    lb = len(clique)
    ub = _greedy_bound(g)
    if lb == ub:
        return lb
    rest = sorted(
        (v for v in range(g.n) if v not in clique),
        key=lambda v: -g.rows[v].bit_count(),
    )
    order = list(clique) + rest
    color = [-1] * g.n
    for i, v in enumerate(clique):
        color[v] = i
    rows = g.rows

    def colorable(i: int, used: int, k: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = 0
        for w in _neighbor_list(rows[v]):
            if color[w] >= 0:
                taken |= 1 << color[w]
        cap = min(used + 1, k)
        for c in range(cap):
            if taken >> c & 1:
                continue
            color[v] = c
            if colorable(i + 1, max(used, c + 1), k):
                return True
        color[v] = -1
        return False

    for k in range(lb, ub):
        if colorable(lb, lb, k):
            return k
    return ub


def _neighbor_list(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def dominates(g: Graph, vertices: Iterable[int]) -> bool:
    """True when every vertex is in the set or adjacent to a member."""
    cover = 0
    for v in vertices:
        g._check_vertex(v)
        cover |= (1 << v) | g.rows[v]
    return cover == g.full_mask


# ---------------------------------------------------------------------------
# induced-subgraph search


class PatternWitness(NamedTuple):
    pattern: NamedPattern
    vertices: tuple[int, ...]


def _subset_code(rows, verts) -> int:
    # column-major adjacency bits of the ordered vertex tuple
    code = 0
    for j in range(1, len(verts)):
        rv = rows[verts[j]]
        w = 0
        for i in range(j):
            w = w << 1 | (rv >> verts[i] & 1)
        code = code << j | w
    return code


@lru_cache(maxsize=None)
def _template_codes(tag: str, param: int | None) -> frozenset[int]:
    t = NamedPattern(tag, param).template
    return frozenset(
        _subset_code(t.rows, p) for p in itertools.permutations(range(t.n))
    )


def find_induced(g: Graph, pattern: NamedPattern) -> PatternWitness | None:
    """First induced copy of the pattern in lexicographic vertex order, or None."""
    t = pattern.template
    k = t.n
    if k > g.n:
        return None
    if k <= 8:
        codes = _template_codes(pattern.tag, pattern.param)
        for s in itertools.combinations(range(g.n), k):
            if _subset_code(g.rows, s) in codes:
                return PatternWitness(pattern, s)
        return None
    for s in itertools.combinations(range(g.n), k):
        if is_isomorphic(induced(g, s), t):
            return PatternWitness(pattern, s)
    return None


def has_induced(g: Graph, pattern: NamedPattern) -> bool:
    fast = _FAST_CONTAINS.get(pattern.tag)
    if fast is not None:
        return fast(g)
    return find_induced(g, pattern) is not None


def contains_2k2(g: Graph) -> bool:
    """Induced 2K2: two edges with no endpoints shared or joined."""
    edges = g.edges()
    rows = g.rows
    for i, (a, b) in enumerate(edges):
        block = rows[a] | rows[b] | (1 << a) | (1 << b)
        for c, d in edges[i + 1 :]:
            if not (block >> c & 1) and not (block >> d & 1):
                return True
    return False


def contains_c4(g: Graph) -> bool:
    """Induced C4: a non-edge whose common neighbourhood is not a clique."""
    rows = g.rows
    for u in range(g.n):
        ru = rows[u]
        for w in range(u + 1, g.n):
            if ru >> w & 1:
                continue
            common = ru & rows[w]
            m = common
            while m:
                b = m & -m
                m ^= b
                if m & ~rows[b.bit_length() - 1]:
                    return True
    return False


def contains_c5(g: Graph) -> bool:
    """Induced C5 via 5-subset scan; 2-regular on 5 vertices forces a cycle."""
    rows = g.rows
    for s in itertools.combinations(range(g.n), 5):
        mask = 0
        for v in s:
            mask |= 1 << v
        if all((rows[v] & mask).bit_count() == 2 for v in s):
            return True
    return False


_FAST_CONTAINS = {
    "TWO_K2": contains_2k2,
    "C4": contains_c4,
    "C5": contains_c5,
}


def is_perfect(g: Graph) -> bool:
    """No induced odd hole in g or its complement; order capped at 12."""
    if g.n > PERFECTION_MAX_ORDER:
        raise OrderTooLargeForPerfection(f"order {g.n} exceeds {PERFECTION_MAX_ORDER}")
    return not _has_odd_hole(g) and not _has_odd_hole(complement(g))


def _has_odd_hole(g: Graph) -> bool:
    rows = g.rows
    for k in range(5, g.n + 1, 2):
        for s in itertools.combinations(range(g.n), k):
            mask = 0
            for v in s:
                mask |= 1 << v
            if not all((rows[v] & mask).bit_count() == 2 for v in s):
                continue
            # 2-regular induced subgraph is a hole iff it is one cycle
            seen = 1 << s[0]
            frontier = seen
            while frontier:
                reach = 0
                m = frontier
                while m:
                    b = m & -m
                    reach |= rows[b.bit_length() - 1] & mask
                    m ^= b
                frontier = reach & ~seen
                seen |= frontier
            if seen == mask:
                return True
    return False
