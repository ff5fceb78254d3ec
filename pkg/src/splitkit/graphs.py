"""Bitmask graph core: construction, contraction, isomorphism, graph6, enumeration.

Vertices are 0..n-1 and each neighbourhood is a single integer bitmask, so
adjacency queries, complements and connectivity sweeps are word operations
for any order up to 64.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    EmptySet,
    LoopEdge,
    MalformedCorpus,
    MalformedGraph6,
    NotAnEdge,
    OrderOutOfRange,
    OrderTooLargeForIsomorphism,
    UnsupportedOrder,
    VertexOutOfRange,
)

MAX_ORDER = 64
ENUM_MAX_ORDER = 8
ISO_MAX_ORDER = 12


class Edge(NamedTuple):
    """An undirected edge stored with u < v."""

    u: int
    v: int


def _as_edge(e) -> Edge:
    u, v = e
    return Edge(u, v) if u < v else Edge(v, u)


class Graph:
    """Immutable simple undirected graph.

    ``rows[v]`` is the bitmask of neighbours of v. Instances are only built
    through the functions in this module, which keep rows symmetric and the
    diagonal empty; treat them as frozen values.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self.rows = tuple(rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[Edge]:
        """All edges in lexicographic order."""
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                out.append(Edge(u, b.bit_length() - 1))
                m ^= b
        return out

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.rows[v]))

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            m = frontier
            while m:
                b = m & -m
                reach |= self.rows[b.bit_length() - 1]
                m ^= b
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.full_mask

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def build(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph of order n from an edge iterable.

    Duplicate edges collapse; (u, v) and (v, u) are the same edge.
    """
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"order {n} not in 1..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not 0 <= u < n:
            raise VertexOutOfRange(f"vertex {u} not in 0..{n - 1}")
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def _drop_vertex(rows: Sequence[int], v: int) -> list[int]:
    # remove index v and shift every label above it down by one
    low = (1 << v) - 1
    out = []
    for w, r in enumerate(rows):
        if w == v:
            continue
        out.append((r & low) | (r >> (v + 1)) << v)
    return out


def contract(g: Graph, e) -> Graph:
    """Contract edge e: merge the larger endpoint into the smaller.

    The merged vertex keeps the smaller label; labels above the removed one
    shift down by one. The result is simple (parallel edges collapse, the
    loop disappears).
    """
    u, v = _as_edge(e)
    if not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    pair = (1 << u) | (1 << v)
    rows = list(g.rows)
    rows[u] = (rows[u] | rows[v]) & ~pair
    for w in _bits(rows[u]):
        rows[w] |= 1 << u
    return Graph(g.n - 1, _drop_vertex(rows, v))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabelled 0..k-1 in sorted order."""
    vs = sorted(set(vertices))
    if not vs:
        raise EmptySet("induced subgraph needs at least one vertex")
    for v in vs:
        g._check_vertex(v)
    rows = []
    for a in vs:
        r = 0
        for j, b in enumerate(vs):
            if g.rows[a] >> b & 1:
                r |= 1 << j
        rows.append(r)
    return Graph(len(vs), rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the permutation old -> perm[old] to vertex labels."""
    if sorted(perm) != list(range(g.n)):
        raise VertexOutOfRange("perm is not a permutation of 0..n-1")
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for w in _bits(g.rows[v]):
            r |= 1 << perm[w]
        rows[perm[v]] = r
    return Graph(g.n, rows)


# ---------------------------------------------------------------------------
# canonical form and isomorphism


def canonical_code(g: Graph) -> int:
    """Lexicographically minimal adjacency bitstring over vertex orderings.

    Bits are read column by column (x01, x02, x12, x03, ...), first bit most
    significant. Orderings are restricted to non-decreasing degree, which is
    isomorphism-invariant, and the search prunes on shared prefixes; twin
    vertices (same neighbourhood off the pair) are expanded once per node.
    """
    n = g.n
    if n == 1:
        return 0
    rows = g.rows
    degs = [r.bit_count() for r in rows]
    req = sorted(degs)
    total_bits = n * (n - 1) // 2

    twin = list(range(n))
    for v in range(n):
        if twin[v] != v:
            continue
        for w in range(v + 1, n):
            if twin[w] == w and degs[v] == degs[w]:
                off = ~((1 << v) | (1 << w))
                if rows[v] & off == rows[w] & off:
                    twin[w] = v

    best = None
    placed = [0] * n

    def extend(pos: int, used: int, code: int, nbits: int) -> None:
        nonlocal best
        want = req[pos]
        cands = []
        seen_classes = set()
        for v in range(n):
            if used >> v & 1 or degs[v] != want:
                continue
            c = twin[v]
            if c in seen_classes:
                continue
            seen_classes.add(c)
            rv = rows[v]
            w = 0
            for j in range(pos):
                w = w << 1 | (rv >> placed[j] & 1)
            cands.append((w, v))
        cands.sort()
        rem = total_bits - nbits - pos
        for w, v in cands:
            ncode = code << pos | w
            if best is not None and ncode > best >> rem:
                break
            if pos + 1 == n:
                if best is None or ncode < best:
                    best = ncode
            else:
                placed[pos] = v
                extend(pos + 1, used | 1 << v, ncode, nbits + pos)

    extend(0, 0, 0, 0)
    return best


def canonical_form(g: Graph) -> Graph:
    """The canonically labelled copy of g."""
    return _graph_from_code(g.n, canonical_code(g))


def _graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    k = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            k -= 1
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test, order at most 12 on both sides."""
    if g.n > ISO_MAX_ORDER or h.n > ISO_MAX_ORDER:
        raise OrderTooLargeForIsomorphism(
            f"orders {g.n}, {h.n}; both must be <= {ISO_MAX_ORDER}"
        )
    if g.n != h.n:
        return False
    n = g.n
    dg = g.degrees()
    dh = h.degrees()
    if sorted(dg) != sorted(dh):
        return False

    # place the most constrained vertex next: most already-placed neighbours
    order = []
    placed_mask = 0
    for _ in range(n):
        pick = max(
            (v for v in range(n) if not placed_mask >> v & 1),
            key=lambda v: ((g.rows[v] & placed_mask).bit_count(), dg[v], -v),
        )
        order.append(pick)
        placed_mask |= 1 << pick

    image = [-1] * n

    def match(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        rv = g.rows[v]
        for w in range(n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            rw = h.rows[w]
            if all((rv >> order[j] & 1) == (rw >> image[order[j]] & 1) for j in range(i)):
                image[v] = w
                if match(i + 1, used | 1 << w):
                    return True
                image[v] = -1
        return False

    return match(0, 0)


# ---------------------------------------------------------------------------
# graph6


def write_graph6(g: Graph) -> str:
    """Encode as a graph6 line (orders 63 and 64 use the '~' long form)."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    buf = 0
    nbits = 0
    body = []
    for v in range(1, n):
        for u in range(v):
            buf = buf << 1 | (g.rows[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        body.append(chr(63 + (buf << (6 - nbits))))
    return head + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading '>>graph6<<' header is tolerated."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedGraph6("empty line")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedGraph6(f"byte outside graph6 range in {text!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise UnsupportedOrder("orders above 258047 are not supported")
        if len(s) < 4:
            raise MalformedGraph6("truncated long-form order")
        n = (
            (ord(s[1]) - 63) << 12
            | (ord(s[2]) - 63) << 6
            | (ord(s[3]) - 63)
        )
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_ORDER:
        raise UnsupportedOrder(f"order {n} not in 1..{MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(
            f"expected {need} body bytes for order {n}, got {len(body)}"
        )
    rows = [0] * n
    k = 0
    pad = ~0
    for v in range(1, n):
        for u in range(v):
            ch = ord(body[k // 6]) - 63
            if ch >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    # padding bits past the triangle must be zero
    while k % 6:
        if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
            raise MalformedGraph6("nonzero padding bits")
        k += 1
    return Graph(n, rows)


def parse_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse a graph6 corpus, one graph per nonblank line.

    Raises MalformedCorpus carrying the 1-based offending line number.
    """
    out = []
    for i, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            out.append(parse_graph6(line))
        except (MalformedGraph6, UnsupportedOrder) as exc:
            raise MalformedCorpus(i, str(exc)) from exc
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: a line 'n m' then m lines 'u v'."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header claims {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(t.lstrip("-").isdigit() for t in parts):
            raise ValueError(f"expected edge line 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build(n, edges)


# ---------------------------------------------------------------------------
# fixed patterns


class NamedPattern(NamedTuple):
    """A named small graph used as an induced-subgraph target.

    ``param`` is the part size l for K_2_L (l >= 2) and the leaf count for
    STAR (so STAR(m) is the star with m leaves); other tags ignore it.
    """

    tag: str
    param: int | None = None

    @property
    def template(self) -> Graph:
        return _pattern_template(self.tag, self.param)

    def __str__(self) -> str:
        return f"{self.tag}({self.param})" if self.param is not None else self.tag


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OrderOutOfRange("cycles need at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 joined to 1..leaves."""
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@lru_cache(maxsize=None)
def _pattern_template(tag: str, param: int | None) -> Graph:
    if tag == "TWO_K2":
        return build(4, [(0, 1), (2, 3)])
    if tag in ("C4", "C5", "C6"):
        return cycle_graph(int(tag[1]))
    if tag in ("P4", "P5"):
        return path_graph(int(tag[1]))
    if tag == "CLAW":
        return star_graph(3)
    if tag == "K_2_L":
        if param is None or param < 2:
            raise ValueError("K_2_L needs param l >= 2")
        return complete_bipartite_graph(2, param)
    if tag == "W4":
        # 4-cycle 0..3 plus hub 4
        return build(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)])
    if tag == "OCTAHEDRON":
        # join of a 4-cycle with two isolated vertices
        g = cycle_graph(4)
        edges = g.edges() + [(i, j) for i in range(4) for j in (4, 5)]
        return build(6, edges)
    if tag == "HAMMER":
        # triangle 2,3,4 with a tail 4-1-0
        return build(5, [(2, 3), (2, 4), (3, 4), (1, 4), (0, 1)])
    if tag == "BUTTERFLY":
        # two triangles glued at vertex 0
        return build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    if tag == "STAR":
        if param is None or param < 1:
            raise ValueError("STAR needs param >= 1")
        return star_graph(param)
    raise ValueError(f"unknown pattern tag {tag!r}")


PATTERN_TAGS = (
    "TWO_K2",
    "C4",
    "C5",
    "C6",
    "P4",
    "P5",
    "CLAW",
    "K_2_L",
    "W4",
    "OCTAHEDRON",
    "HAMMER",
    "BUTTERFLY",
    "STAR",
)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    seen = set()
    for code in _connected_codes(n - 1):
        base = _graph_from_code(n - 1, code)
        top = 1 << (n - 1)
        for mask in range(1, top):
            # attach a new vertex with this neighbourhood; every connected
            # graph arises this way from deleting a non-cut vertex
            rows = [
                r | top if mask >> v & 1 else r for v, r in enumerate(base.rows)
            ]
            rows.append(mask)
            seen.add(canonical_code(Graph(n, rows)))
    return tuple(sorted(seen))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per connected graph of order n."""
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise OrderOutOfRange(f"order {n} not in 1..{ENUM_MAX_ORDER}")
    for code in _connected_codes(n):
        yield _graph_from_code(n, code)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    if not parts:
        raise EmptySet("union of no graphs")
    n = sum(p.n for p in parts)
    if n > MAX_ORDER:
        raise OrderOutOfRange(f"union order {n} exceeds {MAX_ORDER}")
    rows = []
    shift = 0
    for p in parts:
        rows.extend(r << shift for r in p.rows)
        shift += p.n
    return Graph(n, rows)


def enumerate_all(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of all graphs of order n.

    Assembled as disjoint unions of connected representatives; multisets of
    connected classes are in bijection with graph classes, so no
    deduplication pass is needed.
    """
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise OrderOutOfRange(f"order {n} not in 1..{ENUM_MAX_ORDER}")
    comps = {k: tuple(enumerate_connected(k)) for k in range(1, n + 1)}

    def assemble(remaining: int, size_cap: int, index_floor: int, chosen: list[Graph]):
        if remaining == 0:
            yield disjoint_union(chosen)
            return
        for k in range(min(remaining, size_cap), 0, -1):
            start = index_floor if k == size_cap else 0
            for i in range(start, len(comps[k])):
                chosen.append(comps[k][i])
                yield from assemble(remaining - k, k, i, chosen)
                chosen.pop()

    yield from assemble(n, n, 0, [])
