"""Split-graph recognition, KS-partitions, exceptional families, and witness search."""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .errors import (
    InvalidPartition,
    IsStar,
    NoInduced2K2,
    NoInducedC4,
    NotPseudoSplit,
    NotSplit,
    OrderTooLargeForColoring,
    UnclassifiablePartition,
)
from .graphs import Edge, Graph, NamedPattern, complement, contract, is_isomorphic
from .invariants import (
    COLORING_MAX_ORDER,
    chromatic_number,
    clique_number,
    contains_2k2,
    contains_c4,
    contains_c5,
    find_induced,
    independence_number,
)

CASE_I = "I"
CASE_II = "II"
CASE_III = "III"


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _is_clique(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        if g.rows[b.bit_length() - 1] & mask != mask ^ b:
            return False
    return True


def _is_independent(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        if g.rows[b.bit_length() - 1] & mask:
            return False
    return True


class KSPartition(NamedTuple):
    """Vertex partition into a clique k and an independent set s."""

    k: tuple[int, ...]
    s: tuple[int, ...]

    def is_valid_for(self, g: Graph) -> bool:
        ks = set(self.k)
        ss = set(self.s)
        if len(ks) != len(self.k) or len(ss) != len(self.s):
            return False
        if ks & ss or ks | ss != set(range(g.n)):
            return False
        return _is_clique(g, _mask(self.k)) and _is_independent(g, _mask(self.s))


class PseudoSplitDecomposition(NamedTuple):
    """Partition into clique a, independent set b, and c inducing C5 or empty.

    Validity additionally requires every a-c pair adjacent and no b-c edges.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    def is_valid_for(self, g: Graph) -> bool:
        sa, sb, sc = set(self.a), set(self.b), set(self.c)
        if len(sa) + len(sb) + len(sc) != len(self.a) + len(self.b) + len(self.c):
            return False
        if sa & sb or sa & sc or sb & sc or sa | sb | sc != set(range(g.n)):
            return False
        amask, bmask, cmask = _mask(self.a), _mask(self.b), _mask(self.c)
        if not _is_clique(g, amask) or not _is_independent(g, bmask):
            return False
        if self.c:
            # 2-regular on 5 vertices is necessarily a 5-cycle
            if len(self.c) != 5 or any(
                (g.rows[v] & cmask).bit_count() != 2 for v in self.c
            ):
                return False
        for v in self.a:
            if g.rows[v] & cmask != cmask:
                return False
        for v in self.b:
            if g.rows[v] & cmask:
                return False
        return True


class FamilyTag(NamedTuple):
    """One of the seven exceptional families; l is set for H1 = K_{2,l} only."""

    family: str
    l: int | None = None

    def __str__(self) -> str:
        if self.l is not None:
            return f"{self.family}(l={self.l})"
        return self.family


class ClassificationReport(NamedTuple):
    is_split: bool
    is_balanced_split: bool | None
    ks: KSPartition | None
    exceptional: FamilyTag | None
    is_pseudo_split: bool
    psd: PseudoSplitDecomposition | None
    is_ng: bool
    omega: int
    alpha: int
    chi: int
    chi_complement: int
    witnesses: tuple[tuple[str, Edge], ...]

    def to_dict(self) -> dict:
        return {
            "is_split": self.is_split,
            "is_balanced_split": self.is_balanced_split,
            "ks": None if self.ks is None else {"k": list(self.ks.k), "s": list(self.ks.s)},
            "exceptional": None
            if self.exceptional is None
            else {"family": self.exceptional.family, "l": self.exceptional.l},
            "is_pseudo_split": self.is_pseudo_split,
            "psd": None
            if self.psd is None
            else {"a": list(self.psd.a), "b": list(self.psd.b), "c": list(self.psd.c)},
            "is_ng": self.is_ng,
            "omega": self.omega,
            "alpha": self.alpha,
            "chi": self.chi,
            "chi_complement": self.chi_complement,
            "witnesses": [
                {"label": label, "edge": [e.u, e.v]} for label, e in self.witnesses
            ],
        }


# ---------------------------------------------------------------------------
# split recognition


def is_split_forbidden(g: Graph) -> bool:
    """Split test by forbidden patterns: no induced 2K2, C4, or C5."""
    return not contains_2k2(g) and not contains_c4(g) and not contains_c5(g)


def is_split_degrees(g: Graph) -> bool:
    """Split test from the degree sequence.

    With degrees d1 >= ... >= dn and m the largest i with d_i >= i-1, the
    graph is split iff sum(d_i, i <= m) = m(m-1) + sum(d_i, i > m).
    """
    d = sorted(g.degrees(), reverse=True)
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def is_split(g: Graph) -> bool:
    """Default split test (the degree-sequence criterion)."""
    return is_split_degrees(g)


def ks_partition(g: Graph) -> KSPartition:
    """A partition maximizing |K|, lexicographically smallest such K.

    Every split graph has a partition with |K| = omega: take any partition
    (K, S) and a maximum clique Q; |Q & S| <= 1, and if Q & S = {s} then
    Q - s lies inside K, so either |K| = omega already or K + s works.
    """
    if not is_split(g):
        raise NotSplit("graph admits no clique/independent-set partition")
    w = clique_number(g)
    full = g.full_mask
    for k in itertools.combinations(range(g.n), w):
        kmask = _mask(k)
        if _is_clique(g, kmask) and _is_independent(g, full ^ kmask):
            s = tuple(v for v in range(g.n) if not kmask >> v & 1)
            return KSPartition(k, s)
    raise NotSplit("no partition found")  # unreachable on split inputs


def classify_ks_case(g: Graph, p: KSPartition) -> str:
    """Which of the three admissible size patterns the partition matches.

    I: (omega, alpha); II: (omega-1, alpha); III: (omega, alpha-1). At most
    one pattern can match since the pairs are pairwise distinct.
    """
    if not p.is_valid_for(g):
        raise InvalidPartition(f"K={p.k} S={p.s} is not a valid partition")
    w = clique_number(g)
    a = independence_number(g)
    sizes = (len(p.k), len(p.s))
    if sizes == (w, a):
        return CASE_I
    if sizes == (w - 1, a):
        return CASE_II
    if sizes == (w, a - 1):
        return CASE_III
    raise UnclassifiablePartition(
        f"sizes {sizes} match none of {(w, a)}, {(w - 1, a)}, {(w, a - 1)}"
    )


def is_balanced_split(g: Graph) -> bool:
    """True iff some partition has |K| = omega and |S| = alpha.

    Such a partition exists iff omega + alpha = n: sizes sum to n, and the
    three admissible patterns sum to omega+alpha, omega+alpha-1 only.
    """
    if not is_split(g):
        raise NotSplit("balancedness is defined for split graphs only")
    return clique_number(g) + independence_number(g) == g.n


def is_star(g: Graph) -> bool:
    """True for K1 and every K_{1,m}, m >= 1."""
    if g.n == 1:
        return True
    return sorted(g.degrees()) == [1] * (g.n - 1) + [g.n - 1]


# ---------------------------------------------------------------------------
# exceptional families


def _k2l_parameter(g: Graph) -> int | None:
    """l >= 2 when g is exactly K_{2,l}, else None. Structural, any order."""
    n = g.n
    if n < 4:
        return None
    rows = g.rows
    full = g.full_mask
    for u in range(n):
        if rows[u].bit_count() != n - 2:
            continue
        for v in range(u + 1, n):
            target = full ^ (1 << u) ^ (1 << v)
            if rows[u] != target or rows[v] != target:
                continue
            xmask = (1 << u) | (1 << v)
            if all(
                rows[y] == xmask for y in range(n) if not xmask >> y & 1
            ):
                return n - 2
    return None


def detect_exceptional(g: Graph) -> FamilyTag | None:
    """The family tag when g is one of the seven exceptional graphs.

    H1 = K_{2,l} (l >= 2), H2 = wheel W4, H3 = octahedron, H4 = 2K2,
    H5 = P5, H6 = hammer, H7 = butterfly.
    """
    n = g.n
    l = _k2l_parameter(g)
    if l is not None:
        return FamilyTag("H1", l)
    if n == 4 and g.edge_count() == 2 and sorted(g.degrees()) == [1, 1, 1, 1]:
        return FamilyTag("H4")
    if n == 5:
        for family, tag in (("H2", "W4"), ("H5", "P5"), ("H6", "HAMMER"), ("H7", "BUTTERFLY")):
            if is_isomorphic(g, NamedPattern(tag).template):
                return FamilyTag(family)
    if n == 6 and is_isomorphic(g, NamedPattern("OCTAHEDRON").template):
        return FamilyTag("H3")
    return None


# ---------------------------------------------------------------------------
# witness edges


def find_c4_witness(g: Graph) -> Edge | None:
    """First edge whose contraction still has an induced C4, or None.

    None only happens on K_{2,l}, W4, and the octahedron.
    """
    if not contains_c4(g):
        raise NoInducedC4("graph has no induced C4")
    for e in g.edges():
        if contains_c4(contract(g, e)):
            return e
    return None


def find_2k2_witness(g: Graph) -> Edge | None:
    """First edge whose contraction has an induced 2K2 or C4, or None.

    None only happens on 2K2, P5, the hammer, the butterfly, and C6.
    """
    if not contains_2k2(g):
        raise NoInduced2K2("graph has no induced 2K2")
    for e in g.edges():
        h = contract(g, e)
        if contains_2k2(h) or contains_c4(h):
            return e
    return None


def find_nonsplit_witness(g: Graph) -> Edge | None:
    """First edge whose contraction is not split, or None."""
    for e in g.edges():
        if not is_split(contract(g, e)):
            return e
    return None


def find_unbalanced_witness(g: Graph) -> Edge | None:
    """First edge e with omega(g/e) = omega(g) - 1 and g/e unbalanced split.

    Present iff g is unbalanced, for connected split inputs. Stars K_{1,m}
    with m >= 2 are rejected (the equivalence genuinely fails there), as is
    K1, which has no edge to contract; K2 passes through.
    """
    if not is_split(g):
        raise NotSplit("witness search is defined for split graphs")
    if g.n < 2:
        raise IsStar("the one-vertex graph has no edges")
    if g.n >= 3 and is_star(g):
        raise IsStar(f"stars K_(1,{g.n - 1}) are excluded")
    w = clique_number(g)
    for e in g.edges():
        h = contract(g, e)
        if clique_number(h) == w - 1 and not is_balanced_split(h):
            return e
    return None


# ---------------------------------------------------------------------------
# pseudo-split and the chromatic-sum classification


def is_pseudo_split(g: Graph) -> bool:
    """(2K2, C4)-free."""
    return not contains_2k2(g) and not contains_c4(g)


def pseudo_split_decompose(g: Graph) -> PseudoSplitDecomposition:
    """Decompose a (2K2, C4)-free graph into (a, b, c).

    If an induced C5 exists, c is the first one found, a the vertices
    adjacent to all of c, b the rest; otherwise c is empty and (a, b) is the
    KS-partition.
    """
    if not is_pseudo_split(g):
        raise NotPseudoSplit("graph has an induced 2K2 or C4")
    wit = find_induced(g, NamedPattern("C5"))
    if wit is None:
        p = ks_partition(g)
        return PseudoSplitDecomposition(p.k, p.s, ())
    cmask = _mask(wit.vertices)
    a = []
    b = []
    for v in range(g.n):
        if cmask >> v & 1:
            continue
        if g.rows[v] & cmask == cmask:
            a.append(v)
        else:
            b.append(v)
    return PseudoSplitDecomposition(tuple(a), tuple(b), wit.vertices)


def is_ng_by_definition(g: Graph) -> bool:
    """chi(g) + chi(complement) reaches the maximum possible value n + 1."""
    return chromatic_number(g) + chromatic_number(complement(g)) == g.n + 1


def is_ng_by_characterisation(g: Graph) -> bool:
    """Equivalent structural test: pseudo-split but not balanced split."""
    if not is_pseudo_split(g):
        return False
    return not (is_split(g) and clique_number(g) + independence_number(g) == g.n)


# ---------------------------------------------------------------------------
# aggregate classification


def classify(g: Graph) -> ClassificationReport:
    """Run every recognizer and witness finder applicable to g; order <= 12."""
    if g.n > COLORING_MAX_ORDER:
        raise OrderTooLargeForColoring(
            f"classification needs exact coloring, order {g.n} > {COLORING_MAX_ORDER}"
        )
    omega = clique_number(g)
    alpha = independence_number(g)
    chi = chromatic_number(g)
    chi_c = chromatic_number(complement(g))
    split = is_split(g)
    ks = ks_partition(g) if split else None
    balanced = (omega + alpha == g.n) if split else None
    pseudo = is_pseudo_split(g)
    psd = pseudo_split_decompose(g) if pseudo else None
    tag = detect_exceptional(g)
    witnesses = []
    if contains_c4(g):
        e = find_c4_witness(g)
        if e is not None:
            witnesses.append(("c4", e))
    if contains_2k2(g):
        e = find_2k2_witness(g)
        if e is not None:
            witnesses.append(("2k2", e))
    if g.is_connected():
        e = find_nonsplit_witness(g)
        if e is not None:
            witnesses.append(("nonsplit", e))
    if split and g.n >= 2 and not (g.n >= 3 and is_star(g)):
        e = find_unbalanced_witness(g)
        if e is not None:
            witnesses.append(("unbalanced", e))
    return ClassificationReport(
        is_split=split,
        is_balanced_split=balanced,
        ks=ks,
        exceptional=tag,
        is_pseudo_split=pseudo,
        psd=psd,
        is_ng=chi + chi_c == g.n + 1,
        omega=omega,
        alpha=alpha,
        chi=chi,
        chi_complement=chi_c,
        witnesses=tuple(witnesses),
    )
