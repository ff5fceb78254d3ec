"""Exhaustive verification of every characterization over enumerated graphs.

Each theorem id maps to a per-graph check plus a substrate (which graphs to
sweep). Sweeps are embarrassingly parallel; counterexamples are merged and
re-sorted so reports are deterministic regardless of worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import IsStar, NotPseudoSplit, NotSplit, OrderOutOfRange, UnclassifiablePartition
from .graphs import (
    Graph,
    NamedPattern,
    canonical_form,
    complete_graph,
    cycle_graph,
    enumerate_all,
    enumerate_connected,
    induced,
    is_isomorphic,
    contract,
    parse_graph6_lines,
    write_graph6,
)
from .invariants import (
    clique_number,
    contains_2k2,
    contains_c4,
    find_induced,
    independence_number,
)
from .recognition import (
    KSPartition,
    classify_ks_case,
    detect_exceptional,
    find_2k2_witness,
    find_c4_witness,
    find_nonsplit_witness,
    find_unbalanced_witness,
    is_balanced_split,
    is_pseudo_split,
    is_split,
    is_split_degrees,
    is_split_forbidden,
    is_ng_by_characterisation,
    is_ng_by_definition,
    pseudo_split_decompose,
)

THEOREM_IDS = (
    "PROP1",
    "PROP2",
    "PROP3",
    "PROP4",
    "PROP5",
    "LEMMA1",
    "LEMMA2",
    "THM_SPLIT_FORBIDDEN",
    "THM_2K2_CLAW",
    "THM_CONTRACTION",
    "THM_KS_CASES",
    "THM_UNBALANCED",
    "THM_PSEUDO",
    "THM_NG",
)

CORPUS_MAX_ORDER = 10


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    min_n: int
    max_n: int
    graphs_checked: int
    counterexamples: tuple[tuple[str, str], ...]
    elapsed_ms: float

    @property
    def verdict(self) -> str:
        return "PASS" if not self.counterexamples else "FAIL"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "order_range": {"min": self.min_n, "max": self.max_n},
            "graphs_checked": self.graphs_checked,
            "counterexamples": [
                {"graph6": g6, "detail": detail} for g6, detail in self.counterexamples
            ],
            "elapsed_ms": self.elapsed_ms,
            "verdict": self.verdict,
        }

    def render_text(self) -> str:
        lines = [
            f"{self.theorem:<20} orders {self.min_n}..{self.max_n}  "
            f"graphs={self.graphs_checked:<7} elapsed={self.elapsed_ms:.1f}ms  {self.verdict}"
        ]
        for g6, detail in self.counterexamples:
            lines.append(f"  counterexample {g6}: {detail}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# substrates


def _sub_connected(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_connected(n)


def _sub_all(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_all(n)


def _sub_all_then_connected(max_n: int) -> Iterator[Graph]:
    # every class through order 7, connected classes only at 8
    for n in range(1, max_n + 1):
        if n <= 7:
            yield from enumerate_all(n)
        else:
            yield from enumerate_connected(n)


def _sub_cycles(max_n: int) -> Iterator[Graph]:
    for n in range(4, max_n + 1):
        yield cycle_graph(n)


def _sub_cliques(max_n: int) -> Iterator[Graph]:
    for n in range(4, max_n + 1):
        yield complete_graph(n)


# ---------------------------------------------------------------------------
# per-graph checks; each returns (violation details, in-exceptional-region)


def _contraction_image(cset, u: int, v: int) -> list[int]:
    lo, hi = (u, v) if u < v else (v, u)
    img = set()
    for w in cset:
        x = lo if w == u or w == v else w
        img.add(x if x < hi else x - 1)
    return sorted(img)


def _check_prop1(g: Graph):
    bad = []
    rows = g.rows
    for cmask in range(1, 1 << g.n):
        cset = [x for x in range(g.n) if cmask >> x & 1]
        gc = induced(g, cset)
        for u in cset:
            ncu = rows[u] & cmask
            outside = rows[u] & ~cmask
            while outside:
                b = outside & -outside
                outside ^= b
                v = b.bit_length() - 1
                if rows[v] & cmask & ~(1 << u) & ~ncu:
                    continue  # N_C(v) minus u not inside N_C(u)
                h = contract(g, (u, v) if u < v else (v, u))
                img = _contraction_image(cset, u, v)
                if not is_isomorphic(gc, induced(h, img)):
                    bad.append(
                        f"C={cset} u={u} v={v}: induced subgraph not preserved"
                    )
    return tuple(bad), False


def _check_prop2(g: Graph):
    bad = []
    edges = g.edges()
    for cmask in range(1, 1 << g.n):
        cset = [x for x in range(g.n) if cmask >> x & 1]
        gc = induced(g, cset)
        for u, v in edges:
            if cmask >> u & 1 or cmask >> v & 1:
                continue
            h = contract(g, (u, v))
            img = _contraction_image(cset, u, v)
            if not is_isomorphic(gc, induced(h, img)):
                bad.append(f"C={cset} e=({u},{v}): induced subgraph not preserved")
    return tuple(bad), False


def _check_prop3(g: Graph):
    bad = []
    rows = g.rows
    edges = g.edges()
    for cmask in range(1, g.full_mask):
        cover = 0
        cset = []
        m = cmask
        while m:
            b = m & -m
            m ^= b
            x = b.bit_length() - 1
            cset.append(x)
            cover |= b | rows[x]
        if cover == g.full_mask:
            continue  # dominating sets are out of scope
        gc = induced(g, cset)
        if not any(
            is_isomorphic(gc, induced(contract(g, e), _contraction_image(cset, e.u, e.v)))
            for e in edges
        ):
            bad.append(f"C={cset}: no contraction preserves the induced subgraph")
    return tuple(bad), False


def _check_prop4(g: Graph):
    if g.n < 4 or not (g.is_connected() and all(d == 2 for d in g.degrees())):
        return (), False
    target = cycle_graph(g.n - 1)
    bad = tuple(
        f"C{g.n}/({e.u},{e.v}) is not C{g.n - 1}"
        for e in g.edges()
        if not is_isomorphic(contract(g, e), target)
    )
    return bad, False


def _check_prop5(g: Graph):
    if g.n < 4 or g.edge_count() != g.n * (g.n - 1) // 2:
        return (), False
    target = complete_graph(g.n - 1)
    bad = tuple(
        f"K{g.n}/({e.u},{e.v}) is not K{g.n - 1}"
        for e in g.edges()
        if not is_isomorphic(contract(g, e), target)
    )
    return bad, False


def _check_lemma1(g: Graph):
    if not contains_c4(g):
        return (), False
    tag = detect_exceptional(g)
    terminal = tag is not None and tag.family in ("H1", "H2", "H3")
    e = find_c4_witness(g)
    if terminal:
        if e is not None:
            return (f"terminal graph {tag} has witness ({e.u},{e.v})",), False
        return (), False
    if e is None:
        return ("no C4-preserving contraction on a non-terminal graph",), False
    if find_induced(contract(g, e), NamedPattern("C4")) is None:
        return (f"contraction by ({e.u},{e.v}) lacks the promised C4",), False
    return (), False


_LEMMA2_TERMINAL_FAMILIES = ("H4", "H5", "H6", "H7")


def _check_lemma2(g: Graph):
    if not contains_2k2(g):
        return (), False
    tag = detect_exceptional(g)
    terminal = (tag is not None and tag.family in _LEMMA2_TERMINAL_FAMILIES) or (
        g.n == 6 and is_isomorphic(g, cycle_graph(6))
    )
    e = find_2k2_witness(g)
    if terminal:
        if e is not None:
            return (f"terminal graph has witness ({e.u},{e.v})",), False
        return (), False
    if e is None:
        return ("no 2K2/C4-preserving contraction on a non-terminal graph",), False
    h = contract(g, e)
    if (
        find_induced(h, NamedPattern("TWO_K2")) is None
        and find_induced(h, NamedPattern("C4")) is None
    ):
        return (f"contraction by ({e.u},{e.v}) lacks the promised 2K2/C4",), False
    return (), False


def _ks_partition_exists(g: Graph) -> bool:
    # brute force, independent of both recognizers
    vs = range(g.n)
    for r in range(g.n + 1):
        for k in itertools.combinations(vs, r):
            chosen = set(k)
            if any(not g.has_edge(x, y) for x, y in itertools.combinations(k, 2)):
                continue
            rest = [v for v in vs if v not in chosen]
            if all(not g.has_edge(x, y) for x, y in itertools.combinations(rest, 2)):
                return True
    return False


def _check_split_triple(g: Graph):
    a = is_split_forbidden(g)
    b = is_split_degrees(g)
    c = _ks_partition_exists(g)
    if a == b == c:
        return (), False
    return (f"forbidden={a} degrees={b} partition={c}",), False


def _check_2k2_claw(g: Graph):
    if contains_2k2(g):
        return (), False
    if find_induced(g, NamedPattern("CLAW")) is not None:
        return (), False
    if independence_number(g) < 3:
        return (), False
    if is_split(g):
        return (), False
    return ("(2K2, claw)-free with alpha >= 3 but not split",), False


def _check_contraction(g: Graph):
    split = is_split(g)
    tag = detect_exceptional(g)
    e = find_nonsplit_witness(g)
    hits = int(split) + int(tag is not None) + int(e is not None)
    exceptional_member = not split and e is None
    if hits != 1:
        w = None if e is None else (e.u, e.v)
        return (f"regions overlap or miss: split={split} family={tag} witness={w}",), exceptional_member
    return (), exceptional_member


def _expected_exceptional(max_n: int) -> set[str]:
    names = []
    for l in range(2, max_n - 1):
        names.append(NamedPattern("K_2_L", l))
    for tag, order in (("W4", 5), ("P5", 5), ("HAMMER", 5), ("BUTTERFLY", 5), ("OCTAHEDRON", 6)):
        if order <= max_n:
            names.append(NamedPattern(tag))
    return {write_graph6(canonical_form(p.template)) for p in names}


def _check_ks_cases(g: Graph):
    if not is_split(g):
        return (), False
    bad = []
    case_i = 0
    for kmask in range(1 << g.n):
        k = tuple(x for x in range(g.n) if kmask >> x & 1)
        s = tuple(x for x in range(g.n) if not kmask >> x & 1)
        p = KSPartition(k, s)
        if not p.is_valid_for(g):
            continue
        try:
            case = classify_ks_case(g, p)
        except UnclassifiablePartition as exc:
            bad.append(f"K={k}: {exc}")
            continue
        if case == "I":
            case_i += 1
    if case_i > 1:
        bad.append(f"{case_i} distinct case-I partitions")
    if (case_i == 1) != (clique_number(g) + independence_number(g) == g.n):
        bad.append("omega+alpha=n criterion disagrees with case-I existence")
    return tuple(bad), False


def _check_unbalanced(g: Graph):
    if not is_split(g):
        return (), False
    try:
        e = find_unbalanced_witness(g)
    except IsStar:
        return (), False
    unbalanced = not is_balanced_split(g)
    if (e is not None) != unbalanced:
        w = None if e is None else (e.u, e.v)
        return (f"unbalanced={unbalanced} but witness={w}",), False
    if e is not None:
        h = contract(g, e)
        if not is_split(h):
            return (f"contraction by ({e.u},{e.v}) is not split",), False
        if clique_number(h) != clique_number(g) - 1 or is_balanced_split(h):
            return (f"witness ({e.u},{e.v}) fails its own postcondition",), False
    return (), False


def _check_pseudo(g: Graph):
    free = not contains_2k2(g) and not contains_c4(g)
    bad = []
    try:
        d = pseudo_split_decompose(g)
    except NotPseudoSplit:
        d = None
        if free:
            bad.append("decomposition refused a (2K2, C4)-free graph")
    except NotSplit:
        return ("C5-free pseudo-split graph is not split",), False
    if d is not None:
        if not free:
            bad.append("decomposition accepted a graph with induced 2K2 or C4")
        if not d.is_valid_for(g):
            bad.append(f"invalid decomposition a={d.a} b={d.b} c={d.c}")
    return tuple(bad), False


def _check_ng(g: Graph):
    by_def = is_ng_by_definition(g)
    by_char = is_ng_by_characterisation(g)
    if by_def != by_char:
        return (f"definition={by_def} characterisation={by_char}",), False
    return (), False


@dataclass(frozen=True)
class _Checker:
    cap: int
    substrate: Callable[[int], Iterator[Graph]]
    check: Callable[[Graph], tuple[tuple[str, ...], bool]]
    expected_set: Callable[[int], set[str]] | None = None


CHECKERS: dict[str, _Checker] = {
    "PROP1": _Checker(6, _sub_all, _check_prop1),
    "PROP2": _Checker(6, _sub_all, _check_prop2),
    "PROP3": _Checker(6, _sub_connected, _check_prop3),
    "PROP4": _Checker(10, _sub_cycles, _check_prop4),
    "PROP5": _Checker(10, _sub_cliques, _check_prop5),
    "LEMMA1": _Checker(8, _sub_connected, _check_lemma1),
    "LEMMA2": _Checker(8, _sub_connected, _check_lemma2),
    "THM_SPLIT_FORBIDDEN": _Checker(8, _sub_all_then_connected, _check_split_triple),
    "THM_2K2_CLAW": _Checker(8, _sub_connected, _check_2k2_claw),
    "THM_CONTRACTION": _Checker(8, _sub_connected, _check_contraction, _expected_exceptional),
    "THM_KS_CASES": _Checker(7, _sub_all, _check_ks_cases),
    "THM_UNBALANCED": _Checker(8, _sub_connected, _check_unbalanced),
    "THM_PSEUDO": _Checker(8, _sub_all, _check_pseudo),
    "THM_NG": _Checker(7, _sub_all, _check_ng),
}


def check_one(theorem: str, g: Graph) -> tuple[str, ...]:
    """Re-run one theorem's per-graph check in isolation (counterexample replay)."""
    if theorem not in CHECKERS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    details, _ = CHECKERS[theorem].check(g)
    return details


def _run_chunk(args):
    theorem, graphs = args
    check = CHECKERS[theorem].check
    violations = []
    members = []
    for g in graphs:
        details, flag = check(g)
        if details or flag:
            g6 = write_graph6(g)
            violations.extend((g6, d) for d in details)
            if flag:
                members.append(g6)
    return violations, members


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _run_checks(theorem: str, graphs: list[Graph], jobs: int):
    if jobs is None or jobs < 1:
        jobs = _default_jobs()
    if jobs == 1 or len(graphs) < 256:
        return _run_chunk((theorem, graphs))
    step = max(1, -(-len(graphs) // (jobs * 4)))
    chunks = [
        (theorem, graphs[i : i + step]) for i in range(0, len(graphs), step)
    ]
    violations = []
    members = []
    with multiprocessing.Pool(jobs) as pool:
        for v, m in pool.map(_run_chunk, chunks):
            violations.extend(v)
            members.extend(m)
    return violations, members


def verify(theorem: str, max_n: int = 7, source=None, jobs: int = 1) -> TheoremReport:
    """Sweep one theorem over the built-in enumeration or a graph6 corpus.

    source: None for the built-in substrate, a path to a graph6 file, or an
    iterable of Graph. Corpus graphs may have order up to 10.
    """
    if theorem not in CHECKERS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    ck = CHECKERS[theorem]
    start = time.perf_counter()
    if source is None:
        if not 1 <= max_n <= ck.cap:
            raise OrderOutOfRange(
                f"{theorem} supports max_n 1..{ck.cap}, got {max_n}"
            )
        graphs = list(ck.substrate(max_n))
    else:
        if isinstance(source, (str, os.PathLike)):
            with open(source) as fh:
                graphs = parse_graph6_lines(fh)
        else:
            graphs = list(source)
        for g in graphs:
            if g.n > CORPUS_MAX_ORDER:
                raise OrderOutOfRange(
                    f"corpus graph of order {g.n} exceeds {CORPUS_MAX_ORDER}"
                )
    violations, members = _run_checks(theorem, graphs, jobs)
    if source is None and ck.expected_set is not None:
        expected = ck.expected_set(max_n)
        found = set(members)
        for g6 in sorted(found - expected):
            violations.append((g6, "unexpected member of the exceptional region"))
        for g6 in sorted(expected - found):
            violations.append((g6, "expected exceptional graph not found"))
    violations.sort()
    if graphs:
        lo = min(g.n for g in graphs)
        hi = max(g.n for g in graphs)
    else:
        lo = hi = max_n if source is None else 0
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return TheoremReport(theorem, lo, hi, len(graphs), tuple(violations), elapsed_ms)


def verify_all(max_n: int = 7, jobs: int = 1) -> list[TheoremReport]:
    """One report per theorem id; per-checker caps clamp max_n (shown in the report)."""
    if max_n < 1:
        raise OrderOutOfRange(f"max_n must be at least 1, got {max_n}")
    return [
        verify(tid, min(max_n, CHECKERS[tid].cap), jobs=jobs) for tid in THEOREM_IDS
    ]


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CensusRow:
    n: int
    connected: int
    split: int
    balanced_split: int
    unbalanced_split: int
    non_split: int
    exceptional: dict
    pseudo_split: int
    ng: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "connected": self.connected,
            "split": self.split,
            "balanced_split": self.balanced_split,
            "unbalanced_split": self.unbalanced_split,
            "non_split": self.non_split,
            "exceptional": dict(self.exceptional),
            "pseudo_split": self.pseudo_split,
            "ng": self.ng,
        }


def _census_one(g: Graph):
    split = is_split(g)
    balanced = split and clique_number(g) + independence_number(g) == g.n
    tag = detect_exceptional(g)
    return (
        split,
        balanced,
        None if tag is None else str(tag),
        is_pseudo_split(g),
        is_ng_by_characterisation(g),
    )


def census(max_n: int = 7, jobs: int = 1) -> list[CensusRow]:
    """Classification counts over connected graphs of each order up to max_n."""
    if not 1 <= max_n <= 8:
        raise OrderOutOfRange(f"census supports max_n 1..8, got {max_n}")
    rows = []
    for n in range(1, max_n + 1):
        graphs = list(enumerate_connected(n))
        if jobs > 1 and len(graphs) >= 256:
            with multiprocessing.Pool(jobs) as pool:
                results = pool.map(_census_one, graphs, chunksize=64)
        else:
            results = [_census_one(g) for g in graphs]
        split = balanced = pseudo = ng = 0
        families: dict[str, int] = {}
        for sp, bal, tag, ps, isng in results:
            split += sp
            balanced += bal
            pseudo += ps
            ng += isng
            if tag is not None:
                families[tag] = families.get(tag, 0) + 1
        rows.append(
            CensusRow(
                n=n,
                connected=len(graphs),
                split=split,
                balanced_split=balanced,
                unbalanced_split=split - balanced,
                non_split=len(graphs) - split,
                exceptional=dict(sorted(families.items())),
                pseudo_split=pseudo,
                ng=ng,
            )
        )
    return rows


def render_census_text(rows: list[CensusRow]) -> str:
    header = (
        f"{'n':>2} {'connected':>9} {'split':>6} {'balanced':>9} "
        f"{'unbalanced':>10} {'non-split':>9} {'pseudo':>6} {'ng':>5}  exceptional"
    )
    lines = [header]
    for r in rows:
        fams = ", ".join(f"{k}:{v}" for k, v in r.exceptional.items()) or "-"
        lines.append(
            f"{r.n:>2} {r.connected:>9} {r.split:>6} {r.balanced_split:>9} "
            f"{r.unbalanced_split:>10} {r.non_split:>9} {r.pseudo_split:>6} {r.ng:>5}  {fams}"
        )
    return "\n".join(lines)
