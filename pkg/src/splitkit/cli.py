"""Command-line interface: classify graphs, verify theorems, print the census."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MalformedCorpus, OrderOutOfRange, SplitkitError
from .graphs import Graph, parse_edge_list, parse_graph6_lines
from .harness import (
    THEOREM_IDS,
    census,
    render_census_text,
    verify,
    verify_all,
    _default_jobs,
)
from .recognition import ClassificationReport, classify


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitkit",
        description="Split-graph classification and exhaustive theorem verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classify graphs given as graph6 lines or an edge list"
    )
    src = p_classify.add_mutually_exclusive_group(required=True)
    src.add_argument("--inline", metavar="STR", help="graph6 line(s) or edge-list text")
    src.add_argument("--file", metavar="PATH", help="file with the same content")
    _common_flags(p_classify)

    p_verify = sub.add_parser("verify", help="exhaustively check one or all theorems")
    p_verify.add_argument(
        "--theorem",
        required=True,
        choices=THEOREM_IDS + ("all",),
        help="theorem id, or 'all'",
    )
    p_verify.add_argument(
        "--max-n", type=int, default=7, dest="max_n", help="largest order to sweep"
    )
    p_verify.add_argument(
        "--file", metavar="PATH", help="graph6 corpus to check instead of enumerating"
    )
    _common_flags(p_verify)

    p_census = sub.add_parser(
        "census", help="classification counts over connected graphs by order"
    )
    p_census.add_argument(
        "--max-n", type=int, default=7, dest="max_n", help="largest order to tabulate"
    )
    _common_flags(p_census)
    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes")
    p.add_argument("--format", choices=("text", "json"), default="text")


def _parse_classify_input(text: str) -> list[tuple[str, Graph]]:
    """Auto-detect edge-list (first byte is a digit) vs graph6 lines."""
    stripped = text.lstrip()
    if stripped and stripped[0].isdigit():
        g = parse_edge_list(text)
        return [("edge-list", g)]
    lines = text.splitlines()
    graphs = parse_graph6_lines(lines)
    labels = [ln.strip() for ln in lines if ln.strip()]
    return list(zip(labels, graphs))


def _yn(flag) -> str:
    if flag is None:
        return "-"
    return "yes" if flag else "no"


def _render_classification(label: str, r: ClassificationReport) -> str:
    ks = "-" if r.ks is None else f"K{set(r.ks.k) or '{}'}/S{set(r.ks.s) or '{}'}"
    psd = (
        "-"
        if r.psd is None
        else f"A{set(r.psd.a) or '{}'}/B{set(r.psd.b) or '{}'}/C{set(r.psd.c) or '{}'}"
    )
    wit = ", ".join(f"{lbl}=({e.u},{e.v})" for lbl, e in r.witnesses)
    return (
        f"{label}: split={_yn(r.is_split)} balanced={_yn(r.is_balanced_split)} "
        f"pseudo_split={_yn(r.is_pseudo_split)} ng={_yn(r.is_ng)} "
        f"exceptional={r.exceptional or '-'} omega={r.omega} alpha={r.alpha} "
        f"chi={r.chi} chi_complement={r.chi_complement} ks={ks} psd={psd} "
        f"witnesses=[{wit}]"
    )


def _cmd_classify(args) -> int:
    if args.inline is not None:
        text = args.inline
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    try:
        pairs = _parse_classify_input(text)
        reports = [(label, classify(g)) for label, g in pairs]
    except (SplitkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = [{"input": label, **r.to_dict()} for label, r in reports]
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for label, r in reports:
            print(_render_classification(label, r))
    return 0


def _cmd_verify(args) -> int:
    try:
        if args.theorem == "all":
            if args.file is not None:
                reports = [
                    verify(tid, args.max_n, source=args.file, jobs=args.jobs)
                    for tid in THEOREM_IDS
                ]
            else:
                reports = verify_all(args.max_n, jobs=args.jobs)
        else:
            reports = [
                verify(args.theorem, args.max_n, source=args.file, jobs=args.jobs)
            ]
    except MalformedCorpus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OrderOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1 if args.file is not None else 2
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload if len(payload) > 1 else payload[0], sort_keys=True, indent=2))
    else:
        for r in reports:
            print(r.render_text())
    return 0 if all(r.verdict == "PASS" for r in reports) else 1


def _cmd_census(args) -> int:
    try:
        rows = census(args.max_n, jobs=args.jobs)
    except OrderOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in rows], sort_keys=True, indent=2))
    else:
        print(render_census_text(rows))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "classify":
        return _cmd_classify(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_census(args)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
