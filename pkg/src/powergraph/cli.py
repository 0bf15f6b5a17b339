"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path
from typing import Sequence

from . import io
from .catalog import DEFAULT_MAX_ORDER, default_catalog
from .graphs import Graph, enhanced_power_graph, power_graph
from .groups import (
    FiniteGroup,
    GroupError,
    GroupSpec,
    cyclic_subgroup_poset,
    is_cyclic_group,
    make_group,
    parse_spec,
)
from .reconstruct import difference_graph_from_power, reconstruct_enhanced
from .verify import verify_entry

HARD_CAP = 256


class UsageError(Exception):
    pass


def _group_from_args(args: argparse.Namespace) -> FiniteGroup:
    if args.table:
        if args.spec:
            raise UsageError("give either a group spec or --table, not both")
        return make_group(GroupSpec("external-table", path=args.table))
    if not args.spec:
        raise UsageError("a group spec (e.g. 'cyclic 6') or --table is required")
    return make_group(parse_spec(args.spec))


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _read_doc(path: str) -> io.GraphDocument:
    if path == "-":
        return io.loads_document(sys.stdin.read())
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return io.loads_document(text)


def _render(X: Graph, labels, fmt: str, comments=(), dotted=(), name="G") -> str:
    if fmt == "dot":
        return io.to_dot(X, labels, dotted=dotted, name=name)
    return io.dumps_document(io.GraphDocument.from_graph(X, labels, comments))


def cmd_gen_group(args: argparse.Namespace) -> int:
    G = _group_from_args(args)
    hist = Counter(G.orders)
    print(f"group: {G.name}")
    print(f"order: {G.order}")
    print("element orders: " + ", ".join(f"{d}:{hist[d]}" for d in sorted(hist)))
    print(f"involutions: {hist.get(2, 0)}")
    print(f"cyclic: {'yes' if is_cyclic_group(G) else 'no'}")
    print(f"cyclic subgroups: {len(cyclic_subgroup_poset(G))}")
    return 0


def cmd_power_graph(args: argparse.Namespace) -> int:
    G = _group_from_args(args)
    _emit(_render(power_graph(G), G.labels, args.format, name=f"P({G.name})"), args.out)
    return 0


def cmd_enhanced(args: argparse.Namespace) -> int:
    G = _group_from_args(args)
    E = enhanced_power_graph(G)
    dotted = E.difference(power_graph(G)) if args.mark_difference else ()
    _emit(_render(E, G.labels, args.format, dotted=dotted, name=f"Pe({G.name})"), args.out)
    return 0


def cmd_reconstruct(args: argparse.Namespace) -> int:
    doc = _read_doc(args.input)
    Y, report = reconstruct_enhanced(doc.to_graph())
    comments = [
        f"input_class {report.input_class}",
        f"universal_count {report.universal_count}",
        f"added_edges {len(report.added_edges)}",
    ]
    for a, b in report.added_edges:
        c = report.witnesses.get((a, b))
        comments.append(f"added {a} {b}" + (f" witness {c}" if c is not None else ""))
    _emit(_render(Y, doc.labels, args.format, comments, report.added_edges), args.out)
    return 0


def cmd_diff(args: argparse.Namespace) -> int:
    doc = _read_doc(args.input)
    diff = difference_graph_from_power(doc.to_graph())
    labels = None
    if doc.labels is not None:
        labels = [doc.labels[v] for v in diff.vertices]
    else:
        labels = [str(v) for v in diff.vertices]
    _emit(_render(diff.graph, labels, args.format), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_order < 1:
        raise UsageError("--max-order must be positive")
    if args.max_order > args.hard_cap:
        raise UsageError(f"--max-order {args.max_order} exceeds the hard cap {args.hard_cap}")
    try:
        entries = default_catalog(args.max_order, args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = f"{'group':<14}{'order':>6}  {'class':<24}{'added':>6}{'N_e':>5}{'coverage':>10}  result"
    print(header)
    failed = []
    for entry in entries:
        r = verify_entry(entry)
        status = "pass" if r.ok else "FAIL"
        print(
            f"{r.name:<14}{r.order:>6}  {r.input_class:<24}{r.added_edges:>6}"
            f"{r.identity_twins:>5}{r.coverage:>10.2f}  {status}"
        )
        if not r.ok:
            failed.append(r)
    print(f"{len(entries) - len(failed)}/{len(entries)} groups passed")
    if failed:
        first = failed[0]
        check, msg = next(iter(first.failures.items()))
        print(f"first failure: {first.name}: {check}: {msg}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powergraph",
        description="Power graphs, enhanced power graphs and reconstruction of one from the other.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("spec", nargs="*", help="family and parameter, e.g. 'cyclic 6', 'q 3', "
                       "'product cyclic:2 cyclic:4'")
        p.add_argument("--table", metavar="PATH", help="read the group from a Cayley table CSV")

    def output_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("doc", "dot"), default="doc")
        p.add_argument("--dot", dest="format", action="store_const", const="dot",
                       help="shorthand for --format dot")
        p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")

    p = sub.add_parser("gen-group", help="summarize a group")
    group_args(p)
    p.set_defaults(func=cmd_gen_group)

    p = sub.add_parser("power-graph", help="write the power graph of a group")
    group_args(p)
    output_args(p)
    p.set_defaults(func=cmd_power_graph)

    p = sub.add_parser("enhanced", help="write the enhanced power graph of a group")
    group_args(p)
    output_args(p)
    p.add_argument("--mark-difference", action="store_true",
                   help="draw edges missing from the power graph dotted (DOT only)")
    p.set_defaults(func=cmd_enhanced)

    p = sub.add_parser("reconstruct", help="enhanced power graph from a power graph document")
    p.add_argument("input", help="graph document, '-' for stdin")
    output_args(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("diff", help="difference graph from a power graph document")
    p.add_argument("input", help="graph document, '-' for stdin")
    output_args(p)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("verify", help="run every invariant over the group catalog")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--family", action="append", metavar="NAME",
                   help="restrict to a family (repeatable)")
    p.add_argument("--hard-cap", type=int, default=HARD_CAP, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GroupError, io.DocumentError, OSError) as exc:
        print(f"powergraph: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
