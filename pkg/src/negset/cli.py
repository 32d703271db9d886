"""Command-line surface: file I/O, reports, and DOT export.

Exit codes: 0 the checked property holds (or the computation succeeded),
1 the property fails, 2 usage or parse error, 3 precondition or budget
error, 4 an antibalanced-K₅ block stopped the acyclic construction.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import oracle
from .balance import check_balance, is_balanced, is_negation_set
from .errors import (
    IterationBudgetError,
    MinusK5Detected,
    PreconditionError,
    SgParseError,
)
from .graph import NEG, Edge, SignedGraph, edge_key
from .minimality import (
    is_minimal,
    triangle_certificate_for_complete,
    unique_minimum_by_size,
)
from .negation import acyclic_negation
from .packing import packing_number
from .sgio import load_path

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_MINUS_K5 = 4

_DOT_PALETTE = (
    "blue",
    "forestgreen",
    "darkorange",
    "purple",
    "saddlebrown",
    "deeppink",
    "teal",
    "goldenrod",
)


class _UsageError(Exception):
    pass


def _parse_edge_list(spec: str) -> tuple[Edge, ...]:
    """Parse ``0-1,2-3`` (commas or spaces between pairs) into edge keys."""
    out = []
    for chunk in spec.replace(",", " ").split():
        parts = chunk.split("-")
        if len(parts) != 2:
            raise _UsageError(f"bad edge {chunk!r}: expected the form u-v")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise _UsageError(f"bad edge {chunk!r}: endpoints must be integers") from None
        out.append(edge_key(u, v))
    if not out:
        raise _UsageError("--edges is empty")
    return tuple(out)


def _sorted_edges(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


class _Report:
    """Accumulates the human-readable lines and the JSON payload of one run."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict = {"command": command}

    def say(self, text: str) -> None:
        self.lines.append(text)

    def emit(self, args) -> None:
        text = (
            json.dumps(self.data, indent=2, sort_keys=True)
            if args.json
            else "\n".join(self.lines)
        )
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as fp:
                fp.write(text + "\n")
        else:
            print(text)


def _edges_or_negative(g: SignedGraph, args) -> tuple[Edge, ...]:
    """The --edges argument, defaulting to the input's negative edge set."""
    if not args.edges:
        return tuple(sorted(g.negative_edges()))
    return _parse_edge_list(args.edges)


# -- commands -------------------------------------------------------------------


def _cmd_balance(g: SignedGraph, args, report: _Report) -> int:
    result = check_balance(g)
    report.data["balanced"] = result.balanced
    if result.balanced:
        assert result.bipartition is not None
        left = sorted(result.bipartition.left.vertices)
        right = sorted(result.bipartition.right.vertices)
        report.data["bipartition"] = {"left": left, "right": right}
        report.data["negative_circle"] = None
        report.say("balanced")
        report.say("left:  " + " ".join(map(str, left)))
        report.say("right: " + " ".join(map(str, right)))
        return EXIT_HOLDS
    assert result.negative_circle is not None
    report.data["bipartition"] = None
    report.data["negative_circle"] = list(result.negative_circle)
    report.say("unbalanced")
    report.say("negative circle: " + " ".join(map(str, result.negative_circle)))
    return EXIT_FAILS


def _cmd_negation_check(g: SignedGraph, args, report: _Report) -> int:
    edges = _edges_or_negative(g, args)
    ok = is_negation_set(g, edges)
    report.data["edges"] = _sorted_edges(edges)
    report.data["negation_set"] = ok
    report.say("negation set" if ok else "not a negation set")
    return EXIT_HOLDS if ok else EXIT_FAILS


def _cmd_minimal(g: SignedGraph, args, report: _Report) -> int:
    edges = _edges_or_negative(g, args)
    ok = is_minimal(g, edges)
    report.data["edges"] = _sorted_edges(edges)
    report.data["minimal"] = ok
    report.say("minimal" if ok else "not minimal: a proper subset is a negation set")
    return EXIT_HOLDS if ok else EXIT_FAILS


def _cmd_certify_minimum(g: SignedGraph, args, report: _Report) -> int:
    edges = _edges_or_negative(g, args)
    cert = triangle_certificate_for_complete(g, edges)
    report.data["edges"] = _sorted_edges(edges)
    if cert is None:
        report.data["certificate"] = None
        report.say("inconclusive: not enough spare vertices for a triangle certificate")
        return EXIT_FAILS
    report.data["certificate"] = [list(tri) for tri in cert]
    report.say(f"minimum certified by {len(cert)} edge-disjoint negative triangles")
    for tri in cert:
        report.say("  triangle: " + " ".join(map(str, tri)))
    return EXIT_HOLDS


def _cmd_certify_unique(g: SignedGraph, args, report: _Report) -> int:
    edges = _edges_or_negative(g, args)
    ok = unique_minimum_by_size(g, edges)
    report.data["edges"] = _sorted_edges(edges)
    report.data["unique_minimum"] = ok
    report.say(
        "unique minimum (size bound 2|b| <= n - 2 holds)"
        if ok
        else "inconclusive: size bound 2|b| <= n - 2 fails"
    )
    return EXIT_HOLDS if ok else EXIT_FAILS


def _cmd_acyclic(g: SignedGraph, args, report: _Report) -> int:
    result = acyclic_negation(g, trace=args.trace)
    edges = sorted(result.negation_set.edges)
    report.data["negation_set"] = _sorted_edges(edges)
    report.data["switching"] = sorted(result.switching.vertices)
    report.data["passes"] = result.stats.passes
    report.say(f"acyclic negation set with {len(edges)} edges")
    report.say("edges: " + " ".join(f"{u}-{v}" for u, v in edges))
    report.say("switching: " + " ".join(map(str, sorted(result.switching.vertices))))
    if args.trace and result.stats.trace is not None:
        report.data["trace"] = [
            {
                "phase": t.phase,
                "label": t.label,
                "switched": list(t.switched),
                "strict": t.strict,
            }
            for t in result.stats.trace
        ]
        report.say(f"trace ({len(result.stats.trace)} rewrites):")
        for t in result.stats.trace:
            report.say(
                f"  [{t.phase}] {t.label}: switched "
                + " ".join(map(str, t.switched))
                + (" (strict)" if t.strict else "")
            )
    return EXIT_HOLDS


def _component_views(g: SignedGraph):
    """Induced subgraphs per connected component, largest host ids last."""
    return [g.induced(comp) for comp in g.connected_components()]


def _cmd_packing(g: SignedGraph, args, report: _Report) -> int:
    if is_balanced(g):
        raise PreconditionError(
            "the graph is balanced: every cut is a negation set, and packing "
            "them is the cut-packing problem, which this solver does not attempt"
        )
    sections = []
    report.data["components"] = sections
    for view in _component_views(g):
        comp = view.graph
        host = sorted(view.to_host)
        if is_balanced(comp):
            sections.append({"vertices": host, "balanced": True})
            report.say(f"component {host}: balanced, no packing number")
            continue
        result = packing_number(comp)
        family = [
            _sorted_edges(view.host_edge(e) for e in member.edges)
            for member in result.family
        ]
        section = {
            "vertices": host,
            "balanced": False,
            "packing_number": result.packing_number,
            "family": family,
            "distance": result.distance,
            "bipartition": None,
        }
        if result.realizing_bipartition is not None:
            b1, b2 = result.realizing_bipartition
            section["bipartition"] = {
                "left": sorted(view.host_vertices(b1.vertices)),
                "right": sorted(view.host_vertices(b2.vertices)),
            }
        sections.append(section)
        report.say(f"component {host}: packing number {result.packing_number}")
        for i, member in enumerate(family):
            name = "E-" if i == 0 else f"N{i - 1}"
            report.say(
                f"  {name}: " + " ".join(f"{u}-{v}" for u, v in member)
            )
        if result.distance is not None:
            report.say(f"  realizing distance: {result.distance}")
    return EXIT_HOLDS


def _cmd_frustration(g: SignedGraph, args, report: _Report) -> int:
    sections = []
    total = 0
    for view in _component_views(g):
        value = oracle.frustration_index(view.graph, max_n=args.max_n)
        total += value
        sections.append(
            {"vertices": sorted(view.to_host), "frustration_index": value}
        )
        report.say(f"component {sorted(view.to_host)}: frustration index {value}")
    report.data["components"] = sections
    report.data["total"] = total
    report.say(f"total: {total}")
    return EXIT_HOLDS


def _oracle_checks(g: SignedGraph, args):
    """Yield (name, outcome, detail) rows; outcome is pass/fail/skip."""
    rng = random.Random(args.seed)

    def row(name, ok, detail=""):
        return (name, "pass" if ok else "fail", detail)

    # Balance is switching invariant.
    base = is_balanced(g)
    invariant = all(
        is_balanced(g.switch([v for v in g.vertices() if rng.random() < 0.5])) == base
        for _ in range(8)
    )
    yield row("balance switching-invariant", invariant)

    if g.n > args.max_n:
        yield ("negation enumeration", "skip", f"n > {args.max_n}")
        return

    sets = oracle.enumerate_negation_sets(g, max_n=args.max_n)
    yield row(
        "E- enumerated as a negation set", frozenset(g.negative_edges()) in sets
    )
    yield row(
        "enumeration agrees with is_negation_set",
        all(is_negation_set(g, s) for s in sets),
    )

    sample = sorted(sets, key=sorted)[:8]
    if g.is_connected():
        ok = all(
            is_minimal(g, s) == oracle.brute_is_minimal(g, s, max_n=args.max_n)
            for s in sample
        )
        yield row("minimality agrees with brute force", ok)
    else:
        yield ("minimality agrees with brute force", "skip", "graph not connected")

    negs = g.negative_edges()
    if g.is_connected() and not base and negs and is_balanced(g.negative_subgraph()):
        mine = packing_number(g).packing_number
        brute = oracle.brute_packing_number(g, max_n=args.max_n)
        yield row("packing number agrees with brute force", mine == brute, f"{mine} vs {brute}")
    else:
        yield ("packing number agrees with brute force", "skip", "needs connected, unbalanced, bipartite E-")

    if g.max_degree() <= 4 and not base:
        try:
            result = acyclic_negation(g)
        except MinusK5Detected:
            yield ("acyclic set at least frustration index", "skip", "antibalanced K5 block")
        else:
            fi = oracle.frustration_index(g, max_n=args.max_n)
            yield row(
                "acyclic set at least frustration index",
                len(result.negation_set) >= fi,
                f"{len(result.negation_set)} >= {fi}",
            )
    else:
        yield ("acyclic set at least frustration index", "skip", "needs unbalanced with max degree 4")


def _cmd_oracle_verify(g: SignedGraph, args, report: _Report) -> int:
    rows = list(_oracle_checks(g, args))
    report.data["checks"] = [
        {"name": name, "outcome": outcome, "detail": detail}
        for name, outcome, detail in rows
    ]
    width = max(len(name) for name, _, _ in rows)
    for name, outcome, detail in rows:
        suffix = f"  ({detail})" if detail else ""
        report.say(f"{name:<{width}}  {outcome}{suffix}")
    failed = any(outcome == "fail" for _, outcome, _ in rows)
    report.say("FAIL" if failed else "OK")
    return EXIT_FAILS if failed else EXIT_HOLDS


def export_dot(g: SignedGraph, annotations: Sequence[frozenset[Edge]] = ()) -> str:
    """DOT text: positive edges solid, negative dashed red.

    ``annotations`` is an ordered family of edge sets; every member gets its
    own color (palette cycling past eight members).
    """
    color_of: dict[Edge, str] = {}
    for i, member in enumerate(annotations):
        color = _DOT_PALETTE[i % len(_DOT_PALETTE)]
        for e in member:
            color_of[edge_key(*e)] = color
    lines = ["graph signed {"]
    for v in g.vertices():
        lines.append(f"  {v};")
    for u, v, s in sorted(g.edges()):
        attrs = ["style=solid"] if s != NEG else ["style=dashed", "color=red"]
        special = color_of.get((u, v))
        if special is not None:
            attrs = [a for a in attrs if not a.startswith("color")]
            attrs.append(f"color={special}")
            attrs.append("penwidth=2")
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines)


def _cmd_export_dot(g: SignedGraph, args, report: _Report) -> int:
    annotations: list[frozenset[Edge]] = []
    if args.packing:
        if not g.is_connected():
            raise PreconditionError("--packing needs a connected graph")
        annotations = [m.edges for m in packing_number(g).family]
    elif args.edges:
        annotations = [frozenset(_parse_edge_list(args.edges))]
    text = export_dot(g, annotations)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fp:
            fp.write(text + "\n")
    else:
        print(text)
    return EXIT_HOLDS


_COMMANDS = {
    "balance": _cmd_balance,
    "negation-check": _cmd_negation_check,
    "minimal": _cmd_minimal,
    "certify-minimum": _cmd_certify_minimum,
    "certify-unique": _cmd_certify_unique,
    "acyclic": _cmd_acyclic,
    "packing": _cmd_packing,
    "frustration": _cmd_frustration,
    "oracle-verify": _cmd_oracle_verify,
    "export-dot": _cmd_export_dot,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negset",
        description="Balance, negation sets, minimality, acyclic construction, "
        "and packing numbers of signed graphs (.sg files).",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    specs = {
        "balance": "decide balance; print the bipartition or a negative circle",
        "negation-check": "test whether --edges is a negation set",
        "minimal": "test whether --edges is a minimal negation set",
        "certify-minimum": "build a disjoint-triangle minimum certificate (complete graphs)",
        "certify-unique": "size-bound uniqueness test (complete graphs)",
        "acyclic": "construct an acyclic negation set (max degree 4)",
        "packing": "exact packing number with a witnessing family",
        "frustration": "brute-force frustration index (small graphs)",
        "oracle-verify": "cross-check fast paths against brute force on this input",
        "export-dot": "emit DOT (positive solid, negative dashed red)",
    }
    for name, help_text in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help=".sg input file")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--output", "-o", help="write the report to a file")
        if name in {"negation-check", "minimal", "certify-minimum", "certify-unique", "export-dot"}:
            p.add_argument(
                "--edges",
                help="edge list, e.g. 0-1,2-3 (default: the negative edges)",
            )
        if name == "acyclic":
            p.add_argument("--trace", action="store_true", help="log every rewrite")
        if name in {"frustration", "oracle-verify"}:
            p.add_argument(
                "--max-n", type=int, default=oracle.DEFAULT_MAX_N,
                help="largest vertex count the oracle will enumerate",
            )
        if name == "oracle-verify":
            p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        if name == "export-dot":
            p.add_argument(
                "--packing", action="store_true",
                help="color the packing family, one color per member",
            )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        g = load_path(args.path)
    except SgParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = _Report(args.command)
    try:
        code = _COMMANDS[args.command](g, args, report)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, IterationBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        # e.g. --edges naming a pair that is not an edge of the graph
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinusK5Detected as exc:
        print(
            "antibalanced K5 block on vertices "
            + " ".join(map(str, sorted(exc.vertices))),
            file=sys.stderr,
        )
        return EXIT_MINUS_K5
    if args.command != "export-dot":
        report.emit(args)
    return code


if __name__ == "__main__":
    sys.exit(main())
