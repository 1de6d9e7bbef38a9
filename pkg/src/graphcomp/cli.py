"""Command-line front end: counting, enumeration, families, tables, verification.

Exit codes: 0 success, 1 domain error (bad graph, cap exceeded), 2 usage
error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import formulas, harness
from .counting import count_compositions, enumerate_compositions
from .graphs import FAMILY_NAMES, build_family, graph_to_json, load_graph


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcomp",
        description="Exact counting and enumeration of graph compositions "
                    "(vertex partitions into connected blocks).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print the composition count of a graph")
    source = count.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", metavar="FILE", help="graph file to count")
    source.add_argument("--family", choices=FAMILY_NAMES, help="named family to count")
    count.add_argument("--format", choices=["json", "edgelist"], dest="fmt",
                       help="graph file format (default: by suffix)")
    count.add_argument("--n", type=int, help="family size")
    count.add_argument("--m", type=int, help="first part size for kmn")
    count.add_argument("--parents", help="comma-separated tree parent list")
    count.add_argument("--method", choices=["oracle", "formula"],
                       help="force the engine or the closed form")

    enumerate_ = sub.add_parser("enumerate", help="print one composition per line")
    enumerate_.add_argument("--graph", metavar="FILE", required=True)
    enumerate_.add_argument("--format", choices=["json", "edgelist"], dest="fmt")

    family = sub.add_parser("family", help="print a family graph as JSON")
    family.add_argument("--name", choices=FAMILY_NAMES, required=True)
    family.add_argument("--n", type=int)
    family.add_argument("--m", type=int)
    family.add_argument("--parents")

    table = sub.add_parser("table", help="print a count table as TSV")
    table.add_argument("--kmn", action="store_true", required=True,
                       help="complete bipartite table")
    table.add_argument("--max-m", type=int, required=True)
    table.add_argument("--max-n", type=int, required=True)

    coeffs = sub.add_parser("coeffs", help="print bipartite coefficient rows")
    coeffs.add_argument("--max-m", type=int, required=True)

    lyndon = sub.add_parser("lyndon", help="print Lyndon compositions or their count")
    lyndon.add_argument("--n", type=int, required=True)
    lyndon.add_argument("--count-only", action="store_true")

    verify = sub.add_parser("verify", help="run the verification harness")
    verify.add_argument("--suite", choices=["all", "families", "kmn", "identities", "glue"],
                        default="all")
    return parser


def _parse_parents(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"bad parent list {text!r}; expected comma-separated integers") from None


def _build_from_args(args) -> "Graph":
    parents = _parse_parents(args.parents) if args.parents is not None else None
    return build_family(args.family if hasattr(args, "family") and args.family else args.name,
                        n=args.n, m=args.m, parents=parents)


def _family_formula(name: str, n, m, parents) -> int | None:
    """Closed-form count for a family, or None if it has none."""
    if name in ("path", "complete", "star", "complete-minus-edge", "cycle"):
        if n is None:
            raise ValueError(f"{name} requires --n")
        return formulas.closed_form_count(name, n)
    if name == "tree":
        if n is None and parents is None:
            raise ValueError("tree requires --n or --parents")
        size = n if n is not None else len(parents) + 1
        return formulas.closed_form_count("tree", size)
    if name == "wheel":
        if n is None:
            raise ValueError("wheel requires --n")
        return formulas.wheel_count_formula(n) if n >= 2 else 1
    if name == "ladder":
        if n is None:
            raise ValueError("ladder requires --n")
        return formulas.ladder_count(n)
    if name == "kmn":
        if m is None or n is None:
            raise ValueError("kmn requires --m and --n")
        return formulas.kmn_count(m, n)
    return None  # petersen


def _cmd_count(args) -> int:
    if args.graph is not None:
        g = load_graph(args.graph, args.fmt)
        print(count_compositions(g).value)
        return 0
    parents = _parse_parents(args.parents) if args.parents is not None else None
    method = args.method
    if method is None:
        method = "formula" if _family_formula(args.family, args.n, args.m, parents) is not None else "oracle"
    if method == "formula":
        value = _family_formula(args.family, args.n, args.m, parents)
        if value is None:
            raise ValueError(f"family {args.family!r} has no closed form; use --method oracle")
        print(value)
        return 0
    g = build_family(args.family, n=args.n, m=args.m, parents=parents)
    print(count_compositions(g).value)
    return 0


def _cmd_enumerate(args) -> int:
    g = load_graph(args.graph, args.fmt)
    total = 0
    for composition in enumerate_compositions(g):
        print(composition)
        total += 1
    print(f"total {total}")
    return 0


def _cmd_family(args) -> int:
    parents = _parse_parents(args.parents) if args.parents is not None else None
    g = build_family(args.name, n=args.n, m=args.m, parents=parents)
    print(graph_to_json(g))
    return 0


def _cmd_table(args) -> int:
    print(harness.format_kmn_table(harness.generate_kmn_table(args.max_m, args.max_n)))
    return 0


def _cmd_coeffs(args) -> int:
    if args.max_m < 0:
        raise ValueError("--max-m must be >= 0")
    for m in range(args.max_m + 1):
        row = formulas.kmn_coefficient_row(m)
        print("\t".join([str(m)] + [str(value) for value in row.entries]))
    return 0


def _cmd_lyndon(args) -> int:
    if args.count_only:
        print(formulas.lyndon_count(args.n))
        return 0
    for parts in formulas.lyndon_compositions(args.n):
        print(",".join(str(p) for p in parts))
    return 0


_SUITES = {
    "all": lambda: harness.run_all(),
    "families": lambda: harness.run_families(),
    "kmn": lambda: _kmn_suite(),
    "identities": lambda: harness.verify_sequence_identities(16),
    "glue": lambda: harness.verify_glue_theorems(harness.default_glue_pairs()),
}


def _kmn_suite():
    report = harness.verify_kmn_agreement()
    report.extend(harness.verify_coefficient_properties(15))
    return report


def _cmd_verify(args) -> int:
    report = _SUITES[args.suite]()
    print(report)
    return 0 if report.ok else 3


_DISPATCH = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "family": _cmd_family,
    "table": _cmd_table,
    "coeffs": _cmd_coeffs,
    "lyndon": _cmd_lyndon,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
