"""Command-line interface.

Exit codes: 0 success, 1 a verification found a violated property,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import graph as gr
from .chardeg import cd_group, product_degree_set
from .family import (
    DEFAULT_EXACT_CAP,
    DEFAULT_THRESHOLD,
    FamilyValidityError,
    IncompatibleFamilyError,
    REFERENCE_FAMILY_SIZE,
    PackingCapError,
    build_gpi_graph,
    family_report,
    find_candidates,
    pack_exact,
    pack_greedy,
    signatures_for,
)
from .verifier import check_bound, scan_psl2


class UsageError(Exception):
    pass


def _csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _table(rows: Sequence[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _ints(values) -> str:
    return " ".join(str(v) for v in sorted(values)) or "-"


# ---------------------------------------------------------------------------
# inputs


def _add_format(p: argparse.ArgumentParser, choices=("json", "table"), default="table") -> None:
    p.add_argument("--format", choices=choices, default=default)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source (pick one)")
    src.add_argument("--degrees", type=_csv, help="degree set, e.g. 1,3,4,5")
    src.add_argument("--q", type=int, help="field size for --group")
    src.add_argument("--group", choices=("psl2", "sl2"), default="psl2")
    src.add_argument("--graph-file", type=Path, help="JSON graph document")
    src.add_argument("--primes", type=_csv, help="field sizes of a compatible family")
    src.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)


def _load_graph(args) -> gr.AnyGraph:
    chosen = [x for x in (args.degrees, args.q, args.graph_file, args.primes) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --degrees, --q, --graph-file, --primes")
    if args.degrees is not None:
        return gr.build_graph(args.degrees)
    if args.q is not None:
        return gr.build_graph(cd_group(args.group, args.q))
    if args.graph_file is not None:
        try:
            return gr.from_json(args.graph_file.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read {args.graph_file}: {exc}")
    return build_gpi_graph(signatures_for(args.primes), args.threshold)


def _candidate_pool(args):
    if args.primes is not None:
        return signatures_for(args.primes)
    if args.limit is None:
        raise UsageError("give --limit or --primes")
    return find_candidates(args.limit, args.prime_powers)


# ---------------------------------------------------------------------------
# subcommands


def cmd_degrees(args) -> int:
    if (args.q is None) == (args.primes is None):
        raise UsageError("give exactly one of --q and --primes")
    if args.q is not None:
        degrees = cd_group(args.group, args.q)
    else:
        degrees = (1,)
        for q in args.primes:
            degrees = product_degree_set(degrees, cd_group(args.group, q))
    if args.format == "json":
        print(_dump({"degrees": list(degrees)}))
    else:
        print(_ints(degrees))
    return 0


def cmd_graph(args) -> int:
    g = _load_graph(args)
    if args.format == "json":
        print(gr.to_json(g))
    elif args.format == "dot":
        sys.stdout.write(gr.to_dot(g))
    else:
        comps = gr.connected_components(g)
        print(_table([
            ("vertices", _ints(g.vertices)),
            ("edges", " ".join(f"{p}-{q}" for p, q in g.edges()) or "-"),
            ("components", " | ".join(_ints(c) for c in comps) or "-"),
        ]))
    return 0


def cmd_clique(args) -> int:
    g = _load_graph(args)
    omega, witness = gr.max_clique(g)
    if args.format == "json":
        print(_dump({"omega": omega, "witness": sorted(witness)}))
    else:
        print(_table([("omega", omega), ("witness", _ints(witness))]))
    return 0


def cmd_cover(args) -> int:
    g = _load_graph(args)
    split = gr.is_bipartite(gr.complement(g))
    if split:
        doc = {"cover": {"part_a": sorted(split.part_a), "part_b": sorted(split.part_b)}}
    else:
        doc = {"cover": None, "odd_cycle": list(split.cycle)}
    if args.format == "json":
        print(_dump(doc))
    elif split:
        print(_table([("part_a", _ints(split.part_a)), ("part_b", _ints(split.part_b))]))
    else:
        print(_table([
            ("cover", "none"),
            ("odd cycle in complement", " ".join(map(str, split.cycle))),
        ]))
    return 0


def cmd_candidates(args) -> int:
    cands = find_candidates(args.limit, args.prime_powers)
    if args.format == "json":
        print(_dump({
            "limit": args.limit,
            "count": len(cands),
            "candidates": [s.to_dict() for s in cands],
        }))
    else:
        print(f"{len(cands)} candidates up to {args.limit}")
        for s in cands:
            print(f"q={s.q:<10} u={s.u:<10} alpha={s.alpha}  p-={s.p_minus:<10} p+={s.p_plus}")
    return 0


def cmd_pack(args) -> int:
    pool = _candidate_pool(args)
    if args.strategy == "greedy":
        fam = pack_greedy(pool)
    else:
        fam = pack_exact(pool, args.cap)
    n = len(fam)
    ratio = Fraction(3 * n + 2, n + 2)
    doc = {
        "strategy": args.strategy,
        "candidates": len(pool),
        "size": n,
        "reference_size": REFERENCE_FAMILY_SIZE,
        "ratio": {"num": ratio.numerator, "den": ratio.denominator},
        "family": [s.to_dict() for s in fam],
    }
    if args.format == "json":
        print(_dump(doc))
    else:
        print(_table([
            ("strategy", args.strategy),
            ("candidates", len(pool)),
            ("family size", n),
            ("reference size", REFERENCE_FAMILY_SIZE),
            ("|V|/omega", f"{ratio.numerator}/{ratio.denominator} = {float(ratio):.6f}"),
        ]))
    return 0


def cmd_gpi(args) -> int:
    if args.primes is not None:
        fam = signatures_for(args.primes)
    elif args.limit is not None:
        fam = pack_greedy(find_candidates(args.limit, args.prime_powers))
    else:
        raise UsageError("give --primes or --limit")
    try:
        report = family_report(fam, args.threshold)
    except FamilyValidityError as exc:
        print(f"family check failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(_dump(report.to_dict()))
    else:
        ratio = report.ratio
        print(_table([
            ("n", report.n),
            ("vertices", report.vertex_count),
            ("omega", report.clique_number),
            ("ratio", f"{ratio.numerator}/{ratio.denominator} = {float(ratio):.6f}"),
            ("|V| <= 2w+1", report.bound_2w1_holds),
            ("|V| <= 3w-4", report.bound_3w4_holds),
            ("family", " ".join(str(s.q) for s in report.family)),
        ]))
    return 0


def cmd_verify_bound(args) -> int:
    report = check_bound(_load_graph(args))
    if args.format == "json":
        print(_dump(report.to_dict()))
    else:
        print(_table([(k, v) for k, v in report.to_dict().items()]))
    return 0 if report.holds else 1


def cmd_scan_psl2(args) -> int:
    summary = scan_psl2(args.limit)
    if args.format == "json":
        print(_dump(summary.to_dict()))
    else:
        print(f"checked {summary.checked} prime powers up to {args.limit}, "
              f"{len(summary.failures)} failures")
        for q, clause in sorted(summary.failures):
            print(f"  q={q}: {clause}")
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degreegraph",
        description="Character degree graphs of PSL(2,q), SL(2,q) and their direct products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degrees", help="character degree set")
    p.add_argument("--group", choices=("psl2", "sl2"), default="psl2")
    p.add_argument("--q", type=int)
    p.add_argument("--primes", type=_csv, help="field sizes; prints the direct-product degree set")
    _add_format(p, default="json")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("graph", help="degree graph")
    _add_graph_input(p)
    _add_format(p, ("json", "dot", "table"))
    p.set_defaults(func=cmd_graph)

    for name, func, help_ in (
        ("clique", cmd_clique, "exact clique number"),
        ("cover", cmd_cover, "cover by two cliques"),
        ("verify-bound", cmd_verify_bound, "check |V| <= max(2w+1, 3w-4)"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_graph_input(p)
        _add_format(p)
        p.set_defaults(func=func)

    p = sub.add_parser("candidates", help="scan for family members")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--prime-powers", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("pack", help="pack candidates into a compatible family")
    p.add_argument("--limit", type=int)
    p.add_argument("--primes", type=_csv)
    p.add_argument("--prime-powers", action="store_true")
    p.add_argument("--strategy", choices=("greedy", "exact"), default="greedy")
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP)
    _add_format(p)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("gpi", help="report on the direct product over a family")
    p.add_argument("--primes", type=_csv)
    p.add_argument("--limit", type=int, help="use the greedy family of candidates up to LIMIT")
    p.add_argument("--prime-powers", action="store_true")
    p.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)
    _add_format(p)
    p.set_defaults(func=cmd_gpi)

    p = sub.add_parser("scan-psl2", help="check every prime power up to LIMIT")
    p.add_argument("--limit", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_scan_psl2)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, IncompatibleFamilyError, PackingCapError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
