"""Command-line interface.

Exit codes: 0 for a computed result (including boolean "false" results),
2 for input errors (bad syntax, non-cofinite generators, usage), 3 for
precondition violations (operation not defined for the inputs), 4 for
resource ceilings (search or node limits exceeded). Output is deterministic
byte-for-byte for equal inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .admission import DEFAULT_SEARCH_CEILING, Witness, admits, violating_sequence
from .bounds import bound_report
from .errors import InputError, PreconditionError, ResourceLimit
from .oracle import enumerate_semigroups, naive_admits
from .patterns import admissible_multiplicities, classify
from .textio import (
    format_semigroup,
    parse_pattern,
    parse_semigroup,
    tree_to_dot,
    tree_to_json,
)
from .variety import (
    DEFAULT_NODE_CEILING,
    children,
    is_variety_finite,
    minimal_v_generating_system,
    tree_enumerate,
    v_closure,
)


def _witness_line(witness: Witness) -> str:
    seq = ",".join(str(s) for s in witness.sequence)
    return f"s=({seq}) -> {witness.value}"


def _emit(fmt: str, lines: Sequence[str], payload) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        for line in lines:
            sys.stdout.write(line + "\n")


def _cmd_classify(args) -> int:
    verdict = classify(parse_pattern(args.pattern))
    _emit(args.format, [verdict.value], {"class": verdict.value})
    return 0


def _cmd_multiplicities(args) -> int:
    rng = admissible_multiplicities(parse_pattern(args.pattern))
    if rng.upper is None:
        text = f"m >= {rng.lower}"
    elif rng.upper < rng.lower:
        text = "none"
    else:
        text = f"{rng.lower} <= m <= {rng.upper}"
    _emit(args.format, [text], {"lower": rng.lower, "upper": rng.upper})
    return 0


def _cmd_admits(args) -> int:
    pattern = parse_pattern(args.pattern)
    sg = parse_semigroup(args.semigroup)
    witness = violating_sequence(sg, pattern, ceiling=args.ceiling)
    if witness is None:
        _emit(args.format, ["true"], {"admits": True, "witness": None})
    else:
        _emit(
            args.format,
            ["false", _witness_line(witness)],
            {
                "admits": False,
                "witness": {"sequence": list(witness.sequence), "value": witness.value},
            },
        )
    return 0


def _cmd_witness(args) -> int:
    pattern = parse_pattern(args.pattern)
    sg = parse_semigroup(args.semigroup)
    witness = violating_sequence(sg, pattern, ceiling=args.ceiling)
    if witness is None:
        _emit(args.format, ["none"], {"witness": None})
    else:
        _emit(
            args.format,
            [_witness_line(witness)],
            {"witness": {"sequence": list(witness.sequence), "value": witness.value}},
        )
    return 0


def _cmd_children(args) -> int:
    pattern = parse_pattern(args.pattern)
    sg = parse_semigroup(args.semigroup)
    kids = children(sg, pattern, ceiling=args.ceiling)
    _emit(
        args.format,
        [format_semigroup(k) for k in kids],
        {"children": [list(k.minimal_generators()) for k in kids]},
    )
    return 0


def _cmd_tree(args) -> int:
    if args.max_genus is not None and args.exhaustive:
        raise InputError("--max-genus and --exhaustive are mutually exclusive")
    pattern = parse_pattern(args.pattern)
    tree = tree_enumerate(
        pattern,
        args.multiplicity,
        args.max_genus,
        node_ceiling=args.ceiling,
    )
    if args.format == "json":
        sys.stdout.write(tree_to_json(tree) + "\n")
    elif args.format == "dot":
        sys.stdout.write(tree_to_dot(tree))
    else:
        for i, node in enumerate(tree.nodes):
            parent = "-" if node.parent is None else str(node.parent)
            removed = "-" if node.removed is None else str(node.removed)
            sys.stdout.write(
                f"{i} {parent} {removed} {format_semigroup(node.semigroup)}\n"
            )
    return 0


def _cmd_closure(args) -> int:
    pattern = parse_pattern(args.pattern)
    if args.elements:
        from .textio import _parse_int_list

        elements = _parse_int_list(args.elements, "element list")
    else:
        elements = []
    rep = v_closure(pattern, args.multiplicity, elements, ceiling=args.ceiling)
    _emit(
        args.format,
        [f"scale={rep.scale}", f"core={format_semigroup(rep.core)}"],
        {"scale": rep.scale, "core_gens": list(rep.core.minimal_generators())},
    )
    return 0


def _cmd_mingen(args) -> int:
    pattern = parse_pattern(args.pattern)
    sg = parse_semigroup(args.semigroup)
    system = minimal_v_generating_system(
        sg, pattern, full_sweep=args.full_sweep, ceiling=args.ceiling
    )
    text = ",".join(str(x) for x in system) if system else "none"
    _emit(args.format, [text], {"generators": list(system)})
    return 0


def _cmd_finite(args) -> int:
    verdict = is_variety_finite(parse_pattern(args.pattern), args.multiplicity)
    _emit(args.format, ["true" if verdict else "false"], {"finite": verdict})
    return 0


def _cmd_bound(args) -> int:
    report = bound_report(parse_semigroup(args.semigroup), args.q)
    failing = "none" if report.failing_generator is None else str(report.failing_generator)
    lines = [
        f"gm={report.gm}",
        f"lewittes={report.lewittes}",
        f"br={report.br}",
        f"coincide_gm_lewittes={'true' if report.coincide_gm_lewittes else 'false'}",
        f"coincide_br={'true' if report.coincide_br else 'false'}",
        f"failing_generator={failing}",
    ]
    payload = {
        "gm": report.gm,
        "lewittes": report.lewittes,
        "br": report.br,
        "coincide_gm_lewittes": report.coincide_gm_lewittes,
        "coincide_br": report.coincide_br,
        "failing_generator": report.failing_generator,
    }
    _emit(args.format, lines, payload)
    return 0


def _sorted_for_output(sgs):
    return sorted(sgs, key=lambda s: (s.genus, s.minimal_generators()))


def _cmd_oracle_counts(args) -> int:
    sgs = enumerate_semigroups(args.max_genus)
    counts = [0] * (args.max_genus + 1)
    for sg in sgs:
        counts[sg.genus] += 1
    lines = [f"{g} {c}" for g, c in enumerate(counts)]
    _emit(args.format, lines, {"counts": counts})
    return 0


def _cmd_oracle_enumerate(args) -> int:
    sgs = _sorted_for_output(enumerate_semigroups(args.max_genus, args.multiplicity))
    _emit(
        args.format,
        [format_semigroup(sg) for sg in sgs],
        {"semigroups": [list(sg.minimal_generators()) for sg in sgs]},
    )
    return 0


def _cmd_oracle_naive_admits(args) -> int:
    pattern = parse_pattern(args.pattern)
    sg = parse_semigroup(args.semigroup)
    verdict = naive_admits(sg, pattern, args.bound)
    _emit(args.format, ["true" if verdict else "false"], {"admits": verdict})
    return 0


def _add_format(parser, *, dot: bool = False) -> None:
    choices = ["text", "json", "dot"] if dot else ["text", "json"]
    parser.add_argument("--format", choices=choices, default="text")


def _add_search_ceiling(parser) -> None:
    parser.add_argument(
        "--ceiling",
        type=int,
        default=DEFAULT_SEARCH_CEILING,
        help="abort the admission search beyond this many candidate sequences",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patsemi",
        description="Patterns on numerical semigroups: admission, varieties, bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="trichotomy class of a pattern")
    p.add_argument("pattern")
    _add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("multiplicities", help="admissible multiplicities of a pattern")
    p.add_argument("pattern")
    _add_format(p)
    p.set_defaults(func=_cmd_multiplicities)

    p = sub.add_parser("admits", help="does a semigroup admit a pattern")
    p.add_argument("pattern")
    p.add_argument("semigroup")
    _add_search_ceiling(p)
    _add_format(p)
    p.set_defaults(func=_cmd_admits)

    p = sub.add_parser("witness", help="lexicographically first violating sequence")
    p.add_argument("pattern")
    p.add_argument("semigroup")
    _add_search_ceiling(p)
    _add_format(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("children", help="semigroups directly below in the variety tree")
    p.add_argument("pattern")
    p.add_argument("semigroup")
    _add_search_ceiling(p)
    _add_format(p)
    p.set_defaults(func=_cmd_children)

    p = sub.add_parser("tree", help="enumerate the variety tree")
    p.add_argument("pattern")
    p.add_argument("-m", "--multiplicity", type=int, required=True)
    p.add_argument("--max-genus", type=int, default=None)
    p.add_argument(
        "--exhaustive",
        action="store_true",
        help="enumerate the whole (finite) variety; this is the default",
    )
    p.add_argument(
        "--ceiling",
        type=int,
        default=DEFAULT_NODE_CEILING,
        help="abort after this many tree nodes",
    )
    _add_format(p, dot=True)
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("closure", help="pattern closure of a set of elements")
    p.add_argument("pattern")
    p.add_argument("-m", "--multiplicity", type=int, required=True)
    p.add_argument(
        "--elements",
        default="",
        help="comma-separated nonnegative integers, e.g. --elements 5,6,7,8",
    )
    _add_search_ceiling(p)
    _add_format(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("mingen", help="minimal generating system under pattern closure")
    p.add_argument("pattern")
    p.add_argument("semigroup")
    p.add_argument(
        "--full-sweep",
        action="store_true",
        help="cross-check by sweeping every member in the decisive range",
    )
    _add_search_ceiling(p)
    _add_format(p)
    p.set_defaults(func=_cmd_mingen)

    p = sub.add_parser("finite", help="is the variety at this multiplicity finite")
    p.add_argument("pattern")
    p.add_argument("-m", "--multiplicity", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_finite)

    p = sub.add_parser("bound", help="place bounds for a semigroup at q")
    p.add_argument("semigroup")
    p.add_argument("q", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("oracle-check", help="slow reference computations")
    osub = p.add_subparsers(dest="oracle_command", required=True)

    o = osub.add_parser("counts", help="semigroup counts by genus")
    o.add_argument("--max-genus", type=int, required=True)
    _add_format(o)
    o.set_defaults(func=_cmd_oracle_counts)

    o = osub.add_parser("enumerate", help="all semigroups up to a genus")
    o.add_argument("--max-genus", type=int, required=True)
    o.add_argument("-m", "--multiplicity", type=int, default=None)
    _add_format(o)
    o.set_defaults(func=_cmd_oracle_enumerate)

    o = osub.add_parser("naive-admits", help="admission by direct enumeration")
    o.add_argument("pattern")
    o.add_argument("semigroup")
    o.add_argument("--bound", type=int, required=True)
    _add_format(o)
    o.set_defaults(func=_cmd_oracle_naive_admits)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors and 0 for --help
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
