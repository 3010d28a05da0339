"""Command-line interface.

Subcommands: ``analyze``, ``check``, ``construct``, ``search`` and
``admissible``.  All rationals cross the boundary as ``num/den`` strings and
all output is JSON on stdout.  Exit codes: 0 success (verdict true,
construction succeeded, analysis completed), 1 verdict false, 2 malformed
input, 3 infeasible profile, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .admissible import (
    TargetProfile,
    construct_hr_admissible,
    construct_m_admissible,
    existence_condition,
    realized_deviation,
)
from .errors import (
    ConstructionFailed,
    InfeasibleProfile,
    RccsError,
    SearchBudgetExceeded,
)
from .extension import SystemModel, extend_with_rccs
from .models import (
    check_conjunctive_common_cause,
    check_generalised_common_cause,
    check_ghr_rccs,
    check_gm_rccs,
    check_hr_rccs,
    check_m_rccs,
)
from .rational import format_ratio, parse_flag_ratio
from .search import SearchQuery, find_rccs, sample_admissible_search
from .space import Partition, correlation, deviation, prob
from .spacefile import dump_json, extension_to_dict, load_space

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_MALFORMED = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4


def _ratio_flag(text: str) -> Fraction:
    try:
        return parse_flag_ratio(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _pair_flag(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError("expected two event names: --pair A,B")
    return parts[0], parts[1]


def _sizes_flag(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("expected a range: --sizes LO..HI")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rccs",
        description="Exact analysis, checking, construction and search of "
        "common cause systems over finite probability spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space_pair(p: argparse.ArgumentParser) -> None:
        p.add_argument("--space", required=True, help="path to a space file")
        p.add_argument("--pair", required=True, type=_pair_flag, metavar="A,B",
                       help="names of the two effect events")

    p = sub.add_parser("analyze", help="marginals, correlation, deviation, existence condition")
    add_space_pair(p)
    p.add_argument("--epsilon", type=_ratio_flag, default=Fraction(0), metavar="Q",
                   help="expected correlation (default 0)")

    p = sub.add_parser("check", help="validate a candidate common cause (system)")
    add_space_pair(p)
    p.add_argument("--model", required=True, choices=["fork", "gcc", "hr", "ghr", "m", "gm"])
    p.add_argument("--epsilon", type=_ratio_flag, default=Fraction(0), metavar="Q")
    p.add_argument("--partition", required=True, metavar="NAME[,NAME...]",
                   help="cause event (fork/gcc), or cell events; a single name "
                   "for a partition model means {C, complement}")

    p = sub.add_parser("construct", help="build an extension hosting a system")
    add_space_pair(p)
    p.add_argument("--model", required=True, choices=["ghr", "gm"])
    p.add_argument("--epsilon", type=_ratio_flag, default=Fraction(0), metavar="Q")
    p.add_argument("--size", required=True, type=int, metavar="N")
    p.add_argument("--out", required=True, help="where to write the extension space file")

    p = sub.add_parser("search", help="exhaustively enumerate accepting partitions")
    add_space_pair(p)
    p.add_argument("--model", required=True, choices=["hr", "ghr", "m", "gm"])
    p.add_argument("--epsilon", type=_ratio_flag, default=Fraction(0), metavar="Q")
    p.add_argument("--sizes", required=True, type=_sizes_flag, metavar="LO..HI")

    p = sub.add_parser("admissible", help="generate (or sample) admissible numbers for a profile")
    p.add_argument("--a", required=True, type=_ratio_flag, metavar="Q", help="p(A)")
    p.add_argument("--b", required=True, type=_ratio_flag, metavar="Q", help="p(B)")
    p.add_argument("--epsilon", type=_ratio_flag, default=Fraction(0), metavar="Q")
    p.add_argument("--delta", required=True, type=_ratio_flag, metavar="Q",
                   help="target deviation (must be positive)")
    p.add_argument("--size", required=True, type=int, metavar="N")
    p.add_argument("--model", default="hr", choices=["hr", "m"])
    p.add_argument("--sample", action="store_true",
                   help="randomized search instead of the deterministic generator")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)

    return parser


class UnknownEventName(RccsError):
    def __init__(self, name: str, path: str) -> None:
        super().__init__(f"event {name!r} is not defined in {path}")


def _events_for(names, events, path):
    out = []
    for name in names:
        if name not in events:
            raise UnknownEventName(name, path)
        out.append(events[name])
    return out


def _cmd_analyze(args) -> int:
    space, events = load_space(args.space)
    a, b = _events_for(args.pair, events, args.space)
    corr = correlation(space, a, b)
    dev = deviation(space, a, b, args.epsilon)
    document = {
        "prob_A": format_ratio(prob(space, a)),
        "prob_B": format_ratio(prob(space, b)),
        "correlation": format_ratio(corr),
        "epsilon": format_ratio(args.epsilon),
        "deviation": format_ratio(dev),
        "existence_condition": bool(args.epsilon + prob(space, a) * prob(space, b) > 0),
    }
    sys.stdout.write(dump_json(document))
    return EXIT_OK


def _cmd_check(args) -> int:
    space, events = load_space(args.space)
    a, b = _events_for(args.pair, events, args.space)
    names = args.partition.split(",")
    cells = _events_for(names, events, args.space)
    if args.model in {"fork", "gcc"}:
        if len(cells) != 1:
            raise RccsError("fork/gcc checks take exactly one cause event in --partition")
        c = cells[0]
        if args.model == "fork":
            report = check_conjunctive_common_cause(space, a, b, c)
        else:
            report = check_generalised_common_cause(space, a, b, c, args.epsilon)
    else:
        partition = Partition.from_event(cells[0]) if len(cells) == 1 else Partition(space, tuple(cells))
        if args.model == "hr":
            report = check_hr_rccs(space, a, b, partition)
        elif args.model == "ghr":
            report = check_ghr_rccs(space, a, b, partition, args.epsilon)
        elif args.model == "m":
            report = check_m_rccs(space, a, b, partition)
        else:
            report = check_gm_rccs(space, a, b, partition, args.epsilon)
    sys.stdout.write(dump_json(report.to_dict()))
    return EXIT_OK if report.verdict else EXIT_VERDICT_FALSE


def _cmd_construct(args) -> int:
    space, events = load_space(args.space)
    a_name, b_name = args.pair
    a, b = _events_for(args.pair, events, args.space)
    result = extend_with_rccs(space, a, b, args.epsilon, args.size, SystemModel(args.model))
    document = extension_to_dict(result, a_name, b_name, a, b)
    with open(args.out, "w") as handle:
        handle.write(dump_json(document))
    summary = {
        "model": result.model.value,
        "size": len(result.rccs.blocks),
        "epsilon": format_ratio(result.expected),
        "deviation": format_ratio(deviation(space, a, b, args.epsilon)),
        "source_atoms": len(space),
        "target_atoms": len(result.target),
        "out": args.out,
    }
    sys.stdout.write(dump_json(summary))
    return EXIT_OK


def _cmd_search(args) -> int:
    space, events = load_space(args.space)
    a, b = _events_for(args.pair, events, args.space)
    query = SearchQuery(a, b, args.epsilon, args.model, args.sizes)
    report = find_rccs(space, query)
    sys.stdout.write(dump_json(report.to_dict()))
    return EXIT_OK


def _cmd_admissible(args) -> int:
    profile = TargetProfile(args.a, args.b, args.epsilon, args.delta, args.size)
    if args.sample:
        found = sample_admissible_search(profile, args.trials, args.seed, args.model)
        document = {
            "profile": profile.to_dict(),
            "model": args.model,
            "trials": args.trials,
            "seed": args.seed,
            "found": None if found is None else found.to_dicts(),
        }
        sys.stdout.write(dump_json(document))
        return EXIT_OK
    if args.model == "hr":
        result = construct_hr_admissible(profile)
    else:
        result = construct_m_admissible(profile)
    document = {
        "profile": profile.to_dict(),
        "model": args.model,
        "existence_condition": existence_condition(profile),
        "realized_deviation": format_ratio(realized_deviation(result, profile)),
        "entries": result.to_dicts(),
    }
    sys.stdout.write(dump_json(document))
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "check": _cmd_check,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "admissible": _cmd_admissible,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InfeasibleProfile as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (SearchBudgetExceeded, ConstructionFailed) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (RccsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
