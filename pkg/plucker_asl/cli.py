"""Command line entry point: ``plucker-asl``.

    plucker-asl verify gb-quadrics --order revlex --n 5
    plucker-asl count perfect --n 5
    plucker-asl show join-irreducibles --system "[1,5][2,6][4,7]" --n 7
    plucker-asl run-all --max-n 6 --format json

Exit codes: 0 when every check passes, 1 when one fails, 2 for usage
errors, 3 when a budget ran out (the partial report is still printed).
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

import structlog

from plucker_asl import graphs, lattice
from plucker_asl.checks import CHECKS, ORACLE, Runner, plan_run_all
from plucker_asl.config import (
    DEFAULT_SEED,
    ENV_SPAIR_BUDGET,
    get_settings,
    load_config,
    resolve_config,
)
from plucker_asl.exceptions import BudgetExceeded, PluckerAslError
from plucker_asl.lattice import RankClause, Sublattice
from plucker_asl.textformat.builder import parse_pair_file

SLOG = structlog.get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

VERIFY_TARGETS = sorted(name for name in CHECKS if not name.startswith("count-"))
COUNT_TARGETS = ("perfect", "gorenstein", "arcs")
SHOW_TARGETS = ("fundamental-chain", "join-irreducibles", "graph")


class UsageError(Exception):
    pass


def configure_logging(verbose: bool = False):
    """Send structlog output to stderr so reports on stdout stay clean."""
    level = logging.DEBUG if verbose else logging.WARNING
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of points")
    common.add_argument(
        "--seed",
        type=int,
        help=f"seed for linear extensions and sampled graphs (default {DEFAULT_SEED})",
    )
    common.add_argument(
        "--samples", type=int, help="sampled graphs per n above the exhaustive range"
    )
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    common.add_argument("--config", help="YAML configuration file")
    common.add_argument("--jobs", type=int, help="worker threads for independent checks")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")
    common.add_argument(
        "--strict-rank",
        action="store_true",
        help="compatible sublattices must have rank exactly min(n, 2n-4)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="plucker-asl",
        description="Verify Plücker ideal, straightening law and interval graph statements.",
        epilog=f"{ENV_SPAIR_BUDGET} overrides the S-pair budget.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="run one named check")
    verify.add_argument("target", choices=VERIFY_TARGETS)
    verify.add_argument(
        "--order", choices=("revlex", "lex"), default="revlex", help="order for gb-quadrics"
    )

    count = commands.add_parser("count", parents=[common], help="count a family of objects")
    count.add_argument("target", choices=COUNT_TARGETS)

    show = commands.add_parser("show", parents=[common], help="describe one sublattice")
    show.add_argument("target", choices=SHOW_TARGETS)
    source = show.add_mutually_exclusive_group(required=True)
    source.add_argument("--system", help='clique interval system such as "[1,3][2,5]"')
    source.add_argument("--sublattice-file", help="file with an n: header and i j lines")

    run_all = commands.add_parser("run-all", parents=[common], help="run every check")
    run_all.add_argument("--max-n", type=int, default=6)
    return parser


def settings_for(args: argparse.Namespace):
    config = load_config(args.config) if args.config else {}
    overrides = {
        "checks.seed": args.seed,
        "checks.samples": args.samples,
        "checks.jobs": args.jobs,
    }
    config.update({key: value for key, value in overrides.items() if value is not None})
    if args.strict_rank:
        config["lattice.rank_clause"] = RankClause.EXACT_N.value
    return get_settings(resolve_config(config))


def _require_n(args: argparse.Namespace, name: str) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} {args.target} needs --n")
    chk = CHECKS[name]
    if args.n < chk.min_n:
        raise UsageError(f"{name} needs n >= {chk.min_n}, got {args.n}")
    return args.n


def _finish(runner: Runner) -> int:
    if runner.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_PASS if runner.reports.passed else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, settings) -> int:
    n = _require_n(args, args.target)
    options = {"order": args.order} if args.target == "gb-quadrics" else {}
    runner = Runner(settings)
    runner.run([(args.target, n, options)])
    print(runner.reports.render(args.fmt))
    return _finish(runner)


def cmd_count(args: argparse.Namespace, settings) -> int:
    name = f"count-{args.target}"
    n = _require_n(args, name)
    runner = Runner(settings)
    reports = runner.run([(name, n, {})])
    report = next(r for r in reports if r.check == name)
    if args.fmt == "text" and report.value is not None:
        print(report.value)
    else:
        print(reports.render(args.fmt))
    return _finish(runner)


def _read_sublattice(args: argparse.Namespace) -> Sublattice:
    if args.system is not None:
        if args.n is None:
            raise UsageError("--system needs --n")
        return graphs.CliqueIntervalSystem.parse(args.system, args.n).sublattice()
    with open(args.sublattice_file, encoding="utf-8") as handle:
        n, pairs = parse_pair_file(handle.read())
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match n: {n} in {args.sublattice_file}")
    return Sublattice(n, pairs)


def describe(target: str, S: Sublattice) -> dict:
    """The facts ``show`` prints, as a JSON-ready dict."""
    info = {"n": S.n, "members": [str(p) for p in S.sorted()]}
    if target == "fundamental-chain":
        info["chain"] = [str(p) for p in lattice.fundamental_chain(S)]
    elif target == "join-irreducibles":
        ji = lattice.join_irreducibles(S)
        info["join_irreducibles"] = [str(p) for p in sorted(ji)]
        info["pure"] = lattice.is_pure(ji)
    else:
        G = graphs.graph_of(S, S.n)
        system = None if G.isolated_vertices else graphs.interval_system(G)
        info["maximal_cliques"] = [list(c) for c in graphs.maximal_cliques(G)]
        info["interval_system"] = None if system is None else str(system)
        info["overlaps"] = None if system is None else graphs.overlaps(system)
        info["connected"] = G.is_connected
        info["condition_star"] = graphs.condition_star(G)
        info["chordal"] = graphs.is_chordal(G)
    return info


def _describe_text(info: dict) -> str:
    lines = []
    for key, value in info.items():
        if isinstance(value, list) and key != "overlaps":
            value = " ".join(map(str, value))
        lines.append(f"{key.replace('_', ' ')}: {value}")
    return "\n".join(lines)


def cmd_show(args: argparse.Namespace, settings) -> int:
    info = describe(args.target, _read_sublattice(args))
    if args.fmt == "json":
        print(json.dumps(info, indent=2, sort_keys=True))
    else:
        print(_describe_text(info))
    return EXIT_PASS


def cmd_run_all(args: argparse.Namespace, settings) -> int:
    if args.max_n < CHECKS[ORACLE].min_n:
        raise UsageError(f"--max-n must be at least {CHECKS[ORACLE].min_n}")
    runner = Runner(settings)
    runner.run(plan_run_all(args.max_n))
    print(runner.reports.render(args.fmt))
    return _finish(runner)


COMMANDS = {
    "verify": cmd_verify,
    "count": cmd_count,
    "show": cmd_show,
    "run-all": cmd_run_all,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for bad arguments
        return EXIT_PASS if not exc.code else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        settings = settings_for(args)
        return COMMANDS[args.command](args, settings)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"plucker-asl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        SLOG.error("budget.exceeded", error=str(exc), budget=exc.budget, used=exc.used)
        return EXIT_BUDGET
    except (PluckerAslError, OSError) as exc:
        print(f"plucker-asl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
