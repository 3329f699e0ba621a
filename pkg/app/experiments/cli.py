"""
Command line entry point.

    python -m app run --experiment oracle --box 7 --replicates 1000
    python -m app gen --box 256 --replicates 4
    python -m app render --box 512 --seed 3
    python -m app bench
    python -m app aggregate out/REPORTS/*.json --out out

Exit codes: 0 on pass, 2 when a hard tolerance band fails, 1 on error.
"""
import argparse
import logging
from typing import Optional, Sequence

from ..exceptions import EstimatorException, ExperimentException, LatticeException
from ..lattice import StorageMode
from ..namespaces import exit_ns, files_ns
from .aggregate import aggregate_reports, write_summary
from .config import load_config
from .registry import EXPERIMENTS
from .runner import run_experiment

LOG_FORMAT = "%(asctime)s %(levelname)s %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
# subcommands that fix the experiment
SHORTCUTS = ("gen", "render", "bench")
CONFIG_FLAGS = (
    "experiment",
    "box",
    "scale",
    "seed",
    "replicates",
    "out",
    "workers",
    "storage_mode",
)


def _add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--box", type=int, help="box side N, vertices per axis")
    parser.add_argument("--scale", type=float, help="scale n, defaults to N / 2")
    parser.add_argument("--seed", type=int, help="base seed, a 64-bit unsigned int")
    parser.add_argument("--replicates", type=int, help="number of replicates")
    parser.add_argument("--out", help="output folder, default out")
    parser.add_argument("--workers", type=int, help="worker processes, default 1")
    parser.add_argument("--config", help="flat key = value configuration file")
    parser.add_argument(
        "--storage-mode",
        choices=[mode.value for mode in StorageMode],
        help="keep the weights in memory or regenerate them on access",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app",
        description="Exponential last passage percolation: geodesic tree, "
        "dual tree and Peano curve experiments.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run one experiment")
    run.add_argument("--experiment", help=f"one of {', '.join(EXPERIMENTS)}")
    _add_config_arguments(run)

    for name in SHORTCUTS:
        shortcut = commands.add_parser(name, help=EXPERIMENTS[name].__doc__)
        _add_config_arguments(shortcut)

    aggregate = commands.add_parser("aggregate", help="summarize JSON reports")
    aggregate.add_argument("reports", nargs="+", help="report files")
    aggregate.add_argument(
        "--out", default=files_ns.OUTPUT_FOLDER, help="output folder"
    )
    aggregate.add_argument("--verbose", action="store_true", help="debug logging")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
    )
    try:
        if args.command == "aggregate":
            write_summary(aggregate_reports(args.reports), args.out)
            return exit_ns.PASS

        flags = {name: getattr(args, name, None) for name in CONFIG_FLAGS}
        if args.command in SHORTCUTS:
            flags["experiment"] = args.command
        config = load_config(flags, args.config)
        return run_experiment(config)
    except (
        ExperimentException,
        LatticeException,
        EstimatorException,
        OSError,
    ) as error:
        logging.error(f"{type(error).__name__} -- {error}")
        return exit_ns.ERROR
