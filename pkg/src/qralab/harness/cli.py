"""Command-line entry point: `qralab run`, `qralab report` and `qralab validate`.

Exit codes: 0 on success, 1 on configuration or data errors (and failed validation checks), 2 on
I/O errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .. import _debug
from ..exceptions import ConfigurationError, DataError, ExperimentIOError
from ..logger import logger as package_logger
from .csv_io import emit_csv, read_csv
from .models import ExperimentSpec
from .presets import preset
from .report import METRICS, significance_report, summarize
from .runner import run_experiment
from .seeds import DEFAULT_MASTER_SEED, SeedScheme
from .spec_file import load_spec_file
from .validation import validate

# Set up logger
logger = logging.getLogger("qralab.harness.cli")

EXIT_OK = 0
EXIT_CONFIGURATION = 1
EXIT_IO = 2


def _resolve_spec(exp: str, scale: str) -> ExperimentSpec:
    if exp.isdigit():
        return preset(int(exp), scale)  # type: ignore[arg-type]
    return load_spec_file(exp)


def _cmd_run(args: argparse.Namespace) -> int:
    spec = _resolve_spec(args.exp, args.scale)
    threads = args.threads if args.threads is not None else _debug.DEFAULT_THREADS
    records = run_experiment(
        spec, SeedScheme(args.seed), threads=threads, timing=not args.no_timing
    )
    stem = f"exp{spec.label}_{args.scale}" if args.exp.isdigit() else f"exp{spec.label}"
    out = Path(args.out)
    csv_path = emit_csv(records, out / f"{stem}.csv")
    summary = summarize(records)
    summary_path = out / f"{stem}_summary.txt"
    try:
        summary_path.write_text(summary, encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(f"could not write summary ({e.strerror})", str(summary_path)) from e
    print(summary, end="")
    print(f"{len(records)} records written to {csv_path}")
    return EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    report = significance_report(
        read_csv(args.a), read_csv(args.b), metric=args.metric, alpha=args.alpha
    )
    print(report.to_text(), end="")
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    results = validate()
    for result in results:
        status = "ok" if result.passed else "FAILED"
        print(f"{status:>6}  {result.name}: {result.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_CONFIGURATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qralab",
        description="Quantum reservoir autoencoder simulation lab.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log debug output to stdout"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment and write its CSV")
    run.add_argument("--exp", required=True, help="experiment id 1-24 or a spec file path")
    run.add_argument("--scale", choices=["full", "desk"], default="desk")
    run.add_argument("--seed", type=int, default=DEFAULT_MASTER_SEED, help="master seed")
    run.add_argument("--out", default="results", help="output directory")
    run.add_argument("--threads", type=int, default=None, help="worker threads")
    run.add_argument(
        "--no-timing", action="store_true", help="write 0 wall times for byte-identical output"
    )
    run.set_defaults(handler=_cmd_run)

    report = commands.add_parser("report", help="compare two result CSVs")
    report.add_argument("--a", required=True, help="CSV of condition A")
    report.add_argument("--b", required=True, help="CSV of condition B")
    report.add_argument("--metric", choices=list(METRICS), default="log10-final-mse")
    report.add_argument("--alpha", type=float, default=0.05)
    report.set_defaults(handler=_cmd_report)

    check = commands.add_parser("validate", help="run the property suites")
    check.set_defaults(handler=_cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose or _debug.VERBOSE_LOGGING:
        from .. import enable_verbose_stdout_logging

        enable_verbose_stdout_logging()
    elif not package_logger.handlers:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    try:
        return int(args.handler(args))
    except (ConfigurationError, DataError) as e:
        logger.error("%s", e.message)
        return EXIT_CONFIGURATION
    except ExperimentIOError as e:
        logger.error("%s", e.message)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
