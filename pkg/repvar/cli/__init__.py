"""Command-line front end.

Exit codes: 0 when the command ran and its verdict (if any) is positive, 1
when it ran and the verdict is negative or a check raised ``VerdictError``,
2 when the input could not be evaluated.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from typing import Sequence

from pydantic import ValidationError

from repvar.errors import RepvarError, VerdictError
from repvar.cli import alexander_commands, catalog_commands, cohomology_commands, rep_commands
from repvar.cli.common import CommandOutcome, plain
from repvar.cli.output import render_json, render_text
from repvar.cli.schemas import JobSpec, Report

LOG_LEVEL = os.environ.get("REPVAR_LOG_LEVEL", "WARNING").upper()

logger = logging.getLogger(__name__)

_JOB_FIELDS = (
    "presentation", "rep", "cochain", "module", "lam", "alpha", "n", "sym_power",
    "boundary_tori", "order", "words", "known_local_dim", "catalog_action", "entry",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--presentation", help="presentation file (gens ...; rel ...; ab ...;)")
    common.add_argument("--rep", help="representation file")
    common.add_argument("--module", default="ad-sl",
                        help="ad-sl | ad-gl | standard | one-dim:LAMBDA | metabelian:ALPHA,N | hom:A,B")
    common.add_argument("--lambda", dest="lam", help="field element, e.g. zeta(12) or sqrt(3)/2")
    common.add_argument("--field-order", type=int, default=None, help="N of the context field Q(zeta_N)")
    common.add_argument("--format", dest="output_format", choices=["text", "json"], default="text")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="repvar",
        description="Exact computations on SL(n) representation varieties of finitely presented groups.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    rep_commands.register(subparsers, common)
    cohomology_commands.register(subparsers, common)
    alexander_commands.register(subparsers, common)
    catalog_commands.register(subparsers, common)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _job_from_args(args: argparse.Namespace) -> JobSpec:
    data = {name: getattr(args, name) for name in _JOB_FIELDS if getattr(args, name, None) is not None}
    data["command"] = args.command
    data["output_format"] = args.output_format
    if args.field_order is not None:
        data["field_order"] = args.field_order
    if args.command == "catalog":
        data["params"] = catalog_commands.parse_params(args.param)
    return JobSpec(**data)


def _emit(report: Report, outcome: CommandOutcome | None, output_format: str) -> None:
    text = render_json(report) if output_format == "json" else render_text(report, outcome)
    print(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    _configure_logging(args.verbose)
    started = time.perf_counter()
    try:
        job = _job_from_args(args)
        outcome = args.handler(job)
    except VerdictError as exc:
        report = Report(
            command=args.command,
            ok=False,
            verdict=False,
            error=str(exc),
            result={"exception": type(exc).__name__, **plain(vars(exc))},
            elapsed_seconds=time.perf_counter() - started,
        )
        logger.info("%s: %s", args.command, exc)
        _emit(report, None, args.output_format)
        return 1
    except (RepvarError, ValidationError, OSError) as exc:
        print(f"repvar: error: {exc}", file=sys.stderr)
        return 2

    report = Report(
        command=job.command,
        verdict=outcome.verdict,
        result=plain(outcome.result),
        elapsed_seconds=time.perf_counter() - started,
    )
    _emit(report, outcome, job.output_format)
    return 1 if outcome.verdict is False else 0
