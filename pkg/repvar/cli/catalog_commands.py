"""``catalog list`` and ``catalog run <id> --param k=v``."""
from __future__ import annotations

import argparse
import logging

import pandas as pd

from repvar.catalog import get_entry, list_entries
from repvar.errors import InputError

from repvar.cli.common import CommandOutcome
from repvar.cli.schemas import JobSpec

logger = logging.getLogger(__name__)


def parse_params(pairs: list[str] | None) -> dict[str, str]:
    params: dict[str, str] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise InputError(f"--param expects k=v, got {pair!r}")
        params[key.strip()] = value.strip()
    return params


def catalog(job: JobSpec) -> CommandOutcome:
    if job.catalog_action == "list":
        entries = list_entries()
        table = pd.DataFrame(
            [
                {
                    "id": e["name"],
                    "parameters": ", ".join(f"{p['name']}={p['default']}" for p in e["parameters"]) or "-",
                    "description": e["description"],
                }
                for e in entries
            ],
            columns=["id", "parameters", "description"],
        )
        return CommandOutcome({"entries": entries}, table=table)

    if not job.entry:
        raise InputError("catalog run needs an entry id")
    run = get_entry(job.entry).run(job.params)
    logger.info("catalog %s: %d assertions, passed=%s", run.entry, len(run.results), run.passed)
    return CommandOutcome(run.to_dict(), verdict=run.passed, table=run.to_frame())


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser("catalog", parents=[common], help="worked examples with checked assertions")
    sub.add_argument("catalog_action", choices=["list", "run"])
    sub.add_argument("entry", nargs="?", default=None, help="entry id for 'run'")
    sub.add_argument("--param", action="append", default=None, metavar="K=V", help="override an entry parameter")
    sub.set_defaults(handler=catalog)
