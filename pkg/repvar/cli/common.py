"""Input loading and value conversion shared by the command modules."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import pandas as pd

from repvar.cyclotomic import CyclotomicNumber
from repvar.errors import InputError
from repvar.expressions import parse_field_element
from repvar.modules import HomModule, ModuleSpec, module_from_spec
from repvar.presentation_parser import parse_presentation
from repvar.representation import Representation
from repvar.representation_io import parse_representation_file, plain
from repvar.words import Presentation

from repvar.cli.schemas import JobSpec

logger = logging.getLogger(__name__)


@dataclass
class CommandOutcome:
    """What a command hands back to ``main``: payload, verdict and an optional text table."""

    result: dict[str, Any]
    verdict: bool | None = None
    table: pd.DataFrame | None = None


def load_presentation(job: JobSpec) -> Presentation:
    if job.presentation is None:
        raise InputError(f"{job.command} needs --presentation")
    return parse_presentation(Path(job.presentation).read_text(encoding="utf-8"))


def load_rep(job: JobSpec, presentation: Presentation, path: Path | str | None = None) -> Representation:
    path = job.rep if path is None else path
    if path is None:
        raise InputError(f"{job.command} needs --rep")
    return parse_representation_file(path, presentation, job.field_order)


def hom_paths(job: JobSpec) -> tuple[str, str] | None:
    kind, _, argument = job.module.partition(":")
    if kind != "hom":
        return None
    first, second = (p.strip() for p in argument.split(","))
    return first, second


def load_module(job: JobSpec, rep: Representation) -> ModuleSpec:
    """--module: ad-sl, ad-gl, standard, one-dim:LAMBDA, metabelian:ALPHA,N or hom:A,B."""
    paths = hom_paths(job)
    if paths is not None:
        return HomModule(*(load_rep(job, rep.presentation, path) for path in paths))
    return module_from_spec(rep, job.module)


def parse_scalar(job: JobSpec, text: str | None, flag: str) -> CyclotomicNumber:
    if text is None:
        raise InputError(f"{job.command} needs {flag}")
    return parse_field_element(text, job.field_order)


def key_value_frame(result: dict[str, Any]) -> pd.DataFrame:
    rows = []
    for key, value in result.items():
        text = value if isinstance(value, str) else json.dumps(plain(value))
        rows.append({"field": key, "value": text})
    return pd.DataFrame(rows, columns=["field", "value"])
