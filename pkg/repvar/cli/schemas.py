"""Pydantic models for command-line jobs and their JSON reports."""
from __future__ import annotations

from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator

from repvar.cyclotomic import DEFAULT_ORDER

SCHEMA_VERSION = "1.0"

Command = Literal[
    "check-rep",
    "cocycles",
    "cohomology",
    "regularity",
    "alexander",
    "deform-condition",
    "obstruction",
    "irreducible",
    "character",
    "metabelian",
    "catalog",
]


class JobSpec(BaseModel):
    command: Command
    presentation: Path | None = None
    rep: Path | None = None
    cochain: Path | None = None
    module: str = "ad-sl"
    lam: str | None = None
    alpha: str | None = None
    n: int | None = Field(default=None, ge=2)
    sym_power: int | None = Field(default=None, ge=2)
    boundary_tori: int = Field(default=1, ge=1)
    order: int = Field(default=1, ge=1)
    words: str | None = None
    known_local_dim: int | None = Field(default=None, ge=0)
    catalog_action: Literal["list", "run"] | None = None
    entry: str | None = None
    params: dict[str, str] = {}
    output_format: Literal["text", "json"] = "text"
    field_order: int = Field(default=DEFAULT_ORDER, ge=1)

    @field_validator("presentation", "rep", "cochain")
    @classmethod
    def _must_exist(cls, value: Path | None) -> Path | None:
        if value is not None and not value.is_file():
            raise ValueError(f"file not found: {value}")
        return value

    @field_validator("module")
    @classmethod
    def _hom_files_exist(cls, value: str) -> str:
        kind, _, argument = value.partition(":")
        if kind == "hom":
            paths = [p.strip() for p in argument.split(",")]
            if len(paths) != 2 or not all(paths):
                raise ValueError(f"hom module needs two representation files, got {value!r}")
            for p in paths:
                if not Path(p).is_file():
                    raise ValueError(f"file not found: {p}")
        return value


class Report(BaseModel):
    """Every command prints one of these; ``elapsed_seconds`` is the only nondeterministic field."""

    schema_version: str = SCHEMA_VERSION
    command: str
    ok: bool = True
    verdict: bool | None = None
    result: dict[str, Any] = {}
    error: str | None = None
    elapsed_seconds: float | None = None
