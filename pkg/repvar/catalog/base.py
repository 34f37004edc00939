"""Abstract base class for catalog entries (worked examples with assertions)."""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Literal

import pandas as pd

from repvar.errors import InputError
from repvar.representation import Representation
from repvar.representation_io import plain
from repvar.words import Presentation

logger = logging.getLogger(__name__)


@dataclass
class ParameterDef:
    name: str
    type: Literal["int", "str"]
    default: Any
    min: Any = None
    max: Any = None
    description: str = ""


@dataclass
class Assertion:
    """One checked claim: ``check()`` returns the actual value compared with ``expected``."""

    name: str
    expected: Any
    check: Callable[[], Any]
    provenance: str = ""
    experimental: bool = False


@dataclass
class AssertionResult:
    name: str
    expected: Any
    actual: Any = None
    passed: bool = False
    provenance: str = ""
    experimental: bool = False
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": plain(self.expected),
            "actual": plain(self.actual),
            "passed": self.passed,
            "provenance": self.provenance,
            "experimental": self.experimental,
            "error": self.error,
        }


@dataclass
class CatalogRunResult:
    entry: str
    params: dict = field(default_factory=dict)
    results: list[AssertionResult] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.passed for r in self.results)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "assertion": r.name,
                    "expected": plain(r.expected),
                    "actual": plain(r.actual) if r.error is None else f"error: {r.error}",
                    "ok": "yes" if r.passed else "NO",
                    "note": "experimental" if r.experimental else "",
                }
                for r in self.results
            ],
            columns=["assertion", "expected", "actual", "ok", "note"],
        )

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "params": self.params,
            "passed": self.passed,
            "error": self.error,
            "assertions": [r.to_dict() for r in self.results],
        }


class CatalogEntry(ABC):
    name: str = "base"
    description: str = ""
    field_order: int = 12

    def get_parameters(self) -> list[ParameterDef]:
        return []

    @abstractmethod
    def presentation(self, params: dict) -> Presentation:
        ...

    def representations(self, params: dict) -> dict[str, Callable[..., Representation]]:
        """Named representation constructors of this entry."""
        return {}

    @abstractmethod
    def assertions(self, params: dict) -> list[Assertion]:
        ...

    def resolve_params(self, overrides: dict[str, str] | None = None) -> dict:
        """Defaults overlaid with ``overrides`` (text values, as from the command line)."""
        overrides = dict(overrides or {})
        params: dict[str, Any] = {}
        for p in self.get_parameters():
            raw = overrides.pop(p.name, p.default)
            if p.type == "int":
                try:
                    value = int(raw)
                except (TypeError, ValueError) as exc:
                    raise InputError(f"parameter {p.name} must be an integer, got {raw!r}") from exc
                if p.min is not None and value < p.min or p.max is not None and value > p.max:
                    raise InputError(f"parameter {p.name}={value} outside [{p.min}, {p.max}]")
            else:
                value = str(raw)
            params[p.name] = value
        if overrides:
            raise InputError(f"unknown parameters for {self.name}: {', '.join(sorted(overrides))}")
        return params

    def run(self, overrides: dict[str, str] | None = None) -> CatalogRunResult:
        params = self.resolve_params(overrides)
        result = CatalogRunResult(entry=self.name, params=params)
        try:
            assertions = self.assertions(params)
        except Exception as exc:
            result.error = f"entry setup failed: {exc}"
            logger.warning("%s: %s", self.name, result.error)
            return result
        for assertion in assertions:
            outcome = AssertionResult(
                name=assertion.name,
                expected=assertion.expected,
                provenance=assertion.provenance,
                experimental=assertion.experimental,
            )
            try:
                outcome.actual = assertion.check()
                outcome.passed = outcome.actual == assertion.expected
            except Exception as exc:
                outcome.error = f"{type(exc).__name__}: {exc}"
            if assertion.experimental and not outcome.passed:
                logger.warning("%s: experimental assertion %s failed", self.name, assertion.name)
            result.results.append(outcome)
        logger.info(
            "%s: %d/%d assertions passed",
            self.name, sum(r.passed for r in result.results), len(result.results),
        )
        return result
