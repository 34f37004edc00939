"""Report rendering: JSON for scripts, aligned text tables for people."""
from __future__ import annotations

import json

import pandas as pd

from repvar.cli.common import CommandOutcome, key_value_frame, plain
from repvar.cli.schemas import Report


def render_json(report: Report) -> str:
    return json.dumps(plain(report.model_dump()), indent=2, sort_keys=False)


def render_text(report: Report, outcome: CommandOutcome | None = None) -> str:
    lines = [f"repvar {report.command}"]
    if report.verdict is not None:
        lines.append(f"verdict: {'yes' if report.verdict else 'no'}")
    if report.error:
        lines.append(f"error: {report.error}")
    frame = outcome.table if outcome is not None and outcome.table is not None else key_value_frame(report.result)
    if not frame.empty:
        with pd.option_context("display.max_colwidth", None, "display.width", None):
            lines.append(frame.to_string(index=False))
    return "\n".join(lines)
