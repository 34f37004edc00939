"""Text format for representations and sl(n) cochains.

::

    field 12;
    det 1;
    x = [zeta(12)^3, 0; 1, -zeta(12)^3];
    y = [zeta(6)^5, zeta(6) - zeta(6)^5; 0, zeta(6)];

``field`` fixes the cyclotomic field Q(zeta_N) (default REPVAR_FIELD_ORDER).
``det`` is optional: ``det 1;`` asks for SL_n (the default), ``det none;``
drops the determinant constraint. Every generator of the presentation needs
exactly one matrix.

Cochain files use the same matrix syntax, grouped by order with ``level K;``
headers (a file without headers holds u_1 only).
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber
from repvar.errors import DimensionMismatch, ParseError
from repvar.expressions import ExpressionParser, TokenStream, tokenize
from repvar.laurent import LaurentPoly
from repvar.linalg import Matrix
from repvar.representation import Representation, make_rep
from repvar.words import Presentation

logger = logging.getLogger(__name__)


def _parse_matrix(stream: TokenStream, order: int) -> Matrix:
    start = stream.expect("[").position
    parser = ExpressionParser(stream, order)
    rows: list[list[CyclotomicNumber]] = [[parser.parse_expression()]]
    while not stream.accept("]"):
        if stream.accept(","):
            rows[-1].append(parser.parse_expression())
        elif stream.accept(";"):
            rows.append([parser.parse_expression()])
        else:
            raise stream.error("expected ',', ';' or ']' in matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("matrix rows have different lengths", start)
    return Matrix.from_rows(rows, order)


def _parse_header(stream: TokenStream, default_order: int) -> int:
    order = default_order
    if stream.accept("field"):
        position = stream.current.position
        order = stream.expect_int()
        if order < 1:
            raise ParseError("field order must be >= 1", position)
        stream.expect(";")
    return order


def _parse_assignments(
    stream: TokenStream, names: tuple[str, ...], order: int, stop: tuple[str, ...] = ()
) -> dict[str, Matrix]:
    values: dict[str, Matrix] = {}
    while stream.current.kind != "end" and not any(stream.at(word) for word in stop):
        token = stream.expect_name()
        if token.text not in names:
            raise ParseError(f"unknown generator {token.text!r}", token.position)
        if token.text in values:
            raise ParseError(f"generator {token.text!r} assigned twice", token.position)
        stream.expect("=")
        values[token.text] = _parse_matrix(stream, order)
        stream.expect(";")
    return values


def _ordered(values: dict[str, Matrix], names: tuple[str, ...], what: str) -> list[Matrix]:
    missing = [n for n in names if n not in values]
    if missing:
        raise DimensionMismatch(f"{what} gives no matrix for {', '.join(missing)}")
    return [values[n] for n in names]


def parse_representation(text: str, presentation: Presentation, field_order: int | None = None) -> Representation:
    """Parse and verify a representation of ``presentation``."""
    stream = TokenStream(tokenize(text))
    order = _parse_header(stream, DEFAULT_ORDER if field_order is None else field_order)
    target: CyclotomicNumber | int | None = 1
    if stream.accept("det"):
        if stream.accept("none"):
            target = None
        else:
            target = ExpressionParser(stream, order).parse_expression()
        stream.expect(";")
    names = presentation.generator_names
    values = _parse_assignments(stream, names, order)
    rep = make_rep(presentation, _ordered(values, names, "representation"), target, order=order)
    logger.info("loaded rank-%d representation over Q(zeta_%d)", rep.rank, order)
    return rep


def parse_representation_file(path: str | Path, presentation: Presentation, field_order: int | None = None) -> Representation:
    return parse_representation(Path(path).read_text(encoding="utf-8"), presentation, field_order)


def parse_cochains(text: str, presentation: Presentation, order: int) -> list[list[Matrix]]:
    """Cochains u_1, ..., u_k in level order."""
    stream = TokenStream(tokenize(text))
    order = _parse_header(stream, order)
    names = presentation.generator_names
    levels: dict[int, list[Matrix]] = {}
    if not stream.at("level"):
        levels[1] = _ordered(_parse_assignments(stream, names, order), names, "cochain")
    while stream.accept("level"):
        position = stream.current.position
        level = stream.expect_int()
        stream.expect(";")
        if level in levels:
            raise ParseError(f"level {level} given twice", position)
        levels[level] = _ordered(_parse_assignments(stream, names, order, ("level",)), names, f"level {level}")
    if stream.current.kind != "end":
        raise stream.error("unexpected trailing input")
    expected = list(range(1, len(levels) + 1))
    if sorted(levels) != expected:
        raise ParseError(f"cochain levels must be 1..{len(levels)}, got {sorted(levels)}")
    return [levels[k] for k in expected]


def parse_cochain_file(path: str | Path, presentation: Presentation, order: int) -> list[list[Matrix]]:
    return parse_cochains(Path(path).read_text(encoding="utf-8"), presentation, order)


def format_matrix(m: Matrix) -> str:
    return "[" + "; ".join(", ".join(str(e) for e in m.row(i)) for i in range(m.rows)) + "]"


def format_representation(r: Representation) -> str:
    lines = [f"field {r.order};"]
    lines.append("det none;" if r.determinant_target is None else f"det {r.determinant_target};")
    for name, m in zip(r.presentation.generator_names, r.images):
        lines.append(f"{name} = {format_matrix(m)};")
    return "\n".join(lines) + "\n"


def plain(value: Any) -> Any:
    """JSON-ready form: field elements and polynomials as text, matrices in file syntax."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, Matrix):
        return format_matrix(value)
    if isinstance(value, (CyclotomicNumber, LaurentPoly)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)
