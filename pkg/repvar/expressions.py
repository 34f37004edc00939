"""Tokenizer and parser for field elements and Laurent polynomials.

Grammar (whitespace and ``#`` comments ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 'zeta' '(' INT ')' | 'i' | 'sqrt' '(' expr ')' | 't' | '(' expr ')'

``t`` is only accepted when parsing Laurent polynomials.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from repvar.cyclotomic import (
    DEFAULT_ORDER,
    CyclotomicNumber,
    root_of_unity,
    sqrt_rational,
)
from repvar.errors import DivisionByZero, ParseError
from repvar.laurent import LaurentPoly

_TOKEN_RE = re.compile(
    r"(?P<skip>\s+|\#[^\n]*)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\S)"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        if kind == "skip":
            continue
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token("end", "", len(text)))
    return tokens


class TokenStream:
    """Cursor over a token list with the small helpers every parser here needs."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        token = self.current
        return token.kind in ("op", "name") and token.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        return self.advance()

    def expect_int(self) -> int:
        negative = self.accept("-")
        token = self.current
        if token.kind != "num":
            raise self.error("expected an integer")
        self.advance()
        return -int(token.text) if negative else int(token.text)

    def expect_name(self) -> Token:
        token = self.current
        if token.kind != "name":
            raise self.error("expected a name")
        return self.advance()

    def error(self, message: str) -> ParseError:
        token = self.current
        found = token.text if token.kind != "end" else "end of input"
        return ParseError(f"{message}, found {found!r}", token.position)


class ExpressionParser:
    """Recursive-descent evaluator over a shared TokenStream.

    With ``laurent=True`` values are LaurentPoly and ``t`` is a variable;
    otherwise values are CyclotomicNumber.
    """

    def __init__(self, stream: TokenStream, order: int = DEFAULT_ORDER, laurent: bool = False):
        self.stream = stream
        self.order = order
        self.laurent = laurent

    # values are lifted to the active domain
    def _constant(self, value) -> CyclotomicNumber | LaurentPoly:
        if not isinstance(value, CyclotomicNumber):
            value = CyclotomicNumber.from_rational(self.order, value)
        return LaurentPoly.constant(value) if self.laurent else value

    def parse_expression(self):
        stream = self.stream
        value = self._term()
        while True:
            if stream.accept("+"):
                value = value + self._term()
            elif stream.accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self):
        stream = self.stream
        value = self._unary()
        while True:
            if stream.accept("*"):
                value = value * self._unary()
            elif stream.at("/"):
                position = stream.advance().position
                value = self._divide(value, self._unary(), position)
            else:
                return value

    def _divide(self, left, right, position: int):
        try:
            if self.laurent:
                if right.is_zero():
                    raise DivisionByZero("division by zero")
                if len(right.coeffs) != 1:
                    raise ParseError("division by a non-monomial Laurent polynomial", position)
                return left * right.monomial_inverse()
            return left / right
        except DivisionByZero as exc:
            raise ParseError(str(exc), position) from exc

    def _unary(self):
        if self.stream.accept("-"):
            return -self._unary()
        if self.stream.accept("+"):
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        if self.stream.at("^"):
            position = self.stream.advance().position
            exponent = self.stream.expect_int()
            if exponent < 0 and self.laurent:
                if base.is_zero() or len(base.coeffs) != 1:
                    raise ParseError("negative power of a non-monomial", position)
                return base.monomial_inverse() ** (-exponent)
            try:
                return base ** exponent
            except DivisionByZero as exc:
                raise ParseError(str(exc), position) from exc
        return base

    def _atom(self):
        stream = self.stream
        token = stream.current
        if token.kind == "num":
            stream.advance()
            return self._constant(int(token.text))
        if stream.accept("("):
            value = self.parse_expression()
            stream.expect(")")
            return value
        if token.kind == "name":
            stream.advance()
            if token.text == "zeta":
                stream.expect("(")
                root_order = stream.expect_int()
                stream.expect(")")
                if root_order < 1:
                    raise ParseError("zeta order must be positive", token.position)
                return self._constant(root_of_unity(root_order, 1, self.order))
            if token.text == "i":
                return self._constant(root_of_unity(4, 1, self.order))
            if token.text == "sqrt":
                stream.expect("(")
                inner = self.parse_expression()
                stream.expect(")")
                rational = self._as_rational(inner, token.position)
                return self._constant(sqrt_rational(rational, self.order))
            if token.text == "t" and self.laurent:
                return LaurentPoly.monomial(CyclotomicNumber.one(self.order), 1)
            raise ParseError(f"unknown symbol {token.text!r}", token.position)
        raise stream.error("expected a number, symbol or '('")

    def _as_rational(self, value, position: int) -> Fraction:
        if self.laurent:
            if not value.is_constant():
                raise ParseError("sqrt argument must be rational", position)
            value = value.constant_term()
        if not value.is_rational():
            raise ParseError("sqrt argument must be rational", position)
        return value.to_fraction()


def _parse_all(text: str, order: int, laurent: bool):
    stream = TokenStream(tokenize(text))
    value = ExpressionParser(stream, order, laurent).parse_expression()
    if stream.current.kind != "end":
        raise stream.error("unexpected trailing input")
    return value


def parse_field_element(text: str, order: int = DEFAULT_ORDER) -> CyclotomicNumber:
    """Parse e.g. ``1/2 - 3*zeta(12)^5`` into Q(zeta_order)."""
    return _parse_all(text, order, laurent=False)


def parse_laurent(text: str, order: int = DEFAULT_ORDER) -> LaurentPoly:
    """Parse e.g. ``t^2 - t + 1`` or ``zeta(3)*t^-1 + 2``."""
    return _parse_all(text, order, laurent=True)
