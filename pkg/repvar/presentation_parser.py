"""Text format for group presentations.

::

    gens t, a, b;
    rel t a t^-1 = a b, t b t^-1 = b a b;
    ab t=1, a=0, b=0;

Word expressions use juxtaposition for products, ``^`` for integer powers,
``[u, v]`` for commutators and parentheses for grouping. ``1`` is the empty
word. An identifier that is not a generator name is split into generator
names when possible, so ``tat^-1`` reads as ``t a t^-1``.
"""
from __future__ import annotations

import logging

from repvar.errors import ParseError
from repvar.expressions import Token, TokenStream, tokenize
from repvar.words import Presentation, Word, commutator

logger = logging.getLogger(__name__)

_KEYWORDS = ("gens", "rel", "ab")


def _split_identifier(token: Token, names: tuple[str, ...]) -> list[int]:
    """Split an identifier into generator indices, longest names first."""
    text = token.text
    if text in names:
        return [names.index(text)]
    by_length = sorted(range(len(names)), key=lambda i: -len(names[i]))
    indices: list[int] = []
    pos = 0
    while pos < len(text):
        for i in by_length:
            if text.startswith(names[i], pos):
                indices.append(i)
                pos += len(names[i])
                break
        else:
            raise ParseError(f"unknown generator {text!r}", token.position + pos)
    return indices


class WordParser:
    def __init__(self, stream: TokenStream, names: tuple[str, ...]):
        self.stream = stream
        self.names = names

    def _starts_factor(self) -> bool:
        token = self.stream.current
        if token.kind == "name":
            return True
        if token.kind == "num":
            return token.text == "1"
        return token.kind == "op" and token.text in "(["

    def parse_word(self) -> Word:
        if not self._starts_factor():
            raise self.stream.error("expected a word")
        word = Word()
        while self._starts_factor():
            word = word * self._factor()
        return word

    def _factor(self) -> Word:
        base = self._atom()
        if self.stream.accept("^"):
            base = base ** self.stream.expect_int()
        return base

    def _atom(self) -> Word:
        stream = self.stream
        token = stream.current
        if token.kind == "num":
            stream.advance()
            return Word()
        if stream.accept("("):
            word = self.parse_word()
            stream.expect(")")
            return word
        if stream.accept("["):
            u = self.parse_word()
            stream.expect(",")
            v = self.parse_word()
            stream.expect("]")
            return commutator(u, v)
        stream.advance()
        indices = _split_identifier(token, self.names)
        # a trailing power binds to the last letter only, as in written algebra
        if len(indices) > 1 and stream.at("^"):
            head = Word(tuple((i, 1) for i in indices[:-1]))
            return head * self._bind_power(indices[-1])
        return Word(tuple((i, 1) for i in indices))

    def _bind_power(self, index: int) -> Word:
        self.stream.expect("^")
        return Word.generator(index) ** self.stream.expect_int()


def _parse_names(stream: TokenStream) -> tuple[str, ...]:
    names: list[str] = []
    if stream.at(";"):
        return ()
    while True:
        token = stream.expect_name()
        if token.text in names:
            raise ParseError(f"duplicate generator {token.text!r}", token.position)
        if token.text in _KEYWORDS:
            raise ParseError(f"{token.text!r} is reserved", token.position)
        names.append(token.text)
        if not stream.accept(","):
            return tuple(names)


def _parse_relators(stream: TokenStream, names: tuple[str, ...]) -> list[Word]:
    parser = WordParser(stream, names)
    relators: list[Word] = []
    if stream.at(";"):
        return relators
    while True:
        left = parser.parse_word()
        if stream.accept("="):
            left = left * parser.parse_word().inverse()
        relators.append(left)
        if not stream.accept(","):
            return relators


def _parse_abelianization(stream: TokenStream, names: tuple[str, ...]) -> tuple[int, ...]:
    values: dict[str, int] = {}
    while True:
        token = stream.expect_name()
        if token.text not in names:
            raise ParseError(f"unknown generator {token.text!r}", token.position)
        stream.expect("=")
        values[token.text] = stream.expect_int()
        if not stream.accept(","):
            break
    missing = [n for n in names if n not in values]
    if missing:
        raise ParseError(f"abelianization missing for {', '.join(missing)}", stream.current.position)
    return tuple(values[n] for n in names)


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens ...; rel ...; [ab ...;]`` into a Presentation."""
    stream = TokenStream(tokenize(text))
    stream.expect("gens")
    names = _parse_names(stream)
    stream.expect(";")
    stream.expect("rel")
    relators = _parse_relators(stream, names)
    stream.expect(";")
    abelianization = None
    if stream.accept("ab"):
        abelianization = _parse_abelianization(stream, names)
        stream.expect(";")
    if stream.current.kind != "end":
        raise stream.error("unexpected trailing input")
    presentation = Presentation(names, tuple(relators), abelianization)
    logger.debug(
        "parsed presentation with %d generators and %d relators",
        presentation.generator_count, presentation.relator_count,
    )
    return presentation


def parse_word(text: str, presentation: Presentation) -> Word:
    stream = TokenStream(tokenize(text))
    word = WordParser(stream, presentation.generator_names).parse_word()
    if stream.current.kind != "end":
        raise stream.error("unexpected trailing input")
    return word


def parse_word_list(text: str, presentation: Presentation) -> list[Word]:
    """Comma-separated word expressions, e.g. ``x, y^-1, x y``."""
    stream = TokenStream(tokenize(text))
    parser = WordParser(stream, presentation.generator_names)
    words = [parser.parse_word()]
    while stream.accept(","):
        words.append(parser.parse_word())
    if stream.current.kind != "end":
        raise stream.error("unexpected trailing input")
    return words


def format_presentation(p: Presentation) -> str:
    lines = [f"gens {', '.join(p.generator_names)};"]
    relators = ", ".join(p.format_word(r) for r in p.relators)
    lines.append(f"rel {relators};" if relators else "rel ;")
    if p.abelianization is not None:
        pairs = ", ".join(f"{n}={v}" for n, v in zip(p.generator_names, p.abelianization))
        lines.append(f"ab {pairs};")
    return "\n".join(lines) + "\n"
