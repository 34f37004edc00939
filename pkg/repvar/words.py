"""Free-group words, presentations and Fox free differential calculus."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence, TypeVar

from repvar.errors import InvalidAbelianization, MissingAbelianization

logger = logging.getLogger(__name__)

Letter = tuple[int, int]  # (generator index, +1 or -1)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {sign}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word in generators indexed from 0."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> Word:
        return cls(((index, sign),))

    @classmethod
    def identity(cls) -> Word:
        return cls()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, exponent: int) -> Word:
        base = self if exponent >= 0 else self.inverse()
        return Word(base.letters * abs(exponent))

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def exponent_sum(self, gen: int) -> int:
        return sum(s for g, s in self.letters if g == gen)

    def substitute(self, images: Sequence[Word]) -> Word:
        """Image under the free-group homomorphism x_i -> images[i]."""
        letters: list[Letter] = []
        for gen, sign in self.letters:
            image = images[gen] if sign > 0 else images[gen].inverse()
            letters.extend(image.letters)
        return Word(tuple(letters))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def word_mul(u: Word, v: Word) -> Word:
    return u * v


def word_inv(u: Word) -> Word:
    return u.inverse()


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    abelianization: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relators", tuple(self.relators))
        if self.abelianization is not None:
            object.__setattr__(self, "abelianization", tuple(self.abelianization))
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError(f"duplicate generator names in {self.generator_names}")
        for index, relator in enumerate(self.relators):
            if relator.max_generator() >= self.generator_count:
                raise ValueError(f"relator {index} references an unknown generator")
        if self.abelianization is not None:
            if len(self.abelianization) != self.generator_count:
                raise ValueError("abelianization must give one integer per generator")
            for index, relator in enumerate(self.relators):
                value = abelianize_word(self, relator)
                if value:
                    raise InvalidAbelianization(index, value)

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    @property
    def deficiency(self) -> int:
        return self.generator_count - self.relator_count

    def generator_word(self, name: str) -> Word:
        return Word.generator(self.generator_names.index(name))

    def generator_words(self) -> list[Word]:
        return [Word.generator(i) for i in range(self.generator_count)]

    def phi(self, w: Word) -> int:
        return abelianize_word(self, w)

    def format_word(self, w: Word) -> str:
        if w.is_identity():
            return "1"
        parts: list[str] = []
        letters = w.letters
        i = 0
        while i < len(letters):
            gen, sign = letters[i]
            j = i
            while j < len(letters) and letters[j] == (gen, sign):
                j += 1
            power = (j - i) * sign
            name = self.generator_names[gen]
            parts.append(name if power == 1 else f"{name}^{power}")
            i = j
        return " ".join(parts)


def abelianize_word(p: Presentation, w: Word) -> int:
    """phi(w) = sum of phi(g) * sign over the letters of w."""
    if p.abelianization is None:
        raise MissingAbelianization("presentation carries no abelianization data")
    return sum(p.abelianization[g] * s for g, s in w.letters)


# ---------------------------------------------------------------------------
# Group ring and Fox calculus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupRingElement:
    """Finite linear combination of words; zero coefficients are dropped."""

    terms: Mapping[Word, object] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {w: c for w, c in self.terms.items() if c})

    @classmethod
    def from_word(cls, w: Word, coefficient=1) -> GroupRingElement:
        return cls({w: coefficient})

    @classmethod
    def one(cls) -> GroupRingElement:
        return cls.from_word(Word())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return GroupRingElement(terms)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            terms: dict[Word, object] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u * v
                    terms[w] = terms[w] + a * b if w in terms else a * b
            return GroupRingElement(terms)
        return GroupRingElement({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        return GroupRingElement({w: other * c for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def augmentation(self):
        return sum(self.terms.values())

    def evaluate(self, word_image: Callable[[Word], object], zero):
        """sum_w c_w * image(w) for any ring-valued image map."""
        total = zero
        for w, c in self.terms.items():
            total = total + word_image(w) * c
        return total


def fox_derivative(w: Word, gen: int) -> GroupRingElement:
    """Left Fox derivative: d(uv)/dx = du/dx + u dv/dx."""
    terms: dict[Word, int] = {}
    prefix = Word()
    for letter in w.letters:
        g, sign = letter
        if sign > 0:
            if g == gen:
                terms[prefix] = terms.get(prefix, 0) + 1
            prefix = prefix * Word((letter,))
        else:
            prefix = prefix * Word((letter,))
            if g == gen:
                terms[prefix] = terms.get(prefix, 0) - 1
    return GroupRingElement(terms)


T = TypeVar("T")


def fox_images(
    w: Word,
    generator_count: int,
    letter_image: Callable[[int, int], T],
    identity: T,
) -> list[T | None]:
    """All Fox derivatives of w evaluated under a multiplicative letter action.

    Equivalent to evaluating ``fox_derivative(w, i)`` term by term but done in
    a single pass with running prefix products. Entries for generators that do
    not occur in w are None.
    """
    blocks: list[T | None] = [None] * generator_count
    prefix = identity
    for gen, sign in w.letters:
        image = letter_image(gen, sign)
        if sign > 0:
            blocks[gen] = prefix if blocks[gen] is None else blocks[gen] + prefix
            prefix = prefix @ image
        else:
            prefix = prefix @ image
            blocks[gen] = -prefix if blocks[gen] is None else blocks[gen] - prefix
    return blocks
