"""Verified representations of finitely presented groups and their characters."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import DeterminantMismatch, DimensionMismatch, RelationViolated
from repvar.linalg import Matrix
from repvar.words import Presentation, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """Generator images of a homomorphism into GL_n over Q(zeta_order).

    ``determinant_target`` is the common determinant every image must have
    (1 for SL_n) or None when no determinant constraint applies. Build
    instances through :func:`make_rep`, which checks the relators.
    """

    presentation: Presentation
    images: tuple[Matrix, ...]
    determinant_target: CyclotomicNumber | None
    order: int

    @property
    def rank(self) -> int:
        return self.images[0].rows if self.images else 0

    @cached_property
    def inverses(self) -> tuple[Matrix, ...]:
        return tuple(m.inverse() for m in self.images)

    def letter_image(self, gen: int, sign: int) -> Matrix:
        return self.images[gen] if sign > 0 else self.inverses[gen]

    def image(self, name: str) -> Matrix:
        return self.images[self.presentation.generator_names.index(name)]

    def identity(self) -> Matrix:
        return Matrix.identity(self.rank, self.order)

    def is_special_linear(self) -> bool:
        return self.determinant_target is not None and self.determinant_target.is_one()

    def to_json(self) -> dict:
        return {
            "generators": list(self.presentation.generator_names),
            "rank": self.rank,
            "field_order": self.order,
            "determinant": None if self.determinant_target is None else str(self.determinant_target),
            "images": {
                name: m.to_json() for name, m in zip(self.presentation.generator_names, self.images)
            },
        }


def _field_order(images: Sequence[Matrix], order: int | None) -> int:
    if order is not None:
        return order
    found = None
    for m in images:
        found = m.order if found is None else common_order(found, m.order)
    return DEFAULT_ORDER if found is None else found


def evaluate(r: Representation, w: Word) -> Matrix:
    """Product of the generator images along w."""
    result = r.identity()
    for gen, sign in w.letters:
        result = result @ r.letter_image(gen, sign)
    return result


def make_rep(
    p: Presentation,
    images: Sequence[Matrix],
    determinant_target: Scalar | None = 1,
    *,
    order: int | None = None,
) -> Representation:
    """Check shapes, determinants and relators, and return the verified representation.

    Raises RelationViolated with the first failing relator and its defect
    ``evaluate(r) - I``, or DeterminantMismatch.
    """
    if len(images) != p.generator_count:
        raise DimensionMismatch(
            f"{p.generator_count} generators but {len(images)} images"
        )
    order = _field_order(images, order)
    images = tuple(m.embed(order) for m in images)
    if images:
        n = images[0].rows
        for index, m in enumerate(images):
            if m.rows != n or m.cols != n:
                raise DimensionMismatch(
                    f"image of generator {index} is {m.rows}x{m.cols}, expected {n}x{n}"
                )
    target = None if determinant_target is None else as_field(determinant_target, order)
    for index, m in enumerate(images):
        det = m.determinant()
        if det.is_zero():
            raise DeterminantMismatch(index, det, target if target is not None else "nonzero")
        if target is not None and det != target:
            raise DeterminantMismatch(index, det, target)
    rep = Representation(p, images, target, order)
    identity = rep.identity()
    for index, relator in enumerate(p.relators):
        value = evaluate(rep, relator)
        if value != identity:
            logger.debug("relator %d fails: %s", index, p.format_word(relator))
            raise RelationViolated(index, value - identity)
    logger.debug(
        "verified rank-%d representation of %d generators over Q(zeta_%d)",
        rep.rank, p.generator_count, order,
    )
    return rep


def conjugate_by(r: Representation, s: Matrix) -> Representation:
    """The representation gamma -> S rho(gamma) S^-1."""
    s_inv = s.inverse()
    images = [s @ m @ s_inv for m in r.images]
    return make_rep(r.presentation, images, r.determinant_target, order=common_order(r.order, s.order))


def pullback(r: Representation, target: Presentation, word_images: Sequence[Word]) -> Representation:
    """rho o f for the homomorphism f: target -> r.presentation given on generators."""
    if len(word_images) != target.generator_count:
        raise DimensionMismatch(
            f"{target.generator_count} generators but {len(word_images)} word images"
        )
    images = [evaluate(r, w) for w in word_images]
    return make_rep(target, images, r.determinant_target, order=r.order)


@dataclass(frozen=True)
class Character:
    base_words: tuple[Word, ...]
    values: tuple[CyclotomicNumber, ...] = field(default=())

    def __getitem__(self, index: int) -> CyclotomicNumber:
        return self.values[index]

    def agrees_with(self, other: Character) -> bool:
        """Equality of trace values on a common word list."""
        return self.base_words == other.base_words and self.values == other.values


def character_of(r: Representation, words: Sequence[Word]) -> Character:
    words = tuple(words)
    return Character(words, tuple(evaluate(r, w).trace() for w in words))
