"""Formal deformations rho_k(gamma) = exp(sum_i t^i u_i(gamma)) rho(gamma).

Power series in t are truncated at a fixed precision; every coefficient is an
exact matrix. A deformation of order k is a homomorphism modulo t^(k+1).
Extending it to order k+1 is a linear problem in u_(k+1) whose matrix is the
relator Jacobian of the adjoint module; the right-hand side is the t^(k+1)
defect of the relators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from repvar.cohomology_engine import relator_jacobian
from repvar.constructions import sl_coordinates, sl_matrix
from repvar.cyclotomic import CyclotomicNumber
from repvar.errors import DimensionMismatch, InvalidTruncation, NonzeroTrace
from repvar.linalg import Matrix, Vector, solve
from repvar.modules import AdjointModule
from repvar.representation import Representation
from repvar.words import Word

logger = logging.getLogger(__name__)


class SeriesMatrix:
    """sum_k coeffs[k] t^k modulo t^precision."""

    __slots__ = ("coeffs", "precision", "size", "order")

    def __init__(self, coeffs: Sequence[Matrix], precision: int, size: int, order: int):
        zero = Matrix.zeros(size, size, order)
        padded = list(coeffs[:precision])
        padded.extend([zero] * (precision - len(padded)))
        self.coeffs = tuple(padded)
        self.precision = precision
        self.size = size
        self.order = order

    @classmethod
    def constant(cls, m: Matrix, precision: int) -> SeriesMatrix:
        return cls([m], precision, m.rows, m.order)

    @classmethod
    def identity(cls, size: int, precision: int, order: int) -> SeriesMatrix:
        return cls.constant(Matrix.identity(size, order), precision)

    def coefficient(self, k: int) -> Matrix:
        return self.coeffs[k]

    def __add__(self, other: SeriesMatrix) -> SeriesMatrix:
        return SeriesMatrix([a + b for a, b in zip(self.coeffs, other.coeffs)], self.precision, self.size, self.order)

    def __sub__(self, other: SeriesMatrix) -> SeriesMatrix:
        return SeriesMatrix([a - b for a, b in zip(self.coeffs, other.coeffs)], self.precision, self.size, self.order)

    def __neg__(self) -> SeriesMatrix:
        return SeriesMatrix([-a for a in self.coeffs], self.precision, self.size, self.order)

    def scale(self, c) -> SeriesMatrix:
        return SeriesMatrix([a * c for a in self.coeffs], self.precision, self.size, self.order)

    def __matmul__(self, other: SeriesMatrix) -> SeriesMatrix:
        out = []
        for k in range(self.precision):
            acc = Matrix.zeros(self.size, self.size, self.order)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a @ b
            out.append(acc)
        return SeriesMatrix(out, self.precision, self.size, self.order)

    def valuation(self) -> int:
        """Smallest k with a nonzero coefficient (precision when zero)."""
        return next((k for k, c in enumerate(self.coeffs) if not c.is_zero()), self.precision)

    def exp(self) -> SeriesMatrix:
        """Truncated exponential; requires a zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs a series without constant term")
        result = SeriesMatrix.identity(self.size, self.precision, self.order)
        power = result
        for j in range(1, self.precision):
            power = power @ self
            if power.valuation() >= self.precision:
                break
            result = result + power.scale(CyclotomicNumber.one(self.order) / factorial(j))
        return result


@dataclass
class TruncatedDeformation:
    """u_1..u_k given as sl(n) matrices on each generator."""

    base: Representation
    cochains: list[list[Matrix]] = field(default_factory=list)

    def __post_init__(self):
        g = self.base.presentation.generator_count
        n = self.base.rank
        for level, cochain in enumerate(self.cochains, start=1):
            if len(cochain) != g:
                raise DimensionMismatch(f"u_{level} has {len(cochain)} values, expected {g}")
            for value in cochain:
                if value.shape != (n, n):
                    raise DimensionMismatch(f"u_{level} values must be {n}x{n}")
                if not value.trace().is_zero():
                    raise NonzeroTrace(f"u_{level} has a value of trace {value.trace()}")

    @property
    def order(self) -> int:
        return len(self.cochains)

    def _exponent(self, gen: int, precision: int) -> SeriesMatrix:
        n = self.base.rank
        coeffs = [Matrix.zeros(n, n, self.base.order)]
        coeffs.extend(cochain[gen] for cochain in self.cochains)
        return SeriesMatrix(coeffs, precision, n, self.base.order)

    def letter_series(self, gen: int, sign: int, precision: int) -> SeriesMatrix:
        """rho_k(g) or its inverse rho(g)^-1 exp(-U(g))."""
        exponent = self._exponent(gen, precision)
        if sign > 0:
            return exponent.exp() @ SeriesMatrix.constant(self.base.images[gen], precision)
        return SeriesMatrix.constant(self.base.inverses[gen], precision) @ (-exponent).exp()

    def evaluate(self, w: Word, precision: int) -> SeriesMatrix:
        cache: dict[tuple[int, int], SeriesMatrix] = {}
        result = SeriesMatrix.identity(self.base.rank, precision, self.base.order)
        for letter in w.letters:
            if letter not in cache:
                cache[letter] = self.letter_series(letter[0], letter[1], precision)
            result = result @ cache[letter]
        return result

    def extended(self, cochain: Sequence[Matrix]) -> TruncatedDeformation:
        return TruncatedDeformation(self.base, [*self.cochains, list(cochain)])


def verify(d: TruncatedDeformation) -> bool:
    """Raise InvalidTruncation unless every relator is I modulo t^(k+1)."""
    precision = d.order + 1
    identity = SeriesMatrix.identity(d.base.rank, precision, d.base.order)
    for index, relator in enumerate(d.base.presentation.relators):
        defect = d.evaluate(relator, precision) - identity
        if defect.valuation() < precision:
            raise InvalidTruncation(d.order, index)
    return True


@dataclass
class ObstructionResult:
    order: int
    extendable: bool
    extension: list[Matrix] | None = None
    defect: Vector | None = None
    defect_matrices: list[Matrix] = field(default_factory=list)

    def to_dict(self, presentation=None) -> dict:
        return {
            "order": self.order,
            "extendable": self.extendable,
            "extension": None if self.extension is None else [m.to_json() for m in self.extension],
            "defect": None if self.defect is None else [str(c) for c in self.defect],
        }


def obstruction_step(d: TruncatedDeformation) -> ObstructionResult:
    """Find u_(k+1) making rho_(k+1) a homomorphism modulo t^(k+2), or report the defect."""
    verify(d)
    k = d.order
    precision = k + 2
    base = d.base
    n = base.rank
    defects: list[Matrix] = []
    rhs: list[CyclotomicNumber] = []
    for relator in base.presentation.relators:
        value = d.evaluate(relator, precision)
        top = value.coefficient(k + 1)
        defects.append(top)
        rhs.extend(-c for c in sl_coordinates(top))
    jacobian = relator_jacobian(AdjointModule(base, "sl"))
    solution = solve(jacobian, rhs)
    if solution is None:
        logger.info("order %d: obstructed", k + 1)
        return ObstructionResult(
            order=k + 1,
            extendable=False,
            defect=tuple(-c for c in rhs),
            defect_matrices=defects,
        )
    dim = n * n - 1
    extension = [
        sl_matrix(solution[i * dim:(i + 1) * dim], n, base.order)
        for i in range(base.presentation.generator_count)
    ]
    logger.info("order %d: extension found", k + 1)
    return ObstructionResult(order=k + 1, extendable=True, extension=extension, defect_matrices=defects)


def extend(d: TruncatedDeformation, steps: int) -> tuple[TruncatedDeformation, ObstructionResult | None]:
    """Run obstruction_step repeatedly; stops at the first obstruction."""
    last = None
    for _ in range(steps):
        last = obstruction_step(d)
        if not last.extendable:
            return d, last
        d = d.extended(last.extension)
    return d, last
