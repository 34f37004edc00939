"""Coefficient modules for cohomology and twisted Fox matrices.

A module is a finite-dimensional vector space with a left action of the
group, given by the matrix of each generator letter. Vectors are stored as
coordinate tuples; ``vectorize`` turns a matrix-shaped module element into
coordinates.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Sequence

from repvar.constructions import ad_matrix, sl_coordinates, sl_matrix
from repvar.cyclotomic import CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import DimensionMismatch, ModuleActionUndefined, PresentationMismatch
from repvar.expressions import parse_field_element
from repvar.linalg import Matrix, Vector, kronecker
from repvar.representation import Representation
from repvar.words import Presentation, Word

logger = logging.getLogger(__name__)


class ModuleSpec(ABC):
    name: str = "module"

    def __init__(self, presentation: Presentation, order: int):
        self.presentation = presentation
        self.order = order
        self._letters: dict[tuple[int, int], Matrix] = {}

    @property
    @abstractmethod
    def dimension(self) -> int:
        ...

    @abstractmethod
    def generator_action(self, gen: int) -> Matrix:
        """Matrix of the action of generator ``gen``."""
        ...

    def letter_action(self, gen: int, sign: int) -> Matrix:
        key = (gen, sign)
        if key not in self._letters:
            m = self.generator_action(gen)
            self._letters[key] = m if sign > 0 else m.inverse()
        return self._letters[key]

    def word_action(self, w: Word) -> Matrix:
        result = Matrix.identity(self.dimension, self.order)
        for gen, sign in w.letters:
            result = result @ self.letter_action(gen, sign)
        return result

    def vectorize(self, value) -> Vector:
        if isinstance(value, Matrix):
            return value.vectorize()
        return tuple(as_field(c, self.order) for c in value)

    def devectorize(self, vector: Sequence[CyclotomicNumber]):
        return tuple(vector)

    def describe(self) -> str:
        return self.name


class AdjointModule(ModuleSpec):
    """sl(n) or gl(n) with gamma acting by conjugation with rho(gamma)."""

    def __init__(self, rep: Representation, algebra: str = "sl"):
        if algebra not in ("sl", "gl"):
            raise ModuleActionUndefined(f"unknown Lie algebra {algebra!r}")
        super().__init__(rep.presentation, rep.order)
        self.rep = rep
        self.algebra = algebra
        self.name = f"ad-{algebra}"

    @property
    def dimension(self) -> int:
        n = self.rep.rank
        return n * n - 1 if self.algebra == "sl" else n * n

    def generator_action(self, gen: int) -> Matrix:
        return ad_matrix(self.rep.images[gen], self.rep.inverses[gen], self.algebra)

    def letter_action(self, gen: int, sign: int) -> Matrix:
        key = (gen, sign)
        if key not in self._letters:
            g = self.rep.letter_image(gen, sign)
            g_inv = self.rep.letter_image(gen, -sign)
            self._letters[key] = ad_matrix(g, g_inv, self.algebra)
        return self._letters[key]

    def vectorize(self, value) -> Vector:
        if isinstance(value, Matrix):
            return sl_coordinates(value) if self.algebra == "sl" else value.vectorize()
        return super().vectorize(value)

    def devectorize(self, vector: Sequence[CyclotomicNumber]) -> Matrix:
        n = self.rep.rank
        if self.algebra == "sl":
            return sl_matrix(vector, n, self.order)
        return Matrix(n, n, list(vector), self.order)


class RepresentationModule(ModuleSpec):
    """K^n with gamma acting by rho(gamma)."""

    name = "standard"

    def __init__(self, rep: Representation):
        super().__init__(rep.presentation, rep.order)
        self.rep = rep

    @property
    def dimension(self) -> int:
        return self.rep.rank

    def generator_action(self, gen: int) -> Matrix:
        return self.rep.images[gen]

    def letter_action(self, gen: int, sign: int) -> Matrix:
        return self.rep.letter_image(gen, sign)


class CharacterModule(ModuleSpec):
    """The line K with gamma acting by lam**phi(gamma)."""

    def __init__(self, presentation: Presentation, lam: Scalar, order: int):
        super().__init__(presentation, order)
        self.lam = as_field(lam, order)
        if self.lam.is_zero():
            raise ModuleActionUndefined("the character value must be nonzero")
        self.name = f"one-dim:{self.lam}"

    @property
    def dimension(self) -> int:
        return 1

    def generator_action(self, gen: int) -> Matrix:
        exponent = self.presentation.phi(Word.generator(gen))
        return Matrix.diagonal([self.lam ** exponent], self.order)


class HomModule(ModuleSpec):
    """M_{a,b} = Hom(K^b, K^a) with gamma . X = alpha(gamma) X beta(gamma)^-1.

    Coordinates are the row-major entries of X, so the action matrix is
    alpha (x) beta^-T, the representation alpha (x) beta*.
    """

    def __init__(self, alpha: Representation, beta: Representation):
        if alpha.presentation != beta.presentation:
            raise PresentationMismatch("alpha and beta are defined on different presentations")
        order = common_order(alpha.order, beta.order)
        super().__init__(alpha.presentation, order)
        self.alpha = alpha
        self.beta = beta
        self.name = f"hom:{alpha.rank},{beta.rank}"

    @property
    def dimension(self) -> int:
        return self.alpha.rank * self.beta.rank

    def generator_action(self, gen: int) -> Matrix:
        a = self.alpha.images[gen].embed(self.order)
        b_inv = self.beta.inverses[gen].embed(self.order)
        return kronecker(a, b_inv.transpose())

    def devectorize(self, vector: Sequence[CyclotomicNumber]) -> Matrix:
        return Matrix(self.alpha.rank, self.beta.rank, list(vector), self.order)


@lru_cache(maxsize=None)
def jordan_block(size: int, order: int) -> Matrix:
    """J = I + N, the upper unipotent Jordan block."""
    entries: list[Scalar] = []
    for i in range(size):
        for j in range(size):
            entries.append(1 if j in (i, i + 1) else 0)
    return Matrix(size, size, entries, order)


class MetabelianModule(ModuleSpec):
    """Row vectors a in K^(n-1) with t^k . a = alpha^k a J^k.

    A generator g acts through phi(g); in column coordinates the action
    matrix is alpha^phi(g) (J^phi(g))^T.
    """

    def __init__(self, presentation: Presentation, alpha: Scalar, n: int, order: int):
        if n < 2:
            raise ModuleActionUndefined(f"metabelian modules need n >= 2, got {n}")
        super().__init__(presentation, order)
        self.alpha = as_field(alpha, order)
        if self.alpha.is_zero():
            raise ModuleActionUndefined("alpha must be nonzero")
        self.n = n
        self.name = f"metabelian:{self.alpha},{n}"

    @property
    def dimension(self) -> int:
        return self.n - 1

    def generator_action(self, gen: int) -> Matrix:
        k = self.presentation.phi(Word.generator(gen))
        j = jordan_block(self.n - 1, self.order)
        return (j ** k).transpose() * (self.alpha ** k)


def same_module_presentation(module: ModuleSpec, rep: Representation) -> None:
    if module.presentation != rep.presentation:
        raise ModuleActionUndefined("module and representation use different presentations")


def module_from_spec(rep: Representation, spec: str) -> ModuleSpec:
    """Build a module from its short text form: ad-sl, ad-gl, standard,
    one-dim:LAMBDA or metabelian:ALPHA,N. ``hom`` needs two representations and
    is built directly with HomModule."""
    kind, _, argument = spec.partition(":")
    if kind == "ad-sl":
        return AdjointModule(rep, "sl")
    if kind == "ad-gl":
        return AdjointModule(rep, "gl")
    if kind == "standard":
        return RepresentationModule(rep)
    if kind == "one-dim" and argument:
        return CharacterModule(rep.presentation, parse_field_element(argument, rep.order), rep.order)
    if kind == "metabelian" and argument:
        alpha_text, _, n_text = argument.rpartition(",")
        if not alpha_text or not n_text.strip().isdigit():
            raise ModuleActionUndefined(f"metabelian module needs ALPHA,N, got {argument!r}")
        return MetabelianModule(rep.presentation, parse_field_element(alpha_text, rep.order), int(n_text), rep.order)
    raise ModuleActionUndefined(f"unknown module {spec!r}")


def check_dimension(module: ModuleSpec, vectors: Sequence[Vector]) -> None:
    for v in vectors:
        if len(v) != module.dimension:
            raise DimensionMismatch(
                f"module vector of length {len(v)}, expected {module.dimension}"
            )
