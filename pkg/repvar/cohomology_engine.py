"""Group cohomology in degrees 0-2 from a presentation.

Cochains on the presentation 2-complex: C^0 = M, C^1 = M^g (values on the
generators), C^2 = M^r (values on the relators). The coboundary C^1 -> C^2
is the relator Jacobian whose (j, i) block is the module action of the Fox
derivative dr_j/dx_i; a cocycle z satisfies sum_i (dr_j/dx_i) . z(x_i) = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from repvar.constructions import sl_basis, sl_coordinates
from repvar.cyclotomic import CyclotomicNumber
from repvar.errors import DimensionMismatch, NonzeroTrace
from repvar.linalg import Matrix, Vector, kernel_basis, rank, solve, vstack
from repvar.modules import AdjointModule, ModuleSpec, same_module_presentation
from repvar.representation import Representation
from repvar.words import fox_images

logger = logging.getLogger(__name__)


def relator_jacobian(module: ModuleSpec) -> Matrix:
    """(r*d) x (g*d) matrix of the coboundary C^1 -> C^2."""
    p = module.presentation
    d = module.dimension
    g = p.generator_count
    zero_block = Matrix.zeros(d, d, module.order)
    identity = Matrix.identity(d, module.order)
    rows: list[list[CyclotomicNumber]] = []
    for relator in p.relators:
        blocks = fox_images(relator, g, module.letter_action, identity)
        blocks = [zero_block if b is None else b for b in blocks]
        for i in range(d):
            rows.append([e for b in blocks for e in b.row(i)])
    jacobian = Matrix(len(rows), g * d, [e for row in rows for e in row], module.order)
    logger.debug("relator Jacobian %dx%d for %s", jacobian.rows, jacobian.cols, module.describe())
    return jacobian


def invariants_matrix(module: ModuleSpec) -> Matrix:
    """Stacked (action(g_i) - I); its kernel is H^0."""
    d = module.dimension
    identity = Matrix.identity(d, module.order)
    blocks = [module.letter_action(i, 1) - identity for i in range(module.presentation.generator_count)]
    if not blocks:
        return Matrix.zeros(0, d, module.order)
    return vstack(blocks)


@dataclass
class CocycleSpace:
    module_dim: int
    generator_count: int
    relator_jacobian: Matrix
    basis: list[Vector] = field(default_factory=list)
    module: ModuleSpec | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def split(self, vector: Sequence[CyclotomicNumber]) -> list[Vector]:
        """Flat cochain vector -> one module vector per generator."""
        d = self.module_dim
        return [tuple(vector[i * d:(i + 1) * d]) for i in range(self.generator_count)]

    def assignment(self, index: int) -> list:
        """Basis element ``index`` as module elements on the generators."""
        parts = self.split(self.basis[index])
        if self.module is None:
            return parts
        return [self.module.devectorize(v) for v in parts]

    def flatten(self, assignment: Sequence) -> Vector:
        if len(assignment) != self.generator_count:
            raise DimensionMismatch(
                f"cochain has {len(assignment)} values, expected {self.generator_count}"
            )
        flat: list[CyclotomicNumber] = []
        for value in assignment:
            v = self.module.vectorize(value) if self.module is not None else tuple(value)
            if len(v) != self.module_dim:
                raise DimensionMismatch(f"module value of length {len(v)}, expected {self.module_dim}")
            flat.extend(v)
        return tuple(flat)

    def satisfies_relators(self, assignment: Sequence) -> bool:
        return self.relator_jacobian.apply(self.flatten(assignment)) == tuple(
            [CyclotomicNumber.zero(self.relator_jacobian.order)] * self.relator_jacobian.rows
        )

    def coordinates(self, assignment: Sequence) -> Vector | None:
        """Coordinates in ``basis``, or None when the cochain is not a cocycle."""
        flat = self.flatten(assignment)
        order = self.relator_jacobian.order
        if not self.basis:
            return () if all(c.is_zero() for c in flat) else None
        columns = Matrix.from_rows(
            [[v[k] for v in self.basis] for k in range(len(flat))], order
        )
        return solve(columns, flat)

    def contains(self, assignment: Sequence) -> bool:
        return self.coordinates(assignment) is not None


def _resolve(r: Representation, module: ModuleSpec | None) -> ModuleSpec:
    if module is None:
        return AdjointModule(r, "sl")
    same_module_presentation(module, r)
    return module


def cocycle_space(r: Representation, module: ModuleSpec | None = None) -> CocycleSpace:
    """Z^1(Gamma; M); defaults to sl(n) with the adjoint action of r."""
    module = _resolve(r, module)
    jacobian = relator_jacobian(module)
    basis = kernel_basis(jacobian)
    logger.debug("dim Z^1 = %d (%d unknowns)", len(basis), jacobian.cols)
    return CocycleSpace(
        module_dim=module.dimension,
        generator_count=module.presentation.generator_count,
        relator_jacobian=jacobian,
        basis=basis,
        module=module,
    )


@dataclass
class CohomologyReport:
    h0: int
    z1: int
    b1: int
    h1: int
    h2_complex: int
    module: str
    module_dim: int
    generator_count: int
    relator_count: int

    def to_dict(self) -> dict:
        return {
            "h0": self.h0,
            "z1": self.z1,
            "b1": self.b1,
            "h1": self.h1,
            "h2_complex": self.h2_complex,
            "module": self.module,
            "module_dim": self.module_dim,
        }


def cohomology_dims(r: Representation, module: ModuleSpec | None = None) -> CohomologyReport:
    module = _resolve(r, module)
    d = module.dimension
    p = module.presentation
    jacobian = relator_jacobian(module)
    jacobian_rank = rank(jacobian)
    h0 = d - rank(invariants_matrix(module))
    z1 = p.generator_count * d - jacobian_rank
    b1 = d - h0
    report = CohomologyReport(
        h0=h0,
        z1=z1,
        b1=b1,
        h1=z1 - b1,
        h2_complex=p.relator_count * d - jacobian_rank,
        module=module.describe(),
        module_dim=d,
        generator_count=p.generator_count,
        relator_count=p.relator_count,
    )
    logger.info(
        "%s: h0=%d z1=%d b1=%d h1=%d h2=%d",
        report.module, report.h0, report.z1, report.b1, report.h1, report.h2_complex,
    )
    return report


@dataclass
class RegularityVerdict:
    regular: bool
    h0: int
    h1: int
    expected_h1: int
    predicted_component_dim: int
    boundary_tori: int
    rank: int

    def to_dict(self) -> dict:
        return {
            "regular": self.regular,
            "h0": self.h0,
            "h1": self.h1,
            "expected_h1": self.expected_h1,
            "predicted_component_dim": self.predicted_component_dim,
            "boundary_tori": self.boundary_tori,
        }


def check_infinitesimal_regularity(r: Representation, boundary_tori: int = 1) -> RegularityVerdict:
    """Compare dim H^1(sl(n)_Ad) with k(n-1) for k boundary tori."""
    if boundary_tori < 1:
        raise DimensionMismatch(f"boundary_tori must be >= 1, got {boundary_tori}")
    n = r.rank
    report = cohomology_dims(r, AdjointModule(r, "sl"))
    expected = boundary_tori * (n - 1)
    return RegularityVerdict(
        regular=report.h1 == expected,
        h0=report.h0,
        h1=report.h1,
        expected_h1=expected,
        predicted_component_dim=n * n - 1 + expected - report.h0,
        boundary_tori=boundary_tori,
        rank=n,
    )


def coboundary_of(r: Representation, x: Matrix) -> list[Matrix]:
    """The principal derivation u(g) = X - rho(g) X rho(g)^-1 on each generator."""
    if not x.trace().is_zero():
        raise NonzeroTrace(f"trace of X is {x.trace()}, expected 0")
    if x.shape != (r.rank, r.rank):
        raise DimensionMismatch(f"X is {x.rows}x{x.cols}, expected {r.rank}x{r.rank}")
    return [x - m @ x @ m_inv for m, m_inv in zip(r.images, r.inverses)]


def coboundary_space(r: Representation) -> list[Vector]:
    """Spanning set of B^1 for the adjoint sl(n) module, one cochain per basis element."""
    vectors = []
    for b in sl_basis(r.rank, r.order):
        flat: list[CyclotomicNumber] = []
        for value in coboundary_of(r, b):
            flat.extend(sl_coordinates(value))
        vectors.append(tuple(flat))
    return vectors


@dataclass
class TangentGapReport:
    z1: int
    known_local_dim: int | None
    gap: int | None
    strict: bool | None
    regular_point: bool | None

    def to_dict(self) -> dict:
        return {
            "z1": self.z1,
            "known_local_dim": self.known_local_dim,
            "gap": self.gap,
            "strict": self.strict,
            "regular_point": self.regular_point,
        }


def tangent_gap_report(r: Representation, known_local_dim: int | None = None) -> TangentGapReport:
    """dim Z^1 against an externally known local dimension of the variety at r."""
    space = cocycle_space(r)
    if known_local_dim is None:
        return TangentGapReport(space.dimension, None, None, None, None)
    gap = space.dimension - known_local_dim
    if gap > 0:
        logger.warning(
            "dim Z^1 = %d exceeds local dimension %d: singular or non-reduced point",
            space.dimension, known_local_dim,
        )
    return TangentGapReport(space.dimension, known_local_dim, gap, gap > 0, gap == 0)
