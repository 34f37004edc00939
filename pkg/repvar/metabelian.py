"""Metabelian representations built from a twisted cocycle.

For a nonzero alpha and n >= 2, a cocycle z~ with values in row vectors of
length n-1 satisfies z~(uv) = z~(u) + alpha^phi(u) z~(v) J^phi(u), where
J = I + N is the upper unipotent Jordan block. It defines

    rho~(g) = ( alpha^phi(g)   z~(g) J^-phi(g) )
              ( 0              J^-phi(g)       )

and, for lam with lam^n = alpha, the SL_n representation lam^-phi(g) rho~(g).
"""
from __future__ import annotations

import logging
from functools import lru_cache
from math import comb
from typing import Sequence

from repvar.cohomology_engine import CocycleSpace, relator_jacobian
from repvar.constructions import diagonal_representation
from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import CocycleConditionViolated, DimensionMismatch, RootMismatch
from repvar.linalg import Matrix, block_diagonal, kernel_basis
from repvar.modules import MetabelianModule, jordan_block
from repvar.representation import Representation, conjugate_by, make_rep
from repvar.words import Presentation, Word

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def p_matrix(n: int, order: int = DEFAULT_ORDER) -> Matrix:
    """P_n with p_ij = (-1)^j C(j, i) (1-based); P_n^2 = I and P_n J P_n^-1 = J^-1."""
    entries = [(-1) ** j * comb(j, i) for i in range(1, n + 1) for j in range(1, n + 1)]
    return Matrix(n, n, entries, order)


def _order_for(alpha: Scalar, order: int | None) -> int:
    if order is not None:
        return order
    return alpha.order if isinstance(alpha, CyclotomicNumber) else DEFAULT_ORDER


def solve_metabelian_cocycles(
    p: Presentation, alpha: Scalar, n: int, order: int | None = None
) -> CocycleSpace:
    """Z^1 of the (alpha, J_(n-1)) module; basis vectors hold z~ on each generator."""
    module = MetabelianModule(p, alpha, n, _order_for(alpha, order))
    jacobian = relator_jacobian(module)
    basis = kernel_basis(jacobian)
    logger.debug("metabelian cocycles for alpha=%s, n=%d: dimension %d", module.alpha, n, len(basis))
    return CocycleSpace(
        module_dim=module.dimension,
        generator_count=p.generator_count,
        relator_jacobian=jacobian,
        basis=basis,
        module=module,
    )


def _check_cocycle(module: MetabelianModule, z_tilde: Sequence[Sequence[CyclotomicNumber]]) -> None:
    d = module.dimension
    flat = [as_field(c, module.order) for value in z_tilde for c in value]
    residual = relator_jacobian(module).apply(flat)
    for index in range(module.presentation.relator_count):
        if any(not c.is_zero() for c in residual[index * d:(index + 1) * d]):
            raise CocycleConditionViolated(index)


def build_metabelian(
    p: Presentation,
    alpha: Scalar,
    n: int,
    z_tilde: Sequence[Sequence[Scalar]],
    lam: Scalar | None = None,
    *,
    order: int | None = None,
) -> Representation:
    """The GL_n representation rho~ or, when lam is given, its SL_n normalisation."""
    order = _order_for(alpha, order)
    if isinstance(lam, CyclotomicNumber):
        order = common_order(order, lam.order)
    module = MetabelianModule(p, alpha, n, order)
    if len(z_tilde) != p.generator_count:
        raise DimensionMismatch(f"{p.generator_count} generators but {len(z_tilde)} cocycle values")
    rows = [[as_field(c, order) for c in value] for value in z_tilde]
    for value in rows:
        if len(value) != n - 1:
            raise DimensionMismatch(f"cocycle values must have length {n - 1}, got {len(value)}")
    _check_cocycle(module, rows)

    scale = None
    if lam is not None:
        lam = as_field(lam, order)
        if lam ** n != module.alpha:
            raise RootMismatch(f"{lam}^{n} = {lam ** n}, expected alpha = {module.alpha}")
        scale = lam

    j = jordan_block(n - 1, order)
    images = []
    for gen, value in enumerate(rows):
        k = p.phi(Word.generator(gen))
        j_inv_k = j ** (-k)
        shifted = Matrix(1, n - 1, value, order) @ j_inv_k
        top = [module.alpha ** k, *shifted.row(0)]
        bottom = [[CyclotomicNumber.zero(order), *j_inv_k.row(i)] for i in range(n - 1)]
        m = Matrix.from_rows([top, *bottom], order)
        if scale is not None:
            m = m * scale ** (-k)
        images.append(m)
    target = 1 if scale is not None else None
    rep = make_rep(p, images, target, order=order)
    logger.info("built metabelian rank-%d representation (alpha=%s)", n, module.alpha)
    return rep


def to_gln_form(r: Representation) -> Representation:
    """Conjugate by diag(1, P_(n-1)) so the lower block becomes J^phi.

    The top-right row becomes z = z~ P_(n-1); in particular z_1 = -z~_1.
    """
    n = r.rank
    s = block_diagonal(Matrix.identity(1, r.order), p_matrix(n - 1, r.order))
    return conjugate_by(r, s)


def diagonal_limit(p: Presentation, lam: Scalar, n: int, order: int | None = None) -> Representation:
    """Diagonal representation with meridian image diag(lam^(n-1), lam^-1, ..., lam^-1).

    It has the character of the SL_n metabelian representation for lam and
    lies in the closure of its orbit.
    """
    order = _order_for(lam, order)
    value = as_field(lam, order)
    return diagonal_representation(p, [value ** (n - 1)] + [value ** -1] * (n - 1), order)
