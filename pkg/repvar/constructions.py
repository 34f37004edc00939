"""Constructions of new representations from old ones.

Sums, tensor products, duals, character twists and symmetric powers, the
adjoint action on sl(n) in its fixed basis, and the abelian families
(diagonal, central, one-dimensional) that act through the abelianization.
"""
from __future__ import annotations

import logging
from typing import Sequence

from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber, Scalar, as_field, common_order
from repvar.errors import InputError, PresentationMismatch, RankNotTwo
from repvar.linalg import Matrix, block_diagonal, kronecker
from repvar.representation import Representation, evaluate, make_rep
from repvar.words import Presentation, Word

logger = logging.getLogger(__name__)


def _same_presentation(r1: Representation, r2: Representation) -> None:
    if r1.presentation != r2.presentation:
        raise PresentationMismatch("representations are defined on different presentations")


def _common_determinant(images: Sequence[Matrix]) -> CyclotomicNumber | None:
    """The shared determinant of all images, or None when they differ."""
    dets = [m.determinant() for m in images]
    if dets and all(d == dets[0] for d in dets):
        return dets[0]
    return None


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    _same_presentation(r1, r2)
    images = [block_diagonal(a, b) for a, b in zip(r1.images, r2.images)]
    return make_rep(r1.presentation, images, _common_determinant(images))


def tensor(r1: Representation, r2: Representation) -> Representation:
    _same_presentation(r1, r2)
    images = [kronecker(a, b) for a, b in zip(r1.images, r2.images)]
    return make_rep(r1.presentation, images, _common_determinant(images))


def dual(r: Representation) -> Representation:
    """rho*(gamma) = transpose(rho(gamma))^-1."""
    images = [m.transpose() for m in r.inverses]
    target = None if r.determinant_target is None else r.determinant_target.inverse()
    return make_rep(r.presentation, images, target, order=r.order)


def twist_by_character(r: Representation, lam: Scalar, weight: int) -> Representation:
    """Scale the image of each generator g by lam**(weight * phi(g))."""
    p = r.presentation
    if weight == 0:
        return r
    images = [m * (as_field(lam, r.order) ** (weight * p.phi(Word.generator(i)))) for i, m in enumerate(r.images)]
    return make_rep(p, images, _common_determinant(images))


def trivial_representation(p: Presentation, n: int = 1, order: int | None = None) -> Representation:
    order = DEFAULT_ORDER if order is None else order
    return make_rep(p, [Matrix.identity(n, order)] * p.generator_count, 1, order=order)


# ---------------------------------------------------------------------------
# Symmetric powers
# ---------------------------------------------------------------------------

def _poly_mul(a: list[CyclotomicNumber], b: list[CyclotomicNumber]) -> list[CyclotomicNumber]:
    zero = a[0] - a[0]
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def sym_power_matrix(g: Matrix, n: int) -> Matrix:
    """Matrix of g on binary forms of degree n-1 in the basis u^(n-1-k) v^k.

    Column k lists the v-power coefficients of (a u + c v)^(n-1-k) (b u + d v)^k.
    """
    if g.shape != (2, 2):
        raise RankNotTwo(f"symmetric powers need a 2x2 matrix, got {g.rows}x{g.cols}")
    if n < 1:
        raise InputError(f"symmetric power dimension must be >= 1, got {n}")
    m = n - 1
    one = CyclotomicNumber.one(g.order)
    first = [g[0, 0], g[1, 0]]
    second = [g[0, 1], g[1, 1]]
    columns = []
    for k in range(n):
        poly = [one]
        for _ in range(m - k):
            poly = _poly_mul(poly, first)
        for _ in range(k):
            poly = _poly_mul(poly, second)
        columns.append(poly)
    return Matrix.from_rows([[columns[k][j] for k in range(n)] for j in range(n)], g.order)


def sym_power(r: Representation, n: int) -> Representation:
    """r_n o rho: the action on degree-(n-1) binary forms."""
    if r.rank != 2:
        raise RankNotTwo(f"symmetric powers are defined for rank 2, got rank {r.rank}")
    images = [sym_power_matrix(m, n) for m in r.images]
    target = None
    if r.determinant_target is not None:
        target = r.determinant_target ** (n * (n - 1) // 2)
    return make_rep(r.presentation, images, target, order=r.order)


# ---------------------------------------------------------------------------
# Adjoint action on sl(n) and gl(n)
# ---------------------------------------------------------------------------

def sl_basis(n: int, order: int) -> list[Matrix]:
    """E_ij for i != j in lexicographic order, then H_k = E_kk - E_(k+1)(k+1)."""
    basis = [Matrix.unit(n, i, j, order) for i in range(n) for j in range(n) if i != j]
    for k in range(n - 1):
        basis.append(Matrix.unit(n, k, k, order) - Matrix.unit(n, k + 1, k + 1, order))
    return basis


def sl_coordinates(x: Matrix) -> tuple[CyclotomicNumber, ...]:
    """Coordinates of a trace-zero matrix in the sl_basis."""
    n = x.rows
    coords = [x[i, j] for i in range(n) for j in range(n) if i != j]
    running = CyclotomicNumber.zero(x.order)
    for k in range(n - 1):
        running = running + x[k, k]
        coords.append(running)
    return tuple(coords)


def sl_matrix(coords: Sequence[Scalar], n: int, order: int) -> Matrix:
    """Inverse of sl_coordinates."""
    if len(coords) != n * n - 1:
        raise InputError(f"sl({n}) has dimension {n * n - 1}, got {len(coords)} coordinates")
    result = Matrix.zeros(n, n, order)
    for c, b in zip(coords, sl_basis(n, order)):
        if c:
            result = result + b * c
    return result


def ad_matrix(g: Matrix, g_inv: Matrix | None = None, algebra: str = "sl") -> Matrix:
    """Matrix of X -> g X g^-1 on sl(n) (fixed basis) or gl(n) (row-major E_ij)."""
    g_inv = g.inverse() if g_inv is None else g_inv
    n = g.rows
    if algebra == "gl":
        # vec(g X g^-1) = (g (x) g^-T) vec(X) for row-major vec
        return kronecker(g, g_inv.transpose())
    columns = [sl_coordinates(g @ b @ g_inv) for b in sl_basis(n, g.order)]
    d = len(columns)
    return Matrix.from_rows([[columns[j][i] for j in range(d)] for i in range(d)], g.order)


def adjoint_module_action(r: Representation, gamma: Word) -> Matrix:
    """Ad_{rho(gamma)} on sl(n) in the sl_basis."""
    g = evaluate(r, gamma)
    return ad_matrix(g, evaluate(r, gamma.inverse()))


# ---------------------------------------------------------------------------
# Representations through the abelianization
# ---------------------------------------------------------------------------

def abelian_character(p: Presentation, lam: Scalar, order: int | None = None) -> Representation:
    """The one-dimensional representation gamma -> lam**phi(gamma)."""
    if order is None:
        order = lam.order if isinstance(lam, CyclotomicNumber) else DEFAULT_ORDER
    value = as_field(lam, order)
    images = [Matrix.diagonal([value ** p.phi(Word.generator(i))], order) for i in range(p.generator_count)]
    return make_rep(p, images, _common_determinant(images), order=order)


def diagonal_representation(p: Presentation, eigenvalues: Sequence[Scalar], order: int | None = None) -> Representation:
    """rho_D(gamma) = D**phi(gamma) for D = diag(eigenvalues)."""
    d = Matrix.diagonal(list(eigenvalues), order)
    images = [d ** p.phi(Word.generator(i)) for i in range(p.generator_count)]
    return make_rep(p, images, _common_determinant(images) if images else 1, order=d.order)


def central_representation(p: Presentation, zeta: Scalar, n: int, order: int | None = None) -> Representation:
    """rho_0(gamma) = zeta**phi(gamma) * I_n."""
    if isinstance(zeta, CyclotomicNumber):
        order = zeta.order if order is None else common_order(order, zeta.order)
    return diagonal_representation(p, [zeta] * n, order)
