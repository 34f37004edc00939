"""Trefoil knot group <x, y | x^2 = y^3>, phi(x) = 3, phi(y) = 2."""
from __future__ import annotations

from repvar.alexander_engine import deformation_condition_n2, sym_power_condition, untwisted_alexander
from repvar.catalog.base import Assertion, CatalogEntry, ParameterDef
from repvar.cohomology_engine import (
    check_infinitesimal_regularity,
    cocycle_space,
    cohomology_dims,
    tangent_gap_report,
)
from repvar.constructions import central_representation, diagonal_representation
from repvar.cyclotomic import CyclotomicNumber, Scalar, as_field, root_of_unity
from repvar.errors import InputError
from repvar.expressions import parse_field_element
from repvar.irreducibility import is_invariant, is_irreducible
from repvar.laurent import LaurentPoly
from repvar.linalg import LaurentMatrix, Matrix
from repvar.metabelian import build_metabelian, diagonal_limit, solve_metabelian_cocycles
from repvar.presentation_parser import parse_presentation, parse_word_list
from repvar.representation import Representation, character_of, make_rep
from repvar.words import Presentation

FIELD_ORDER = 12

TREFOIL = parse_presentation("gens x, y; rel x^2 = y^3; ab x=3, y=2;")


def _zeta(k: int, n: int = 12) -> CyclotomicNumber:
    return root_of_unity(n, k, FIELD_ORDER)


def alpha_s(s: Scalar) -> Representation:
    """The SL(2) family x -> (i 0; s -i), y -> (eta, conj(eta) - eta; 0, conj(eta)), eta = zeta_6."""
    s = as_field(s, FIELD_ORDER)
    i = _zeta(1, 4)
    eta = _zeta(1, 6)
    eta_bar = eta.conjugate()
    x = Matrix.from_rows([[i, 0], [s, -i]], FIELD_ORDER)
    y = Matrix.from_rows([[eta, eta_bar - eta], [0, eta_bar]], FIELD_ORDER)
    return make_rep(TREFOIL, [x, y], order=FIELD_ORDER)


def trefoil_rho_st(s: Scalar, t: Scalar) -> Representation:
    """SL(3) representation with x^2 = y^3 = I; irreducible off s = 0, t = 0, s + t = 2."""
    s = as_field(s, FIELD_ORDER)
    t = as_field(t, FIELD_ORDER)
    w = _zeta(1, 3)
    x = Matrix.from_rows([[1, 0, 0], [s, -1, 0], [t, 0, -1]], FIELD_ORDER)
    y = Matrix.from_rows([[1, w - 1, w * w - 1], [0, w, 0], [0, 0, w * w]], FIELD_ORDER)
    return make_rep(TREFOIL, [x, y], order=FIELD_ORDER)


def rho_st_reducible(s: CyclotomicNumber, t: CyclotomicNumber) -> bool:
    return s.is_zero() or t.is_zero() or (s + t - 2).is_zero()


def conjugation_limit(r: Representation, p: LaurentMatrix, p_inv: LaurentMatrix) -> Representation:
    """lim_{t -> 0} P(t) rho P(t)^-1, when every entry is a polynomial in t."""
    images = []
    for m in r.images:
        conjugated = p @ LaurentMatrix.from_matrix(m) @ p_inv
        for entry in conjugated.entries:
            if not entry.is_zero() and entry.low < 0:
                raise InputError("the conjugation limit does not exist (negative power of t)")
        images.append(Matrix(m.rows, m.cols, [e.coefficient(0) for e in conjugated.entries], r.order))
    return make_rep(r.presentation, images, r.determinant_target, order=r.order)


def _laurent(rows: list[list[tuple[int, int]]]) -> LaurentMatrix:
    """Rows of (coefficient, exponent) monomials; coefficient 0 is the zero entry."""
    one = CyclotomicNumber.one(FIELD_ORDER)
    entries = [
        LaurentPoly.zero(FIELD_ORDER) if c == 0 else LaurentPoly.monomial(one * c, e)
        for row in rows
        for c, e in row
    ]
    return LaurentMatrix(len(rows), len(rows[0]), entries, FIELD_ORDER)


def alpha_0_limit() -> Representation:
    p = _laurent([[(1, 1), (0, 0)], [(0, 0), (1, -1)]])
    p_inv = _laurent([[(1, -1), (0, 0)], [(0, 0), (1, 1)]])
    return conjugation_limit(alpha_s(0), p, p_inv)


def alpha_2i_limit() -> Representation:
    p = _laurent([[(1, -1), (-1, -1)], [(1, 1), (0, 0)]])
    p_inv = _laurent([[(0, 0), (1, -1)], [(-1, 1), (1, -1)]])
    return conjugation_limit(alpha_s(2 * _zeta(1, 4)), p, p_inv)


def rho_zeta(zeta: CyclotomicNumber) -> Representation:
    return diagonal_representation(TREFOIL, [zeta, zeta.inverse()], FIELD_ORDER)


class TrefoilEntry(CatalogEntry):
    name = "trefoil"
    description = (
        "Trefoil <x,y | x^2=y^3>: SL(2) family alpha_s and its limits, SL(3) family rho_st, "
        "Alexander polynomial, central and metabelian representations."
    )
    field_order = FIELD_ORDER

    def get_parameters(self) -> list[ParameterDef]:
        return [
            ParameterDef("s", "str", "1", description="parameter s of alpha_s and rho_st"),
            ParameterDef("t", "str", "1", description="parameter t of rho_st"),
        ]

    def presentation(self, params: dict) -> Presentation:
        return TREFOIL

    def representations(self, params: dict) -> dict:
        return {
            "alpha_s": alpha_s,
            "rho_st": trefoil_rho_st,
            "central": lambda zeta, n: central_representation(TREFOIL, zeta, n, FIELD_ORDER),
            "metabelian": lambda z_tilde: build_metabelian(TREFOIL, _zeta(1, 6), 2, z_tilde, _zeta(1)),
        }

    def assertions(self, params: dict) -> list[Assertion]:
        s = parse_field_element(params["s"], FIELD_ORDER)
        t = parse_field_element(params["t"], FIELD_ORDER)
        i = _zeta(1, 4)
        eta = _zeta(1, 6)
        zeta = _zeta(1)
        words = parse_word_list("x, y, x y^-1, x y x^-1 y^-1, x^2 y", TREFOIL)
        metabelian = lambda: build_metabelian(TREFOIL, eta, 2, [[1], [0]], zeta)

        checks = [
            Assertion("Delta_1", "t^2 - t + 1",
                      lambda: str(untwisted_alexander(TREFOIL, FIELD_ORDER)),
                      "Fox calculus on x^2 y^-3"),
            Assertion("Delta(eta) = 0", True,
                      lambda: untwisted_alexander(TREFOIL, FIELD_ORDER).evaluate(eta).is_zero(),
                      "eta^2 - eta + 1 = 0"),
            Assertion("zeta_12^2 simple root", True,
                      lambda: deformation_condition_n2(TREFOIL, zeta).evaluation.is_simple_root,
                      "Delta'(eta) != 0"),
            Assertion("lambda = 1 not a root", False,
                      lambda: deformation_condition_n2(TREFOIL, 1, FIELD_ORDER).evaluation.is_root,
                      "Delta(1) = 1"),
            Assertion("alpha_s irreducible", not (s.is_zero() or s == 2 * i),
                      lambda: is_irreducible(alpha_s(s)).irreducible,
                      "irreducible iff s != 0, 2i"),
            Assertion("alpha_0 reducible", False, lambda: is_irreducible(alpha_s(0)).irreducible,
                      "invariant line e1"),
            Assertion("alpha_2i reducible", False, lambda: is_irreducible(alpha_s(2 * i)).irreducible,
                      "invariant line (1, 1)"),
            Assertion("lim P(t).alpha_0 = rho_zeta", True,
                      lambda: alpha_0_limit().images == rho_zeta(zeta).images,
                      "P(t) = diag(t, 1/t), zeta = zeta_12"),
            Assertion("lim P(t).alpha_2i = rho_-zeta", True,
                      lambda: alpha_2i_limit().images == rho_zeta(-zeta).images,
                      "P(t) = (1/t, -1/t; t, 0)"),
            Assertion("rho_st irreducible", not rho_st_reducible(s, t),
                      lambda: is_irreducible(trefoil_rho_st(s, t)).irreducible,
                      "reducible iff s = 0, t = 0 or s + t = 2"),
            Assertion("rho_00 reducible", False,
                      lambda: is_irreducible(trefoil_rho_st(0, 0)).irreducible, "complete flag"),
            Assertion("rho_02 reducible", False,
                      lambda: is_irreducible(trefoil_rho_st(0, 2)).irreducible, "complete flag"),
        ]
        for n, root in ((2, -1), (3, _zeta(1, 3)), (4, i)):
            checks.append(Assertion(
                f"central n={n}: dim Z^1", n * n - 1,
                lambda root=root, n=n: cocycle_space(central_representation(TREFOIL, root, n, FIELD_ORDER)).dimension,
                "sl(n) is a trivial module",
            ))
            checks.append(Assertion(
                f"central n={n}: tangent gap", 0,
                lambda root=root, n=n: tangent_gap_report(
                    central_representation(TREFOIL, root, n, FIELD_ORDER), n * n - 1).gap,
                "regular point of dimension n^2 - 1",
            ))
        checks += [
            Assertion("metabelian cocycles at eta", 2,
                      lambda: solve_metabelian_cocycles(TREFOIL, eta, 2).dimension, "Delta(eta) = 0"),
            Assertion("metabelian cocycles at i", 1,
                      lambda: solve_metabelian_cocycles(TREFOIL, i, 2).dimension, "Delta(i) != 0"),
            Assertion("metabelian rep infinitesimally regular", True,
                      lambda: check_infinitesimal_regularity(metabelian()).regular, "h1 = n - 1"),
            Assertion("metabelian character = diagonal limit", True,
                      lambda: character_of(metabelian(), words).agrees_with(
                          character_of(diagonal_limit(TREFOIL, zeta, 2), words)),
                      "orbit closure contains the diagonal limit"),
            Assertion("sym power n=3 hypotheses", True,
                      lambda: sym_power_condition(TREFOIL, zeta, 3).hypotheses_hold,
                      "Delta(zeta_3) != 0"),
        ]
        return checks


TREFOIL_WIRTINGER = parse_presentation("gens S, T; rel S T S = T S T; ab S=1, T=1;")


def wirtinger_nonabelian_reducible(zeta: CyclotomicNumber | None = None) -> Representation:
    """S -> diag(z, 1/z), T -> (z 1; 0 1/z); a homomorphism exactly when z^2 + z^-2 = 1."""
    zeta = _zeta(1) if zeta is None else zeta
    s = Matrix.diagonal([zeta, zeta.inverse()], FIELD_ORDER)
    t = Matrix.from_rows([[zeta, 1], [0, zeta.inverse()]], FIELD_ORDER)
    return make_rep(TREFOIL_WIRTINGER, [s, t], order=FIELD_ORDER)


class TrefoilWirtingerEntry(CatalogEntry):
    name = "trefoil_wirtinger"
    description = "Trefoil <S,T | STS=TST>: the non-abelian reducible representation at a root of Delta."
    field_order = FIELD_ORDER

    def presentation(self, params: dict) -> Presentation:
        return TREFOIL_WIRTINGER

    def representations(self, params: dict) -> dict:
        return {"rho_plus": wirtinger_nonabelian_reducible}

    def assertions(self, params: dict) -> list[Assertion]:
        zeta = _zeta(1)
        words = parse_word_list("S, T, S T, S T^-1, S^2 T", TREFOIL_WIRTINGER)
        rho = lambda: wirtinger_nonabelian_reducible(zeta)
        diagonal = lambda: diagonal_representation(TREFOIL_WIRTINGER, [zeta, zeta.inverse()], FIELD_ORDER)
        one, zero = CyclotomicNumber.one(FIELD_ORDER), CyclotomicNumber.zero(FIELD_ORDER)
        return [
            Assertion("Delta_1", "t^2 - t + 1",
                      lambda: str(untwisted_alexander(TREFOIL_WIRTINGER, FIELD_ORDER)), "Fox calculus on STST^-1S^-1T^-1"),
            Assertion("zeta_12^2 simple root", True,
                      lambda: deformation_condition_n2(TREFOIL_WIRTINGER, zeta).deformable, "Delta(zeta_6) = 0"),
            Assertion("reducible", False, lambda: is_irreducible(rho()).irreducible, "upper triangular"),
            Assertion("invariant line e1", True, lambda: is_invariant(rho(), [(one, zero)]), "upper triangular"),
            Assertion("character of the diagonal representation", True,
                      lambda: character_of(rho(), words).agrees_with(character_of(diagonal(), words)),
                      "traces only see the diagonal"),
            Assertion("h1 of the diagonal point", 3,
                      lambda: cohomology_dims(diagonal()).h1, "one class from H^1(C) and one from each root zeta^+-2"),
        ]
