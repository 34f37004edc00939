"""(Z x Z) x Dic_3: an isolated character whose representation scheme is not reduced."""
from __future__ import annotations

from repvar.catalog.base import Assertion, CatalogEntry
from repvar.cohomology_engine import cocycle_space, cohomology_dims, tangent_gap_report
from repvar.cyclotomic import root_of_unity
from repvar.linalg import Matrix
from repvar.presentation_parser import parse_presentation
from repvar.representation import Representation, make_rep
from repvar.words import Presentation

FIELD_ORDER = 12

LUBOTZKY_MAGID = parse_presentation(
    "gens a, s, t1, t2; "
    "rel a^6, s^2 = a^3, s a s^-1 = a^-1, [t1, t2], s t1 s^-1 = t2, s t2 s^-1 = t1, "
    "a t1 a^-1 = t2^-1, a t2 a^-1 = t1 t2^-1;"
)


def _dic3_images() -> tuple[Matrix, Matrix]:
    eta = root_of_unity(6, 1, FIELD_ORDER)
    a = Matrix.diagonal([eta, eta.conjugate()], FIELD_ORDER)
    s = Matrix.from_rows([[0, 1], [-1, 0]], FIELD_ORDER)
    return a, s


def lm_rho() -> Representation:
    """Trivial on the translations t1, t2."""
    a, s = _dic3_images()
    identity = Matrix.identity(2, FIELD_ORDER)
    return make_rep(LUBOTZKY_MAGID, [a, s, identity, identity], order=FIELD_ORDER)


def lm_rho_prime() -> Representation:
    """t1 -> diag(w, w^-1), t2 -> diag(w^-1, w); factors through t1 t2 = 1."""
    a, s = _dic3_images()
    w = root_of_unity(3, 1, FIELD_ORDER)
    t1 = Matrix.diagonal([w, w.conjugate()], FIELD_ORDER)
    return make_rep(LUBOTZKY_MAGID, [a, s, t1, t1.inverse()], order=FIELD_ORDER)


def lm_cocycle() -> list[Matrix]:
    """z(a) = z(s) = 0 and the non-principal values on t1, t2."""
    eta = root_of_unity(6, 1, FIELD_ORDER)
    eta_bar = eta.conjugate()
    zero = Matrix.zeros(2, 2, FIELD_ORDER)
    z_t1 = Matrix.from_rows([[0, 1 + eta], [-(1 + eta_bar), 0]], FIELD_ORDER)
    z_t2 = Matrix.from_rows([[0, 1 + eta_bar], [-(1 + eta), 0]], FIELD_ORDER)
    return [zero, zero, z_t1, z_t2]


class LubotzkyMagidEntry(CatalogEntry):
    name = "lubotzky_magid"
    description = (
        "(ZxZ) x| Dic_3: H^1 = C at an isolated character, so the representation scheme is not reduced."
    )
    field_order = FIELD_ORDER

    def presentation(self, params: dict) -> Presentation:
        return LUBOTZKY_MAGID

    def representations(self, params: dict) -> dict:
        return {"rho": lm_rho, "rho_prime": lm_rho_prime}

    def assertions(self, params: dict) -> list[Assertion]:
        rho = lm_rho()
        return [
            Assertion("h0(rho)", 0, lambda: cohomology_dims(rho).h0, "a and s generate an irreducible image"),
            Assertion("dim Z^1(rho)", 4, lambda: cohomology_dims(rho).z1, "B^1 has dimension 3"),
            Assertion("h1(rho)", 1, lambda: cohomology_dims(rho).h1, "generated by the class of z"),
            Assertion("z is a cocycle", True, lambda: cocycle_space(rho).contains(lm_cocycle()),
                      "explicit derivation on t1, t2"),
            Assertion("tangent gap at the isolated orbit", 1, lambda: tangent_gap_report(rho, 3).gap,
                      "the orbit of rho is a component of dimension 3"),
            Assertion("h1(rho')", 0, lambda: cohomology_dims(lm_rho_prime()).h1, "rho' kills t1 t2"),
        ]
