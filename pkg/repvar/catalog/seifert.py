"""Seifert fibred manifold over S^2(3,3,3): <a, b, c | a^3 = b^3 = c^3 = abc>."""
from __future__ import annotations

from repvar.catalog.base import Assertion, CatalogEntry, ParameterDef
from repvar.cohomology_engine import cocycle_space
from repvar.constructions import diagonal_representation
from repvar.cyclotomic import CyclotomicNumber, Scalar, as_field, root_of_unity
from repvar.errors import EvalAtZero
from repvar.expressions import parse_field_element
from repvar.presentation_parser import parse_presentation
from repvar.representation import Representation
from repvar.words import Presentation

FIELD_ORDER = 24

SEIFERT_333 = parse_presentation(
    "gens a, b, c; rel a^3 = b^3, b^3 = c^3, c^3 = a b c; ab a=1, b=1, c=1;"
)

# Dimension of the component of diagonal representations: one parameter plus a 2-dimensional orbit.
DIAGONAL_COMPONENT_DIM = 3


def seifert_diagonal(t: Scalar) -> Representation:
    """a, b, c -> diag(t, t^-1)."""
    t = as_field(t, FIELD_ORDER)
    if t.is_zero():
        raise EvalAtZero("t must be nonzero")
    return diagonal_representation(SEIFERT_333, [t, t.inverse()], FIELD_ORDER)


def singular_locus_value(t: CyclotomicNumber) -> CyclotomicNumber:
    """1 + t^2 + t^4; the diagonal point is singular exactly where it vanishes."""
    return 1 + t ** 2 + t ** 4


class Seifert333Entry(CatalogEntry):
    name = "seifert333"
    description = "Central extension of D(3,3,3): diagonal points singular iff 1 + t^2 + t^4 = 0."
    field_order = FIELD_ORDER

    def get_parameters(self) -> list[ParameterDef]:
        return [ParameterDef("t", "str", "zeta(8)", description="eigenvalue of the diagonal representation")]

    def presentation(self, params: dict) -> Presentation:
        return SEIFERT_333

    def representations(self, params: dict) -> dict:
        return {"rho_t": seifert_diagonal}

    def assertions(self, params: dict) -> list[Assertion]:
        t = parse_field_element(params["t"], FIELD_ORDER)
        singular = singular_locus_value(t).is_zero() if not t.is_zero() else False
        return [
            Assertion("singular iff 1 + t^2 + t^4 = 0", singular,
                      lambda: cocycle_space(seifert_diagonal(t)).dimension > DIAGONAL_COMPONENT_DIM,
                      "dim Z^1 exceeds the diagonal component"),
            Assertion("dim Z^1 at zeta_8", 3,
                      lambda: cocycle_space(seifert_diagonal(root_of_unity(8, 1, FIELD_ORDER))).dimension,
                      "regular diagonal point"),
            Assertion("dim Z^1 at zeta_6", 5,
                      lambda: cocycle_space(seifert_diagonal(root_of_unity(6, 1, FIELD_ORDER))).dimension,
                      "1 + zeta_3 + zeta_3^2 = 0"),
        ]
