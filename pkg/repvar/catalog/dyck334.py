"""Triangle group D(3,3,4) = <k, l | l^3, k^3, (kl)^4> and its SL(3) hypersurface."""
from __future__ import annotations

from functools import reduce

from repvar.catalog.base import Assertion, CatalogEntry, ParameterDef
from repvar.cyclotomic import DEFAULT_ORDER, CyclotomicNumber, Scalar, as_field, common_order, root_of_unity
from repvar.errors import InputError
from repvar.irreducibility import is_irreducible
from repvar.linalg import Matrix
from repvar.presentation_parser import parse_presentation, parse_word_list
from repvar.representation import Representation, evaluate, make_rep
from repvar.words import Presentation

FIELD_ORDER = 12

DYCK_334 = parse_presentation("gens k, l; rel l^3, k^3, (k l)^4;")

# nu = chi(k^-1 l), nu_bar = chi(k l^-1), zeta = chi([k, l])
LEMMA_WORDS = parse_word_list("k^-1 l, k l^-1, [k, l]", DYCK_334)
VANISHING_WORDS = parse_word_list("k, k^-1, l, l^-1", DYCK_334)
UNIT_WORDS = parse_word_list("k l, (k l)^-1", DYCK_334)


def figure8_hypersurface(nu: Scalar, nu_bar: Scalar, zeta: Scalar) -> CyclotomicNumber:
    """F = zeta^2 - (nu nu_bar - 2) zeta + nu^3 + nu_bar^3 - 5 nu nu_bar + 5."""
    orders = [v.order for v in (nu, nu_bar, zeta) if isinstance(v, CyclotomicNumber)]
    order = reduce(common_order, orders) if orders else DEFAULT_ORDER
    nu, nu_bar, zeta = (as_field(v, order) for v in (nu, nu_bar, zeta))
    product = nu * nu_bar
    return zeta * zeta - (product - 2) * zeta + nu ** 3 + nu_bar ** 3 - 5 * product + 5


def dyck334_rep(variant: int = 1) -> Representation:
    """k -> C (cyclic permutation), l -> D C^-1 with D = diag(1, i, -i) or diag(1, -i, i)."""
    if variant not in (1, 2):
        raise InputError(f"variant must be 1 or 2, got {variant}")
    i = root_of_unity(4, 1 if variant == 1 else 3, FIELD_ORDER)
    c = Matrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]], FIELD_ORDER)
    d = Matrix.diagonal([1, i, -i], FIELD_ORDER)
    return make_rep(DYCK_334, [c, d @ c.inverse()], order=FIELD_ORDER)


def lemma_coordinates(r: Representation) -> tuple[CyclotomicNumber, ...]:
    return tuple(evaluate(r, w).trace() for w in LEMMA_WORDS)


class Dyck334Entry(CatalogEntry):
    name = "dyck334"
    description = "Triangle group D(3,3,4): irreducible SL(3) representations on the hypersurface W."
    field_order = FIELD_ORDER

    def get_parameters(self) -> list[ParameterDef]:
        return [ParameterDef("variant", "int", 1, min=1, max=2, description="D = diag(1, i, -i) or diag(1, -i, i)")]

    def presentation(self, params: dict) -> Presentation:
        return DYCK_334

    def representations(self, params: dict) -> dict:
        return {"rho": dyck334_rep}

    def assertions(self, params: dict) -> list[Assertion]:
        rho = dyck334_rep(params["variant"])
        i = root_of_unity(4, 1, FIELD_ORDER)
        w = root_of_unity(3, 1, FIELD_ORDER)
        expected_zeta = -1 - 2 * i if params["variant"] == 1 else -1 + 2 * i
        return [
            Assertion("irreducible", True, lambda: is_irreducible(rho).irreducible,
                      "D has distinct eigenvalues, C permutes them"),
            Assertion("chi(k^+-1) = chi(l^+-1) = 0", True,
                      lambda: all(evaluate(rho, x).trace().is_zero() for x in VANISHING_WORDS),
                      "characters on W"),
            Assertion("chi((kl)^+-1) = 1", True,
                      lambda: all(evaluate(rho, x).trace() == 1 for x in UNIT_WORDS),
                      "characters on W"),
            Assertion("coordinates (nu, nu_bar, zeta)", ("0", "0", str(expected_zeta)),
                      lambda: tuple(str(c) for c in lemma_coordinates(rho)),
                      "nu = chi(k^-1 l), nu_bar = chi(k l^-1), zeta = chi([k,l])"),
            Assertion("F(coordinates) = 0", True,
                      lambda: figure8_hypersurface(*lemma_coordinates(rho)).is_zero(), "hypersurface W"),
            Assertion("F(2, 2, 1) = 0", True, lambda: figure8_hypersurface(2, 2, 1).is_zero(),
                      "reducible point of W"),
            Assertion("F(2w, 2w^2, 1) = 0", True,
                      lambda: figure8_hypersurface(2 * w, 2 * w * w, 1).is_zero(), "reducible point of W"),
            Assertion("F(2w^2, 2w, 1) = 0", True,
                      lambda: figure8_hypersurface(2 * w * w, 2 * w, 1).is_zero(), "reducible point of W"),
        ]
