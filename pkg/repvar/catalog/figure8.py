"""Figure-eight knot group, its amphicheiral automorphism h and the surjection onto D(3,3,4).

The presentation is <t, a, b | t a t^-1 = a b, t b t^-1 = b a b> with
peripheral system (m, l) = (t, [a, b]). The components V1 and V2 of the SL(3)
character variety are pull-backs of the hypersurface W of D(3,3,4) along
phi and phi o h.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from repvar.alexander_engine import untwisted_alexander
from repvar.catalog.base import Assertion, CatalogEntry, ParameterDef
from repvar.catalog.dyck334 import DYCK_334, dyck334_rep, figure8_hypersurface
from repvar.constructions import diagonal_representation, trivial_representation
from repvar.cyclotomic import CyclotomicNumber, root_of_unity
from repvar.errors import InputError, PresentationMismatch
from repvar.expressions import parse_laurent
from repvar.irreducibility import is_irreducible
from repvar.laurent import associated
from repvar.presentation_parser import parse_presentation, parse_word, parse_word_list
from repvar.representation import Representation, evaluate, pullback
from repvar.words import Presentation, Word

logger = logging.getLogger(__name__)

FIELD_ORDER = 12

FIGURE_EIGHT = parse_presentation(
    "gens t, a, b; rel t a t^-1 = a b, t b t^-1 = b a b; ab t=1, a=0, b=0;"
)

# images of t, a, b
H_IMAGES = parse_word_list(
    "t a^-1 t^-1 a t^-1, a^-1 t a b^-1 a^-1 t^-1 a, a^-1 t a t^-1 a", FIGURE_EIGHT
)
PHI_IMAGES = parse_word_list("k l k, k^-1 l^-1 k l, k l", DYCK_334)

MERIDIAN = parse_word("t", FIGURE_EIGHT)
LONGITUDE = parse_word("[a, b]", FIGURE_EIGHT)

# (nu, nu_bar, zeta) words for each pull-back
COORDINATE_WORDS = {
    "phi": parse_word_list("t, t^-1, a", FIGURE_EIGHT),
    "phi_h": parse_word_list("t^-1, t, b^-1", FIGURE_EIGHT),
}


def _check_figure_eight(r: Representation) -> None:
    if r.presentation != FIGURE_EIGHT:
        raise PresentationMismatch("expected a representation of the figure-eight group")


def dyck334_from_figure8(rho: Representation | None = None) -> Representation:
    """rho o phi for a D(3,3,4) representation rho (default: the catalog one)."""
    rho = dyck334_rep(1) if rho is None else rho
    if rho.presentation != DYCK_334:
        raise PresentationMismatch("expected a representation of D(3,3,4)")
    return pullback(rho, FIGURE_EIGHT, PHI_IMAGES)


def compose_with_h(r: Representation) -> Representation:
    """r o h."""
    _check_figure_eight(r)
    return pullback(r, FIGURE_EIGHT, H_IMAGES)


def hypersurface_coordinates(r: Representation, along: str = "phi") -> tuple[CyclotomicNumber, ...]:
    """(nu, nu_bar, zeta) of a pulled-back character in the convention of ``along``."""
    _check_figure_eight(r)
    try:
        words = COORDINATE_WORDS[along]
    except KeyError:
        raise InputError(f"unknown coordinate convention {along!r}; expected phi or phi_h") from None
    return tuple(evaluate(r, w).trace() for w in words)


@dataclass
class AutomorphismCheck:
    label: str
    relators_hold: bool
    meridian_inverted: bool
    longitude_preserved: bool
    components_swapped: bool

    @property
    def passed(self) -> bool:
        return self.relators_hold and self.meridian_inverted and self.longitude_preserved and self.components_swapped

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "relators_hold": self.relators_hold,
            "meridian_inverted": self.meridian_inverted,
            "longitude_preserved": self.longitude_preserved,
            "components_swapped": self.components_swapped,
            "passed": self.passed,
        }


def _trace(r: Representation, w: Word) -> CyclotomicNumber:
    return evaluate(r, w).trace()


def check_automorphism_under(label: str, r: Representation) -> AutomorphismCheck:
    """Trace-level necessary conditions for h under one representation."""
    _check_figure_eight(r)
    relators_hold = all(evaluate(r, rel.substitute(H_IMAGES)).is_identity() for rel in FIGURE_EIGHT.relators)
    meridian = all(
        _trace(r, (MERIDIAN ** k).substitute(H_IMAGES)) == _trace(r, MERIDIAN ** -k) for k in (1, 2, 3)
    )
    longitude = _trace(r, LONGITUDE.substitute(H_IMAGES)) == _trace(r, LONGITUDE)
    a, b = FIGURE_EIGHT.generator_word("a"), FIGURE_EIGHT.generator_word("b")
    swapped = (
        _trace(r, a.substitute(H_IMAGES)) == _trace(r, b.inverse())
        and _trace(r, b.substitute(H_IMAGES)) == _trace(r, a)
    )
    check = AutomorphismCheck(label, relators_hold, meridian, longitude, swapped)
    if not check.passed:
        logger.warning("automorphism check failed under %s: %s", label, check.to_dict())
    return check


def catalog_figure8_representations() -> dict[str, Representation]:
    zeta = root_of_unity(12, 1, FIELD_ORDER)
    v1 = dyck334_from_figure8(dyck334_rep(1))
    return {
        "trivial": trivial_representation(FIGURE_EIGHT, 3, FIELD_ORDER),
        "diagonal": diagonal_representation(FIGURE_EIGHT, [zeta, zeta.inverse()], FIELD_ORDER),
        "phi*rho_1": v1,
        "phi*rho_2": dyck334_from_figure8(dyck334_rep(2)),
        "(phi o h)*rho_1": compose_with_h(v1),
    }


def figure8_automorphism_check(reps: dict[str, Representation] | None = None) -> list[AutomorphismCheck]:
    reps = catalog_figure8_representations() if reps is None else reps
    return [check_automorphism_under(label, r) for label, r in reps.items()]


class Figure8Entry(CatalogEntry):
    name = "figure8"
    description = (
        "Figure-eight knot <t,a,b | tat^-1=ab, tbt^-1=bab>: Alexander polynomial, "
        "automorphism h, components V1 and V2 pulled back from D(3,3,4)."
    )
    field_order = FIELD_ORDER

    def get_parameters(self) -> list[ParameterDef]:
        return [ParameterDef("variant", "int", 1, min=1, max=2, description="D(3,3,4) representation pulled back")]

    def presentation(self, params: dict) -> Presentation:
        return FIGURE_EIGHT

    def representations(self, params: dict) -> dict:
        return {
            "phi_pullback": lambda variant=1: dyck334_from_figure8(dyck334_rep(variant)),
            "phi_h_pullback": lambda variant=1: compose_with_h(dyck334_from_figure8(dyck334_rep(variant))),
        }

    def assertions(self, params: dict) -> list[Assertion]:
        variant = params["variant"]
        i = root_of_unity(4, 1, FIELD_ORDER)
        on_v1 = lambda: dyck334_from_figure8(dyck334_rep(variant))
        on_v2 = lambda: compose_with_h(on_v1())
        zeta_v1 = -1 - 2 * i if variant == 1 else -1 + 2 * i
        zeta_v2 = -1 + 2 * i if variant == 1 else -1 - 2 * i
        delta = lambda: untwisted_alexander(FIGURE_EIGHT, FIELD_ORDER)
        return [
            Assertion("Delta_1 ~ t^2 - 3t + 1", True,
                      lambda: associated(delta(), parse_laurent("t^2 - 3*t + 1", FIELD_ORDER)),
                      "Fox calculus on the fibred presentation"),
            Assertion("Delta symmetric", True, lambda: associated(delta(), delta().substitute_inverse()),
                      "Delta(t) ~ Delta(1/t)"),
            Assertion("phi pull-back irreducible", True, lambda: is_irreducible(on_v1()).irreducible,
                      "phi is onto"),
            Assertion("phi(m^3 l) = I", True,
                      lambda: evaluate(on_v1(), MERIDIAN ** 3 * LONGITUDE).is_identity(),
                      "exceptional filling K(+-3)"),
            Assertion("phi(b)^4 = I", True,
                      lambda: evaluate(on_v1(), FIGURE_EIGHT.generator_word("b") ** 4).is_identity(),
                      "phi(b) = kl"),
            Assertion("coordinates along phi", ("0", "0", str(zeta_v1)),
                      lambda: tuple(str(c) for c in hypersurface_coordinates(on_v1(), "phi")),
                      "(chi(t), chi(t^-1), chi(a))"),
            Assertion("F = 0 along phi", True,
                      lambda: figure8_hypersurface(*hypersurface_coordinates(on_v1(), "phi")).is_zero(),
                      "hypersurface W"),
            Assertion("coordinates along phi o h", ("0", "0", str(zeta_v2)),
                      lambda: tuple(str(c) for c in hypersurface_coordinates(on_v2(), "phi_h")),
                      "(chi(t^-1), chi(t), chi(b^-1))"),
            Assertion("F = 0 along phi o h", True,
                      lambda: figure8_hypersurface(*hypersurface_coordinates(on_v2(), "phi_h")).is_zero(),
                      "hypersurface W"),
            Assertion("h checks on catalog representations", True,
                      lambda: all(c.passed for c in figure8_automorphism_check()),
                      "h maps (m, l) to (m^-1, l) up to conjugation"),
        ]
