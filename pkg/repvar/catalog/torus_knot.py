"""Torus knots T(p, 2) = <x, y | x^2 = y^p>, p odd, and their irreducible SL(3) components.

An irreducible SL(3) representation sends the central element x^2 = y^p to
eps I with eps^3 = 1. Then x has eigenvalues (mu, -mu, -mu) with mu = eps^-1
and y has three distinct eigenvalues y_i with y_i^p = eps and y_1 y_2 y_3 = 1.
Each unordered eigenvalue triple of y gives one component isomorphic to C^2.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from repvar.catalog.base import Assertion, CatalogEntry, ParameterDef
from repvar.cyclotomic import CyclotomicNumber, Scalar, as_field, root_of_unity
from repvar.errors import InputError
from repvar.irreducibility import is_irreducible
from repvar.linalg import Matrix
from repvar.presentation_parser import parse_presentation
from repvar.representation import Representation, make_rep
from repvar.words import Presentation

logger = logging.getLogger(__name__)


def _check_p(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise InputError(f"p must be odd and at least 3, got {p}")


@lru_cache(maxsize=None)
def torus_knot(p: int) -> Presentation:
    _check_p(p)
    return parse_presentation(f"gens x, y; rel x^2 = y^{p}; ab x={p}, y=2;")


@dataclass(frozen=True)
class EigenvaluePattern:
    """eps = zeta_3^e and y eigenvalues zeta_(3p)^k for k in ``exponents``."""

    p: int
    e: int
    exponents: tuple[int, int, int]

    @property
    def field_order(self) -> int:
        return 3 * self.p

    def x_eigenvalue(self) -> CyclotomicNumber:
        """mu = eps^-1; x has eigenvalues (mu, -mu, -mu)."""
        return root_of_unity(3, -self.e, self.field_order)

    def y_eigenvalues(self) -> list[CyclotomicNumber]:
        return [root_of_unity(self.field_order, k, self.field_order) for k in self.exponents]


def irreducible_patterns(p: int) -> list[EigenvaluePattern]:
    """Unordered distinct triples k_i in Z/3p with k_i = e (mod 3) and sum k_i = 0 (mod 3p)."""
    _check_p(p)
    n = 3 * p
    patterns = [
        EigenvaluePattern(p, e, triple)
        for e in range(3)
        for triple in combinations([k for k in range(n) if k % 3 == e], 3)
        if sum(triple) % n == 0
    ]
    logger.debug("T(%d,2): %d eigenvalue patterns", p, len(patterns))
    return patterns


def expected_component_count(p: int) -> int:
    return (p - 1) * (p - 2) // 2


def torus_knot_rep(pattern: EigenvaluePattern, s: Scalar = 1, t: Scalar = 2) -> Representation:
    """x -> (mu 0 0; s -mu 0; t 0 -mu), y upper triangular with eigenvectors e1, e1+e2, e1+e3.

    Irreducible when s, t != 0 and s + t != 2 mu.
    """
    order = pattern.field_order
    mu = pattern.x_eigenvalue()
    s, t = as_field(s, order), as_field(t, order)
    y1, y2, y3 = pattern.y_eigenvalues()
    x = Matrix.from_rows([[mu, 0, 0], [s, -mu, 0], [t, 0, -mu]], order)
    y = Matrix.from_rows([[y1, y2 - y1, y3 - y1], [0, y2, 0], [0, 0, y3]], order)
    return make_rep(torus_knot(pattern.p), [x, y], order=order)


class TorusKnotEntry(CatalogEntry):
    name = "torus_knot"
    description = "Torus knots T(p,2): irreducible SL(3) components from eigenvalue patterns."
    field_order = 9

    def get_parameters(self) -> list[ParameterDef]:
        return [ParameterDef("p", "int", 3, min=3, max=15, description="odd p of T(p,2)")]

    def presentation(self, params: dict) -> Presentation:
        return torus_knot(params["p"])

    def representations(self, params: dict) -> dict:
        return {"rho": torus_knot_rep}

    def assertions(self, params: dict) -> list[Assertion]:
        p = params["p"]
        _check_p(p)
        return [
            Assertion("irreducible components", expected_component_count(p),
                      lambda: len(irreducible_patterns(p)),
                      "(p-1)(p-2)/2 components isomorphic to C^2", experimental=True),
            Assertion("every pattern carries an irreducible representation", True,
                      lambda: all(is_irreducible(torus_knot_rep(q)).irreducible for q in irreducible_patterns(p)),
                      "four points in general position in P^2"),
        ]
