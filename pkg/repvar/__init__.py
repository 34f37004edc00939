"""Exact computations on SL(n) representation varieties of finitely presented groups.

Field elements live in cyclotomic fields Q(zeta_N), presentations are read
from a small text grammar, and every engine (cohomology, Alexander
polynomials, deformations, irreducibility) works by exact linear algebra.
"""

__version__ = "0.1.0"
