"""Exact computation of filling polynomials for knot families.

The package builds, from a handful of transcribed triangulation equations,
the rational functions that carry the geometric factor of A-polynomials for
families of filled knots, and checks every closed form against brute-force
enumeration.
"""

from .poly import Poly, poly_divides
from .ratfunc import RatFunc, PoleError, parse_poly, parse_ratfunc, substitute_basis
from .quadext import QuadExt

__all__ = [
    "Poly",
    "poly_divides",
    "RatFunc",
    "PoleError",
    "parse_poly",
    "parse_ratfunc",
    "substitute_basis",
    "QuadExt",
]

__version__ = "0.1.0"
