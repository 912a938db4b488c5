"""Exact coefficient fields, monomial orders, polynomials and their text form."""

from .field import DEFAULT_PRIME, FieldSpec
from .monomial import Monomial, MonomialOrder, monomials_of_degree
from .parsing import format_polynomial, parse_polynomial
from .polynomial import Polynomial, Ring, linear_form, random_homogeneous

__all__ = [
    "DEFAULT_PRIME",
    "FieldSpec",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "format_polynomial",
    "linear_form",
    "monomials_of_degree",
    "parse_polynomial",
    "random_homogeneous",
]
