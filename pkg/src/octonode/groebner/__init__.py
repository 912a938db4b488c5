"""Groebner bases and the ideal operations built on them."""

from .budget import Budget, budget, current_budget
from .hilbert import (HilbertPolynomial, hilbert_function, hilbert_polynomial,
                      minimal_generator_profile)
from .ideal import (GREVLEX, GroebnerBasis, Ideal, eliminate, ideals_equal, intersect,
                    irrelevant_ideal, linear_change, normal_form, random_invertible_matrix,
                    reduced_groebner_basis, saturate, saturate_by_variable, saturate_irrelevant)
from .zerodim import (NOT_ZERO_DIMENSIONAL, check_reduced, distinct_points, projective_chart,
                      zero_dim_degree, zero_dim_radical_equal)

__all__ = [
    "Budget", "GREVLEX", "GroebnerBasis", "HilbertPolynomial", "Ideal", "NOT_ZERO_DIMENSIONAL",
    "budget", "check_reduced", "current_budget", "distinct_points", "eliminate",
    "hilbert_function", "hilbert_polynomial", "ideals_equal", "intersect", "irrelevant_ideal",
    "linear_change", "minimal_generator_profile", "normal_form", "projective_chart",
    "random_invertible_matrix", "reduced_groebner_basis", "saturate", "saturate_by_variable",
    "saturate_irrelevant", "zero_dim_degree", "zero_dim_radical_equal",
]
