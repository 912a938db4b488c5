from fractions import Fraction

import pytest

from octonode.core import Ring
from octonode.groebner import (Ideal, hilbert_function, hilbert_polynomial,
                               minimal_generator_profile)
from octonode.groebner.hilbert import HilbertPolynomial, count_standard_monomials


@pytest.fixture
def twisted():
    R = Ring.of("w0 w1 w2 w3")
    a, b, c, d = R.gens()
    return Ideal([a * c - b * b, b * d - c * c, a * d - b * c])


def test_zero_ideal_quartics():
    R = Ring.of("z0 z1 z2 z3")
    assert hilbert_function(Ideal([], R), 4) == 35


def test_twisted_cubic(twisted):
    assert hilbert_function(twisted, 2) == 7
    assert str(hilbert_polynomial(twisted)) == "3t + 1"
    assert hilbert_polynomial(twisted).curve_data() == (3, 0)
    assert minimal_generator_profile(twisted, 4) == {2: 3}


def test_unit_ideal_polynomial():
    R = Ring.of("z0 z1 z2 z3")
    assert str(hilbert_polynomial(Ideal([R.one()]))) == "0"


def test_profile_small():
    R = Ring.of("x y")
    x, y = R.gens()
    assert minimal_generator_profile(Ideal([x * x, x * y]), 3) == {2: 2}
    assert minimal_generator_profile(Ideal([x * x, x * y, x**3]), 3) == {2: 2}


def test_hilbert_function_equals_leading_term_ideal(twisted):
    lead = Ideal([twisted.ring.monomial(m) for m in twisted.groebner().leading_monomials])
    for d in range(8):
        assert hilbert_function(twisted, d) == hilbert_function(lead, d)


def test_polynomial_matches_function_eventually(twisted):
    hp = hilbert_polynomial(twisted)
    assert all(hp(d) == hilbert_function(twisted, d) for d in range(1, 10))


def test_standard_monomial_count():
    assert count_standard_monomials([(2, 0), (0, 3)], 2) == 6
    assert count_standard_monomials([(2, 0)], 2) is None
    assert count_standard_monomials([(0, 0)], 2) == 0


def test_polynomial_text():
    assert str(HilbertPolynomial((Fraction(0), Fraction(8)))) == "8t"
    assert str(HilbertPolynomial((Fraction(-1), Fraction(0), Fraction(1, 2)))) == "1/2t^2 - 1"
