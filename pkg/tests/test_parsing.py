import pytest

from octonode.core import FieldSpec, Ring, format_polynomial, parse_polynomial
from octonode.errors import ParseError


def test_two_term_quadric():
    R = Ring.of("z0 z1 z2", FieldSpec.rationals())
    p = parse_polynomial("z0^2 - z1*z2", R)
    assert len(p.terms) == 2 and p.degree() == 2


def test_plane_cubic():
    R = Ring.of("x y z")
    C = parse_polynomial("y^2*z - x^3 + x*z^2", R)
    assert len(C.terms) == 3 and C.is_homogeneous() and C.degree() == 3


def test_zero():
    R = Ring.of("x")
    assert parse_polynomial("0", R).terms == {}


def test_rational_coefficients():
    Q = Ring.of("x y", FieldSpec.rationals())
    p = parse_polynomial("1/2*x - 3/4*y + 2", Q)
    assert format_polynomial(p) == "1/2*x - 3/4*y + 2"
    F = Ring.of("x y")
    assert parse_polynomial("1/2*x", F) == F.gen(0).scale(16002)


@pytest.mark.parametrize("text,pos", [("x +", 3), ("x ** y", 3), ("w^2", 0), ("x^y", 2), ("2*x $ y", 4)])
def test_error_positions(text, pos):
    R = Ring.of("x y")
    with pytest.raises(ParseError) as err:
        parse_polynomial(text, R)
    assert err.value.position == pos


def test_unknown_variable_message():
    with pytest.raises(ParseError, match="unknown variable 'q'"):
        parse_polynomial("x + q", Ring.of("x y"))


def test_unrepresentable_coefficient():
    with pytest.raises(ParseError, match="not representable"):
        parse_polynomial("1/7*x", Ring.of("x", FieldSpec(7)))
    with pytest.raises(ParseError, match="zero denominator"):
        parse_polynomial("1/0*x", Ring.of("x", FieldSpec.rationals()))


def test_leading_sign_round_trip():
    R = Ring.of("x y")
    p = parse_polynomial("-x^2 + 3*y", R)
    assert parse_polynomial(format_polynomial(p), R) == p
