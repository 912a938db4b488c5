from fractions import Fraction

import pytest

from octonode.core import FieldSpec


def test_default_is_32003():
    assert FieldSpec().p == 32003
    assert str(FieldSpec()) == "fp:32003"


@pytest.mark.parametrize("p", [2, 3, 4, 9, 32004, 1])
def test_rejects_small_or_composite(p):
    with pytest.raises(ValueError):
        FieldSpec(p)


def test_parse_forms():
    assert FieldSpec.parse("fp 7") == FieldSpec(7)
    assert FieldSpec.parse("fp:65537") == FieldSpec(65537)
    assert FieldSpec.parse("q").p is None
    with pytest.raises(ValueError):
        FieldSpec.parse("gf4")


def test_inverse_law_mod_p():
    F = FieldSpec(10007)
    for a in range(1, 10007, 97):
        assert F(a * F.inv(a)) == 1


def test_fraction_coercion():
    F = FieldSpec(7)
    assert F(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))
    Q = FieldSpec.rationals()
    assert Q(Fraction(6, 4)) == Fraction(3, 2)
    assert Q.inv(Fraction(3, 2)) == Fraction(2, 3)


def test_signed_representative():
    F = FieldSpec(7)
    assert F.to_signed(6) == -1
    assert F.to_signed(3) == 3
