import pytest

from octonode.core import FieldSpec, Ring, linear_form, random_homogeneous
from octonode.errors import NotZeroDimensionalError
from octonode.groebner import (NOT_ZERO_DIMENSIONAL, Ideal, check_reduced, distinct_points,
                               zero_dim_degree, zero_dim_radical_equal)
from octonode.octic.triple import linear_forms_instance, plane_intersection_points


def test_affine_degree():
    R = Ring.of("x y")
    x, y = R.gens()
    assert zero_dim_degree(Ideal([x * x, y**3]), affine=True) == 6
    assert zero_dim_degree(Ideal([x * x]), affine=True) is NOT_ZERO_DIMENSIONAL


def test_unit_ideal_has_degree_zero():
    R = Ring.of("z0 z1 z2 z3")
    assert zero_dim_degree(Ideal([R.one()])) == 0


@pytest.mark.parametrize("a,expected", [(1, 60), (2, 48), (3, 28)])
def test_plane_products_match_enumeration(a, expected):
    inst = linear_forms_instance(a, 3)
    pts = plane_intersection_points(inst.planes, FieldSpec())
    assert len(pts) == expected
    assert zero_dim_degree(Ideal(inst.triple.polynomials)) == expected


def test_degree_invariant_under_coordinate_change():
    R = Ring.of("z0 z1 z2 z3")
    I = Ideal([random_homogeneous(d, R, s) for s, d in enumerate((2, 2, 3))])
    assert {zero_dim_degree(I, seed=s) for s in (0, 1, 2)} == {12}


def test_radical_equality_examples():
    R = Ring.of("x y")
    x, y = R.gens()
    assert zero_dim_radical_equal(Ideal([x * x, y]), Ideal([x, y]), affine=True)
    assert not zero_dim_radical_equal(Ideal([x, y]), Ideal([x, y - 1]), affine=True)
    with pytest.raises(NotZeroDimensionalError):
        zero_dim_radical_equal(Ideal([x]), Ideal([x, y]), affine=True)


def test_projective_radical_equality():
    R = Ring.of("z0 z1 z2 z3")
    I = Ideal([random_homogeneous(2, R, s) for s in range(3)])
    J = Ideal([g * g for g in I.generators])
    assert zero_dim_degree(J) == 64
    assert zero_dim_radical_equal(I, J)
    K = Ideal([random_homogeneous(2, R, s) for s in range(1, 4)])
    assert not zero_dim_radical_equal(I, K)


def test_reducedness():
    R = Ring.of("z0 z1 z2 z3")
    I = Ideal([random_homogeneous(2, R, s) for s in range(3)])
    ok = check_reduced(I)
    assert ok.reduced and ok.points == ok.degree == 8
    bad = check_reduced(Ideal([g * g for g in I.generators]))
    assert not bad.reduced and bad.points == 8 and bad.degree == 64
    z0, z1, z2, z3 = R.gens()
    fat = check_reduced(Ideal([z0 * z0, z1 * z1, z2**3]))
    assert (fat.reduced, fat.degree, fat.points) == (False, 12, 1)
    assert distinct_points(I) == 8


def test_not_zero_dimensional_reported():
    R = Ring.of("z0 z1 z2 z3")
    z0 = R.gen(0)
    assert zero_dim_degree(Ideal([z0 * z0, R.gen(1)])) is NOT_ZERO_DIMENSIONAL
    with pytest.raises(NotZeroDimensionalError):
        check_reduced(Ideal([z0]))


def test_rational_field_chart():
    Q = FieldSpec.rationals()
    R = Ring.of("z0 z1 z2", Q)
    forms = [linear_form(R, c) for c in ((1, 2, 3), (1, -1, 2), (2, 0, 1), (3, 1, -1))]
    I = Ideal([forms[0] * forms[1], forms[2] * forms[3]])
    assert zero_dim_degree(I) == 4
