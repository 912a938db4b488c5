import random

import pytest

from octonode.core import FieldSpec, Ring, random_homogeneous
from octonode.errors import RingMismatchError


@pytest.fixture
def R():
    return Ring.of("z0 z1 z2 z3")


def test_difference_of_squares(R):
    z0, z1 = R.gen(0), R.gen(1)
    assert (z0 + z1) * (z0 - z1) == z0 * z0 - z1 * z1


def test_zero_identity(R):
    p = R.parse("3*z0*z1 - z2^2")
    assert p + R.zero() == p
    assert not R.zero().terms


def test_modular_reduction():
    R7 = Ring.of("z0", FieldSpec(7))
    z0 = R7.gen(0)
    assert z0.scale(5) + z0.scale(4) == z0.scale(2)


def test_ring_mismatch(R):
    other = Ring.of("x y")
    with pytest.raises(RingMismatchError):
        R.gen(0) + other.gen(0)


def test_derivatives(R):
    p = R.parse("z0^2*z1")
    assert p.derivative(0) == R.parse("2*z0*z1")
    assert R.const(5).derivative(0) == R.zero()


def test_evaluate_examples():
    Q = Ring.of("z0 z1", FieldSpec.rationals())
    assert Q.parse("z0^2 - z1").evaluate((2, 4)) == 0
    C = Ring.of("x y z").parse("y^2*z - x^3 + x*z^2")
    assert C.evaluate((0, 1, 0)) == 0


def _naive_eval(p, pt):
    F = p.field
    total = 0
    for m, c in p.terms.items():
        v = c
        for x, e in zip(pt, m):
            for _ in range(e):
                v = v * x
        total += v
    return F(total)


def test_evaluate_matches_naive_sum(R):
    rng = random.Random(5)
    for seed in range(20):
        p = random_homogeneous(8, R, seed)
        pt = tuple(rng.randrange(32003) for _ in range(4))
        assert p.evaluate(pt) == _naive_eval(p, pt)


def test_random_homogeneous_contract(R):
    assert random_homogeneous(0, R, 1).degree() <= 0
    assert len(random_homogeneous(4, R, 3).terms) <= 35
    assert random_homogeneous(4, R, 3) == random_homogeneous(4, R, 3)
    assert random_homogeneous(4, R, 3) != random_homogeneous(4, R, 4)
    with pytest.raises(ValueError):
        random_homogeneous(-1, R, 0)
    with pytest.raises(ValueError):
        random_homogeneous(2, Ring.of("x", FieldSpec.rationals()), 0)


def test_euler_relation_on_octic(R):
    f = random_homogeneous(8, R, 11)
    lhs = sum((R.gen(i) * f.derivative(i) for i in range(4)), R.zero())
    assert lhs == f.scale(8)


def test_substitute_and_homogeneity(R):
    p = R.parse("z0*z1 + z2^2")
    q = p.substitute([R.gen(1), R.gen(0), R.gen(3), R.gen(2)])
    assert q == R.parse("z0*z1 + z3^2")
    assert q.is_homogeneous() and q.degree() == 2
    assert not R.parse("z0 + 1").is_homogeneous()
