from math import comb

import numpy as np
import pytest

from octonode.core import FieldSpec, Ring
from octonode.core.monomial import monomials_of_degree
from octonode.curves import CurveMapSpec, DimensionError, curve_report, degree_nine_obstruction, implicitize, preset
from octonode.curves.report import curve_is_smooth, quartic_cutout_equal
from octonode.errors import PreconditionError
from octonode.groebner import Ideal, hilbert_function, hilbert_polynomial, ideals_equal, saturate_irrelevant
from octonode.groebner.kernels import rank_mod_p
from octonode.octic.invariants import bundle_invariants, serre_gamma

FP = FieldSpec(32003)


@pytest.fixture(scope="module")
def deg8():
    spec = preset("paper-degree8", FP)
    return spec, implicitize(spec)


def test_twisted_cubic_is_determinantal():
    I = implicitize(preset("twisted-cubic", FP))
    T = I.ring
    w0, w1, w2, w3 = T.gens()
    minors = Ideal([w0 * w2 - w1 * w1, w0 * w3 - w1 * w2, w1 * w3 - w2 * w2], T)
    assert ideals_equal(I, minors)
    assert str(hilbert_polynomial(I)) == "3t + 1"


def test_generators_vanish_on_the_source_curve(deg8):
    spec, I = deg8
    C = Ideal([spec.curve])
    for g in I.generators:
        assert C.contains(g.substitute(list(spec.components), spec.source))


def _kernel_dimension(spec, n):
    """dim of the degree-n forms in the target that pull back into (curve)."""
    C = Ideal([spec.curve]).groebner()
    rows, cols = [], {}
    for m in monomials_of_degree(4, n):
        img = spec.source.one()
        for c, e in zip(spec.components, m):
            img = img * c**e
        r = C.normal_form(img)
        rows.append({cols.setdefault(k, len(cols)): v for k, v in r.terms.items()})
    M = np.zeros((len(rows), max(len(cols), 1)), dtype=np.int64)
    for i, r in enumerate(rows):
        for j, v in r.items():
            M[i, j] = int(v)
    return len(rows) - rank_mod_p(M, FP.p)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_graded_pieces_match_kernel_oracle(deg8, n):
    spec, I = deg8
    assert comb(n + 3, 3) - hilbert_function(I, n) == _kernel_dimension(spec, n)


def test_curve_ideal_is_saturated(deg8):
    _, I = deg8
    assert ideals_equal(saturate_irrelevant(I, mode="exact"), I)


def test_hilbert_function_agrees_with_polynomial(deg8):
    _, I = deg8
    hp = hilbert_polynomial(I)
    assert str(hp) == "8t"
    assert all(hilbert_function(I, k) == hp(k) for k in range(4, 10))


def test_degree8_report(deg8):
    rep = curve_report(deg8[0])
    assert rep.generator_profile == {4: 3, 5: 4}
    assert (rep.degree_d, rep.arithmetic_genus) == (8, 1)
    assert rep.quartic_cutout_equal and rep.Y_smooth and rep.passed
    assert rep.serre["gamma"] == -16 and rep.serre["predicted_nodes"] == 128 and rep.serre["c3_X"] == -40


def test_quartic_profile_matches_graded_piece(deg8):
    _, I = deg8
    assert comb(7, 3) - hilbert_function(I, 4) == 3
    assert quartic_cutout_equal(I)


def test_cuspidal_cubic_is_singular():
    R = Ring.of("s t", FP)
    s, t = R.gens()
    I = implicitize(CurveMapSpec(R.zero(), (s**3, s * t * t, t**3, R.zero())))
    assert str(hilbert_polynomial(I)) == "3t"
    assert not curve_is_smooth(I)
    w0, w1, w2, w3 = I.ring.gens()
    assert ideals_equal(I, Ideal([w3, w1**3 - w0 * w2 * w2], I.ring))


def test_twisted_cubic_is_smooth_but_not_cut_out_by_linear_forms():
    I = implicitize(preset("twisted-cubic", FP))
    assert curve_is_smooth(I)
    assert quartic_cutout_equal(I, degree=2)
    assert not quartic_cutout_equal(I, degree=1)


def test_constant_image_raises():
    R = Ring.of("x y z", FP)
    c = R.parse("x^2*y + z^3")
    with pytest.raises(DimensionError):
        implicitize(CurveMapSpec(R.parse("y^2*z - x^3 + x*z^2"), (c, c, c, c)))


def test_spec_validation():
    R = Ring.of("x y z", FP)
    cubic = R.parse("y^2*z - x^3 + x*z^2")
    with pytest.raises(PreconditionError):
        CurveMapSpec(cubic, (R.parse("x"), R.parse("y^2"), R.parse("z"), R.parse("x")))
    with pytest.raises(PreconditionError):
        CurveMapSpec(cubic, (cubic, cubic, cubic, cubic))
    with pytest.raises(PreconditionError):
        CurveMapSpec(cubic, (R.parse("x"),) * 3)
    with pytest.raises(KeyError):
        preset("nonexistent")


def test_degree_nine_obstruction():
    assert tuple(degree_nine_obstruction(9)) == (-20, -128, True)
    assert tuple(degree_nine_obstruction(8)) == (-16, 0, False)
    assert [degree_nine_obstruction(d).obstructed for d in range(1, 12)] == [False] * 8 + [True] * 3


def test_degree_five_prediction():
    inv = bundle_invariants(serre_gamma(5))
    assert (inv.gamma, inv.predicted_nodes, inv.c3_X, inv.admissible) == (-4, 80, -136, True)
