"""Randomized invariants of the algebra layer and the Groebner engine."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octonode.core import FieldSpec, MonomialOrder, Ring, format_polynomial, parse_polynomial
from octonode.core.monomial import mono_divides, mono_mul, monomials_of_degree
from octonode.core.polynomial import Polynomial
from octonode.groebner import Ideal, reduced_groebner_basis, saturate, saturate_by_variable
from octonode.groebner.buchberger import reduce_full
from octonode.groebner.ideal import s_polynomial

FP = FieldSpec(32003)
QQ = FieldSpec.rationals()
R3 = Ring.of("x y z", FP)
Q3 = Ring.of("x y z", QQ)

ORDERS = [MonomialOrder.grevlex(), MonomialOrder.lex(), MonomialOrder.elimination(1),
          MonomialOrder.grevlex((1, 2, 3)), MonomialOrder.elimination(2, (2, 1, 1))]

exps = st.tuples(*[st.integers(0, 3)] * 3)


def coeffs(field):
    if field.p is None:
        return st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(bool)
    return st.integers(1, field.p - 1)


def polys(ring, max_terms=5):
    return st.dictionaries(exps, coeffs(ring.field), max_size=max_terms).map(lambda t: Polynomial(ring, t))


@st.composite
def homogeneous(draw, ring, degrees=(1, 2, 3), max_terms=5):
    d = draw(st.sampled_from(degrees))
    mons = monomials_of_degree(ring.nvars, d)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=max_terms, unique=True))
    cs = draw(st.lists(coeffs(ring.field), min_size=len(chosen), max_size=len(chosen)))
    return Polynomial(ring, dict(zip(chosen, cs)))


# ring axioms ------------------------------------------------------------------

@pytest.mark.parametrize("ring", [R3, Q3], ids=["fp", "q"])
@settings(max_examples=1000)
@given(data=st.data())
def test_ring_axioms(ring, data):
    a, b, c = (data.draw(polys(ring, 4)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ring.zero() and a * ring.one() == a


# text form --------------------------------------------------------------------

@pytest.mark.parametrize("ring", [R3, Q3], ids=["fp", "q"])
@given(data=st.data())
def test_parse_format_round_trip(ring, data):
    p = data.draw(polys(ring, 6))
    assert parse_polynomial(format_polynomial(p), ring) == p


# monomial orders ----------------------------------------------------------------

@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(m=exps, n=exps, k=exps)
def test_order_laws(order, m, n, k):
    key = order.key(3)
    assert (key(m) < key(n)) + (key(n) < key(m)) + (m == n) == 1
    if key(m) < key(n):
        assert key(mono_mul(m, k)) < key(mono_mul(n, k))
    if mono_divides(m, n) and m != n:
        assert key(m) < key(n)


@given(ms=st.lists(exps, min_size=1, max_size=30))
def test_orders_well_founded_on_bounded_sets(ms):
    for order in ORDERS:
        key = order.key(3)
        smallest = min(ms, key=key)
        assert all(not key(m) < key(smallest) for m in ms)


# Euler relation ---------------------------------------------------------------

@given(f=homogeneous(Ring.of("z0 z1 z2 z3", FP), degrees=(1, 2, 3, 4, 5, 8), max_terms=8))
def test_euler_relation(f):
    R = f.ring
    lhs = sum((R.gen(i) * f.derivative(i) for i in range(R.nvars)), R.zero())
    assert lhs == f.scale(f.degree())


# Groebner bases ---------------------------------------------------------------

ideal_gens = st.lists(polys(R3, 4).filter(bool), min_size=1, max_size=3)
homog_gens = st.lists(homogeneous(R3), min_size=1, max_size=3)


@given(gens=ideal_gens, order=st.sampled_from(ORDERS[:3]))
def test_spolynomials_reduce_to_zero(gens, order):
    gb = reduced_groebner_basis(gens, order)
    els = list(gb.elements)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            assert not reduce_full(s_polynomial(els[i], els[j], order), els, order)
    for g in gens:
        assert not reduce_full(g, els, order)


@given(gens=ideal_gens, f=polys(R3, 6), mult=st.lists(polys(R3, 3), min_size=3, max_size=3))
def test_normal_form_membership(gens, f, mult):
    gb = reduced_groebner_basis(gens)
    member = sum((q * g for q, g in zip(mult, gens)), R3.zero())
    assert not gb.normal_form(member)
    r = gb.normal_form(f)
    leads = gb.leading_monomials
    assert all(not mono_divides(l, m) for m in r.terms for l in leads)
    assert gb.contains(f - r)
    assert (not r) == gb.contains(f)


@given(gens=homog_gens)
def test_engines_agree(gens):
    assert (reduced_groebner_basis(gens, engine="f4").elements
            == reduced_groebner_basis(gens, engine="buchberger").elements)


@given(gens=homog_gens, var=st.integers(0, 2))
def test_saturation_idempotent_and_larger(gens, var):
    I = Ideal(gens)
    S = saturate_by_variable(I, var)
    gb = S.groebner()
    assert all(gb.contains(g) for g in gens)
    assert saturate_by_variable(S, var).groebner().elements == gb.elements


@settings(max_examples=200)
@given(gens=homog_gens, lin=homogeneous(R3, degrees=(1,), max_terms=3))
def test_saturation_by_linear_form(gens, lin):
    I = Ideal(gens)
    S = saturate(I, Ideal([lin], R3))
    assert all(S.contains(g) for g in gens)
    assert saturate(S, Ideal([lin], R3)).groebner().elements == S.groebner().elements
