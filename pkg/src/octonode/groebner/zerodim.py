"""Zero-dimensional projective schemes: degree, radical comparison, reducedness.

A homogeneous ideal is moved by a seeded random linear change of
coordinates, saturated by the last variable (which then stands in for the
irrelevant ideal) and read in the affine chart where that variable is 1.
Over F_32003 the change is generic with overwhelming probability; its seed
is returned so any run can be replayed.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..core.monomial import MonomialOrder
from ..core.polynomial import Polynomial, Ring
from ..errors import NotZeroDimensionalError, PreconditionError
from . import univariate as up
from .hilbert import count_standard_monomials, standard_monomials
from .ideal import (GREVLEX, GroebnerBasis, Ideal, inverse_matrix, linear_change, normal_forms,
                    random_invertible_matrix, saturate_by_variable)


class Dimension(enum.Enum):
    NOT_ZERO_DIMENSIONAL = "NOT_ZERO_DIMENSIONAL"

    def __str__(self) -> str:
        return self.value


NOT_ZERO_DIMENSIONAL = Dimension.NOT_ZERO_DIMENSIONAL


@dataclass
class Chart:
    """A saturated homogeneous ideal after a coordinate change, and its affine chart."""

    seed: int
    matrix: list[list]
    saturated: GroebnerBasis
    affine: GroebnerBasis
    degree: int | Dimension

    @property
    def is_zero_dimensional(self) -> bool:
        return self.degree is not NOT_ZERO_DIMENSIONAL

    def saturated_ideal(self) -> Ideal:
        """The saturation, moved back to the original coordinates."""
        ring = self.saturated.ring
        B = inverse_matrix(self.matrix, ring.field)
        return Ideal([linear_change(g, B) for g in self.saturated.elements], ring)

    def to_chart(self, f: Polynomial) -> Polynomial:
        """Image of a polynomial in original coordinates inside this affine chart."""
        return dehomogenize_last(linear_change(f, self.matrix), self.affine.ring)


def _random_change(n: int, ring: Ring, seed: int) -> list[list]:
    p = ring.field.p
    if p is not None:
        return random_invertible_matrix(n, p, seed)
    from .hilbert import rank_rational

    rng = random.Random(seed)
    while True:
        A = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        rows = [{j: v for j, v in enumerate(r) if v} for r in A]
        if rank_rational(rows, n) == n:
            return A


def dehomogenize_last(g: Polynomial, ring: Ring) -> Polynomial:
    out: dict = {}
    for m, c in g.terms.items():
        k = m[:-1]
        out[k] = out.get(k, 0) + c
    return Polynomial(ring, out)


def projective_chart(I: Ideal, seed: int = 0) -> Chart:
    """Saturate a homogeneous ideal through a generic chart (see module docstring)."""
    if not I.is_homogeneous():
        raise PreconditionError("projective chart needs a homogeneous ideal")
    ring = I.ring
    n = ring.nvars
    A = _random_change(n, ring, seed)
    changed = Ideal([linear_change(g, A) for g in I.generators], ring)
    sat = saturate_by_variable(changed, n - 1)
    sat_gb = sat.groebner(GREVLEX)
    aff_ring = Ring(ring.variables[:-1], ring.field)
    key = GREVLEX.key(n - 1)
    elems = [dehomogenize_last(g, aff_ring) for g in sat_gb.elements]
    elems.sort(key=lambda f: key(f.leading_monomial()), reverse=True)
    aff = GroebnerBasis(aff_ring, GREVLEX, tuple(elems))
    if sat_gb.is_unit():
        deg: int | Dimension = 0
    else:
        cnt = count_standard_monomials(aff.leading_monomials, n - 1)
        deg = NOT_ZERO_DIMENSIONAL if cnt is None else cnt
    return Chart(seed, A, sat_gb, aff, deg)


def zero_dim_degree(I: Ideal, *, affine: bool = False, seed: int = 0) -> int | Dimension:
    """Length of the scheme defined by I, or NOT_ZERO_DIMENSIONAL.

    ``affine=False`` treats I as a homogeneous ideal of projective space
    (saturated first); ``affine=True`` counts standard monomials of I itself.
    """
    if affine:
        gb = I.groebner(GREVLEX)
        cnt = count_standard_monomials(gb.leading_monomials, I.ring.nvars)
        return NOT_ZERO_DIMENSIONAL if cnt is None else cnt
    return projective_chart(I, seed).degree


def in_radical(f: Polynomial, gb: GroebnerBasis) -> bool:
    """Rabinowitsch: f in rad(I) iff 1 in I + (t*f - 1)."""
    if gb.is_unit() or not f:
        return True
    ring = gb.ring
    name = "t"
    while name in ring.variables:
        name += "_"
    big = ring.extend([name], front=True)
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [g.map_ring(big, shift) for g in gb.elements]
    gens.append(t * f.map_ring(big, shift) - 1)
    return Ideal(gens, big).groebner(GREVLEX).is_unit()


def radical_contains(I: Ideal, f: Polynomial, *, affine: bool = False, seed: int = 0) -> bool:
    if affine:
        return in_radical(f, I.groebner(GREVLEX))
    chart = projective_chart(I, seed)
    fa = dehomogenize_last(linear_change(f, chart.matrix), chart.affine.ring)
    return in_radical(fa, chart.affine)


def zero_dim_radical_equal(I: Ideal, J: Ideal, *, affine: bool = False, seed: int = 0) -> bool:
    """True iff I and J define the same reduced zero-dimensional scheme.

    Every generator of each ideal is tested for membership in the radical of
    the other by the Rabinowitsch trick.
    """
    if affine:
        gi, gj = I.groebner(GREVLEX), J.groebner(GREVLEX)
        for gb, ring in ((gi, I.ring), (gj, J.ring)):
            if count_standard_monomials(gb.leading_monomials, ring.nvars) is None:
                raise NotZeroDimensionalError("zero_dim_radical_equal needs zero-dimensional ideals")
        return (all(in_radical(f, gi) for f in J.generators)
                and all(in_radical(f, gj) for f in I.generators))
    return charts_radical_equal(projective_chart(I, seed), projective_chart(J, seed), I, J)


def charts_radical_equal(ci: Chart, cj: Chart, I: Ideal, J: Ideal) -> bool:
    """Radical equality of two schemes already read in charts with the same change."""
    if ci.matrix != cj.matrix:
        raise PreconditionError("charts use different coordinate changes")
    if not (ci.is_zero_dimensional and cj.is_zero_dimensional):
        raise NotZeroDimensionalError("zero_dim_radical_equal needs zero-dimensional schemes")
    return (all(in_radical(cj.to_chart(f), ci.affine) for f in J.generators)
            and all(in_radical(ci.to_chart(f), cj.affine) for f in I.generators))


# multiplication maps and eliminants --------------------------------------------

def multiplication_matrix(gb: GroebnerBasis, var: int) -> tuple[np.ndarray, list]:
    """Matrix of multiplication by a variable on the standard monomial basis (F_p only)."""
    ring = gb.ring
    p = ring.field.p
    if p is None:
        raise PreconditionError("multiplication matrices are implemented over F_p")
    basis = sorted(standard_monomials(gb.leading_monomials, ring.nvars), key=GREVLEX.key(ring.nvars))
    index = {m: i for i, m in enumerate(basis)}
    D = len(basis)
    shifted = []
    for m in basis:
        e = list(m)
        e[var] += 1
        shifted.append(ring.monomial(tuple(e)))
    nfs = normal_forms(shifted, gb)
    M = np.zeros((D, D), dtype=np.int64)
    for col, r in enumerate(nfs):
        for m, c in r.terms.items():
            M[index[m], col] = int(c)
    return M, basis


def minimal_polynomial(M: np.ndarray, v0: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of M on the cyclic subspace of v0 (lowest degree first)."""
    D = M.shape[0]
    rows: list[np.ndarray] = []      # reduced Krylov vectors
    combos: list[np.ndarray] = []    # their expressions in the raw Krylov basis
    pivots: list[int] = []
    v = v0 % p
    for k in range(D + 1):
        r = v.copy()
        comb = np.zeros(D + 1, dtype=np.int64)
        comb[k] = 1
        for piv, row, cmb in zip(pivots, rows, combos):
            c = r[piv]
            if c:
                r = (r - c * row) % p
                comb = (comb - c * cmb) % p
        nz = np.nonzero(r)[0]
        if len(nz) == 0:
            return [int(x) for x in comb[: k + 1]]
        piv = int(nz[0])
        inv = pow(int(r[piv]), -1, p)
        rows.append(r * inv % p)
        combos.append(comb * inv % p)
        pivots.append(piv)
        v = (M @ v) % p
    raise AssertionError("Krylov sequence failed to become dependent")


def eliminant(gb: GroebnerBasis, var: int) -> list[int]:
    """Generator of I ∩ k[x_var] for a zero-dimensional affine ideal (lowest degree first)."""
    ring = gb.ring
    M, basis = multiplication_matrix(gb, var)
    v0 = np.zeros(len(basis), dtype=np.int64)
    v0[basis.index((0,) * ring.nvars)] = 1
    return minimal_polynomial(M, v0, ring.field.p)


def _univariate(coeffs: list[int], ring: Ring, var: int) -> Polynomial:
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[var] = k
            terms[tuple(e)] = c
    return Polynomial(ring, terms)


def affine_radical(gb: GroebnerBasis) -> GroebnerBasis:
    """Radical of a zero-dimensional affine ideal over F_p.

    Adjoins the squarefree part of the eliminant in every variable; an ideal
    containing a squarefree univariate polynomial in each variable is radical.
    Requires the scheme degree to stay below p so that squarefree parts can be
    taken through the derivative.
    """
    ring = gb.ring
    p = ring.field.p
    if gb.is_unit():
        return gb
    extra = []
    for v in range(ring.nvars):
        q = eliminant(gb, v)
        if len(q) - 1 >= p:
            raise PreconditionError("eliminant degree reaches the characteristic")
        extra.append(_univariate(up.squarefree_part(q, p), ring, v))
    return Ideal(list(gb.elements) + extra, ring).groebner(GREVLEX)


@dataclass
class ReducednessCheck:
    """Scheme degree against the number of distinct points."""

    reduced: bool
    degree: int
    points: int
    seed: int


def check_reduced(I: Ideal, *, seed: int = 0) -> ReducednessCheck:
    """Decide whether a zero-dimensional projective scheme is reduced.

    The scheme is reduced exactly when its radical has the same degree.
    """
    chart = projective_chart(I, seed)
    if not chart.is_zero_dimensional:
        raise NotZeroDimensionalError("reducedness check needs a zero-dimensional scheme")
    if chart.degree == 0:
        return ReducednessCheck(True, 0, 0, seed)
    rad = affine_radical(chart.affine)
    pts = count_standard_monomials(rad.leading_monomials, rad.ring.nvars)
    return ReducednessCheck(pts == chart.degree, chart.degree, pts, seed)


def distinct_points(I: Ideal, *, seed: int = 0) -> int:
    """Number of distinct (geometric) points of a zero-dimensional projective scheme."""
    return check_reduced(I, seed=seed).points
