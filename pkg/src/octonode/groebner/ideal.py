"""Ideals, reduced Groebner bases and the ideal operations built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..core.monomial import Monomial, MonomialOrder, mono_divides
from ..core.polynomial import Polynomial, Ring
from ..errors import PreconditionError, RingMismatchError
from .budget import current_budget
from .buchberger import buchberger, prefers_sugar, reduce_full
from .f4 import f4, f4_normal_forms

GREVLEX = MonomialOrder.grevlex()


def _use_f4(ring: Ring, engine: str) -> bool:
    if engine == "buchberger":
        return False
    ok = ring.field.p is not None and 0 < ring.nvars <= 9
    if engine == "f4" and not ok:
        raise ValueError("the f4 engine needs a prime field and at most 9 variables")
    return ok


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by leading monomial, largest first."""

    ring: Ring
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i) -> Polynomial:
        return self.elements[i]

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self) -> bool:
        return not self.elements

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def ideal(self) -> Ideal:
        ideal = Ideal(self.elements, self.ring)
        ideal._gb_cache[self.order] = self
        return ideal

    def lines(self) -> list[str]:
        from ..core.parsing import format_polynomial

        return [format_polynomial(g, self.order) for g in self.elements]


class Ideal:
    """A finitely generated ideal; zero generators are dropped.

    Reduced Groebner bases are cached per monomial order.
    """

    def __init__(self, generators: Iterable[Polynomial], ring: Ring | None = None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise ValueError("an ideal with no generators needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(g for g in gens if g)
        self._gb_cache: dict[MonomialOrder, GroebnerBasis] = {}

    def __repr__(self) -> str:
        return f"Ideal({[str(g) for g in self.generators]}, ring={self.ring})"

    def __len__(self) -> int:
        return len(self.generators)

    def groebner(self, order: MonomialOrder = GREVLEX, *, engine: str = "auto",
                 weights: Sequence[int] | None = None) -> GroebnerBasis:
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = reduced_groebner_basis(self, order, engine=engine, weights=weights)
            self._gb_cache[order] = gb
        return gb

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return all(g.is_homogeneous(weights) for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def __add__(self, other: Ideal) -> Ideal:
        if other.ring != self.ring:
            raise RingMismatchError("ideals in different rings")
        return Ideal(self.generators + other.generators, self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner().elements == other.groebner().elements

    __hash__ = None

    def map(self, fn) -> Ideal:
        gens = [fn(g) for g in self.generators]
        ring = gens[0].ring if gens else self.ring
        return Ideal(gens, ring)


def reduced_groebner_basis(I: Ideal | Sequence[Polynomial], order: MonomialOrder = GREVLEX, *,
                           engine: str = "auto", weights: Sequence[int] | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` for ``order`` under the active budget."""
    if not isinstance(I, Ideal):
        I = Ideal(I)
    b = current_budget()
    gens = list(I.generators)
    if not gens:
        return GroebnerBasis(I.ring, order, ())
    if weights is None:
        weights = order.weights
    kw = dict(spair_budget=b.spairs, degree_budget=b.degree, weights=weights)
    # F4 proceeds degree by degree; off graded orders that only pays for homogeneous input
    if _use_f4(I.ring, engine) and (engine == "f4" or prefers_sugar(gens, order, weights or [1] * I.ring.nvars)):
        elems = f4(gens, order, **kw)
    else:
        elems = buchberger(gens, order, **kw)
    return GroebnerBasis(I.ring, order, tuple(elems))


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``f`` on division by the basis."""
    if f.ring != basis.ring:
        raise RingMismatchError("polynomial and basis in different rings")
    if not f or not basis.elements:
        return f
    if _use_f4(f.ring, "auto") and len(f) > 8:
        return f4_normal_forms(basis.elements, [f], basis.order)[0]
    return reduce_full(f, basis.elements, basis.order)


def normal_forms(fs: Sequence[Polynomial], basis: GroebnerBasis) -> list[Polynomial]:
    if not fs:
        return []
    if _use_f4(basis.ring, "auto") and basis.elements:
        return f4_normal_forms(basis.elements, list(fs), basis.order)
    return [normal_form(f, basis) for f in fs]


# ring surgery -----------------------------------------------------------------

def _permuted(I: Ideal, perm: Sequence[int]) -> tuple[Ideal, Ring]:
    """Ideal in a ring whose variable k is the old variable ``perm[k]``."""
    ring = I.ring
    new_ring = Ring(tuple(ring.variables[i] for i in perm), ring.field)
    pos = [0] * ring.nvars
    for k, i in enumerate(perm):
        pos[i] = k
    return Ideal([g.map_ring(new_ring, pos) for g in I.generators], new_ring), new_ring


def _drop_front(g: Polynomial, k: int, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m[k:]: c for m, c in g.terms.items()}, _clean=True)


def eliminate(I: Ideal, k: int, *, engine: str = "auto", weights: Sequence[int] | None = None) -> Ideal:
    """I intersected with the subring of the last ``nvars - k`` variables.

    The result lives in the smaller ring; its generators form a reduced
    Groebner basis for the tail block of the elimination order.
    """
    n = I.ring.nvars
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < {n}, got {k}")
    order = MonomialOrder.elimination(k, weights)
    gb = I.groebner(order, engine=engine)
    sub = Ring(I.ring.variables[k:], I.ring.field)
    kept = [_drop_front(g, k, sub) for g in gb.elements if not any(any(m[:k]) for m in g.terms)]
    out = Ideal(kept, sub)
    tail_order = MonomialOrder.grevlex(weights[k:] if weights is not None else None)
    out._gb_cache[tail_order] = GroebnerBasis(sub, tail_order, tuple(kept))
    return out


def divide_out_variable(g: Polynomial, i: int) -> Polynomial:
    k = min(m[i] for m in g.terms)
    if k == 0:
        return g
    return Polynomial(g.ring, {m[:i] + (m[i] - k,) + m[i + 1:]: c for m, c in g.terms.items()}, _clean=True)


def saturate_by_variable(I: Ideal, i: int, *, weights: Sequence[int] | None = None,
                         engine: str = "auto") -> Ideal:
    """(I : x_i^inf) for an ideal homogeneous w.r.t. ``weights``.

    Uses the reverse-lex property: with x_i last in a graded reverse lex
    order, dividing every basis element by its largest power of x_i gives a
    basis of the saturation.
    """
    if not I.is_homogeneous(weights):
        raise PreconditionError("variable saturation by the reverse-lex method needs a homogeneous ideal")
    n = I.ring.nvars
    perm = [k for k in range(n) if k != i] + [i]
    J, ring2 = _permuted(I, perm)
    w2 = tuple(weights[k] for k in perm) if weights is not None else None
    gb = J.groebner(MonomialOrder.grevlex(w2), engine=engine)
    divided = [divide_out_variable(g, n - 1) for g in gb.elements]
    back = [0] * n
    for k, old in enumerate(perm):
        back[k] = old
    return Ideal([g.map_ring(I.ring, back) for g in divided], I.ring)


def saturate_by_polynomial(I: Ideal, f: Polynomial, *, engine: str = "auto") -> Ideal:
    """(I : f^inf) by adjoining t*f - 1 and eliminating t."""
    ring = I.ring
    name = _fresh_name(ring, "t")
    big = ring.extend([name], front=True)
    shift = list(range(1, ring.nvars + 1))
    gens = [g.map_ring(big, shift) for g in I.generators]
    t = big.gen(0)
    gens.append(t * f.map_ring(big, shift) - 1)
    return eliminate(Ideal(gens, big), 1, engine=engine)


def _fresh_name(ring: Ring, base: str) -> str:
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


def _is_variable(f: Polynomial) -> int | None:
    if len(f) == 1:
        (m, _), = f.terms.items()
        if sum(m) == 1:
            return m.index(1)
    return None


def saturate(I: Ideal, J: Ideal | Polynomial, *, engine: str = "auto") -> Ideal:
    """(I : J^inf).

    Principal J: a single variable of a homogeneous I goes through the
    reverse-lex method, anything else through t*f - 1 elimination.  Several
    generators: intersection of the single-generator saturations.
    """
    if isinstance(J, Polynomial):
        J = Ideal([J], I.ring)
    if J.ring != I.ring:
        raise RingMismatchError("saturating ideal lives in a different ring")
    if not J.generators:
        raise PreconditionError("cannot saturate by the zero ideal")
    parts = []
    for f in J.generators:
        i = _is_variable(f)
        if i is not None and I.is_homogeneous():
            parts.append(saturate_by_variable(I, i, engine=engine))
        else:
            parts.append(saturate_by_polynomial(I, f, engine=engine))
    out = parts[0]
    for P in parts[1:]:
        out = intersect(out, P, engine=engine)
    return Ideal(out.groebner().elements, I.ring)


def intersect(I: Ideal, J: Ideal, *, engine: str = "auto") -> Ideal:
    """I ∩ J as (t*I + (1 - t)*J) ∩ k[x]."""
    ring = I.ring
    name = _fresh_name(ring, "t")
    big = ring.extend([name], front=True)
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [t * g.map_ring(big, shift) for g in I.generators]
    gens += [(1 - t) * g.map_ring(big, shift) for g in J.generators]
    if not gens:
        return Ideal([], ring)
    return eliminate(Ideal(gens, big), 1, engine=engine)


def irrelevant_ideal(ring: Ring, variables: Sequence[int] | None = None) -> Ideal:
    idx = range(ring.nvars) if variables is None else variables
    return Ideal([ring.gen(i) for i in idx], ring)


def ideals_equal(I: Ideal, J: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    return I.ring == J.ring and I.groebner(order).elements == J.groebner(order).elements


def random_invertible_matrix(n: int, p: int, seed: int) -> list[list[int]]:
    """Seeded random invertible n x n matrix over F_p."""
    from .kernels import rank_mod_p
    import numpy as np

    rng = random.Random(seed)
    while True:
        A = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        if rank_mod_p(np.array(A, dtype=np.int64), p) == n:
            return A


def linear_change(f: Polynomial, A: Sequence[Sequence[int]], variables: Sequence[int] | None = None) -> Polynomial:
    """Substitute x_i -> sum_j A[i][j] x_j on the selected variables (others fixed)."""
    ring = f.ring
    idx = list(range(ring.nvars)) if variables is None else list(variables)
    images = ring.gens()
    for a, i in enumerate(idx):
        images[i] = sum((ring.gen(idx[b]).scale(A[a][b]) for b in range(len(idx))), ring.zero())
    return f.substitute(images, ring)


def inverse_matrix(A: Sequence[Sequence], field) -> list[list]:
    """Inverse of a square matrix over the given field (Gauss-Jordan)."""
    n = len(A)
    M = [[field(x) for x in row] + [field(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    p = field.p
    for c in range(n):
        r = next((r for r in range(c, n) if M[r][c]), None)
        if r is None:
            raise ValueError("matrix is singular")
        M[c], M[r] = M[r], M[c]
        inv = field.inv(M[c][c])
        M[c] = [field(x * inv) for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                k = M[r][c]
                M[r] = [field(x - k * y) for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def saturate_irrelevant(I: Ideal, variables: Sequence[int] | None = None, *, mode: str = "exact",
                        seed: int = 0, weights: Sequence[int] | None = None,
                        engine: str = "auto") -> Ideal:
    """Saturate a homogeneous ideal by the ideal of the given variables.

    ``exact`` intersects the single-variable saturations I : x_i^inf.  Note
    that chaining them, (I : x_0^inf) : x_1^inf ..., would saturate by the
    product of the variables instead, which removes too much.  ``generic``
    saturates by one random linear form in the variables, which agrees with
    the exact answer for a generic choice; the form's coefficients come from
    ``seed``.
    """
    idx = list(range(I.ring.nvars)) if variables is None else list(variables)
    if mode == "exact":
        parts = [saturate_by_variable(I, i, weights=weights, engine=engine) for i in idx]
        out = parts[0]
        for P in parts[1:]:
            out = intersect(out, P, engine=engine)
        return Ideal(out.groebner().elements, I.ring)
    if mode != "generic":
        raise ValueError(f"unknown saturation mode {mode!r}")
    if weights is not None and len({weights[i] for i in idx}) > 1:
        raise PreconditionError("generic saturation needs the variables to share one weight")
    p = I.ring.field.p
    if p is None:
        raise PreconditionError("generic saturation is implemented over F_p")
    A = random_invertible_matrix(len(idx), p, seed)
    changed = Ideal([linear_change(g, A, idx) for g in I.generators], I.ring)
    sat = saturate_by_variable(changed, idx[-1], weights=weights, engine=engine)
    B = inverse_matrix(A, I.ring.field)
    return Ideal([linear_change(g, B, idx) for g in sat.generators], I.ring)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial of f and g (made monic first)."""
    from ..core.monomial import mono_lcm
    from .buchberger import spoly

    f, g = f.monic(order), g.monic(order)
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    return spoly(f, g, lf, lg, mono_lcm(lf, lg))


def verify_groebner_basis(gb: GroebnerBasis, generators: Sequence[Polynomial] = ()) -> bool:
    """Post-hoc check: reduced, every needed S-polynomial reduces to 0, generators reduce to 0.

    S-pairs discarded by the product and chain criteria are skipped; those
    criteria are valid for testing the Groebner property.
    """
    import numpy as np

    from ..core.monomial import mono_lcm
    from .buchberger import spoly
    from .pairs import PairSet

    order, elems = gb.order, gb.elements
    if not elems:
        return all(not g for g in generators)
    n = gb.ring.nvars
    leads = gb.leading_monomials
    for k, (g, lm) in enumerate(zip(elems, leads)):
        if g.leading_coefficient(order) != 1:
            return False
        for j, other in enumerate(leads):
            if j != k and any(mono_divides(other, m) for m in g.terms):
                return False
    lms = np.array(leads, dtype=np.int64).reshape(len(leads), n)
    ps = PairSet(n, order.weights)
    active = np.zeros(len(elems), dtype=bool)
    sugars = np.array([g.degree(order.weights) for g in elems], dtype=np.int64)
    for h in range(len(elems)):
        active = ps.update(lms, sugars, active, h)
        active[h] = True
    polys = [spoly(elems[i], elems[j], leads[i], leads[j], mono_lcm(leads[i], leads[j]))
             for i, j in zip(ps.i.tolist(), ps.j.tolist())]
    polys += list(generators)
    return all(not r for r in normal_forms(polys, gb))
