"""Buchberger's algorithm on dictionary polynomials, for any coefficient field.

This is the reference route: pure Python, exact over the rationals as well as
over F_p.  The prime-field fast path lives in :mod:`octonode.groebner.f4`;
both produce the same reduced basis, which the test suite checks.
"""

from __future__ import annotations

import heapq
from typing import Sequence

import numpy as np

from ..core.monomial import MonomialOrder, mono_div, mono_divides
from ..core.polynomial import Polynomial
from ..errors import ResourceLimitExceeded
from .pairs import PairSet


def _lead(f: Polynomial, key):
    m = max(f.terms, key=key)
    return m, f.terms[m]


def reduce_full(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder,
                leads: Sequence | None = None) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``basis`` (all terms reduced)."""
    ring = f.ring
    key = order.key(ring.nvars)
    F = ring.field
    p = F.p
    if leads is None:
        leads = [b.leading_monomial(order) for b in basis]
    scales = [F.inv(b.terms[lb]) for b, lb in zip(basis, leads)]
    work = dict(f.terms)
    # max-heap on the order key; entries whose monomial left ``work`` are stale
    heap = [(tuple(-k for k in key(m)), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for b, lb, sc in zip(basis, leads, scales):
            if mono_divides(lb, m):
                q = mono_div(m, lb)
                c = c * sc
                for mb, cb in b.terms.items():
                    if mb == lb:
                        continue
                    mm = tuple(x + y for x, y in zip(mb, q))
                    old = work.get(mm)
                    v = (old or 0) - c * cb
                    if p is not None:
                        v %= p
                    if v:
                        work[mm] = v
                        if old is None:
                            heapq.heappush(heap, (tuple(-k for k in key(mm)), mm))
                    elif old is not None:
                        del work[mm]
                break
        else:
            rem[m] = c
    return Polynomial(ring, rem, _clean=True)


def spoly(f: Polynomial, g: Polynomial, lf, lg, lcm) -> Polynomial:
    """S-polynomial of monic f and g."""
    return f.mul_term(mono_div(lcm, lf)) - g.mul_term(mono_div(lcm, lg))


def interreduce(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Minimal, monic, fully reduced basis, sorted by leading monomial (largest first)."""
    if not basis:
        return []
    n = basis[0].ring.nvars
    key = order.key(n)
    basis = [b.monic(order) for b in basis if b]
    leads = [b.leading_monomial(order) for b in basis]
    keep = []
    for k, (b, lb) in enumerate(zip(basis, leads)):
        redundant = False
        for k2, lb2 in enumerate(leads):
            if k2 == k:
                continue
            if mono_divides(lb2, lb) and (lb2 != lb or k2 < k):
                redundant = True
                break
        if not redundant:
            keep.append(k)
    basis = [basis[k] for k in keep]
    leads = [leads[k] for k in keep]
    out = []
    for k, b in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        oleads = leads[:k] + leads[k + 1:]
        tail = Polynomial(b.ring, {m: c for m, c in b.terms.items() if m != leads[k]}, _clean=True)
        r = reduce_full(tail, others, order, oleads)
        out.append(r + Polynomial(b.ring, {leads[k]: b.field.one()}, _clean=True))
    out.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return out


def prefers_sugar(gens: Sequence[Polynomial], order: MonomialOrder, weights: Sequence[int]) -> bool:
    """Sugar selection suits graded orders and homogeneous input."""
    return order.is_graded() or all(g.is_homogeneous(weights) for g in gens)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder, *,
               spair_budget: int | None = None, degree_budget: int | None = None,
               weights: Sequence[int] | None = None) -> list[Polynomial]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are taken by increasing sugar degree (the lcm degree for homogeneous
    input), ties by the order on the lcm.  For inhomogeneous input under an
    order that does not refine degree, sugar can run far above the degrees
    that actually occur, so pairs are taken by smallest lcm instead (the
    normal strategy).  Both Buchberger criteria are applied through the
    Gebauer-Moeller update.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    n = ring.nvars
    key = order.key(n)
    omat = order.matrix(n)
    w = list(weights) if weights is not None else [1] * n
    basis: list[Polynomial] = []
    leads: list = []
    sugars: list[int] = []
    pairs = PairSet(n, w)
    lms = np.zeros((0, n), dtype=np.int64)
    active = np.zeros(0, dtype=bool)
    by_sugar = prefers_sugar(gens, order, w)

    def add(h: Polynomial, sugar: int):
        nonlocal lms, active
        h = h.monic(order)
        lh = max(h.terms, key=key)
        basis.append(h)
        leads.append(lh)
        sugars.append(sugar)
        lms = np.vstack([lms, np.array(lh, dtype=np.int64)[None, :]])
        active = np.append(active, False)
        if lh == (0,) * n:
            raise _UnitIdeal
        active = pairs.update(lms, np.array(sugars, dtype=np.int64), active, len(basis) - 1)

    try:
        for g in sorted(gens, key=lambda f: (f.degree(w), key(f.leading_monomial(order)))):
            r = reduce_full(g, [basis[k] for k in np.nonzero(active)[0]], order,
                            [leads[k] for k in np.nonzero(active)[0]])
            if r:
                add(r, max(g.degree(w), r.degree(w)))
        processed = 0
        while len(pairs):
            d, i, j, lcm = pairs.pop_one(omat, by_sugar)
            processed += 1
            if spair_budget is not None and processed > spair_budget:
                raise ResourceLimitExceeded(f"S-pair budget of {spair_budget} exceeded")
            if degree_budget is not None and d > degree_budget:
                raise ResourceLimitExceeded(f"degree budget of {degree_budget} exceeded (degree {d})")
            s = spoly(basis[i], basis[j], leads[i], leads[j], tuple(int(x) for x in lcm))
            idx = np.nonzero(active)[0]
            r = reduce_full(s, [basis[k] for k in idx], order, [leads[k] for k in idx])
            if r:
                add(r, d)
    except _UnitIdeal:
        return [ring.one()]
    return interreduce([basis[k] for k in np.nonzero(active)[0]], order)


class _UnitIdeal(Exception):
    pass
