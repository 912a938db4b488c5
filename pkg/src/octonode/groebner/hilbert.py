"""Hilbert series, functions and polynomials of graded quotients.

Everything is read off a monomial ideal: for a homogeneous ideal the
leading-term ideal of any Groebner basis has the same Hilbert function.
The numerator of the Hilbert series is computed with the pivot recursion
N(I) = N(I + (x^e)) + t^deg(x^e) * N(I : x^e).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from ..core.monomial import Monomial, monomials_of_degree
from ..core.polynomial import Polynomial
from ..errors import PreconditionError
from .ideal import GREVLEX, Ideal
from .kernels import rank_mod_p


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=sum)
    out: list[Monomial] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _shift(a: list[int], k: int) -> list[int]:
    return [0] * k + a


def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def hilbert_numerator(gens: Sequence[Monomial], nvars: int, weights: Sequence[int] | None = None) -> list[int]:
    """Coefficients of N(t) with HS(t) = N(t) / prod(1 - t^w_i)."""
    w = list(weights) if weights is not None else [1] * nvars
    memo: dict[tuple, list[int]] = {}

    def deg(m):
        return sum(a * b for a, b in zip(w, m))

    def rec(G: list[Monomial]) -> list[int]:
        G = _minimalize(G)
        key = tuple(sorted(G))
        if key in memo:
            return memo[key]
        if not G:
            res = [1]
        elif any(not any(g) for g in G):
            res = [0]
        elif all(sum(1 for e in g if e) == 1 for g in G):
            res = [1]
            for g in G:
                d = deg(g)
                res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
        else:
            counts = [0] * nvars
            for g in G:
                if sum(1 for e in g if e) > 1:
                    for i, e in enumerate(g):
                        if e:
                            counts[i] += 1
            v = max(range(nvars), key=lambda i: counts[i])
            exps = sorted(g[v] for g in G if g[v] and sum(1 for e in g if e) > 1)
            e = exps[len(exps) // 2]
            piv = tuple(e if i == v else 0 for i in range(nvars))
            plus = rec(G + [piv])
            quot = rec([tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in G])
            res = _poly_add(plus, _shift(quot, deg(piv)))
        res = _trim(res)
        memo[key] = res
        return res

    return rec(list(gens))


def hilbert_series_coefficients(gens: Sequence[Monomial], nvars: int, upto: int,
                                weights: Sequence[int] | None = None) -> list[int]:
    """HF(0..upto) of k[x]/(gens)."""
    w = list(weights) if weights is not None else [1] * nvars
    num = hilbert_numerator(gens, nvars, w)
    series = [0] * (upto + 1)
    for i, c in enumerate(num[: upto + 1]):
        series[i] = c
    for wi in w:
        for d in range(wi, upto + 1):
            series[d] += series[d - wi]
    return series


def _leading_exponents(I: Ideal) -> list[Monomial]:
    gb = I.groebner(GREVLEX)
    return gb.leading_monomials


def hilbert_function(I: Ideal, d: int) -> int:
    """dim_k (R/I)_d, counted as degree-d standard monomials."""
    if d < 0:
        return 0
    if not I.is_homogeneous():
        raise PreconditionError("hilbert_function needs a homogeneous ideal")
    return hilbert_series_coefficients(_leading_exponents(I), I.ring.nvars, d)[d]


@dataclass(frozen=True)
class HilbertPolynomial:
    """A numerical polynomial in t with rational coefficients, lowest degree first."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else -1

    def __call__(self, t: int) -> Fraction:
        return sum((c * t**i for i, c in enumerate(self.coefficients)), Fraction(0))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            a = abs(c)
            cs = str(a) if (a != 1 or not mono) else ""
            sign = "-" if c < 0 else "+"
            parts.append((sign, cs + mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def curve_data(self) -> tuple[int, int]:
        """(degree, arithmetic genus) for a polynomial d*t + (1 - g)."""
        if self.degree != 1:
            raise PreconditionError(f"Hilbert polynomial {self} is not that of a curve")
        a0, a1 = self.coefficients
        if a0.denominator != 1 or a1.denominator != 1:
            raise PreconditionError(f"non-integral Hilbert polynomial {self}")
        return int(a1), int(1 - a0)


def _binomial_poly(shift: int, k: int) -> list[Fraction]:
    """Coefficients of C(t + shift, k) as a polynomial in t."""
    poly = [Fraction(1)]
    for j in range(k):
        # multiply by (t + shift - j) / (j + 1)
        a = Fraction(shift - j, j + 1)
        b = Fraction(1, j + 1)
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i] += c * a
            new[i + 1] += c * b
        poly = new
    return poly


def hilbert_polynomial_of_monomials(gens: Sequence[Monomial], nvars: int) -> HilbertPolynomial:
    num = hilbert_numerator(gens, nvars)
    k = 0
    q = list(num)
    # divide out (1 - t) while it divides
    while len(q) > 1 and sum(q) == 0:
        out = [0] * (len(q) - 1)
        acc = 0
        for i in range(len(q) - 1):
            acc += q[i]
            out[i] = acc
        q = _trim(out)
        k += 1
    if q == [0]:
        return HilbertPolynomial(())
    dim = nvars - k
    if dim <= 0:
        return HilbertPolynomial(())
    total = [Fraction(0)] * dim
    for j, c in enumerate(q):
        if c:
            bp = _binomial_poly(dim - 1 - j, dim - 1)
            for i, b in enumerate(bp):
                total[i] += c * b
    while total and total[-1] == 0:
        total.pop()
    return HilbertPolynomial(tuple(total))


def hilbert_polynomial(I: Ideal) -> HilbertPolynomial:
    """Eventual polynomial of d -> hilbert_function(I, d)."""
    if not I.is_homogeneous():
        raise PreconditionError("hilbert_polynomial needs a homogeneous ideal")
    return hilbert_polynomial_of_monomials(_leading_exponents(I), I.ring.nvars)


# generator profile -----------------------------------------------------------

def _degree_piece_rows(gens: Sequence[Polynomial], d: int, index: dict) -> list[dict]:
    rows = []
    n = gens[0].ring.nvars if gens else 0
    for g in gens:
        e = g.degree()
        if e > d:
            continue
        for m in monomials_of_degree(n, d - e):
            rows.append({index[tuple(a + b for a, b in zip(mm, m))]: c for mm, c in g.terms.items()})
    return rows


def _rank(rows: list[dict], ncols: int, p: int | None) -> int:
    if not rows:
        return 0
    if p is not None:
        M = np.zeros((len(rows), ncols), dtype=np.int64)
        for r, row in enumerate(rows):
            for c, v in row.items():
                M[r, c] = int(v)
        return rank_mod_p(M, p)
    return rank_rational(rows, ncols)


def rank_rational(rows: list[dict], ncols: int) -> int:
    """Rank of sparse rational rows by fraction-exact elimination."""
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            if c not in pivots:
                inv = 1 / r[c]
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
            f = r[c]
            for k, v in pivots[c].items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def graded_piece_dimension(gens: Sequence[Polynomial], d: int) -> int:
    """dim of the degree-d part of the ideal generated by homogeneous ``gens``."""
    gens = [g for g in gens if g]
    if not gens:
        return 0
    ring = gens[0].ring
    mons = monomials_of_degree(ring.nvars, d)
    index = {m: i for i, m in enumerate(mons)}
    return _rank(_degree_piece_rows(gens, d, index), len(mons), ring.field.p)


def minimal_generator_profile(I: Ideal, max_degree: int) -> dict[int, int]:
    """Number of minimal generators in each degree <= ``max_degree``.

    count(d) = dim I_d - dim(R_1 * I_{d-1}), both spans of monomial multiples
    of the given generators, ranked exactly.
    """
    gens = list(I.generators)
    if not I.is_homogeneous():
        raise PreconditionError("generator profile needs a homogeneous ideal")
    ring = I.ring
    profile: dict[int, int] = {}
    for d in range(0, max_degree + 1):
        mons = monomials_of_degree(ring.nvars, d)
        index = {m: i for i, m in enumerate(mons)}
        upto = [g for g in gens if g.degree() <= d]
        below = [g for g in gens if g.degree() < d]
        if not upto:
            continue
        full = _rank(_degree_piece_rows(upto, d, index), len(mons), ring.field.p)
        lower = _rank(_degree_piece_rows(below, d, index), len(mons), ring.field.p) if below else 0
        if full - lower:
            profile[d] = full - lower
    return profile


def count_standard_monomials(leads: Sequence[Monomial], nvars: int) -> int | None:
    """Number of monomials outside the monomial ideal, or None if infinite."""
    leads = _minimalize(list(leads))
    if any(sum(m) == 0 for m in leads):
        return 0
    powers = []
    for i in range(nvars):
        pure = [m[i] for m in leads if m[i] > 0 and sum(m) == m[i]]
        if not pure:
            return None
        powers.append(min(pure))
    # finite quotient: the Hilbert series is a polynomial of degree < sum(powers)
    return sum(hilbert_series_coefficients(leads, nvars, sum(powers)))


def standard_monomials(leads: Sequence[Monomial], nvars: int, limit: int = 100_000) -> list[Monomial]:
    """Explicit list of standard monomials of a zero-dimensional leading-term ideal."""
    leads = _minimalize(list(leads))
    out: list[Monomial] = []
    stack = [(0,) * nvars]
    seen = {stack[0]}
    while stack:
        m = stack.pop()
        if any(all(a <= b for a, b in zip(g, m)) for g in leads):
            continue
        out.append(m)
        if len(out) > limit:
            raise PreconditionError("too many standard monomials (ideal not zero-dimensional?)")
        for i in range(nvars):
            mm = m[:i] + (m[i] + 1,) + m[i + 1:]
            if mm not in seen:
                seen.add(mm)
                stack.append(mm)
    return out


def binom_count(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1)
