"""Rings and sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import RingMismatchError
from .field import FieldSpec
from .monomial import Monomial, MonomialOrder, mono_mul, monomials_of_degree

GREVLEX = MonomialOrder.grevlex()


@dataclass(frozen=True)
class Ring:
    """Variable names plus a coefficient field."""

    variables: tuple[str, ...]
    field: FieldSpec = FieldSpec()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    @classmethod
    def of(cls, names: str | Sequence[str], field: FieldSpec | None = None) -> Ring:
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return cls(tuple(names), field if field is not None else FieldSpec())

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def gen(self, i: int | str) -> Polynomial:
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one()})

    def gens(self) -> list[Polynomial]:
        return [self.gen(i) for i in range(self.nvars)]

    def const(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def monomial(self, exp: Monomial, coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exp): self.field(coeff)})

    def parse(self, text: str) -> Polynomial:
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def with_field(self, field: FieldSpec) -> Ring:
        return Ring(self.variables, field)

    def extend(self, names: Sequence[str], front: bool = False) -> Ring:
        names = tuple(names)
        return Ring(names + self.variables if front else self.variables + names, self.field)

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}]"


class Polynomial:
    """An immutable polynomial: a ring context and a map monomial -> nonzero coefficient.

    Coefficients are stored already coerced into the ring's field.  Instances
    must not be mutated after construction; all operations return new objects.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object] | None = None, *, _clean: bool = False):
        self.ring = ring
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            p = ring.field.p
            if p is None:
                self.terms = {m: Fraction(c) for m, c in terms.items() if c}
            else:
                self.terms = {m: c % p for m, c in terms.items() if c % p}
        self._hash = None

    # basic structure ---------------------------------------------------------
    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.field.zero())

    def degree(self, weights: Sequence[int] | None = None) -> int:
        """Total (or weighted) degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if weights is None:
            return max(sum(m) for m in self.terms)
        return max(sum(w * e for w, e in zip(weights, m)) for m in self.terms)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            degs = {sum(m) for m in self.terms}
        else:
            degs = {sum(w * e for w, e in zip(weights, m)) for m in self.terms}
        return len(degs) <= 1

    def monomials(self, order: MonomialOrder = GREVLEX) -> list[Monomial]:
        return sorted(self.terms, key=order.key(self.ring.nvars), reverse=True)

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, object]]:
        return [(m, self.terms[m]) for m in self.monomials(order)]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key(self.ring.nvars))

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # arithmetic ---------------------------------------------------------------
    def _check(self, other: Polynomial):
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        p = self.field.p
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if p is not None:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        p = self.field.p
        if p is None:
            return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, _clean=True)
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        if not c:
            return self.ring.zero()
        p = self.field.p
        if p is None:
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()}, _clean=True)
        return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()}, _clean=True)

    def mul_term(self, mono: Monomial, c=1) -> Polynomial:
        c = self.field(c)
        if not c:
            return self.ring.zero()
        p = self.field.p
        if p is None:
            return Polynomial(self.ring, {mono_mul(m, mono): v * c for m, v in self.terms.items()}, _clean=True)
        return Polynomial(self.ring, {mono_mul(m, mono): v * c % p for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial(self.ring, out)

    def __rmul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation ------------------------------------------------
    def derivative(self, i: int) -> Polynomial:
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                out[mm] = c * e
        return Polynomial(self.ring, out)

    def evaluate(self, point: Sequence):
        """Exact value at a point, by Horner's rule variable by variable."""
        n = self.ring.nvars
        if len(point) != n:
            raise ValueError(f"point has {len(point)} coordinates, ring has {n} variables")
        F = self.field
        pt = [F(v) for v in point]
        val = _horner(list(self.terms.items()), pt, 0, F.p)
        return F(val)

    def __call__(self, *point):
        return self.evaluate(point)

    def substitute(self, images: Sequence[Polynomial], ring: Ring | None = None) -> Polynomial:
        """Compose: replace variable i by ``images[i]`` (all in one target ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = ring or (images[0].ring if images else self.ring)
        for im in images:
            if im.ring != target:
                raise RingMismatchError("substitution images must share a ring")
        powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                best = max(k for k in cache if k <= e)
                acc = cache[best]
                for k in range(best + 1, e + 1):
                    acc = acc * images[i]
                    cache[k] = acc
            return cache[e]

        out: dict = {}
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    term = power(i, e) if term is None else term * power(i, e)
            if term is None:
                term = target.one()
            for mm, cc in term.terms.items():
                out[mm] = out.get(mm, 0) + c * cc
        return Polynomial(target, out)

    def map_ring(self, ring: Ring, positions: Sequence[int]) -> Polynomial:
        """Re-embed into ``ring``; variable i goes to position ``positions[i]``."""
        n = ring.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, x in enumerate(m):
                if x:
                    e[positions[i]] += x
            out[tuple(e)] = c
        if ring.field != self.field:
            return Polynomial(ring, {k: ring.field(v) for k, v in out.items()})
        return Polynomial(ring, out, _clean=True)

    def reduce_to(self, field: FieldSpec) -> Polynomial:
        """Image of a rational polynomial in another field (e.g. mod p)."""
        ring = self.ring.with_field(field)
        return Polynomial(ring, {m: field(c) for m, c in self.terms.items()})

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d}, _clean=True)

    # printing ---------------------------------------------------------------
    def __str__(self) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, ring={self.ring})"


def _horner(terms, pt, i, p):
    """Evaluate a term list by nested Horner in variables i, i+1, ..."""
    if i == len(pt):
        return sum(c for _, c in terms)
    groups: dict[int, list] = {}
    for m, c in terms:
        groups.setdefault(m[i], []).append((m, c))
    x = pt[i]
    acc = 0
    prev = None
    for e in sorted(groups, reverse=True):
        if prev is not None:
            acc = acc * x ** (prev - e)
        acc = acc + _horner(groups[e], pt, i + 1, p)
        if p is not None:
            acc %= p
        prev = e
    if prev:
        acc = acc * x**prev
    return acc % p if p is not None else acc


def random_homogeneous(degree: int, ring: Ring, seed: int) -> Polynomial:
    """Dense random form: every monomial of ``degree`` gets an independent coefficient.

    Deterministic in ``seed``.  Only prime fields are supported.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    p = ring.field.p
    if p is None:
        raise ValueError("random_homogeneous needs a prime field")
    rng = random.Random(seed)
    terms = {m: rng.randrange(p) for m in monomials_of_degree(ring.nvars, degree)}
    return Polynomial(ring, terms)


def linear_form(ring: Ring, coeffs: Iterable) -> Polynomial:
    n = ring.nvars
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = ring.field(c)
    return Polynomial(ring, terms)
