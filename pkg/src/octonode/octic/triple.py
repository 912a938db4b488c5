"""Section triples (f, g, h) of the split bundle O + O(a) on P^3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..core.field import FieldSpec
from ..core.polynomial import Polynomial, Ring, linear_form, random_homogeneous
from ..core.seeds import derive_seed
from ..errors import PreconditionError

Z_VARS = ("z0", "z1", "z2", "z3")


def default_ring(field: FieldSpec | None = None) -> Ring:
    return Ring(Z_VARS, field or FieldSpec())


@dataclass(frozen=True)
class SectionTriple:
    """Coefficients of s = f x0^2 + g x0 x1 + h x1^2, of degrees 4-a, 4, 4+a.

    Zero polynomials are accepted in any slot.
    """

    a: int
    f: Polynomial
    g: Polynomial
    h: Polynomial

    def __post_init__(self):
        if not 0 <= self.a <= 4:
            raise PreconditionError(f"split type a must lie in [0, 4], got {self.a}")
        ring = self.f.ring
        if ring.nvars != 4:
            raise PreconditionError("section triples live in four variables")
        for name, p, d in (("f", self.f, 4 - self.a), ("g", self.g, 4), ("h", self.h, 4 + self.a)):
            if p.ring != ring:
                raise PreconditionError(f"{name} lives in a different ring")
            if p and (not p.is_homogeneous() or p.degree() != d):
                raise PreconditionError(f"{name} must be homogeneous of degree {d}")

    @property
    def ring(self) -> Ring:
        return self.f.ring

    @property
    def gamma(self) -> int:
        return self.a * self.a

    @property
    def polynomials(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        return self.f, self.g, self.h

    def scale(self, r) -> SectionTriple:
        return SectionTriple(self.a, self.f.scale(r), self.g.scale(r), self.h.scale(r))

    def map(self, fn) -> SectionTriple:
        return SectionTriple(self.a, fn(self.f), fn(self.g), fn(self.h))

    def with_field(self, field: FieldSpec) -> SectionTriple:
        return self.map(lambda p: p.reduce_to(field))


def random_triple(a: int, seed: int, field: FieldSpec | None = None) -> SectionTriple:
    """Dense random triple; each slot draws from its own seed derived from ``seed``."""
    ring = default_ring(field)
    f, g, h = (random_homogeneous(d, ring, derive_seed(seed, "triple", a, k))
               for k, d in enumerate((4 - a, 4, 4 + a)))
    return SectionTriple(a, f, g, h)


@dataclass(frozen=True)
class LinearFormsInstance:
    """A triple whose entries are products of linear forms, with the planes kept.

    V(f, g, h) is then the set of points where one plane from each group meets.
    """

    triple: SectionTriple
    planes: tuple[tuple[tuple[int, ...], ...], ...]


def linear_forms_instance(a: int, seed: int, field: FieldSpec | None = None, *,
                          coefficient_range: int = 9) -> LinearFormsInstance:
    """Products of 4-a, 4 and 4+a linear forms with small random integer coefficients."""
    ring = default_ring(field)
    import random

    rng = random.Random(derive_seed(seed, "planes", a))
    groups = []
    polys = []
    for d in (4 - a, 4, 4 + a):
        planes = tuple(tuple(rng.randint(-coefficient_range, coefficient_range) for _ in range(4))
                       for _ in range(d))
        groups.append(planes)
        p = ring.one()
        for pl in planes:
            p = p * linear_form(ring, pl)
        polys.append(p)
    return LinearFormsInstance(SectionTriple(a, *polys), tuple(groups))


def _solve_point(rows: list[tuple[int, ...]], field: FieldSpec) -> tuple | None:
    """Kernel of a 3x4 matrix when it is a single projective point, normalised."""
    M = [[field(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(4):
        k = next((i for i in range(r, 3) if M[i][c]), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        inv = field.inv(M[r][c])
        M[r] = [field(x * inv) for x in M[r]]
        for i in range(3):
            if i != r and M[i][c]:
                t = M[i][c]
                M[i] = [field(x - t * y) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == 3:
            break
    if len(pivots) < 3:
        return None
    free = next(c for c in range(4) if c not in pivots)
    v = [field(0)] * 4
    v[free] = field(1)
    for i, c in enumerate(pivots):
        v[c] = field(-M[i][free])
    lead = next(x for x in v if x)
    inv = field.inv(lead)
    return tuple(field(x * inv) for x in v)


def plane_intersection_points(planes, field: FieldSpec) -> set[tuple] | None:
    """All points lying on one plane from each of the three groups.

    Brute force over every triple of planes, solving a 3x3 linear system
    each time; returns None if some triple meets in a line (infinitely many
    points).
    """
    pts = set()
    for rows in product(*planes):
        pt = _solve_point(list(rows), field)
        if pt is None:
            return None
        pts.add(pt)
    return pts


def point_key(pt) -> str:
    return " ".join(str(Fraction(x)) if not isinstance(x, int) else str(x) for x in pt)
