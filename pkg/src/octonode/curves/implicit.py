"""Implicitization of rational maps from plane curves (or lines) to P^3."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..core.monomial import MonomialOrder
from ..core.polynomial import Polynomial, Ring
from ..core.seeds import derive_seed
from ..errors import PreconditionError
from ..groebner.hilbert import hilbert_polynomial
from ..groebner.ideal import (Ideal, divide_out_variable, reduced_groebner_basis,
                              saturate_irrelevant)

TARGET_VARS = ("w0", "w1", "w2", "w3")


class DimensionError(PreconditionError):
    """The image of a map is not a curve."""


@dataclass(frozen=True)
class CurveMapSpec:
    """A curve {curve = 0} in a projective source space with a map given by forms of one degree.

    ``curve`` may be the zero polynomial, meaning the whole source space
    (P^1 for two source variables).
    """

    curve: Polynomial
    components: tuple[Polynomial, ...]
    target_vars: tuple[str, ...] = TARGET_VARS

    def __post_init__(self):
        ring = self.curve.ring
        if len(self.components) != len(self.target_vars):
            raise PreconditionError("need one component per target variable")
        if any(c.ring != ring for c in self.components):
            raise PreconditionError("curve and components must share a ring")
        if self.curve and not self.curve.is_homogeneous():
            raise PreconditionError("the source curve must be homogeneous")
        degs = {c.degree() for c in self.components if c}
        if len(degs) != 1 or not all(c.is_homogeneous() for c in self.components if c):
            raise PreconditionError("components must be homogeneous of one common degree")
        if self.curve:
            C = Ideal([self.curve], ring)
            if all(C.contains(c) for c in self.components):
                raise PreconditionError("every component vanishes on the source curve")

    @property
    def source(self) -> Ring:
        return self.curve.ring

    @property
    def degree(self) -> int:
        return next(c.degree() for c in self.components if c)

    def target_ring(self) -> Ring:
        return Ring(self.target_vars, self.source.field)

    def with_field(self, field) -> CurveMapSpec:
        red = lambda p: p.reduce_to(field)  # noqa: E731
        return CurveMapSpec(red(self.curve), tuple(map(red, self.components)), self.target_vars)


def _graph_ring(spec: CurveMapSpec) -> tuple[Ring, str]:
    names = list(spec.source.variables)
    v = "v"
    while v in names or v in spec.target_vars:
        v += "_"
    return Ring(names + [v] + list(spec.target_vars), spec.source.field), v


def implicitize(spec: CurveMapSpec, *, seed: int = 0) -> Ideal:
    """Saturated homogeneous ideal of the closure of the image of the map.

    The graph is cut out by the source curve and the 2x2 minors
    w_i c_j - w_j c_i.  Base points are removed by adjoining v - c for a
    random combination c of the components and saturating by v (with v
    weighted by the component degree, every generator is homogeneous and
    the saturation is a single reverse-lex computation).  Eliminating the
    source variables and v, then saturating by the target's irrelevant ideal,
    gives the ideal of the image.
    """
    ring, _ = _graph_ring(spec)
    ns = spec.source.nvars
    nt = len(spec.target_vars)
    d = spec.degree
    weights = (1,) * ns + (d,) + (1,) * nt
    pos = list(range(ns))
    cs = [c.map_ring(ring, pos) for c in spec.components]
    w = [ring.gen(ns + 1 + i) for i in range(nt)]
    p = ring.field.p
    rng = random.Random(derive_seed(seed, "base-locus"))
    lam = [rng.randrange(1, p) if p else rng.randint(1, 97) for _ in cs]
    combo = sum((c.scale(l) for c, l in zip(cs, lam)), ring.zero())
    gens = [w[i] * cs[j] - w[j] * cs[i] for i in range(nt) for j in range(i + 1, nt)]
    gens.append(ring.gen(ns) - combo)
    if spec.curve:
        gens.append(spec.curve.map_ring(ring, pos))
    G = Ideal(gens, ring)

    # saturate by v: reverse-lex order with v last among the variables
    perm = [i for i in range(ring.nvars) if i != ns] + [ns]
    pring = Ring([ring.variables[i] for i in perm], ring.field)
    back = [perm.index(i) for i in range(ring.nvars)]
    pw = tuple(weights[i] for i in perm)
    permuted = [g.map_ring(pring, back) for g in gens]
    gb = reduced_groebner_basis(permuted, MonomialOrder.grevlex(pw), weights=pw)
    sat = [divide_out_variable(g, ring.nvars - 1).map_ring(ring, perm) for g in gb.elements]

    elim_order = MonomialOrder.elimination(ns + 1, weights)
    egb = reduced_groebner_basis(Ideal(sat, ring), elim_order, weights=weights)
    tring = spec.target_ring()
    kept = []
    for g in egb.elements:
        if all(not any(m[: ns + 1]) for m in g.terms):
            kept.append(Polynomial(tring, {m[ns + 1:]: c for m, c in g.terms.items()}))
    image = Ideal(kept, tring)
    if not kept:
        raise DimensionError("the image is all of P^3")
    image = saturate_irrelevant(image, mode="generic", seed=derive_seed(seed, "target"))
    hp = hilbert_polynomial(image)
    if hp.degree != 1:
        raise DimensionError(f"the image has Hilbert polynomial {hp}, not that of a curve")
    return Ideal(image.groebner().elements, tring)
