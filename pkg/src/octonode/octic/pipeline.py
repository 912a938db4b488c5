"""Discriminant octics of split section triples and their certification.

For s = f x0^2 + g x0 x1 + h x1^2 on P(O + O(a)) the branch surface of
X = {s = 0} -> P^3 is the octic g^2 - 4 f h.  When X is smooth its
singularities are nodes located exactly at V(f, g, h), and there are
64 - 4 a^2 of them.  Each function below checks one part of that chain on
a concrete instance.
"""

from __future__ import annotations

import enum
import time
from dataclasses import asdict, dataclass, field

from ..core.parsing import format_polynomial
from ..core.polynomial import Polynomial, Ring
from ..core.seeds import derive_seed
from ..errors import NotZeroDimensionalError, OctonodeError, PreconditionError, ResourceLimitExceeded
from ..groebner.ideal import Ideal, linear_change, random_invertible_matrix, saturate_by_variable
from ..groebner.zerodim import (NOT_ZERO_DIMENSIONAL, Chart, Dimension, in_radical, affine_radical,
                                charts_radical_equal, dehomogenize_last, check_reduced, projective_chart, zero_dim_degree)
from ..groebner.hilbert import count_standard_monomials
from .invariants import bundle_invariants
from .triple import SectionTriple, random_triple


def discriminant_octic(t: SectionTriple) -> Polynomial:
    """g^2 - 4 f h."""
    delta = t.g * t.g - t.f * t.h * 4
    if not delta:
        raise PreconditionError("the discriminant vanishes identically; it is not an octic")
    return delta


def node_ideal(t: SectionTriple) -> Ideal:
    gens = [p for p in t.polynomials if p]
    if not gens:
        raise PreconditionError("all three sections are zero")
    return Ideal(gens, t.ring)


def node_scheme(t: SectionTriple, seed: int = 0) -> tuple[Ideal, int | Dimension]:
    """V(f, g, h): its saturated ideal and its degree (or NOT_ZERO_DIMENSIONAL)."""
    chart = projective_chart(node_ideal(t), seed)
    return chart.saturated_ideal(), chart.degree


def jacobian_ideal(octic: Polynomial) -> Ideal:
    """(F, dF/dz0, ..., dF/dz3); F is redundant by Euler's relation but kept."""
    if not octic.is_homogeneous():
        raise PreconditionError("the singular locus needs a homogeneous polynomial")
    return Ideal([octic] + [octic.derivative(i) for i in range(octic.ring.nvars)], octic.ring)


def singular_locus(octic: Polynomial, seed: int = 0) -> Ideal:
    """Saturated ideal of the singular scheme of a projective hypersurface."""
    return projective_chart(jacobian_ideal(octic), seed).saturated_ideal()


def certify_sing_equals_P(t: SectionTriple, seed: int = 0) -> bool:
    """Sing(g^2 - 4fh) and V(f, g, h) are the same set of points."""
    delta = discriminant_octic(t)
    P, J = node_ideal(t), jacobian_ideal(delta)
    cp, cs = projective_chart(P, seed), projective_chart(J, seed)
    if not cp.is_zero_dimensional:
        raise NotZeroDimensionalError("V(f, g, h) is not finite")
    if not cs.is_zero_dimensional:
        return False
    return charts_radical_equal(cs, cp, J, P)


@dataclass(frozen=True)
class A1Certificate:
    """Total Tjurina number of the singular scheme against its number of points."""

    tjurina_degree: int | None
    points: int | None
    passed: bool
    reason: str = ""


def octic_a1_certificate(octic: Polynomial, seed: int = 0) -> A1Certificate:
    """All singularities of a surface are nodes iff the total Tjurina number equals the point count.

    A node has Tjurina number 1 and every worse isolated singularity has a
    larger one.  Non-isolated singularities fail outright.
    """
    chart = projective_chart(jacobian_ideal(octic), seed)
    return _a1_from_chart(chart)


def _a1_from_chart(chart: Chart) -> A1Certificate:
    if not chart.is_zero_dimensional:
        return A1Certificate(None, None, False, "singular locus is not finite")
    if chart.degree == 0:
        return A1Certificate(0, 0, True)
    rad = affine_radical(chart.affine)
    pts = count_standard_monomials(rad.leading_monomials, rad.ring.nvars)
    ok = pts == chart.degree
    return A1Certificate(chart.degree, pts, ok, "" if ok else "some singular point has Tjurina number > 1")


def affine_tjurina(octic: Polynomial, chart_var: int = 0) -> tuple[int | Dimension, int]:
    """(total Tjurina number, number of singular points) in the chart z_{chart_var} = 1."""
    ring = octic.ring
    keep = [i for i in range(ring.nvars) if i != chart_var]
    sub = Ring([ring.variables[i] for i in keep], ring.field)
    images = [sub.one() if i == chart_var else sub.gen(keep.index(i)) for i in range(ring.nvars)]
    F = octic.substitute(images, sub)
    J = Ideal([F] + [F.derivative(i) for i in range(sub.nvars)], sub)
    tau = zero_dim_degree(J, affine=True)
    if tau is NOT_ZERO_DIMENSIONAL or tau == 0:
        return tau, 0
    rad = affine_radical(J.groebner())
    return tau, count_standard_monomials(rad.leading_monomials, sub.nvars)


def certify_all_A1(t: SectionTriple, seed: int = 0) -> bool:
    """Total Tjurina degree of the discriminant equals the node degree, and V(f, g, h) is reduced."""
    cert = octic_a1_certificate(discriminant_octic(t), seed)
    _, deg = node_scheme(t, seed)
    if deg is NOT_ZERO_DIMENSIONAL:
        raise NotZeroDimensionalError("V(f, g, h) is not finite")
    return cert.passed and cert.tjurina_degree == deg and check_reduced(node_ideal(t), seed=seed).reduced


# smoothness of X ---------------------------------------------------------------

FIBER_VARS = ("x0", "x1")


def total_space_equation(t: SectionTriple) -> tuple[Polynomial, tuple[int, ...]]:
    """s = f x0^2 + g x0 x1 + h x1^2 in (z0..z3, x0, x1) and the grading making it homogeneous.

    With weight a+1 on x0 and 1 on everything else, s has degree 6 + a.
    """
    ring = t.ring.extend(FIBER_VARS)
    pos = list(range(4))
    x0, x1 = ring.gen(4), ring.gen(5)
    f, g, h = (p.map_ring(ring, pos) for p in t.polynomials)
    s = f * x0 * x0 + g * x0 * x1 + h * x1 * x1
    return s, (1, 1, 1, 1, t.a + 1, 1)


def certify_X_smooth(t: SectionTriple, seed: int = 0) -> bool:
    """X = {s = 0} in P(O + O(a)) is smooth.

    Checked in two parts that together are equivalent to smoothness:
    over z outside V(f, g, h), X is singular exactly above the singular
    points of the discriminant, so those must lie in V(f, g, h); over z in
    V(f, g, h) the whole fibre lies in X, and X is singular at [x0 : x1]
    iff x0^2 df + x0 x1 dg + x1^2 dh vanishes at z.
    """
    node_chart = projective_chart(node_ideal(t), seed)
    sing_chart = projective_chart(jacobian_ideal(discriminant_octic(t)), seed)
    return _x_smooth_from_charts(t, node_chart, sing_chart)


def _x_smooth_from_charts(t: SectionTriple, node_chart: Chart, sing_chart: Chart) -> bool:
    if node_chart.matrix != sing_chart.matrix:
        raise PreconditionError("charts use different coordinate changes")
    if not all(in_radical(sing_chart.to_chart(p), sing_chart.affine) for p in t.polynomials):
        return False
    if node_chart.saturated.is_unit():
        return True
    aff = node_chart.affine
    ring = aff.ring
    big = ring.extend(["u"])
    pos = list(range(ring.nvars))
    u = big.gen(ring.nvars)
    grads = []
    for p in t.polynomials:
        q = linear_change(p, node_chart.matrix)
        grads.append([dehomogenize_last(q.derivative(i), ring) for i in range(4)])
    base = list(aff.elements)
    # fibre point [1 : 0]
    if not Ideal(base + grads[0], ring).is_unit():
        return False
    # fibre points [u : 1]
    lifted = [g.map_ring(big, pos) for g in base]
    for i in range(4):
        f_i, g_i, h_i = (gr[i].map_ring(big, pos) for gr in grads)
        lifted.append(f_i * u * u + g_i * u + h_i)
    return Ideal(lifted, big).is_unit()


def certify_X_smooth_total_space(t: SectionTriple, seed: int = 0) -> bool:
    """Smoothness of X from one saturation of the full Jacobian ideal of s.

    X is singular exactly where s and all its partials vanish with z != 0 and
    (x0, x1) != 0.  After a generic change of the z coordinates, saturating
    by the last z-variable discards z = 0; saturating further by x0 and by
    x1 discards x = 0.  X is smooth iff both final ideals are the unit ideal.
    Independent of :func:`certify_X_smooth` but far slower for a = 0.
    """
    s, w = total_space_equation(t)
    ring = s.ring
    p = ring.field.p
    if p is None:
        raise PreconditionError("smoothness certification is implemented over F_p")
    A = random_invertible_matrix(4, p, seed)
    s = linear_change(s, A, range(4))
    J = Ideal([s] + [s.derivative(i) for i in range(ring.nvars)], ring)
    S = saturate_by_variable(J, 3, weights=w)
    for xi in (4, 5):
        T = saturate_by_variable(S, xi, weights=w)
        if not any(g.is_constant() for g in T.generators):
            return False
    return True


# witnesses ---------------------------------------------------------------------

class FiberCase(enum.Enum):
    FIBER_CASE = "FIBER_CASE"

    def __str__(self) -> str:
        return self.value


FIBER_CASE = FiberCase.FIBER_CASE


@dataclass(frozen=True)
class Witness:
    """A point (z, x) of the total space over a singular point z of the octic."""

    z: tuple
    x: tuple
    residuals: tuple     # s, ds/dx0, ds/dx1, ds/dz0..ds/dz3 at (z, x)


def _total_space_partials(t: SectionTriple, z, x) -> tuple:
    f, g, h = (p.evaluate(z) for p in t.polynomials)
    F = t.ring.field
    x0, x1 = x
    vals = [F(f * x0 * x0 + g * x0 * x1 + h * x1 * x1), F(2 * f * x0 + g * x1), F(g * x0 + 2 * h * x1)]
    for i in range(4):
        fi, gi, hi = (p.derivative(i).evaluate(z) for p in t.polynomials)
        vals.append(F(fi * x0 * x0 + gi * x0 * x1 + hi * x1 * x1))
    return tuple(vals)


def witness_singular_point(t: SectionTriple, z) -> Witness | FiberCase:
    """Lift a singular point z of the octic to a singular point of X, or report that z lies in V(f, g, h).

    Off V(f, g, h) the fibre point is [g(z) : -2 f(z)], or [-2 h(z) : g(z)]
    when f(z) = g(z) = 0.
    """
    F = t.ring.field
    z = tuple(F(c) for c in z)
    delta = discriminant_octic(t)
    if any(q.evaluate(z) for q in jacobian_ideal(delta).generators):
        raise PreconditionError("z is not a singular point of the discriminant")
    fz, gz, hz = (p.evaluate(z) for p in t.polynomials)
    if not (fz or gz or hz):
        return FIBER_CASE
    x = (gz, F(-2 * fz)) if (fz or gz) else (F(-2 * hz), gz)
    res = _total_space_partials(t, z, x)
    if any(res):
        raise AssertionError("fibre witness does not satisfy the singularity equations")
    return Witness(z, x, res)


def fiber_vanishes(t: SectionTriple, z, samples=((1, 0), (0, 1), (1, 1), (2, 3))) -> bool:
    """s restricted to the fibre over z is identically zero (checked on 4 fibre points)."""
    F = t.ring.field
    z = tuple(F(c) for c in z)
    return all(_total_space_partials(t, z, x)[0] == 0 for x in samples)


# the full pipeline -------------------------------------------------------------

ASSUMPTIONS = (
    "an isolated hypersurface singularity with Tjurina number 1 is a node (characteristic > 8)",
    "one random linear coordinate change puts the schemes in general position (seed recorded)",
)


@dataclass
class OcticReport:
    a: int
    gamma: int
    octic: str | None
    node_degree: int | str | None
    sing_equals_P: bool | None
    all_A1: bool | None
    X_smooth: bool | None
    c3_X: int
    predicted_nodes: int
    admissible: bool
    seed: int | None
    field: str
    order: str
    coordinate_change_seed: int
    timings_ms: dict = field(default_factory=dict)
    tjurina_degree: int | str | None = None
    node_points: int | None = None
    node_count_matches: bool | None = None
    # isolated singularities force a squarefree octic; anything else is left open
    octic_squarefree: str = "NOT_CERTIFIED"
    assumptions: list = field(default_factory=lambda: list(ASSUMPTIONS))
    errors: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return bool(self.X_smooth and self.sing_equals_P and self.all_A1 and self.node_count_matches)

    @property
    def status(self) -> str:
        if any(e["kind"] == "resource" for e in self.errors):
            return "RESOURCE_LIMIT"
        if self.node_degree == str(NOT_ZERO_DIMENSIONAL):
            return "NOT_ZERO_DIMENSIONAL"
        return "CERTIFIED" if self.certified else "FAILED"

    def to_dict(self, *, timings: bool = True) -> dict:
        d = asdict(self)
        d["status"] = self.status
        if not timings:
            d.pop("timings_ms")
        return d


def _kind(e: Exception) -> str:
    if isinstance(e, ResourceLimitExceeded):
        return "resource"
    if isinstance(e, PreconditionError):
        return "precondition"
    return "error"


def run_pipeline(t: SectionTriple, *, seed: int | None = None, chart_seed: int = 0,
                 order: str = "grevlex") -> OcticReport:
    """Build the octic of ``t`` and run every certification on it.

    Failures of single stages are recorded in ``errors`` and leave the
    corresponding field as None.
    """
    inv = bundle_invariants(t.gamma)
    rep = OcticReport(a=t.a, gamma=t.gamma, octic=None, node_degree=None, sing_equals_P=None,
                      all_A1=None, X_smooth=None, c3_X=inv.c3_X, predicted_nodes=inv.predicted_nodes,
                      admissible=inv.admissible, seed=seed, field=str(t.ring.field), order=order,
                      coordinate_change_seed=chart_seed)

    def stage(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        except OctonodeError as e:
            rep.errors.append({"stage": name, "kind": _kind(e), "message": str(e)})
            return None
        finally:
            rep.timings_ms[name] = round((time.perf_counter() - t0) * 1000, 1)

    delta = stage("discriminant", lambda: discriminant_octic(t))
    if delta is None:
        return rep
    rep.octic = format_polynomial(delta)

    node_chart = stage("node_scheme", lambda: projective_chart(node_ideal(t), chart_seed))
    if node_chart is not None:
        rep.node_degree = (str(NOT_ZERO_DIMENSIONAL) if not node_chart.is_zero_dimensional
                           else node_chart.degree)
    sing_chart = stage("singular_locus", lambda: projective_chart(jacobian_ideal(delta), chart_seed))
    if node_chart is None or sing_chart is None:
        return rep
    rep.X_smooth = stage("X_smooth", lambda: _x_smooth_from_charts(t, node_chart, sing_chart))
    if not node_chart.is_zero_dimensional:
        return rep
    rep.tjurina_degree = (sing_chart.degree if sing_chart.is_zero_dimensional
                          else str(NOT_ZERO_DIMENSIONAL))
    if sing_chart.is_zero_dimensional:
        rep.octic_squarefree = "CERTIFIED"

    def sing_equals():
        if not sing_chart.is_zero_dimensional:
            return False
        return charts_radical_equal(sing_chart, node_chart, jacobian_ideal(delta), node_ideal(t))

    rep.sing_equals_P = stage("sing_equals_P", sing_equals)

    def all_a1():
        cert = _a1_from_chart(sing_chart)
        pts = check_reduced_chart(node_chart)
        rep.node_points = pts
        return cert.passed and cert.tjurina_degree == node_chart.degree and pts == node_chart.degree

    rep.all_A1 = stage("all_A1", all_a1)
    rep.node_count_matches = rep.node_degree == inv.predicted_nodes
    return rep


def check_reduced_chart(chart: Chart) -> int:
    """Number of distinct points of a zero-dimensional chart."""
    if chart.degree == 0:
        return 0
    rad = affine_radical(chart.affine)
    return count_standard_monomials(rad.leading_monomials, rad.ring.nvars)


def search_smooth_instance(a: int, seed: int, field=None, *, attempts: int = 10,
                           chart_seed: int = 0) -> tuple[SectionTriple, int, int] | None:
    """First random triple with smooth X among ``attempts`` seeds derived from ``seed``.

    Returns (triple, seed used, attempts made) or None.
    """
    for k in range(attempts):
        s = seed if k == 0 else derive_seed(seed, "retry", k)
        t = random_triple(a, s, field)
        try:
            if certify_X_smooth(t, chart_seed):
                return t, s, k + 1
        except PreconditionError:
            continue
    return None
