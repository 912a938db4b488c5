"""Curve reports: generator profile, Hilbert data, quartic cut-out and Serre predictions."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from ..core.parsing import format_polynomial
from ..core.polynomial import Ring
from ..core.seeds import derive_seed
from ..groebner.hilbert import hilbert_function, hilbert_polynomial, minimal_generator_profile
from ..groebner.ideal import Ideal, ideals_equal, saturate_irrelevant
from ..octic.invariants import bundle_invariants, serre_gamma
from .implicit import CurveMapSpec, implicitize

PROFILE_MAX_DEGREE = 6


def jacobian_minors(gens, nvars: int) -> list:
    """All 2x2 minors of the Jacobian matrix of ``gens``."""
    J = [[g.derivative(i) for i in range(nvars)] for g in gens]
    out = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            for i in range(nvars):
                for j in range(i + 1, nvars):
                    m = J[a][i] * J[b][j] - J[a][j] * J[b][i]
                    if m:
                        out.append(m)
    return out


def minimal_generators(I: Ideal) -> list:
    """A minimal homogeneous generating set picked greedily from the reduced Groebner basis."""
    from ..groebner.hilbert import graded_piece_dimension

    chosen = []
    for g in sorted(I.groebner().elements, key=lambda p: p.degree()):
        d = g.degree()
        if not chosen or graded_piece_dimension(chosen + [g], d) > graded_piece_dimension(chosen, d):
            chosen.append(g)
    return chosen


def curve_is_smooth(I: Ideal, *, seed: int = 0, combinations: int = 3) -> bool:
    """Jacobian criterion for a space curve: I + (2x2 minors) is irrelevant.

    A few random combinations of the minors in each degree are tried
    first; they cut out a superset of the singular locus, so an empty answer
    is already conclusive.  Otherwise all minors are used.
    """
    gens = minimal_generators(I)
    minors = jacobian_minors(gens, I.ring.nvars)
    p = I.ring.field.p
    if p is not None:
        rng = random.Random(derive_seed(seed, "minors"))
        by_degree: dict[int, list] = {}
        for m in minors:
            by_degree.setdefault(m.degree(), []).append(m)
        combos = []
        for group in by_degree.values():
            for _ in range(min(combinations, len(group))):
                combos.append(sum((m.scale(rng.randrange(1, p)) for m in group), I.ring.zero()))
        S = Ideal(gens + combos, I.ring)
        if saturate_irrelevant(S, mode="generic", seed=seed).is_unit():
            return True
    S = Ideal(gens + minors, I.ring)
    return saturate_irrelevant(S, mode="generic", seed=seed).is_unit()


def quartic_cutout_equal(I: Ideal, *, seed: int = 0, degree: int = 4) -> bool:
    """The forms of degree ``degree`` in I cut out the same projective scheme as I."""
    low = [g for g in I.groebner().elements if g.degree() <= degree]
    if not low:
        return False
    sat = saturate_irrelevant(Ideal(low, I.ring), mode="generic", seed=seed)
    return ideals_equal(sat, I)


@dataclass
class CurveReport:
    curve_ideal: list
    generator_profile: dict
    profile_max_degree: int
    generators_within_profile: bool
    hilbert_poly: str
    degree_d: int
    arithmetic_genus: int
    hilbert_function_matches: bool
    quartic_cutout_equal: bool
    Y_smooth: bool
    serre: dict
    field: str
    seed: int
    timings_ms: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.generators_within_profile and self.quartic_cutout_equal and self.hilbert_function_matches

    def to_dict(self, *, timings: bool = True) -> dict:
        d = asdict(self)
        d["generator_profile"] = {str(k): v for k, v in sorted(self.generator_profile.items())}
        d["status"] = "PASSED" if self.passed else "FAILED"
        if not timings:
            d.pop("timings_ms")
        return d


def curve_report(spec: CurveMapSpec, *, seed: int = 0) -> CurveReport:
    timings = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = round((time.perf_counter() - t0) * 1000, 1)
        return out

    I = timed("implicitize", lambda: implicitize(spec, seed=seed))
    hp = hilbert_polynomial(I)
    deg, genus = hp.curve_data()
    gens = I.groebner().elements
    top = max(g.degree() for g in gens)
    hf_ok = all(hilbert_function(I, k) == hp(k) for k in range(top + 3, top + 6))
    profile = timed("profile", lambda: minimal_generator_profile(I, PROFILE_MAX_DEGREE))
    within = all(g.degree() <= PROFILE_MAX_DEGREE for g in minimal_generators(I))
    cut = timed("cutout", lambda: quartic_cutout_equal(I, seed=derive_seed(seed, "cutout")))
    smooth = timed("smooth", lambda: curve_is_smooth(I, seed=derive_seed(seed, "smooth")))
    return CurveReport(
        curve_ideal=[format_polynomial(g) for g in gens],
        generator_profile=profile,
        profile_max_degree=PROFILE_MAX_DEGREE,
        generators_within_profile=within,
        hilbert_poly=str(hp),
        degree_d=deg,
        arithmetic_genus=genus,
        hilbert_function_matches=hf_ok,
        quartic_cutout_equal=cut,
        Y_smooth=smooth,
        serre=bundle_invariants(serre_gamma(deg)).as_dict(),
        field=str(spec.source.field),
        seed=seed,
        timings_ms=timings,
    )


class Obstruction(NamedTuple):
    gamma: int
    minus_K_fourth: int
    obstructed: bool


def degree_nine_obstruction(d: int) -> Obstruction:
    """Whether an elliptic curve of degree d could be cut out by quartics.

    The attached bundle would have gamma = 16 - 4d and, its anticanonical
    system being globally generated, (-K)^4 = 32 gamma + 512 >= 0.  That
    fails from d = 9 on.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    gamma = serre_gamma(d)
    mk4 = 32 * gamma + 512
    return Obstruction(gamma, mk4, mk4 < 0)


CUBIC_CURVE = "y^2*z - x^3 + x*z^2"
DEGREE8_COMPONENTS = (
    "x^2*y + x*y*z + z^3",
    "x*y^2 + y*z^2 + z*x^2",
    "x^2*y + x*y*z + x*z^2",
    "x*y^2 + y^2*z + z^3",
)


def preset(name: str, field=None) -> CurveMapSpec:
    """Built-in curve specs by name."""
    from ..core.field import FieldSpec

    field = field or FieldSpec()
    if name == "paper-degree8":
        R = Ring(("x", "y", "z"), field)
        return CurveMapSpec(R.parse(CUBIC_CURVE), tuple(R.parse(c) for c in DEGREE8_COMPONENTS))
    if name == "twisted-cubic":
        R = Ring(("s", "t"), field)
        s, t = R.gens()
        return CurveMapSpec(R.zero(), (s**3, s * s * t, s * t * t, t**3))
    raise KeyError(f"unknown preset {name!r}; known: paper-degree8, twisted-cubic")


PRESETS = ("paper-degree8", "twisted-cubic")
