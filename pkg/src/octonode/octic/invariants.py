"""Numerical invariants of a rank-2 bundle on P^3, as functions of gamma = deg(c1^2 - 4 c2)."""

from __future__ import annotations

from dataclasses import asdict, dataclass

METHOD_MIN_GAMMA = -24          # smallest gamma the discriminant construction can reach
METHOD_MAX_NODES = 160          # 64 - 4 * (-24)
MIYAOKA_BOUND = 174             # largest node count any octic can carry
ADMISSIBLE_RESIDUES = (0, 1, 4)


@dataclass(frozen=True)
class BundleInvariants:
    gamma: int
    c3_X: int
    predicted_nodes: int
    admissible: bool
    minus_K_fourth: int
    within_method_range: bool
    exceeds_miyaoka: bool

    def as_dict(self) -> dict:
        return asdict(self)


def bundle_invariants(gamma: int) -> BundleInvariants:
    """Node count, Euler number of the double cover and anticanonical degree for ``gamma``.

    ``admissible`` is the congruence gamma mod 8 in {0, 1, 4} that any
    bundle must satisfy.  ``exceeds_miyaoka`` flags predictions above 174,
    which no octic surface can realise.
    """
    nodes = 64 - 4 * gamma
    return BundleInvariants(
        gamma=gamma,
        c3_X=-8 * gamma - 168,
        predicted_nodes=nodes,
        admissible=gamma % 8 in ADMISSIBLE_RESIDUES,
        minus_K_fourth=32 * gamma + 512,
        within_method_range=gamma >= METHOD_MIN_GAMMA,
        exceeds_miyaoka=nodes > MIYAOKA_BOUND,
    )


def serre_gamma(degree: int) -> int:
    """gamma of the bundle attached to an elliptic curve of the given degree cut out by quartics."""
    return 16 - 4 * degree
