"""Dense univariate polynomials over F_p (lists of ints, lowest degree first)."""

from __future__ import annotations


def trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def derivative(a: list[int], p: int) -> list[int]:
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def divmod_poly(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] * inv % p
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = (r[k + i] - c * bc) % p
        r = trim(r)
    return trim(q), r


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    while b:
        _, r = divmod_poly(a, b, p)
        a, b = b, r
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def squarefree_part(a: list[int], p: int) -> list[int]:
    """a / gcd(a, a'); valid while deg a < p."""
    a = trim([x % p for x in a])
    if len(a) <= 1:
        return a
    g = gcd(a, derivative(a, p), p)
    q, _ = divmod_poly(a, g, p)
    return q


def degree(a: list[int]) -> int:
    return len(trim(a)) - 1
