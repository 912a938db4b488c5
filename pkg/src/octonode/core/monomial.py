"""Monomials (exponent tuples) and monomial orders.

A monomial is a tuple of non-negative ints, one per ring variable.  Every
order here is a matrix order: a monomial ``e`` is mapped to the integer
vector ``M @ e`` and vectors are compared lexicographically, larger meaning
bigger.  That single description drives both the pure-Python code paths
(``MonomialOrder.key``) and the vectorized ones (``MonomialOrder.matrix``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

Monomial = tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(a: Monomial, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(a)
    return sum(w * e for w, e in zip(weights, a))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent tuples of total degree d in n variables, lex-descending."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lex, lex, or a two-block elimination order.

    ``Elimination(k)`` compares the first k variables by (weighted) degree and
    reverse lex first, then the remaining variables the same way, so any
    monomial involving one of the first k variables beats every monomial in
    the others alone.  ``weights`` (positive ints) replace total degree by a
    weighted degree in the graded comparisons.
    """

    kind: str = "grevlex"
    block: int = 0
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block <= 0:
            raise ValueError("elimination order needs a positive block size")
        if self.weights is not None:
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @classmethod
    def grevlex(cls, weights: Sequence[int] | None = None) -> MonomialOrder:
        return cls("grevlex", 0, tuple(weights) if weights is not None else None)

    @classmethod
    def lex(cls) -> MonomialOrder:
        return cls("lex")

    @classmethod
    def elimination(cls, k: int, weights: Sequence[int] | None = None) -> MonomialOrder:
        return cls("elim", k, tuple(weights) if weights is not None else None)

    @classmethod
    def parse(cls, text: str) -> MonomialOrder:
        t = text.strip().lower()
        if t in ("grevlex", "degrevlex", "drl"):
            return cls.grevlex()
        if t == "lex":
            return cls.lex()
        if t.startswith("elim"):
            return cls.elimination(int(t[4:].strip(":( )")))
        raise ValueError(f"unknown monomial order {text!r}")

    def __str__(self) -> str:
        if self.kind == "elim":
            return f"elim{self.block}"
        return self.kind

    def matrix(self, n: int) -> np.ndarray:
        return _order_matrix(self, n)

    def key(self, n: int) -> Callable[[Monomial], tuple]:
        """A key function mapping monomials to comparable tuples (bigger = larger)."""
        return _key_function(self, n)

    def is_graded(self) -> bool:
        return self.kind == "grevlex"

    def leading(self, monomials, n: int) -> Monomial:
        return max(monomials, key=self.key(n))


@lru_cache(maxsize=None)
def _order_matrix(order: MonomialOrder, n: int) -> np.ndarray:
    w = order.weights if order.weights is not None else (1,) * n
    if len(w) != n:
        raise ValueError(f"order has {len(w)} weights for {n} variables")
    rows: list[list[int]] = []

    def revlex_rows(lo: int, hi: int):
        for i in range(hi - 1, lo - 1, -1):
            r = [0] * n
            r[i] = -1
            rows.append(r)

    if order.kind == "lex":
        for i in range(n):
            r = [0] * n
            r[i] = 1
            rows.append(r)
    elif order.kind == "grevlex":
        rows.append(list(w))
        revlex_rows(0, n)
    else:
        k = order.block
        if k >= n:
            raise ValueError(f"elimination block {k} needs more than {n} variables")
        rows.append([w[i] if i < k else 0 for i in range(n)])
        revlex_rows(0, k)
        rows.append([w[i] if i >= k else 0 for i in range(n)])
        revlex_rows(k, n)
    m = np.array(rows, dtype=np.int64)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _key_function(order: MonomialOrder, n: int) -> Callable[[Monomial], tuple]:
    if order.kind == "lex":
        return tuple
    if order.kind == "grevlex" and order.weights is None:
        def key(e):
            return (sum(e),) + tuple(-x for x in reversed(e))
        return key
    mat = [tuple(r) for r in _order_matrix(order, n).tolist()]

    def key(e):
        return tuple(sum(c * x for c, x in zip(row, e)) for row in mat)
    return key
