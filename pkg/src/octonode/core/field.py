"""Coefficient fields: prime fields F_p (p >= 5) and the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field.

    ``p`` is the characteristic of a prime field, or ``None`` for the rationals.
    Scalars of F_p are plain ints in ``range(p)``; rational scalars are
    ``Fraction`` objects (always reduced).
    """

    p: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"field characteristic must be prime, got {self.p!r}")
            if self.p < 5:
                # discriminant and A1 classification break in characteristic 2 and 3
                raise ValueError(f"characteristic {self.p} not supported (need p >= 5)")

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> FieldSpec:
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``fp 32003``, ``fp:32003``, ``q`` or ``Q``."""
        t = text.strip().lower().replace(":", " ").split()
        if not t:
            raise ValueError("empty field description")
        if t[0] in ("q", "qq", "rationals"):
            return cls(None)
        if t[0] in ("fp", "gf", "f") and len(t) == 2 and t[1].isdigit():
            return cls(int(t[1]))
        raise ValueError(f"unrecognized field description {text!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __str__(self) -> str:
        return f"fp:{self.p}" if self.p else "q"

    def tag(self) -> str:
        return f"fp {self.p}" if self.p else "q"

    # scalar arithmetic -------------------------------------------------
    def __call__(self, value) -> int | Fraction:
        """Coerce an int, Fraction or scalar of this field into the field."""
        p = self.p
        if p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} is not representable in F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def to_signed(self, a) -> int | Fraction:
        """Representative for printing: symmetric range for F_p."""
        if self.p:
            return a - self.p if a > self.p // 2 else a
        return a
