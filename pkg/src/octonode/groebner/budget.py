"""Resource budgets for Groebner computations.

A budget caps the number of S-pairs processed and the largest sugar degree
reached by one basis computation.  Exceeding either raises
:class:`~octonode.errors.ResourceLimitExceeded`; nothing is truncated.
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar
from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    spairs: int | None = 2_000_000
    degree: int | None = 200

    def __post_init__(self):
        for name in ("spairs", "degree"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} budget must be positive")


_current: ContextVar[Budget] = ContextVar("octonode_budget", default=Budget())


def current_budget() -> Budget:
    return _current.get()


@contextlib.contextmanager
def budget(b: Budget):
    token = _current.set(b)
    try:
        yield b
    finally:
        _current.reset(token)
