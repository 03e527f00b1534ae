"""Cooperative resource guards for potentially explosive computations.

Regex construction and expansion can blow up combinatorially, so long
operations poll a context-local deadline and raise instead of hanging.
The deadline is per-context: each CLI invocation or service request
sets its own without affecting concurrent work.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar

__all__ = ["BudgetExceededError", "deadline", "check_deadline"]


class BudgetExceededError(RuntimeError):
    """A time or expansion budget was exhausted before completion."""


_deadline: ContextVar[float | None] = ContextVar("deadline", default=None)


@contextmanager
def deadline(seconds: float):
    """Bound the wall time of the enclosed computation."""
    token = _deadline.set(time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def check_deadline() -> None:
    """Raise BudgetExceededError if the current context's deadline passed."""
    limit = _deadline.get()
    if limit is not None and time.monotonic() > limit:
        raise BudgetExceededError("time budget exhausted")
