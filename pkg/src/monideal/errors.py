"""Exceptions and the resource budget shared by all kernels."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


class MonIdealError(Exception):
    """Base class for all library errors."""


class RingMismatchError(MonIdealError, ValueError):
    pass


class ZeroIdealError(MonIdealError, ValueError):
    """An operation received the zero ideal where it needs a non-zero one."""


class UnitIdealError(MonIdealError, ValueError):
    pass


class NotSquarefreeError(MonIdealError, ValueError):
    pass


class ResourceLimitError(MonIdealError, RuntimeError):
    """Raised when a computation exceeds the active :class:`Budget`."""


MAX_EXPONENT = 2**31 - 1


@dataclass
class Budget:
    max_gens: int = 200_000
    max_candidates: int = 5_000_000
    seconds: float | None = 600.0
    started: float = field(default_factory=time.monotonic)
    peak_gens: int = 0

    def check_gens(self, count: int, what: str = "generators") -> None:
        if count > self.peak_gens:
            self.peak_gens = count
        if count > self.max_gens:
            raise ResourceLimitError(f"{what}: {count} exceeds budget of {self.max_gens}")

    def check_candidates(self, count: int) -> None:
        if count > self.max_candidates:
            raise ResourceLimitError(
                f"candidate products: {count} exceeds budget of {self.max_candidates}")

    def check_time(self) -> None:
        if self.seconds is not None and time.monotonic() - self.started > self.seconds:
            raise ResourceLimitError(f"time budget of {self.seconds}s exceeded")


_stack: list[Budget] = [Budget(seconds=None)]


def current_budget() -> Budget:
    return _stack[-1]


@contextmanager
def budget(max_gens: int = 200_000, max_candidates: int = 5_000_000,
           seconds: float | None = 600.0):
    """Run the enclosed computation under a fresh resource budget."""
    b = Budget(max_gens=max_gens, max_candidates=max_candidates, seconds=seconds)
    _stack.append(b)
    try:
        yield b
    finally:
        _stack.pop()
