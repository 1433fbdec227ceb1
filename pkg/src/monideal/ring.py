"""Ring contexts and monomials as exponent vectors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MAX_EXPONENT, ResourceLimitError, RingMismatchError

Exps = tuple[int, ...]


@dataclass(frozen=True)
class RingCtx:
    """An ordered list of variable names; the coefficient field is implicit."""

    var_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(v, str) or not v for v in names):
            raise ValueError("variable names must be non-empty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def of(cls, *names: str) -> "RingCtx":
        return cls(tuple(names))

    @classmethod
    def range(cls, n: int, prefix: str = "x", start: int = 1) -> "RingCtx":
        return cls(tuple(f"{prefix}{i}" for i in range(start, start + n)))

    @property
    def n(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in ring {self}") from None

    def var(self, name_or_index: str | int) -> "Monomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.n
        e[i] = 1
        return Monomial(tuple(e), self)

    def one(self) -> "Monomial":
        return Monomial((0,) * self.n, self)

    def monomial(self, text: str) -> "Monomial":
        """Parse ``"x1^2*x3"`` or ``"x1^2x3"`` (juxtaposition allowed)."""
        return Monomial(parse_monomial_exps(text, self), self)

    def __str__(self):
        return "K[" + ", ".join(self.var_names) + "]"


def parse_monomial_exps(text: str, ring: RingCtx) -> Exps:
    text = text.replace(" ", "").replace("*", "")
    e = [0] * ring.n
    if text in ("", "1"):
        return tuple(e)
    names = sorted(ring.var_names, key=len, reverse=True)
    pos = 0
    while pos < len(text):
        for name in names:
            if text.startswith(name, pos):
                pos += len(name)
                m = re.match(r"\^(\d+)", text[pos:])
                k = 1
                if m:
                    k = int(m.group(1))
                    pos += m.end()
                e[ring.index(name)] += k
                break
        else:
            raise ValueError(f"cannot parse monomial {text!r} at position {pos}")
    return tuple(e)


@dataclass(frozen=True, order=False)
class Monomial:
    exps: Exps
    ring: RingCtx

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(a) for a in self.exps))
        if len(self.exps) != self.ring.n:
            raise ValueError(f"exponent vector {self.exps} does not fit {self.ring}")
        if any(a < 0 for a in self.exps):
            raise ValueError("exponents must be non-negative")
        if any(a > MAX_EXPONENT for a in self.exps):
            raise ResourceLimitError("exponent overflow")

    def _check(self, other: "Monomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return mul(self, other)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(a * k for a in self.exps), self.ring)

    def __lt__(self, other: "Monomial") -> bool:
        # canonical order: lexicographically larger exponent vectors first
        self._check(other)
        return self.exps > other.exps

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def __str__(self):
        return format_exps(self.exps, self.ring)

    __repr__ = __str__


def format_exps(e: Sequence[int], ring: RingCtx, sep: str = "*") -> str:
    parts = []
    for name, a in zip(ring.var_names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return sep.join(parts) if parts else "1"


# exponent-tuple kernels; the Monomial wrappers below are thin

def divides_e(u: Exps, v: Exps) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm_e(u: Exps, v: Exps) -> Exps:
    return tuple(a if a > b else b for a, b in zip(u, v))


def gcd_e(u: Exps, v: Exps) -> Exps:
    return tuple(a if a < b else b for a, b in zip(u, v))


def mul_e(u: Exps, v: Exps) -> Exps:
    return tuple(a + b for a, b in zip(u, v))


def quot_e(u: Exps, v: Exps) -> Exps:
    """u / gcd(u, v): componentwise truncated subtraction."""
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    u._check(v)
    return divides_e(u.exps, v.exps)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    u._check(v)
    return Monomial(lcm_e(u.exps, v.exps), u.ring)


def gcd(u: Monomial, v: Monomial) -> Monomial:
    u._check(v)
    return Monomial(gcd_e(u.exps, v.exps), u.ring)


def mul(u: Monomial, v: Monomial) -> Monomial:
    u._check(v)
    return Monomial(mul_e(u.exps, v.exps), u.ring)


def colon_quotient(u: Monomial, v: Monomial) -> Monomial:
    u._check(v)
    return Monomial(quot_e(u.exps, v.exps), u.ring)


def support(u: Monomial) -> frozenset[int]:
    """Indices of the variables dividing ``u`` (a VarSet)."""
    return frozenset(i for i, a in enumerate(u.exps) if a)


def is_squarefree(u: Monomial) -> bool:
    return all(a <= 1 for a in u.exps)


def varset_names(vs: Iterable[int], ring: RingCtx) -> list[str]:
    return [ring.var_names[i] for i in sorted(vs)]
