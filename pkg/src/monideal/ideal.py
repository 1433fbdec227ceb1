"""Monomial ideals in canonical minimal-generator form and their arithmetic.

Internally an ideal is a ring plus a tuple of exponent tuples sorted in
decreasing lexicographic order; every constructor goes through
:func:`minimize`, so two ideals are equal iff their generator tuples are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (MAX_EXPONENT, ResourceLimitError, RingMismatchError,
                     ZeroIdealError, current_budget)
from .ring import (Exps, Monomial, RingCtx, divides_e, format_exps, lcm_e,
                   mul_e, parse_monomial_exps, quot_e)

_NUMPY_THRESHOLD = 48
_CHUNK_CELLS = 4_000_000


def _minimize_small(items: list[Exps]) -> list[Exps]:
    kept: list[Exps] = []
    for e in items:
        for k in kept:
            if divides_e(k, e):
                break
        else:
            kept.append(e)
    return kept


def _minimize_array(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of ``arr`` (rows assumed distinct)."""
    n = arr.shape[1]
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    bounds = np.flatnonzero(np.diff(deg)) + 1
    layers = np.split(arr, bounds)
    kept = np.empty((0, n), dtype=arr.dtype)
    budget = current_budget()
    for layer in layers:
        if len(kept):
            step = max(1, _CHUNK_CELLS // (len(kept) * max(n, 1)))
            mask = np.empty(len(layer), dtype=bool)
            for s in range(0, len(layer), step):
                block = layer[s:s + step]
                hit = (kept[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
                mask[s:s + step] = ~hit
            layer = layer[mask]
        if len(layer):
            kept = np.concatenate([kept, layer])
        budget.check_time()
    return kept


def minimize_exps(raw: Iterable[Exps] | np.ndarray, n: int | None = None) -> tuple[Exps, ...]:
    """Canonical minimal generating set of the ideal generated by ``raw``."""
    if isinstance(raw, np.ndarray):
        if raw.size == 0:
            return ()
        arr = np.unique(raw, axis=0)
        n = arr.shape[1]
        if not arr.any(axis=1).all():
            return ((0,) * n,)
        if len(arr) >= _NUMPY_THRESHOLD:
            kept = _minimize_array(arr)
            return tuple(sorted(map(tuple, kept.tolist()), reverse=True))
        uniq = [tuple(r) for r in arr.tolist()]
    else:
        uniq = list(set(raw))
        if not uniq:
            return ()
        n = len(uniq[0])
        if (0,) * n in uniq:
            return ((0,) * n,)
        if len(uniq) >= _NUMPY_THRESHOLD:
            kept = _minimize_array(np.array(uniq, dtype=np.int64))
            return tuple(sorted(map(tuple, kept.tolist()), reverse=True))
    uniq.sort(key=sum)
    return tuple(sorted(_minimize_small(uniq), reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingCtx
    exps: tuple[Exps, ...]

    # -- construction -------------------------------------------------------
    @classmethod
    def from_exps(cls, ring: RingCtx, raw: Iterable[Sequence[int]] | np.ndarray) -> "MonomialIdeal":
        if not isinstance(raw, np.ndarray):
            raw = [tuple(int(a) for a in e) for e in raw]
            for e in raw:
                if len(e) != ring.n:
                    raise RingMismatchError(f"exponent vector {e} does not fit {ring}")
                if any(a < 0 for a in e):
                    raise ValueError("negative exponent")
        elif raw.size and raw.shape[1] != ring.n:
            raise RingMismatchError(f"exponent rows of width {raw.shape[1]} do not fit {ring}")
        ideal = cls(ring, minimize_exps(raw))
        current_budget().check_gens(len(ideal.exps))
        return ideal

    @classmethod
    def parse(cls, ring: RingCtx, gens: Iterable[str]) -> "MonomialIdeal":
        """``MonomialIdeal.parse(R, ["x1^2*x2", "x3"])``"""
        return cls.from_exps(ring, [parse_monomial_exps(g, ring) for g in gens])

    @classmethod
    def zero(cls, ring: RingCtx) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingCtx) -> "MonomialIdeal":
        return cls(ring, ((0,) * ring.n,))

    @classmethod
    def prime(cls, ring: RingCtx, indices: Iterable[int]) -> "MonomialIdeal":
        rows = []
        for i in sorted(set(indices)):
            e = [0] * ring.n
            e[i] = 1
            rows.append(tuple(e))
        return cls.from_exps(ring, rows)

    @classmethod
    def maximal(cls, ring: RingCtx) -> "MonomialIdeal":
        return cls.prime(ring, range(ring.n))

    # -- views --------------------------------------------------------------
    @property
    def gens(self) -> list[Monomial]:
        return [Monomial(e, self.ring) for e in self.exps]

    def __len__(self):
        return len(self.exps)

    def is_zero(self) -> bool:
        return not self.exps

    def is_unit(self) -> bool:
        return len(self.exps) == 1 and not any(self.exps[0])

    def array(self) -> np.ndarray:
        return np.array(self.exps, dtype=np.int64).reshape(len(self.exps), self.ring.n)

    def max_exps(self) -> Exps:
        if not self.exps:
            return (0,) * self.ring.n
        return tuple(max(col) for col in zip(*self.exps))

    def is_squarefree(self) -> bool:
        return all(a <= 1 for e in self.exps for a in e)

    def __str__(self):
        if not self.exps:
            return "(0)"
        return "(" + ", ".join(format_exps(e, self.ring) for e in self.exps) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"

    # -- operators ----------------------------------------------------------
    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, s: int):
        return power(self, s)

    def __and__(self, other):
        return intersection(self, other)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self ⊆ other``."""
        _same_ring(self, other)
        return all(contains_e(other, e) for e in self.exps)

    def __ge__(self, other: "MonomialIdeal") -> bool:
        return other <= self


def _same_ring(*ideals):
    r = ideals[0].ring
    for other in ideals[1:]:
        if other.ring != r:
            raise RingMismatchError(f"{r} vs {other.ring}")


def minimize(ring: RingCtx, raw_gens: Iterable[Monomial]) -> MonomialIdeal:
    rows = []
    for g in raw_gens:
        if g.ring != ring:
            raise RingMismatchError(f"{g} is not in {ring}")
        rows.append(g.exps)
    return MonomialIdeal.from_exps(ring, rows)


def principal(u: Monomial) -> MonomialIdeal:
    return MonomialIdeal(u.ring, (u.exps,))


def contains_e(I: MonomialIdeal, e: Exps) -> bool:
    for g in I.exps:
        if divides_e(g, e):
            return True
    return False


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    if u.ring != I.ring:
        raise RingMismatchError(f"{u} is not in {I.ring}")
    return contains_e(I, u.exps)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal.from_exps(I.ring, I.exps + J.exps)


def _products(A: tuple[Exps, ...], B: tuple[Exps, ...], n: int, combine) -> np.ndarray | list:
    budget = current_budget()
    budget.check_candidates(len(A) * len(B))
    budget.check_time()
    if len(A) * len(B) >= 256:
        a = np.array(A, dtype=np.int64).reshape(len(A), n)
        b = np.array(B, dtype=np.int64).reshape(len(B), n)
        out = combine(a[:, None, :], b[None, :, :]).reshape(-1, n)
        return out
    f = mul_e if combine is np.add else lcm_e
    return [f(x, y) for x in A for y in B]


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.ring)
    raw = _products(I.exps, J.exps, I.ring.n, np.add)
    out = MonomialIdeal.from_exps(I.ring, raw)
    if out.exps and max(max(e) for e in out.exps) > MAX_EXPONENT:
        raise ResourceLimitError("exponent overflow")
    return out


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise ValueError("power exponent must be >= 1")
    out = I
    for _ in range(s - 1):
        out = product(out, I)
    return out


def intersection(*ideals: MonomialIdeal) -> MonomialIdeal:
    if not ideals:
        raise ValueError("intersection of no ideals")
    _same_ring(*ideals)
    if len(ideals) == 1:
        return ideals[0]
    # fold small-first so intermediate results stay small
    ordered = sorted(ideals, key=len)
    return reduce(_intersect2, ordered)


def _intersect2(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    raw = _products(I.exps, J.exps, I.ring.n, np.maximum)
    return MonomialIdeal.from_exps(I.ring, raw)


def colon_by_monomial(I: MonomialIdeal, v: Monomial | Exps) -> MonomialIdeal:
    ve = v.exps if isinstance(v, Monomial) else tuple(v)
    if isinstance(v, Monomial) and v.ring != I.ring:
        raise RingMismatchError(f"{v} is not in {I.ring}")
    if I.is_zero():
        return I
    return MonomialIdeal.from_exps(I.ring, [quot_e(g, ve) for g in I.exps])


def colon_by_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if J.is_zero():
        raise ZeroIdealError("colon by the zero ideal")
    return intersection(*[colon_by_monomial(I, w) for w in J.exps])


def saturation(I: MonomialIdeal, v: Monomial | Exps) -> MonomialIdeal:
    """``(I : v^∞)``, computed as the fixpoint of repeated colons by ``v``."""
    ve = v.exps if isinstance(v, Monomial) else tuple(v)
    if not any(ve):
        return I
    cur = colon_by_monomial(I, ve)
    while True:
        nxt = colon_by_monomial(cur, ve)
        if nxt == cur:
            return cur
        cur = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_exps(I.ring, [tuple(1 if a else 0 for a in e) for e in I.exps])


def delete_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """``I \\ x_i``: drop every minimal generator divisible by ``x_i``."""
    if not 0 <= i < I.ring.n:
        raise IndexError(f"variable index {i} out of range for {I.ring}")
    return MonomialIdeal(I.ring, tuple(e for e in I.exps if e[i] == 0))


def ideal_support(I: MonomialIdeal) -> frozenset[int]:
    return frozenset(i for e in I.exps for i, a in enumerate(e) if a)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return I.exps == J.exps


def is_monomial_prime(I: MonomialIdeal) -> bool:
    return bool(I.exps) and all(sum(e) == 1 for e in I.exps)


def prime_vars(I: MonomialIdeal) -> frozenset[int]:
    """Variable indices of a monomial prime ideal."""
    if not is_monomial_prime(I):
        raise ValueError(f"{I} is not a monomial prime")
    return ideal_support(I)


@dataclass(frozen=True)
class IndependenceCertificate:
    members: tuple[Monomial, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def independence_number(I: MonomialIdeal) -> IndependenceCertificate:
    """Largest pairwise-coprime subset of the minimal generators (beta_1)."""
    if I.is_zero():
        raise ZeroIdealError("independence number of the zero ideal")
    gens = I.exps
    m = len(gens)
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in gens]
    adj = [0] * m
    for a in range(m):
        for b in range(m):
            if a != b and not (supports[a] & supports[b]):
                adj[a] |= 1 << b
    best: list[int] = []

    def expand(chosen: list[int], cand: int):
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + bin(cand).count("1") <= len(best):
            return
        while cand:
            if len(chosen) + bin(cand).count("1") <= len(best):
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            chosen.append(v)
            expand(chosen, cand & adj[v])
            chosen.pop()

    expand([], (1 << m) - 1)
    members = tuple(Monomial(gens[k], I.ring) for k in sorted(best))
    return IndependenceCertificate(members)
