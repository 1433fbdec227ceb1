"""Irreducible decomposition, associated primes and colon witnesses.

The production path builds the irredundant irreducible decomposition one
generator at a time: for a component ``C`` and a new generator ``m``,
``C + (m)`` is ``C`` when ``m ∈ C`` and otherwise the intersection of the
irreducible ideals ``C + (x_j^{m_j})`` for ``j ∈ supp(m)``.  Monomial ideals
form a distributive lattice, so an irreducible component is redundant iff it
contains another component; pairwise containment is therefore an exact
irredundancy test here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ResourceLimitError, UnitIdealError, ZeroIdealError, current_budget
from .ideal import (MonomialIdeal, colon_by_monomial, intersection,
                    is_monomial_prime)
from .ring import Exps, Monomial, RingCtx

_CHUNK_CELLS = 4_000_000


@dataclass(frozen=True)
class PrimeIdeal:
    ring: RingCtx
    vars: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "vars", frozenset(self.vars))
        if not self.vars:
            raise ValueError("a monomial prime needs at least one variable")

    @classmethod
    def of(cls, ring: RingCtx, *names: str) -> "PrimeIdeal":
        return cls(ring, frozenset(ring.index(v) for v in names))

    @classmethod
    def maximal(cls, ring: RingCtx) -> "PrimeIdeal":
        return cls(ring, frozenset(range(ring.n)))

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.prime(self.ring, self.vars)

    def names(self) -> list[str]:
        return [self.ring.var_names[i] for i in sorted(self.vars)]

    def without(self, i: int) -> "PrimeIdeal":
        return PrimeIdeal(self.ring, self.vars - {i})

    def sort_key(self):
        return (len(self.vars), sorted(self.vars))

    def __lt__(self, other: "PrimeIdeal"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "(" + ", ".join(self.names()) + ")"

    __repr__ = __str__


def sorted_primes(primes: Iterable[PrimeIdeal]) -> list[PrimeIdeal]:
    return sorted(set(primes), key=PrimeIdeal.sort_key)


@dataclass(frozen=True)
class IrreducibleComponent:
    """``(x_i^{a_i} : i ∈ entries)``; stored densely with 0 for absent variables."""

    ring: RingCtx
    exps: Exps

    @property
    def entries(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.exps) if a}

    def ideal(self) -> MonomialIdeal:
        rows = []
        for i, a in self.entries.items():
            e = [0] * self.ring.n
            e[i] = a
            rows.append(tuple(e))
        return MonomialIdeal.from_exps(self.ring, rows)

    def prime(self) -> PrimeIdeal:
        return PrimeIdeal(self.ring, frozenset(self.entries))

    def __str__(self):
        parts = []
        for i, a in self.entries.items():
            name = self.ring.var_names[i]
            parts.append(name if a == 1 else f"{name}^{a}")
        return "(" + ", ".join(parts) + ")"

    __repr__ = __str__


@dataclass(frozen=True)
class Decomposition:
    ring: RingCtx
    components: tuple[IrreducibleComponent, ...]

    def intersect(self) -> MonomialIdeal:
        return intersection(*[c.ideal() for c in self.components])

    def __len__(self):
        return len(self.components)

    def __str__(self):
        return " ∩ ".join(str(c) for c in self.components)


def _check_proper(I: MonomialIdeal):
    if I.is_zero():
        raise ZeroIdealError("the zero ideal has no irreducible decomposition here")
    if I.is_unit():
        raise UnitIdealError("the unit ideal has no irreducible components")


def _drop_redundant(new: np.ndarray, keep: np.ndarray) -> np.ndarray:
    """Rows of ``new`` that contain no other row of ``keep ∪ new``."""
    allc = np.concatenate([keep, new]) if len(keep) else new
    n = new.shape[1]
    allz = allc == 0
    step = max(1, _CHUNK_CELLS // (len(allc) * max(n, 1)))
    out = np.empty(len(new), dtype=bool)
    for s in range(0, len(new), step):
        D = new[s:s + step][:, None, :]
        # E ⊆ D  iff  every generator x_i^{e_i} of E lies in D
        cont = (allz[None] | ((D > 0) & (D <= allc[None]))).all(axis=2)
        out[s:s + step] = cont.sum(axis=1) == 1  # only itself
    return new[out]


@lru_cache(maxsize=256)
def _components(I: MonomialIdeal) -> np.ndarray:
    n = I.ring.n
    gens = sorted(I.exps, key=lambda e: (sum(1 for a in e if a), sum(e)))
    budget = current_budget()
    g = np.array(gens[0], dtype=np.int64)
    comps = np.zeros((int((g > 0).sum()), n), dtype=np.int64)
    for r, j in enumerate(np.flatnonzero(g)):
        comps[r, j] = g[j]
    for e in gens[1:]:
        m = np.array(e, dtype=np.int64)
        inside = ((comps > 0) & (comps <= m)).any(axis=1)
        if inside.all():
            continue
        keep, split = comps[inside], comps[~inside]
        supp = np.flatnonzero(m)
        new = np.repeat(split, len(supp), axis=0)
        cols = np.tile(supp, len(split))
        new[np.arange(len(new)), cols] = m[cols]
        new = np.unique(new, axis=0)
        new = _drop_redundant(new, keep)
        comps = np.concatenate([keep, new])
        budget.check_gens(len(comps), "irreducible components")
        budget.check_time()
    return comps


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """Irredundant irreducible decomposition, canonically sorted."""
    _check_proper(I)
    comps = sorted((tuple(r) for r in _components(I).tolist()),
                   key=lambda c: (sum(1 for a in c if a), [-a for a in c]))
    return Decomposition(I.ring, tuple(IrreducibleComponent(I.ring, c) for c in comps))


def irreducible_decomposition_split(I: MonomialIdeal) -> Decomposition:
    """Reference algorithm: recursive splitting of mixed generators.

    A generator ``g = x_i^{a_i}·q`` with ``q ≠ 1`` coprime to ``x_i`` splits the
    ideal into ``(G∖{g}) ∪ {x_i^{a_i}}`` and ``(G∖{g}) ∪ {q}``.  Used as an
    independent cross-check of :func:`irreducible_decomposition`.
    """
    _check_proper(I)
    n = I.ring.n
    leaves = _split(I.ring, I.exps)
    comps = sorted(leaves, key=lambda c: (sum(1 for a in c if a), [-a for a in c]))
    # full irredundancy test: drop C if the intersection of the others lies in C
    ideals = [IrreducibleComponent(I.ring, c).ideal() for c in comps]
    keep = list(range(len(comps)))
    for k in list(keep):
        others = [ideals[j] for j in keep if j != k]
        if others and intersection(*others) <= ideals[k]:
            keep.remove(k)
    return Decomposition(I.ring, tuple(IrreducibleComponent(I.ring, comps[k]) for k in keep))


@lru_cache(maxsize=100_000)
def _split(ring: RingCtx, gens: tuple[Exps, ...]) -> frozenset[Exps]:
    mixed = [g for g in gens if sum(1 for a in g if a) > 1]
    if not mixed:
        c = [0] * ring.n
        for g in gens:
            (i,) = [k for k, a in enumerate(g) if a]
            c[i] = g[i] if c[i] == 0 else min(c[i], g[i])
        return frozenset([tuple(c)])
    g = max(mixed, key=lambda e: (sum(1 for a in e if a), e))
    i = max(range(ring.n), key=lambda k: (g[k], -k))
    p = tuple(g[k] if k == i else 0 for k in range(ring.n))
    q = tuple(0 if k == i else g[k] for k in range(ring.n))
    rest = [h for h in gens if h != g]
    left = MonomialIdeal.from_exps(ring, rest + [p]).exps
    right = MonomialIdeal.from_exps(ring, rest + [q]).exps
    out = set(_split(ring, left)) | set(_split(ring, right))
    # keep only inclusion-minimal components
    def contains(E, D):  # E ⊆ D
        return all(e == 0 or (d > 0 and d <= e) for e, d in zip(E, D))
    return frozenset(D for D in out if not any(E != D and contains(E, D) for E in out))


def associated_primes(I: MonomialIdeal) -> list[PrimeIdeal]:
    """Ass(R/I) as the supports of the irredundant irreducible components."""
    _check_proper(I)
    comps = _components(I)
    primes = {PrimeIdeal(I.ring, frozenset(np.flatnonzero(r).tolist())) for r in comps}
    return sorted_primes(primes)


def minimal_primes(I: MonomialIdeal) -> list[PrimeIdeal]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q.vars < p.vars for q in ass)]


def embedded_primes(I: MonomialIdeal) -> list[PrimeIdeal]:
    ass = associated_primes(I)
    return [p for p in ass if any(q.vars < p.vars for q in ass)]


def _is_prime_colon(I: MonomialIdeal, v: Exps) -> PrimeIdeal | None:
    Q = colon_by_monomial(I, v)
    if Q.is_unit() or not is_monomial_prime(Q):
        return None
    return PrimeIdeal(I.ring, frozenset(i for e in Q.exps for i, a in enumerate(e) if a))


def witness_for_prime(I: MonomialIdeal, p: PrimeIdeal,
                      bound: Sequence[int] | None = None) -> Monomial | None:
    """Some monomial ``v ≤ bound`` with ``(I : v) = p``, or ``None``.

    Variables outside ``p`` are pinned at their bound: raising them only
    saturates them away, and if any witness exists one exists of this shape
    (within the default bound of the componentwise maximal generator exponents).
    """
    if I.is_zero() or I.is_unit():
        return None
    bound = tuple(bound) if bound is not None else I.max_exps()
    budget = current_budget()
    inner = sorted(p.vars)
    ranges = [range(bound[i] + 1) for i in inner]
    base = list(bound)
    target = p.ideal().exps
    for count, pt in enumerate(itertools.product(*ranges)):
        if count % 512 == 0:
            budget.check_time()
        v = list(base)
        for i, a in zip(inner, pt):
            v[i] = a
        if colon_by_monomial(I, tuple(v)).exps == target:
            return Monomial(tuple(v), I.ring)
    return None


def witness_from_decomposition(I: MonomialIdeal, p: PrimeIdeal) -> Monomial | None:
    """Witness built from a component supported on ``p``: its inner corner
    ``x^{c-1}`` on ``p`` times the saturating powers of the other variables."""
    top = I.max_exps()
    for c in _components(I).tolist():
        if frozenset(i for i, a in enumerate(c) if a) == p.vars:
            v = tuple(c[i] - 1 if i in p.vars else top[i] for i in range(I.ring.n))
            if _is_prime_colon(I, v) == p:
                return Monomial(v, I.ring)
    return None


def associated_primes_bruteforce(I: MonomialIdeal, max_points: int = 2_000_000) -> list[PrimeIdeal]:
    """Independent oracle: every ``(I : v)`` that is prime, over the full box
    ``0 ≤ v ≤ max generator exponents``."""
    _check_proper(I)
    top = I.max_exps()
    size = 1
    for a in top:
        size *= a + 1
    if size > max_points:
        raise ResourceLimitError(f"brute-force box has {size} points (limit {max_points})")
    found = set()
    for v in itertools.product(*[range(a + 1) for a in top]):
        p = _is_prime_colon(I, v)
        if p is not None:
            found.add(p)
    return sorted_primes(found)
