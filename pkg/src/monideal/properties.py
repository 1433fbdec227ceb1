"""Bounded checkers for the asymptotic properties of powers of an ideal.

Every verdict is either ``HOLDS_UP_TO_BOUND`` (nothing was found up to the
stated power) or ``FAILS_AT`` with a reproducible witness.  Nothing here
claims a property for all powers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .decomposition import PrimeIdeal, associated_primes, minimal_primes, sorted_primes
from .errors import NotSquarefreeError, ResourceLimitError
from .ideal import (MonomialIdeal, colon_by_ideal, contains_e, intersection,
                    power, product, saturation)
from .ring import Monomial


class Prop(str, enum.Enum):
    PP = "PP"
    SPP = "SPP"
    SSPP = "SSPP"
    NTF = "NTF"
    NEARLY_NTF = "NEARLY_NTF"
    WELL_NNTF = "WELL_NNTF"
    NORMAL = "NORMAL"


class Verdict(str, enum.Enum):
    HOLDS_UP_TO_BOUND = "HOLDS_UP_TO_BOUND"
    FAILS_AT = "FAILS_AT"


@dataclass
class PropertyReport:
    property: Prop
    bound: int
    verdict: Verdict
    fails_at: int | None = None
    witness: dict[str, Any] = field(default_factory=dict)
    m: int | None = None
    q: PrimeIdeal | None = None
    ell: int | None = None
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS_UP_TO_BOUND

    def __bool__(self):
        return self.holds

    def summary(self) -> str:
        if self.holds:
            s = f"{self.property.value}: holds up to power {self.bound}"
        else:
            s = f"{self.property.value}: fails at power {self.fails_at}"
        extra = []
        if self.m is not None:
            extra.append(f"m={self.m}")
        if self.q is not None:
            extra.append(f"q={self.q}")
        if self.ell is not None:
            extra.append(f"ell={self.ell}")
        if extra:
            s += " [" + ", ".join(extra) + "]"
        if self.witness:
            s += "; witness: " + ", ".join(f"{k}={v}" for k, v in self.witness.items())
        if self.note:
            s += f" ({self.note})"
        return s


class PowerCache:
    """Incrementally computed powers ``I^s = I^{s-1}·I``."""

    def __init__(self, I: MonomialIdeal):
        self.ideal = I
        self._powers = [I]

    def __getitem__(self, s: int) -> MonomialIdeal:
        if s < 1:
            raise ValueError("powers start at 1")
        while len(self._powers) < s:
            self._powers.append(product(self._powers[-1], self.ideal))
        return self._powers[s - 1]


_caches: dict[MonomialIdeal, PowerCache] = {}


def powers_of(I: MonomialIdeal) -> PowerCache:
    if I not in _caches:
        if len(_caches) > 64:
            _caches.clear()
        _caches[I] = PowerCache(I)
    return _caches[I]


@dataclass
class AssTable:
    ideal: MonomialIdeal
    max_power: int
    rows: list[list[PrimeIdeal]]
    partial: bool = False

    def row(self, s: int) -> list[PrimeIdeal]:
        return self.rows[s - 1]

    def counts(self) -> list[int]:
        return [len(r) for r in self.rows]


def ass_table(I: MonomialIdeal, t_max: int) -> AssTable:
    """Rows ``Ass(R/I^s)`` for ``s = 1..t_max``.

    On a resource limit the error carries the partial table as ``.table``.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    cache = powers_of(I)
    rows: list[list[PrimeIdeal]] = []
    for s in range(1, t_max + 1):
        try:
            rows.append(associated_primes(cache[s]))
        except ResourceLimitError as exc:
            exc.table = AssTable(I, len(rows), rows, partial=True)
            raise
    return AssTable(I, t_max, rows)


def symbolic_power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """``I^{(s)}``: intersection over Min(I) of ``I^s`` localized at each
    minimal prime and contracted back (saturation by the outside variables)."""
    Is = powers_of(I)[s]
    parts = []
    for p in minimal_primes(I):
        outside = tuple(0 if i in p.vars else 1 for i in range(I.ring.n))
        parts.append(saturation(Is, outside))
    return intersection(*parts)


def symbolic_power_squarefree(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """``∩_{p ∈ Min(I)} p^s``; only valid for squarefree ``I``."""
    if not I.is_squarefree():
        raise NotSquarefreeError("the prime-power formula needs a squarefree ideal")
    return intersection(*[power(p.ideal(), s) for p in minimal_primes(I)])


def _first_difference(A: MonomialIdeal, B: MonomialIdeal) -> Monomial | None:
    """A generator of A not in B, or of B not in A."""
    for e in A.exps:
        if not contains_e(B, e):
            return Monomial(e, A.ring)
    for e in B.exps:
        if not contains_e(A, e):
            return Monomial(e, A.ring)
    return None


def check_persistence(I: MonomialIdeal, t_max: int) -> PropertyReport:
    if t_max < 2:
        raise ValueError("persistence needs t_max >= 2")
    table = ass_table(I, t_max)
    for k in range(1, t_max):
        lost = set(table.row(k)) - set(table.row(k + 1))
        if lost:
            p = sorted_primes(lost)[0]
            return PropertyReport(Prop.PP, t_max, Verdict.FAILS_AT, fails_at=k + 1,
                                  witness={"prime": p, "k": k})
    return PropertyReport(Prop.PP, t_max, Verdict.HOLDS_UP_TO_BOUND)


def _spp_like(prop: Prop, pw, first: MonomialIdeal, t_max: int) -> PropertyReport:
    if t_max < 2:
        raise ValueError("t_max must be >= 2")
    for k in range(1, t_max):
        col = colon_by_ideal(pw(k + 1), first)
        target = pw(k)
        if col != target:
            return PropertyReport(prop, t_max, Verdict.FAILS_AT, fails_at=k,
                                  witness={"k": k, "monomial": _first_difference(col, target)})
    return PropertyReport(prop, t_max, Verdict.HOLDS_UP_TO_BOUND)


def check_strong_persistence(I: MonomialIdeal, t_max: int) -> PropertyReport:
    """``(I^{k+1} : I) = I^k`` for ``k = 1..t_max-1``; fails_at is ``k``."""
    cache = powers_of(I)
    return _spp_like(Prop.SPP, lambda k: cache[k], I, t_max)


def check_symbolic_strong_persistence(I: MonomialIdeal, t_max: int) -> PropertyReport:
    memo: dict[int, MonomialIdeal] = {}

    def sym(k):
        if k not in memo:
            memo[k] = symbolic_power(I, k)
        return memo[k]

    return _spp_like(Prop.SSPP, sym, sym(1), t_max)


def check_normally_torsion_free(I: MonomialIdeal, t_max: int) -> PropertyReport:
    table = ass_table(I, t_max)
    first = set(table.row(1))
    for s in range(2, t_max + 1):
        extra = set(table.row(s)) - first
        if extra:
            return PropertyReport(Prop.NTF, t_max, Verdict.FAILS_AT, fails_at=s,
                                  witness={"prime": sorted_primes(extra)[0], "s": s})
    return PropertyReport(Prop.NTF, t_max, Verdict.HOLDS_UP_TO_BOUND)


def classify_nearly_ntf(I: MonomialIdeal, t_max: int) -> PropertyReport:
    """Find ``(m, q)`` with rows ``1..m`` equal to Min(I) and later rows inside
    ``Min(I) ∪ {q}``.  An NTF ideal is accepted with ``q = None`` and ``m = t_max``."""
    table = ass_table(I, t_max)
    mins = set(minimal_primes(I))
    if set(table.row(1)) != mins:
        extra = sorted_primes(set(table.row(1)) - mins)
        return PropertyReport(Prop.NEARLY_NTF, t_max, Verdict.FAILS_AT, fails_at=1,
                              witness={"embedded": extra})
    seen: list[PrimeIdeal] = []
    m = t_max
    for s in range(2, t_max + 1):
        extra = set(table.row(s)) - mins
        for p in sorted_primes(extra):
            if p not in seen:
                seen.append(p)
        if len(seen) > 1:
            return PropertyReport(Prop.NEARLY_NTF, t_max, Verdict.FAILS_AT, fails_at=s,
                                  witness={"extra_primes": seen})
        if extra and m == t_max:
            m = s - 1
    if not seen:
        return PropertyReport(Prop.NEARLY_NTF, t_max, Verdict.HOLDS_UP_TO_BOUND, m=t_max,
                              note="normally torsion-free up to bound; no extra prime")
    return PropertyReport(Prop.NEARLY_NTF, t_max, Verdict.HOLDS_UP_TO_BOUND, m=m, q=seen[0])


def check_well_nearly_ntf(I: MonomialIdeal, t_max: int, ell_max: int | None = None) -> PropertyReport:
    """Nearly NTF plus, at each power ``s`` where the extra prime ``q`` is
    associated, ``I^s = ∩_{p ∈ Min} p^s ∩ q^{ℓ s}`` for one common ``ℓ``."""
    if not I.is_squarefree():
        raise NotSquarefreeError("well-nearly NTF type is defined for squarefree ideals")
    ell_max = I.ring.n if ell_max is None else ell_max
    near = classify_nearly_ntf(I, t_max)
    if not near.holds:
        return PropertyReport(Prop.WELL_NNTF, t_max, Verdict.FAILS_AT, fails_at=near.fails_at,
                              witness=dict(near.witness), note="not nearly normally torsion-free")
    if near.q is None:
        return PropertyReport(Prop.WELL_NNTF, t_max, Verdict.HOLDS_UP_TO_BOUND, m=near.m,
                              note="no extra prime up to bound")
    q = near.q
    table = ass_table(I, t_max)
    candidates = set(range(1, ell_max + 1))
    cache = powers_of(I)
    for s in range(1, t_max + 1):
        if q not in table.row(s):
            continue
        base = symbolic_power_squarefree(I, s)
        qq = q.ideal()
        ok = {ell for ell in candidates if intersection(base, power(qq, ell * s)) == cache[s]}
        candidates &= ok
        if not candidates:
            return PropertyReport(Prop.WELL_NNTF, t_max, Verdict.FAILS_AT, fails_at=s, m=near.m, q=q,
                                  witness={"s": s, "ell_range": (1, ell_max)},
                                  note="no ell gives the required decomposition")
    return PropertyReport(Prop.WELL_NNTF, t_max, Verdict.HOLDS_UP_TO_BOUND, m=near.m, q=q,
                          ell=min(candidates))


def stability_observation(I: MonomialIdeal, t_max: int, table: AssTable | None = None) -> int | None:
    """Smallest ``s0`` with rows ``s0..t_max`` equal, provided the last two rows
    agree.  An observation within the bound, not a proof of stability."""
    table = table or ass_table(I, t_max)
    rows = [set(r) for r in table.rows]
    if len(rows) >= 2 and rows[-1] != rows[-2]:
        return None
    s0 = len(rows)
    while s0 > 1 and rows[s0 - 2] == rows[-1]:
        s0 -= 1
    return s0
