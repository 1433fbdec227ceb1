"""Integral closure of monomial ideals through the Newton polyhedron.

A monomial ``x^a`` is integral over ``I`` iff ``a`` lies in
``conv{exponents of G(I)} + R^n_{>=0}``.  Membership is decided by an exact
rational LP (:mod:`monideal.lp`).  Large systems first ask a floating-point
solver for a hint (a support set or separating weights); the hint is only
used after it has been confirmed in exact arithmetic, so verdicts never
depend on rounding.  Set ``USE_FLOAT_HINTS = False`` to skip the hints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lp
from .decomposition import _components
from .errors import ResourceLimitError, ZeroIdealError, current_budget
from .ideal import MonomialIdeal, contains_e
from .properties import Prop, PropertyReport, Verdict, powers_of
from .ring import Exps, Monomial, divides_e


@dataclass(frozen=True)
class RationalPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if any(c < 0 for c in self.coords):
            raise ValueError("coordinates must be non-negative")


def newton_certificate(I: MonomialIdeal, a: Sequence[int | None]) -> RationalPoint | None:
    """Convex multipliers ``λ`` (one per generator) with ``Σ λ_g g ≤ a``.

    Entries of ``a`` that are ``None`` are unbounded.
    """
    if I.is_zero():
        raise ZeroIdealError("Newton polyhedron of the zero ideal")
    gens = I.exps
    m = len(gens)
    for k, g in enumerate(gens):
        if all(x is None or gi <= x for gi, x in zip(g, a)):
            return RationalPoint(tuple(1 if j == k else 0 for j in range(m)))
    rows_idx = [i for i, x in enumerate(a) if x is not None]
    # a coordinate already exceeded by every generator cannot be met
    for i in rows_idx:
        if min(g[i] for g in gens) > a[i]:
            return None
    cols = _useful_columns(gens, rows_idx)
    bounds = [a[i] for i in rows_idx]
    proj = [tuple(gens[k][i] for i in rows_idx) for k in cols]
    if USE_FLOAT_HINTS and len(cols) > _EXACT_ONLY:
        guided = _guided(proj, bounds)
        if guided is not None:
            kind, value = guided
            if kind == "infeasible":
                return None
            lam = dict(zip([cols[k] for k in value[0]], value[1]))
            return RationalPoint(tuple(lam.get(k, 0) for k in range(m)))
    x = _exact(proj, bounds)
    if x is None:
        return None
    lam = dict(zip(cols, x))
    return RationalPoint(tuple(lam.get(k, 0) for k in range(m)))


_EXACT_ONLY = 16
USE_FLOAT_HINTS = True


def _useful_columns(gens, rows_idx) -> list[int]:
    """Generators whose projection onto the bounded coordinates is minimal;
    a dominated projection can always be swapped for the one below it."""
    seen: dict[tuple, int] = {}
    for k, g in enumerate(gens):
        seen.setdefault(tuple(g[i] for i in rows_idx), k)
    pts = list(seen)
    keep = [p for p in pts if not any(q != p and divides_e(q, p) for q in pts)]
    return sorted(seen[p] for p in keep)


def _exact(proj, bounds) -> list[Fraction] | None:
    m, r = len(proj), len(bounds)
    A = [[p[row] for p in proj] + [1 if rr == row else 0 for rr in range(r)] for row in range(r)]
    A.append([1] * m + [0] * r)
    x = lp.feasible(A, list(bounds) + [1])
    return None if x is None else x[:m]


def _guided(proj, bounds):
    """Ask a floating-point LP for a hint and confirm it exactly.

    Returns ``("feasible", (columns, multipliers))`` or ``("infeasible", w)``
    once the hint is verified in rational arithmetic, else ``None``.
    """
    import numpy as np
    from scipy.optimize import linprog

    G = np.array(proj, dtype=float)
    b = np.array(bounds, dtype=float)
    m, r = G.shape
    res = linprog(np.zeros(m), A_ub=G.T, b_ub=b, A_eq=np.ones((1, m)), b_eq=[1.0],
                  bounds=(0, None), method="highs")
    if res.status == 0:
        support = [k for k in range(m) if res.x[k] > 1e-9]
        x = _exact([proj[k] for k in support], bounds)
        if x is not None:
            return "feasible", (support, x)
        return None
    if res.status != 2:
        return None
    # separating weights: w >= 0 with w.(g - a) >= 1 for every generator
    D = G - b
    sep = linprog(np.ones(r), A_ub=-D, b_ub=-np.ones(m), bounds=(0, None), method="highs")
    if sep.status != 0:
        return None
    w = [max(Fraction(v).limit_denominator(10**6), Fraction(0)) for v in sep.x]
    if all(sum(wi * (gi - ai) for wi, gi, ai in zip(w, g, bounds)) > 0 for g in proj):
        return "infeasible", w
    return None


def newton_membership(I: MonomialIdeal, a: Sequence[int | None]) -> bool:
    if len(a) != I.ring.n:
        raise ValueError(f"point {tuple(a)} does not fit {I.ring}")
    return newton_certificate(I, a) is not None


def power_membership_oracle(I: MonomialIdeal, u: Monomial | Exps, k_max: int = 12) -> int | None:
    """Smallest ``k ≤ k_max`` with ``u^k ∈ I^k`` (test oracle, not the decision path)."""
    e = u.exps if isinstance(u, Monomial) else tuple(u)
    cache = powers_of(I)
    for k in range(1, k_max + 1):
        if contains_e(cache[k], tuple(k * x for x in e)):
            return k
    return None


def integral_closure(I: MonomialIdeal, max_points: int = 2_000_000) -> MonomialIdeal:
    """Minimal generators of the closure, found by scanning the box bounded by
    the componentwise maximal generator exponents in order of degree."""
    if I.is_zero():
        raise ZeroIdealError("integral closure of the zero ideal")
    if I.is_unit():
        return I
    top = I.max_exps()
    size = 1
    for t in top:
        size *= t + 1
    if size > max_points:
        raise ResourceLimitError(f"closure box has {size} points (limit {max_points})")
    budget = current_budget()
    pts = sorted(itertools.product(*[range(t + 1) for t in top]), key=sum)
    found: list[Exps] = []
    for count, p in enumerate(pts):
        if count % 1024 == 0:
            budget.check_time()
        if any(divides_e(f, p) for f in found):
            continue
        if contains_e(I, p) or newton_membership(I, p):
            found.append(p)
    return MonomialIdeal.from_exps(I.ring, found)


@dataclass
class ClosureReport:
    power: int
    closed: bool
    witness: Monomial | None = None


def _descend(I: MonomialIdeal, point: list[int]) -> Exps:
    """Greedily lower coordinates while staying in the Newton polyhedron."""
    for i in range(len(point)):
        lo, hi = 0, point[i]
        # largest feasible decrease: binary search on the coordinate value
        while lo < hi:
            mid = (lo + hi) // 2
            trial = list(point)
            trial[i] = mid
            if newton_membership(I, trial):
                hi = mid
            else:
                lo = mid + 1
        point[i] = lo
    return tuple(point)


def is_integrally_closed(I: MonomialIdeal, power: int = 1) -> ClosureReport:
    """Compare ``I`` with its closure.

    If ``u ∈ closure(I) ∖ I`` then ``u`` misses some irreducible component
    ``C = (x_i^{c_i} : i ∈ S)``, and so does the corner ``x^{c-1}`` (unbounded
    off ``S``), which is still in the closure.  Testing one corner per
    component therefore decides the question; a failing corner is pushed
    down to a minimal closure generator to serve as the witness.
    """
    if I.is_zero():
        raise ZeroIdealError("integral closure of the zero ideal")
    if I.is_unit():
        return ClosureReport(power, True)
    top = I.max_exps()
    budget = current_budget()
    hits: list[Exps] = []
    for c in _components(I).tolist():
        budget.check_time()
        corner = [ci - 1 if ci else None for ci in c]
        if newton_membership(I, corner):
            pt = [top[i] if x is None else x for i, x in enumerate(corner)]
            hits.append(_descend(I, pt))
    if not hits:
        return ClosureReport(power, True)
    best = min(hits, key=lambda e: (sum(e), tuple(-x for x in e)))
    return ClosureReport(power, False, Monomial(best, I.ring))


def check_normal(I: MonomialIdeal, t_max: int) -> PropertyReport:
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    cache = powers_of(I)
    for s in range(1, t_max + 1):
        rep = is_integrally_closed(cache[s], power=s)
        if not rep.closed:
            return PropertyReport(Prop.NORMAL, t_max, Verdict.FAILS_AT, fails_at=s,
                                  witness={"monomial": rep.witness, "s": s})
    return PropertyReport(Prop.NORMAL, t_max, Verdict.HOLDS_UP_TO_BOUND)
