"""Exact phase-one simplex over the rationals.

Decides feasibility of ``{x >= 0 : A x = b}`` with ``fractions.Fraction``
arithmetic and Bland's rule, so the answer is a mathematical fact rather
than a tolerance call.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible(A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> list[Fraction] | None:
    """Return a feasible point of ``A x = b, x >= 0`` or ``None``."""
    m = len(A)
    ncols = len(A[0]) if m else 0
    rows = []
    rhs = []
    for r in range(m):
        row = [Fraction(v) for v in A[r]]
        val = Fraction(b[r])
        if val < 0:
            row = [-v for v in row]
            val = -val
        rows.append(row)
        rhs.append(val)

    # reuse unit columns as the starting basis; add artificials elsewhere
    basis: list[int] = [-1] * m
    for j in range(ncols):
        nz = [r for r in range(m) if rows[r][j] != 0]
        if len(nz) == 1 and rows[nz[0]][j] == 1 and basis[nz[0]] == -1:
            basis[nz[0]] = j
    n_art = 0
    for r in range(m):
        if basis[r] == -1:
            for rr in range(m):
                rows[rr].append(Fraction(1 if rr == r else 0))
            basis[r] = ncols + n_art
            n_art += 1
    total = ncols + n_art
    if n_art == 0:
        return _extract(basis, rhs, ncols)

    is_art = [j >= ncols for j in range(total)]
    # phase-one objective: minimise the sum of artificials
    cost = [Fraction(0)] * total
    for r in range(m):
        if is_art[basis[r]]:
            for j in range(total):
                cost[j] -= rows[r][j]
    for j in range(total):
        if is_art[j]:
            cost[j] += 1

    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = rows[r][enter]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:  # cannot happen in phase one (objective bounded below)
            break
        _pivot(rows, rhs, cost, leave, enter)
        basis[leave] = enter

    infeas = sum((rhs[r] for r in range(m) if is_art[basis[r]]), Fraction(0))
    if infeas != 0:
        return None
    return _extract(basis, rhs, ncols)


def _pivot(rows, rhs, cost, r, c):
    piv = rows[r][c]
    row = rows[r]
    if piv != 1:
        rows[r] = row = [v / piv for v in row]
        rhs[r] = rhs[r] / piv
    for rr in range(len(rows)):
        if rr != r:
            f = rows[rr][c]
            if f:
                other = rows[rr]
                rows[rr] = [x - f * y for x, y in zip(other, row)]
                rhs[rr] -= f * rhs[r]
    f = cost[c]
    if f:
        cost[:] = [x - f * y for x, y in zip(cost, row)]


def _extract(basis, rhs, ncols):
    x = [Fraction(0)] * ncols
    for r, j in enumerate(basis):
        if j < ncols:
            x[j] = rhs[r]
    return x
