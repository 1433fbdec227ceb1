#!/usr/bin/env python3
"""Recompute the worked examples and print the values the test suite checks.

Runs in about ten seconds. Use ``--quick`` to skip the two slowest items
(normality of the 7-vertex clutter ideal and Ass of the eighth-variable lift).
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from monideal import (PrimeIdeal, ass_table, associated_primes, check_normal,
                      check_normally_torsion_free, check_persistence, check_well_nearly_ntf,
                      classify_nearly_ntf, complement_clutter, cover_ideal, cycle, edge_ideal,
                      helm, independence_number, integral_closure, is_integrally_closed,
                      parse_clutter_text, polarize, power, wheel)
from monideal.cli.evaluate import evaluate

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"


def load(name: str):
    path = EXAMPLES / name
    return evaluate(path.read_text(encoding="utf-8"), path.parent)


def show_primes(primes) -> str:
    return ", ".join(str(p) for p in primes)


def section(title: str):
    print(f"\n== {title}")
    return time.perf_counter()


def done(t0: float) -> None:
    print(f"   ({time.perf_counter() - t0:.2f}s)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    t0 = section("cover ideal of the helm H5")
    I = cover_ideal(helm(5))
    big = PrimeIdeal.of(I.ring, *[f"x{i}" for i in range(1, 7)])
    table = ass_table(I, 3)
    print("   (x1..x6) in Ass(I^s) for s = 1, 2, 3:", [big in table.row(s) for s in (1, 2, 3)])
    print("   beta1 =", independence_number(I).size)
    done(t0)

    t0 = section("intersection of consecutive triples on 7 vertices")
    I = load("c7_neighbourhoods.mi")
    print("   |Ass(I^s)|, s = 1..3:", ass_table(I, 3).counts())
    rep = classify_nearly_ntf(I, 3)
    print(f"   nearly NTF: {rep.holds}, m = {rep.m}, q = {rep.q}, beta1 = "
          f"{independence_number(I).size}")
    done(t0)

    t0 = section("cover ideal of C5")
    J = cover_ideal(cycle(5))
    rep = check_well_nearly_ntf(J, 3, 5)
    print(f"   well nearly NTF up to 3: {rep.holds} with ell = {rep.ell}")
    print("   normal up to 3:", check_normal(J, 3).holds)
    done(t0)

    t0 = section("six-generator example in x1..x6")
    I = load("nearly_not_well.mi")
    print("   |Ass(I^s)|, s = 1..3:", ass_table(I, 3).counts())
    rep = check_well_nearly_ntf(I, 3)
    print(f"   well nearly NTF up to 3: {rep.holds}, ell = {rep.ell}")
    done(t0)

    t0 = section("non-normal ideal (x^5, x^4y, xy^4, y^5z)")
    I = load("non_normal.mi")
    print("   closed:", is_integrally_closed(I).closed, " closure:", integral_closure(I))
    rep = check_normal(I, 2)
    print(f"   bounded normality: fails at {rep.fails_at}, witness {rep.witness}")
    done(t0)

    t0 = section("embedded maximal ideal")
    L = load("c5_plus_apex.mi")
    print("   m in Ass(L^2):", PrimeIdeal.maximal(L.ring) in associated_primes(power(L, 2)))
    if not args.quick:
        L8 = load("embedded_maximal_8.mi")
        print("   m in Ass(L8^4):", PrimeIdeal.maximal(L8.ring) in associated_primes(power(L8, 4)))
    done(t0)

    t0 = section("cover ideal of the wheel W6")
    JW = cover_ideal(wheel(6))
    print("   m in Ass(J^3):", PrimeIdeal.maximal(JW.ring) in associated_primes(power(JW, 3)))
    done(t0)

    t0 = section("modified dominating ideal of C9")
    J = load("modified_dominating_c9.mi")
    print("   |Ass(J)|, |Ass(J^2)|:", ass_table(J, 2).counts())
    done(t0)

    t0 = section("seven-vertex clutter")
    C = parse_clutter_text((EXAMPLES / "clutter7.txt").read_text(),
                           [f"x{i}" for i in range(1, 8)])
    if not args.quick:
        print("   edge ideal normal up to 3:", check_normal(edge_ideal(C), 3).holds)
    rep = check_persistence(edge_ideal(complement_clutter(C)), 3)
    print(f"   complement persistence: fails at {rep.fails_at}")
    done(t0)

    t0 = section("polarization")
    M = load("M.mi")
    P, _ = polarize(M)
    print("   M:", M)
    print("   polarized:", P)
    print("   M NTF up to 3:", check_normally_torsion_free(M, 3).holds,
          " polarization NTF up to 3:", check_normally_torsion_free(P, 3).holds)
    base = load("ntf_base.mi")
    L, _ = polarize(base, structured=True)
    print("   NTF base:", check_normally_torsion_free(base, 3).holds,
          " its polarization:", check_normally_torsion_free(L, 3).holds)
    print("   |Ass(L^s)|, s = 1, 2:", ass_table(L, 2).counts())
    done(t0)


if __name__ == "__main__":
    main()
