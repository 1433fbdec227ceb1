import itertools

import pytest
from hypothesis import given

from monideal import (MonomialIdeal, PrimeIdeal, RingCtx, UnitIdealError, ZeroIdealError,
                      associated_primes, associated_primes_bruteforce, colon_by_monomial,
                      cover_ideal, cycle, delete_variable, edge_ideal, embedded_primes, helm,
                      intersection, irreducible_decomposition, irreducible_decomposition_split,
                      minimal_primes, power, witness_for_prime)
from monideal.decomposition import witness_from_decomposition
from monideal.ideal import contains_e

from .conftest import ideals, load_example

R2 = RingCtx.range(2)


def comps(I):
    return {tuple(sorted(c.entries.items())) for c in irreducible_decomposition(I).components}


def test_small_decompositions():
    D = irreducible_decomposition(MonomialIdeal.parse(R2, ["x1x2"]))
    assert {str(c) for c in D.components} == {"(x1)", "(x2)"}
    I = MonomialIdeal.parse(R2, ["x1^2", "x1x2"])
    assert comps(I) == {((0, 1),), ((0, 2), (1, 1))}
    J = MonomialIdeal.parse(R2, ["x1"]) & MonomialIdeal.parse(R2, ["x1^2", "x2"])
    for e in itertools.product(range(3), repeat=2):
        assert contains_e(I, e) == contains_e(J, e)


def test_cycle_square_decomposition():
    J2 = power(cover_ideal(cycle(5)), 2)
    R = J2.ring
    edges = [MonomialIdeal.prime(R, [i, (i + 1) % 5]) for i in range(5)]
    assert J2 == intersection(*[power(p, 2) for p in edges], power(MonomialIdeal.maximal(R), 6))
    D = irreducible_decomposition(J2)
    assert D.intersect() == J2
    assert PrimeIdeal.maximal(R) in {c.prime() for c in D.components}


def test_errors():
    with pytest.raises(ZeroIdealError):
        irreducible_decomposition(MonomialIdeal.zero(R2))
    with pytest.raises(UnitIdealError):
        associated_primes(MonomialIdeal.unit(R2))


def test_ass_examples():
    p = MonomialIdeal.prime(RingCtx.range(4), [0, 2])
    assert [q.ideal() for q in associated_primes(p)] == [p]
    M = load_example("M.mi")
    full = PrimeIdeal.maximal(M.ring)
    assert full in associated_primes(power(M, 2)) and full not in associated_primes(M)
    N = load_example("non_normal.mi")
    assert {str(q) for q in minimal_primes(N)} == {"(x, y)", "(x, z)"}
    assert [str(q) for q in associated_primes(MonomialIdeal.parse(R2, ["x1^2", "x1x2"]))] == \
        ["(x1)", "(x1, x2)"]
    assert [str(q) for q in embedded_primes(MonomialIdeal.parse(R2, ["x1^2", "x1x2"]))] == \
        ["(x1, x2)"]


def test_c7_minimal_primes_are_triples():
    C7 = load_example("c7_neighbourhoods.mi")
    mins = minimal_primes(C7)
    assert len(mins) == 7 and all(len(q.vars) == 3 for q in mins)
    assert associated_primes(C7) == mins


def test_clutter_embedded_at_power_two():
    Ic = load_example("clutter6.mi")
    p = PrimeIdeal.of(Ic.ring, "x2", "x3", "x4")
    assert p in embedded_primes(power(Ic, 2))
    assert p not in associated_primes(Ic)


def test_witnesses():
    P = MonomialIdeal.prime(R2, [0, 1])
    v = witness_for_prime(P, PrimeIdeal.maximal(R2))
    assert v is not None and v.is_one()
    L = load_example("c5_plus_apex.mi")
    L2 = power(L, 2)
    full = PrimeIdeal.maximal(L.ring)
    w = witness_from_decomposition(L2, full)
    assert w is not None and colon_by_monomial(L2, w) == full.ideal()
    w2 = witness_for_prime(L2, full)
    assert w2 is not None and colon_by_monomial(L2, w2) == full.ideal()


def test_helm_prop_instance():
    # p ∈ Ass(I^3) iff p ∈ Ass(I^3 : x1x2x3x4x5), given the deletion hypothesis
    I = cover_ideal(helm(5))
    R = I.ring
    p = PrimeIdeal.of(R, *[f"x{i}" for i in range(1, 7)])
    for i in range(5):
        assert p.without(i) not in associated_primes(power(delete_variable(I, i), 3))
    I3 = power(I, 3)
    Q = colon_by_monomial(I3, R.monomial("x1x2x3x4x5"))
    assert (p in associated_primes(I3)) == (p in associated_primes(Q))
    assert p in associated_primes(Q)


def test_squarefree_ass_equals_prime_form():
    E = edge_ideal(cycle(7))
    D = irreducible_decomposition(E)
    assert all(c.ideal() == c.prime().ideal() for c in D.components)
    assert associated_primes(E) == minimal_primes(E)


@given(ideals(max_vars=4, max_exp=3, max_gens=5))
def test_decomposition_paths_agree(I):
    if I.is_unit():
        return
    D = irreducible_decomposition(I)
    S = irreducible_decomposition_split(I)
    assert D.intersect() == I
    assert {c.exps for c in D.components} == {c.exps for c in S.components}


@given(ideals(max_vars=4, max_exp=3, max_gens=5))
def test_irredundant(I):
    if I.is_unit():
        return
    parts = [c.ideal() for c in irreducible_decomposition(I).components]
    for k, C in enumerate(parts):
        others = parts[:k] + parts[k + 1:]
        if others:
            assert not (intersection(*others) <= C)


@given(ideals(max_vars=4, max_exp=3, max_gens=5))
def test_ass_vs_bruteforce(I):
    if I.is_unit():
        return
    ass = associated_primes(I)
    assert ass == associated_primes_bruteforce(I)
    mins = minimal_primes(I)
    assert set(mins) <= set(ass)
    assert not set(mins) & set(embedded_primes(I))
    for p in ass:
        v = witness_from_decomposition(I, p)
        assert v is not None and colon_by_monomial(I, v) == p.ideal()
        assert witness_for_prime(I, p) is not None
