from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal import (Clutter, Monomial, MonomialIdeal, RingCtx, ZeroIdealError, check_normal,
                      check_normally_torsion_free, edge_ideal,
                      cover_ideal, cycle, integral_closure, is_integrally_closed,
                      newton_certificate, newton_membership, power, power_membership_oracle)
from monideal import closure as closure_mod
from monideal.closure import RationalPoint
from monideal.lp import feasible

from .conftest import ideal_and_point, ideals, load_example

R2 = RingCtx.of("x", "y")


def test_lp_small_systems():
    x = feasible([[1, 1]], [1])
    assert x is not None and sum(x) == 1 and all(v >= 0 for v in x)
    assert feasible([[1, 1]], [-1]) is None
    x = feasible([[2, 0], [0, 3]], [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)]
    # x1 - x2 = 1, x1 + x2 = 0 has no non-negative solution
    assert feasible([[1, -1], [1, 1]], [1, 0]) is None


def test_rational_point_validation():
    with pytest.raises(ValueError):
        RationalPoint((Fraction(-1, 2),))


def test_newton_examples():
    sq = MonomialIdeal.parse(R2, ["x^2", "y^2"])
    assert newton_membership(sq, (1, 1))
    assert not newton_membership(sq, (1, 0))
    for g in sq.exps:
        assert newton_membership(sq, g)
    cert = newton_certificate(sq, (1, 1))
    assert sum(cert.coords) == 1
    I = load_example("non_normal.mi")
    assert newton_membership(power(I, 2), (4, 6, 0))
    assert newton_membership(I, (2, 3, 0))
    with pytest.raises(ZeroIdealError):
        newton_membership(MonomialIdeal.zero(R2), (0, 0))


def test_oracle_examples():
    I = load_example("non_normal.mi")
    R = I.ring
    assert power_membership_oracle(I, R.monomial("x^5"), 12) == 1
    assert power_membership_oracle(power(I, 2), R.monomial("x^4y^6"), 12) == 2
    assert power_membership_oracle(I, R.monomial("x^2y^2"), 12) is None


def test_closure_examples():
    sq = MonomialIdeal.parse(R2, ["x^2", "y^2"])
    assert integral_closure(sq) == MonomialIdeal.parse(R2, ["x^2", "xy", "y^2"])
    P = MonomialIdeal.prime(RingCtx.range(4), [1, 3])
    assert integral_closure(P) == P
    I = load_example("non_normal.mi")
    assert str(integral_closure(I)) == "(x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, y^5*z)"


def test_integrally_closed_reports():
    rep = is_integrally_closed(MonomialIdeal.parse(R2, ["x^2", "y^2"]))
    assert not rep.closed and str(rep.witness) == "x*y"
    assert is_integrally_closed(MonomialIdeal.parse(R2, ["x^2", "xy", "y^2"])).closed
    assert is_integrally_closed(MonomialIdeal.unit(R2)).closed


def test_normal_examples():
    assert check_normal(load_example("nearly_not_well.mi"), 3).holds
    assert check_normal(cover_ideal(cycle(5)), 3).holds
    rep = check_normal(load_example("non_normal.mi"), 3)
    assert not rep.holds and rep.fails_at == 1
    with pytest.raises(ValueError):
        check_normal(cover_ideal(cycle(5)), 0)


def test_hints_and_exact_path_agree(monkeypatch):
    I = power(load_example("clutter7_complement.mi"), 2)
    pts = [tuple((k * 7 + i * 3) % 4 for i in range(I.ring.n)) for k in range(40)]
    calls = []
    real = closure_mod._guided
    monkeypatch.setattr(closure_mod, "_guided", lambda *a: calls.append(1) or real(*a))
    with_hints = [newton_membership(I, p) for p in pts]
    assert calls, "the hinted path was not exercised"
    saved = closure_mod.USE_FLOAT_HINTS
    closure_mod.USE_FLOAT_HINTS = False
    try:
        exact = [newton_membership(I, p) for p in pts]
    finally:
        closure_mod.USE_FLOAT_HINTS = saved
    assert with_hints == exact
    assert any(with_hints) and not all(with_hints)


@settings(max_examples=150)
@given(ideal_and_point(max_vars=4, max_exp=5, point_max=5))
def test_newton_vs_oracle(data):
    I, pt = data
    k = power_membership_oracle(I, pt, 12)
    assert newton_membership(I, pt) == (k is not None)


@settings(max_examples=60)
@given(ideal_and_point(max_vars=4, max_exp=3, point_max=4))
def test_certificate_is_valid(data):
    I, pt = data
    cert = newton_certificate(I, pt)
    if cert is None:
        return
    assert sum(cert.coords) == 1
    for i in range(I.ring.n):
        assert sum(l * g[i] for l, g in zip(cert.coords, I.exps)) <= pt[i]


@settings(max_examples=40)
@given(ideals(max_vars=3, max_exp=4, max_gens=4))
def test_closure_idempotent_and_contains(I):
    C = integral_closure(I)
    assert I <= C
    assert integral_closure(C) == C
    assert is_integrally_closed(C).closed
    assert is_integrally_closed(I).closed == (C == I)


@settings(max_examples=30)
@given(ideals(max_vars=3, max_exp=3, max_gens=3), st.lists(st.tuples(*[st.integers(0, 8)] * 3),
                                                         min_size=5, max_size=5))
def test_closure_of_powers_chain(I, probes):
    C2 = integral_closure(power(I, 2))
    mid = power(integral_closure(I), 2)
    assert mid <= C2
    assert power(I, 2) <= mid
    n = I.ring.n
    for p in probes:
        u = Monomial(p[:n], I.ring)
        if u in power(I, 2):
            assert u in mid
        if u in mid:
            assert u in C2


def test_ntf_squarefree_instances_are_normal():
    C = Clutter.from_names([f"x{i}" for i in range(1, 7)],
                           [["x1", "x2"], ["x1", "x3", "x6"], ["x4", "x5", "x6"]])
    for I in (edge_ideal(C), load_example("J_two_primes.mi")):
        assert check_normally_torsion_free(I, 3).holds
        assert check_normal(I, 3).holds
