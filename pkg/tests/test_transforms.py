import pytest
from hypothesis import given

from monideal import (ExpansionSpec, MonomialIdeal, PolarizationMap, RingCtx, RingMismatchError,
                      check_normal, check_normally_torsion_free, check_persistence, depolarize,
                      expand, intersection, polarize, power)
from monideal.errors import UnitIdealError, ZeroIdealError

from .conftest import ideals, load_example

R3 = RingCtx.range(3)


def test_squarefree_polarization_is_renaming():
    I = MonomialIdeal.parse(R3, ["x1x2", "x2x3"])
    P, pmap = polarize(I)
    assert P.exps == I.exps
    S, smap = polarize(I, structured=True)
    assert S.ring.var_names == ("z_(0,0)", "z_(1,0)", "z_(2,0)")
    assert depolarize(S, smap) == I


def test_polarize_M_flattened():
    M = load_example("M.mi")
    P, pmap = polarize(M)
    assert str(P) == "(x1*x2*x3*x4*x9, x1*x2*x3*x5, x1*x5*x6*x7, x5*x6*x7*x8)"
    d = pmap.to_dict()
    assert d["shadows"] == {"x1": ["x1", "x2", "x3", "x4"], "x2": ["x5", "x6", "x7", "x8"],
                            "x3": ["x9"]}
    # forward is injective and backward inverts it
    assert len(set(pmap.forward.values())) == len(pmap.forward)
    assert all(pmap.backward[k] == i for (i, _), k in pmap.forward.items())
    assert [len(pmap.shadows(i)) for i in range(3)] == list(M.max_exps())


def test_polarize_L_structured():
    I = load_example("ntf_base.mi")
    L, pmap = polarize(I, structured=True)
    assert len(L) == 14 and L.ring.n == 12
    assert L.ring.var_names[:5] == ("z_(0,0)", "z_(0,1)", "z_(0,2)", "z_(0,3)", "z_(1,0)")
    assert depolarize(L, pmap) == I


def test_depolarize_shadow_prime():
    I = MonomialIdeal.parse(RingCtx.range(2), ["x1^2", "x2^2"])
    P, pmap = polarize(I)
    shadow = MonomialIdeal.prime(P.ring, [pmap.forward[(0, 1)], pmap.forward[(1, 1)]])
    assert depolarize(shadow, pmap) == MonomialIdeal.maximal(I.ring)


def test_map_serialization():
    M = load_example("M.mi")
    P, pmap = polarize(M, structured=True)
    back = PolarizationMap.from_dict(pmap.to_dict())
    assert back == pmap
    assert depolarize(P, back) == M
    with pytest.raises(ValueError):
        PolarizationMap.from_dict({"base_vars": ["x"], "shadow_vars": ["a", "b"],
                                   "shadows": {"x": ["a"]}})


def test_polarize_errors():
    with pytest.raises(ZeroIdealError):
        polarize(MonomialIdeal.zero(R3))
    with pytest.raises(UnitIdealError):
        polarize(MonomialIdeal.unit(R3))
    P, pmap = polarize(MonomialIdeal.parse(R3, ["x1^2"]))
    with pytest.raises(RingMismatchError):
        depolarize(MonomialIdeal.parse(R3, ["x1"]), pmap)
    with pytest.raises(ValueError):
        polarize(MonomialIdeal.parse(R3, ["x1^3"]), pmap=pmap)


def test_expansion_examples():
    I = MonomialIdeal.parse(R3, ["x1x2", "x3^2"])
    E = expand(I, ExpansionSpec((1, 3, 2)))
    assert E.ring.var_names == ("x11", "x21", "x22", "x23", "x31", "x32")
    assert str(E) == "(x11*x21, x11*x22, x11*x23, x31^2, x31*x32, x32^2)"
    ones = expand(I, [1, 1, 1])
    assert ones.exps == I.exps
    with pytest.raises(ValueError):
        ExpansionSpec((1, 0))
    with pytest.raises(ValueError):
        expand(I, [1, 2])


def test_expansion_of_F():
    S = RingCtx.of("x1", "x3", "x4")
    F = intersection(MonomialIdeal.parse(S, ["x1"]), power(MonomialIdeal.parse(S, ["x1", "x3"]), 2),
                     power(MonomialIdeal.parse(S, ["x1", "x4"]), 4))
    assert expand(F, [2, 1, 1]).exps == load_example("ntf_base.mi").exps


@given(ideals(max_vars=4, max_exp=4, max_gens=5))
def test_polarization_round_trip(I):
    if I.is_unit():
        return
    P, pmap = polarize(I)
    assert P.is_squarefree()
    assert len(P) == len(I)
    assert depolarize(P, pmap) == I
    assert PolarizationMap.from_dict(pmap.to_dict()) == pmap


@given(ideals(max_vars=3, max_exp=3, max_gens=4))
def test_expansion_commutes_with_sums(I):
    J = MonomialIdeal.parse(I.ring, ["x1^2"])
    counts = [2] + [1] * (I.ring.n - 1)
    assert expand(I + J, counts) == expand(I, counts) + expand(J, counts)


def test_verdicts_differ_under_polarization():
    base = load_example("ntf_base.mi")
    L, _ = polarize(base, structured=True)
    assert check_normally_torsion_free(base, 3).holds
    rep = check_normally_torsion_free(L, 2)
    assert not rep.holds and rep.fails_at == 2
    M = load_example("M.mi")
    P, _ = polarize(M)
    assert not check_normally_torsion_free(M, 2).holds
    assert check_normally_torsion_free(P, 3).holds


def test_quintic_fails_persistence_but_its_polarization_is_normal():
    I = load_example("spp_fails.mi")
    P, _ = polarize(I)
    assert not check_persistence(I, 2).holds
    assert check_normal(P, 2).holds
    assert check_persistence(P, 3).holds
