import itertools

import pytest
from hypothesis import given

from monideal import (Clutter, MonomialIdeal, alexander_dual, complement_clutter, complete, intersection,
                      cone, cover_ideal, cycle, dominating_ideal, edge_ideal, graph_from_pairs,
                      helm, is_bipartite, parse_clutter_text, path, wheel)
from monideal.errors import NotSquarefreeError

from .conftest import EXAMPLES, ideals, load_example


def names(n):
    return [f"x{i}" for i in range(1, n + 1)]


def lift(I, ring):
    """Embed an ideal in x1..xn into the ring with one extra last variable."""
    return MonomialIdeal.from_exps(ring, [e + (0,) for e in I.exps])


def test_constructor_ranges():
    with pytest.raises(ValueError):
        wheel(3)
    with pytest.raises(ValueError):
        helm(2)


def test_wheel_is_cone_over_cycle():
    assert wheel(6) == cone(cycle(5))
    assert cone(complete(3)).edges == complete(4).edges


@pytest.mark.parametrize("G", [cycle(5), cycle(7), complete(3)], ids=["C5", "C7", "K3"])
def test_cone_identities(G):
    H = cone(G)
    R = H.ring
    w = MonomialIdeal.prime(R, [R.n - 1])
    allv = MonomialIdeal.from_exps(R, [(1,) * (R.n - 1) + (0,)])
    assert cover_ideal(H) == w * lift(cover_ideal(G), R) + allv
    rest = MonomialIdeal.prime(R, range(R.n - 1))
    assert edge_ideal(H) == lift(edge_ideal(G), R) + w * rest


def test_helm_cover_ideal_is_the_prime_intersection():
    I = cover_ideal(helm(5))
    R = I.ring
    pairs = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 7), (2, 8), (3, 9), (4, 10), (5, 11),
             (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]
    assert I == intersection(*[MonomialIdeal.prime(R, [a - 1, b - 1]) for a, b in pairs])
    assert len(I) == 11


def test_edge_ideals():
    assert str(edge_ideal(complete(3))) == "(x1*x2, x1*x3, x2*x3)"
    single = Clutter.from_names(["x1", "x2"], [["x1", "x2"]])
    assert str(edge_ideal(single)) == "(x1*x2)"
    assert str(cover_ideal(single)) == "(x1, x2)"


def test_clutter7_edges_and_complement():
    C = parse_clutter_text((EXAMPLES / "clutter7.txt").read_text())
    I = edge_ideal(C)
    assert len(I) == 11
    assert I.ring.monomial("x2x3x6").exps in I.exps
    assert I.ring.monomial("x1x4x5x7").exps in I.exps
    Cc = complement_clutter(C)
    assert complement_clutter(Cc) == C
    Ic = edge_ideal(Cc)
    assert len(Ic) == 11
    assert Ic.ring.monomial("x1x4x5x7").exps in Ic.exps   # complement of {x2,x3,x6}


def test_six_vertex_complement():
    C = Clutter.from_names(names(6), [["x1", "x2"], ["x1", "x3", "x6"], ["x4", "x5", "x6"]])
    Ic = edge_ideal(complement_clutter(C))
    assert Ic == MonomialIdeal.parse(Ic.ring, ["x3x4x5x6", "x1x2x3", "x2x4x5"])
    assert complement_clutter(complement_clutter(C)) == C


def test_clutter_validation():
    with pytest.raises(ValueError):
        Clutter.from_names(["a", "b"], [["a"], ["a", "b"]])
    with pytest.raises(ValueError):
        Clutter.from_names(["a", "b"], [[]])
    with pytest.raises(ValueError):
        complement_clutter(Clutter.from_names(["a", "b"], [["a", "b"]]))


def test_c7_cover_ideal_displayed():
    assert dominating_ideal(cycle(7)) == load_example("c7_neighbourhoods.mi")


def test_dominating_ideals():
    D9 = dominating_ideal(cycle(9))
    assert D9.ring.monomial("x3x6x9").exps in D9.exps
    for n in (3, 4, 5):
        assert dominating_ideal(complete(n)) == MonomialIdeal.maximal(complete(n).ring)
    assert dominating_ideal(path(2)) == MonomialIdeal.maximal(path(2).ring)


def test_bipartite():
    assert is_bipartite(cycle(4))
    assert not is_bipartite(cycle(5))
    assert all(is_bipartite(path(n)) for n in range(2, 7))
    pairs = [(1, 5), (1, 6), (1, 7), (1, 8), (2, 5), (2, 6), (2, 7), (3, 5), (3, 6), (3, 7),
             (4, 5), (5, 9)]
    G = graph_from_pairs(names(9), [(f"x{a}", f"x{b}") for a, b in pairs])
    assert is_bipartite(G)


def test_dual_requires_squarefree():
    with pytest.raises(NotSquarefreeError):
        alexander_dual(load_example("M.mi"))


GRAPHS = [path(4), cycle(5), cycle(6), complete(4), wheel(6), helm(4), cone(cycle(5))]


@pytest.mark.parametrize("G", GRAPHS)
def test_cover_and_edge_are_dual(G):
    assert alexander_dual(cover_ideal(G)) == edge_ideal(G)
    assert alexander_dual(edge_ideal(G)) == cover_ideal(G)


@pytest.mark.parametrize("G", GRAPHS)
def test_covers_are_minimal(G):
    for g in cover_ideal(G).exps:
        S = {i for i, a in enumerate(g) if a}
        assert all(e & S for e in G.edges)
        for v in S:
            assert not all(e & (S - {v}) for e in G.edges)


@given(ideals(max_vars=5, max_gens=5, squarefree=True))
def test_dual_involution(I):
    if I.is_unit():
        return
    assert alexander_dual(alexander_dual(I)) == I


def test_clutter_text_round_trip():
    C = parse_clutter_text((EXAMPLES / "clutter7.txt").read_text())
    assert parse_clutter_text(C.to_text(), C.vertices) == C
    assert [int(v[1:]) for v in C.vertices] == sorted(int(v[1:]) for v in C.vertices)
