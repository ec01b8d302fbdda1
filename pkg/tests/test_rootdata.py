from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootpoly.rootdata import (
    MultiplicityFn,
    RootSystemError,
    build_root_system,
    check_axioms,
    dominance_leq,
    dominant_weights,
    eigenvalue,
    inner,
    is_dominant,
    lower_ideal,
    rho_k,
    weyl_group_elements,
    weyl_orbit,
)

from strategies import dominant_weights as dom_st

WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384,
               "C2": 8, "C3": 48, "C4": 384, "D3": 24, "D4": 192}


@pytest.mark.parametrize("label", sorted(WEYL_ORDERS))
def test_axioms_and_weyl_order(label):
    rs = build_root_system(label)
    assert check_axioms(rs) == []
    assert len(weyl_group_elements(rs)) == WEYL_ORDERS[label]


def test_a1_realization():
    rs = build_root_system("A1")
    assert rs.positive_roots == ((1,),)
    assert rs.root_weight((1,)) == (2,)
    assert inner(rs, (2,), (2,)) == 4
    assert inner(rs, (1,), (1,)) == 1


def test_c2_matches_ambient_roots():
    rs = build_root_system("C2")
    assert len(rs.positive_roots) == 4
    assert rs.n_classes == 2
    lengths = sorted(rs.root_length2(r) for r in rs.positive_roots)
    # ambient (1,-1), (1,1) have squared length 2; (2,0), (0,2) have 4
    assert lengths == [2, 2, 4, 4]
    long_simple = next(r for r in rs.positive_roots if rs.root_length2(r) == 4 and sum(r) == 1)
    assert inner(rs, rs.root_weight(long_simple), rs.root_weight(long_simple)) == 4


def test_b2_has_two_classes():
    rs = build_root_system("B2")
    assert len(rs.positive_roots) == 4 and rs.n_classes == 2


def test_bad_types():
    with pytest.raises(RootSystemError):
        build_root_system("E6")
    with pytest.raises(RootSystemError):
        build_root_system("A5")
    with pytest.raises(RootSystemError):
        build_root_system("D2")


def test_orbits():
    a1 = build_root_system("A1")
    assert weyl_orbit(a1, (3,)) == {(3,), (-3,)}
    c2 = build_root_system("C2")
    assert weyl_orbit(c2, (0, 0)) == {(0, 0)}
    assert len(weyl_orbit(c2, (1, 1))) == 8


def test_dominance_examples():
    a1 = build_root_system("A1")
    c2 = build_root_system("C2")
    assert is_dominant((2, 0)) and not is_dominant((-1, 3)) and is_dominant((0, 0))
    assert dominance_leq(a1, (0,), (2,))
    assert not dominance_leq(a1, (1,), (2,))
    assert not dominance_leq(c2, (1, 0), (0, 1))
    assert not dominance_leq(c2, (0, 1), (1, 0))


def test_lower_ideals():
    a1 = build_root_system("A1")
    assert lower_ideal(a1, (4,)) == [(0,), (2,), (4,)]
    c2 = build_root_system("C2")
    assert lower_ideal(c2, (0, 0)) == [(0, 0)]
    ideal = lower_ideal(c2, (0, 1))
    assert (0, 0) in ideal and ideal[-1] == (0, 1)


@settings(max_examples=60)
@given(st.sampled_from(["A2", "B2", "C2", "A3"]), st.data())
def test_dominance_is_a_partial_order(label, data):
    rs = build_root_system(label)
    a, b, c = (data.draw(dom_st(rs.rank, 2)) for _ in range(3))
    assert dominance_leq(rs, a, a)
    if dominance_leq(rs, a, b) and dominance_leq(rs, b, a):
        assert a == b
    if dominance_leq(rs, a, b) and dominance_leq(rs, b, c):
        assert dominance_leq(rs, a, c)


@settings(max_examples=40)
@given(st.sampled_from(["A2", "B2", "C2", "D3"]), st.data())
def test_orbits_are_weyl_stable(label, data):
    rs = build_root_system(label)
    lam = data.draw(dom_st(rs.rank, 2))
    orb = weyl_orbit(rs, lam)
    for i in range(rs.rank):
        assert {rs.reflect(i, w) for w in orb} == orb
    assert sum(1 for w in orb if is_dominant(w)) == 1


def test_lower_ideal_is_sorted_and_closed():
    rs = build_root_system("C2")
    for lam in dominant_weights(rs, 4):
        ideal = lower_ideal(rs, lam)
        assert ideal[-1] == lam
        assert all(dominance_leq(rs, mu, lam) for mu in ideal)
        below = [mu for mu in dominant_weights(rs, 8) if dominance_leq(rs, mu, lam)]
        assert sorted(below) == sorted(ideal)


def test_rho_k_and_eigenvalue():
    a1 = build_root_system("A1")
    assert rho_k(a1, 0) == (0,)
    assert rho_k(a1, 1) == (2,)
    for k in range(4):
        for n in range(6):
            assert eigenvalue(a1, (n,), k) == n * (n + 2 * k)


def test_multiplicity_classes():
    c2 = build_root_system("C2")
    k = MultiplicityFn.coerce(c2, (1, 2))
    long_root = next(r for r in c2.positive_roots if c2.root_length2(r) == 4)
    short_root = next(r for r in c2.positive_roots if c2.root_length2(r) == 2)
    assert k.of_root(c2, long_root) == 1
    assert k.of_root(c2, short_root) == 2
    with pytest.raises(ValueError):
        MultiplicityFn.coerce(c2, (1, 2, 3))
    assert MultiplicityFn.coerce(c2, 2).values == (2, 2)


def test_simple_gram_is_scaled_consistently():
    for label in ("B3", "C3", "D4"):
        rs = build_root_system(label)
        assert {rs.root_length2(r) for r in rs.positive_roots} <= {Fraction(2), Fraction(4)}
