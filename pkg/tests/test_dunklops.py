from fractions import Fraction

import pytest

from rootpoly.dunklops import (
    CHEREDNIK,
    HECKMAN,
    L_OPERATOR,
    RATIONAL_DUNKL,
    AmbientPoly,
    NotInvariantError,
    OperatorSpec,
    L_apply,
    ambient_reflect,
    cherednik_apply,
    commutator_report,
    conjugation_witness,
    coweight_basis,
    divide_by_root_form,
    eigenspace_report,
    heckman_apply,
    rational_dunkl_apply,
    symmetrized_power_apply,
)
from rootpoly.laurent import DivisionError, LaurentPoly, deriv, orbit_sum
from rootpoly.orthopoly import ortho_poly
from rootpoly.rootdata import build_root_system, dominant_weights, eigenvalue, inner, rho_k

A1 = build_root_system("A1")
A2 = build_root_system("A2")
B2 = build_root_system("B2")
C2 = build_root_system("C2")
XI = (1,)  # the unit vector of R when alpha = 2


def X(rs, *w):
    return LaurentPoly.monomial(rs, w)


# --------------------------------------------------------------- rational


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_rational_dunkl_a1(k):
    x = AmbientPoly.monomial(A1, (1,), Fraction(1, 2))  # t = <alpha, x> = 2x
    assert rational_dunkl_apply(A1, XI, k, x) == AmbientPoly.constant(A1, 1 + 2 * k)
    x2 = x * x
    assert rational_dunkl_apply(A1, XI, k, x2) == x.scale(2)
    assert not rational_dunkl_apply(A1, XI, k, AmbientPoly.constant(A1, 5))


def test_reflection_and_division():
    rs = A2
    for r in rs.positive_roots:
        p = AmbientPoly.monomial(rs, (2, 1)) + AmbientPoly.monomial(rs, (0, 3))
        assert ambient_reflect(ambient_reflect(p, r), r) == p
        ell = AmbientPoly(rs, {tuple(int(i == j) for j in range(rs.rank)): c
                               for i, c in enumerate(r) if c})
        assert divide_by_root_form(p * ell, r) == p
    with pytest.raises(DivisionError):
        divide_by_root_form(AmbientPoly.constant(rs, 1), rs.positive_roots[0])


@pytest.mark.parametrize("k", [(0,), (1,), (2,)])
def test_rational_commutators_a2(k):
    a, b = coweight_basis(A2)
    rep = commutator_report(OperatorSpec(RATIONAL_DUNKL, A2, k, a),
                            OperatorSpec(RATIONAL_DUNKL, A2, k, b), 5)
    assert rep.vanishes and rep.checked == 21


def test_ambient_json_roundtrip():
    p = AmbientPoly(B2, {(1, 2): Fraction(-3, 4), (0, 0): 2})
    assert AmbientPoly.from_json(B2, p.to_json()) == p


# ---------------------------------------------------------- trigonometric


def test_heckman_a1_monomial():
    # (1 + X^-2)(X - X^-1)/(1 - X^-2) = X + X^-1 by hand
    for k in range(3):
        assert heckman_apply(A1, XI, k, X(A1, 1)) == X(A1, 1) + (X(A1, 1) + X(A1, -1)).scale(k)
        assert heckman_apply(A1, XI, k, LaurentPoly.one(A1)) == LaurentPoly.zero(A1)


def test_heckman_on_invariants_is_the_derivative():
    xi = (Fraction(1), Fraction(2))
    f = orbit_sum(C2, (1, 1)) + orbit_sum(C2, (0, 2))
    assert heckman_apply(C2, xi, (1, 2), f) == deriv(xi, f)


def test_cherednik_constant_and_k0():
    for rs, k in ((C2, (1, 1)), (C2, (2, 1)), (A2, (2,)), (B2, (1, 2))):
        for xi in coweight_basis(rs):
            expected = -inner(rs, rho_k(rs, k), xi) / 2
            assert cherednik_apply(rs, xi, k, LaurentPoly.one(rs)) == LaurentPoly.one(rs).scale(expected)
    f = X(C2, 2, -1) + X(C2, 0, 1).scale(3)
    xi = coweight_basis(C2)[0]
    assert cherednik_apply(C2, xi, (0, 0), f) == deriv(xi, f)


def test_cherednik_commutes_heckman_does_not():
    a, b = coweight_basis(C2)
    for k in ((1, 1), (2, 1)):
        rep = commutator_report(OperatorSpec(CHEREDNIK, C2, k, a), OperatorSpec(CHEREDNIK, C2, k, b), 3)
        assert rep.vanishes
    rep = commutator_report(OperatorSpec(HECKMAN, C2, (1, 1), a), OperatorSpec(HECKMAN, C2, (1, 1), b),
                            3, stop_at_first=True)
    assert not rep.vanishes


def test_conjugation_property():
    # Heckman operators are W-equivariant, Cherednik operators are not
    assert conjugation_witness(C2, (1, 1), HECKMAN) is None
    w = conjugation_witness(C2, (1, 1), CHEREDNIK)
    assert w is not None


def test_symmetrized_first_power_vanishes():
    for rs in (A2, C2):
        xi = coweight_basis(rs)[0]
        m = orbit_sum(rs, (1, 1))
        assert not symmetrized_power_apply(rs, xi, 1, 1, m)
        assert not symmetrized_power_apply(rs, xi, 1, 1, LaurentPoly.one(rs))


@pytest.mark.parametrize("j", [2, 3])
def test_symmetrized_powers_a2(j):
    xi = coweight_basis(A2)[0]
    for lam in dominant_weights(A2, 3):
        p = ortho_poly(A2, lam, 1).as_laurent()
        img = symmetrized_power_apply(A2, xi, j, 1, p)
        assert img == p.scale(img.coeff(lam))


def test_symmetrized_square_is_affine_in_L_eigenvalue():
    xi = coweight_basis(C2)[0]
    k = (1, 1)
    pts = []
    for lam in dominant_weights(C2, 4):
        p = ortho_poly(C2, lam, k).as_laurent()
        img = symmetrized_power_apply(C2, xi, 2, k, p)
        pts.append((eigenvalue(C2, lam, k), img.coeff(lam)))
    (e0, s0), (e1, s1) = pts[0], next(t for t in pts if t[0] != pts[0][0])
    a = (s1 - s0) / (e1 - e0)
    b = s0 - a * e0
    assert all(s == a * e + b for e, s in pts)
    assert a != 0


def test_symmetrized_rejects_bad_input():
    xi = coweight_basis(C2)[0]
    with pytest.raises(ValueError):
        symmetrized_power_apply(C2, xi, 4, 1, LaurentPoly.one(C2))
    with pytest.raises(NotInvariantError):
        symmetrized_power_apply(C2, xi, 2, 1, X(C2, 1, 0))


# --------------------------------------------------------------------- L


def test_L_examples():
    assert not L_apply(A1, 1, LaurentPoly.one(A1))
    p = ortho_poly(A1, (2,), 1).as_laurent()
    assert L_apply(A1, 1, p) == p.scale(8)
    p = ortho_poly(C2, (1, 0), (1, 1)).as_laurent()
    assert L_apply(C2, (1, 1), p) == p.scale(eigenvalue(C2, (1, 0), (1, 1)))
    with pytest.raises(NotInvariantError):
        L_apply(C2, 1, X(C2, 1, 0))


def test_L_spec_callable():
    op = OperatorSpec(L_OPERATOR, A2, 2)
    p = ortho_poly(A2, (1, 1), 2).as_laurent()
    assert op(p) == p.scale(eigenvalue(A2, (1, 1), 2))
    with pytest.raises(ValueError):
        OperatorSpec(HECKMAN, A2, 1)


@pytest.mark.parametrize("label,k", [("C2", (1, 1)), ("C2", (1, 2)), ("A2", (2,))])
def test_eigenspaces_are_one_dimensional(label, k):
    rs = build_root_system(label)
    for lam in dominant_weights(rs, 4):
        rep = eigenspace_report(rs, k, lam)
        assert rep.dimension == 1, rep.to_json()


@pytest.mark.parametrize("k", [(1, 0), (0, 2)])
def test_heckman_commutes_when_one_class_is_off(k):
    # the active roots form A1 x A1 and the operators decouple
    a, b = coweight_basis(C2)
    rep = commutator_report(OperatorSpec(HECKMAN, C2, k, a), OperatorSpec(HECKMAN, C2, k, b), 3)
    assert rep.vanishes
