from fractions import Fraction

import pytest
from hypothesis import given

from rootpoly.exactnum import (
    I,
    ComplexRational,
    ExactArithmeticError,
    PoleError,
    QRat,
    VPoly,
    coeff_from_json,
    coeff_to_json,
    qrat_eval,
    rat_arith,
    rat_from_str,
    rat_to_str,
)

from strategies import fractions, nonzero_qrats, qrats, vpolys

V = VPoly([0, 1])


def test_rational_examples():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "+") == Fraction(5, 6)
    assert Fraction(2, 4) == Fraction(1, 2)
    with pytest.raises(ExactArithmeticError):
        rat_arith(Fraction(1, 2), 0, "/")


@given(fractions)
def test_rational_string_roundtrip(x):
    assert rat_from_str(rat_to_str(x)) == x


def test_qrat_normalizes():
    assert QRat(V * V - 1, V - 1) == QRat(V + 1)
    assert QRat(V, V) == QRat(1)
    z = QRat(0, V + 2)
    assert z.num.is_zero() and z.den.is_one()


def test_qrat_denominator_is_monic():
    r = QRat(VPoly([1]), VPoly([0, 3]))
    assert r.den.leading() == 1
    assert r == QRat(Fraction(1, 3)) / QRat(V)


def test_qrat_eval_examples():
    assert qrat_eval(QRat(V * V - 1, V - 1), 1) == 2
    assert qrat_eval(QRat(V + 1, 2), 1) == 1
    with pytest.raises(PoleError) as exc:
        qrat_eval(QRat(1, V - 1), 1)
    assert exc.value.order == 1


def test_removable_singularity_with_shared_factor():
    # (v^2 - 1)^2 / (v - 1)^2 after reduction is (v + 1)^2
    r = QRat((V * V - 1) * (V * V - 1), (V - 1) * (V - 1))
    assert qrat_eval(r, 1) == 4


@given(qrats, qrats, qrats)
def test_qrat_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QRat(0)


@given(nonzero_qrats)
def test_qrat_inverse(a):
    assert a * a.inverse() == QRat(1)
    assert a / a == QRat(1)


def test_qrat_division_by_zero():
    with pytest.raises(ExactArithmeticError):
        QRat(V) / QRat(0)


@given(vpolys, vpolys, vpolys)
def test_vpoly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(qrats)
def test_qrat_json_roundtrip(a):
    assert coeff_from_json(coeff_to_json(a)) == a


def test_q_and_v_powers():
    assert QRat.q_power(1) == QRat(V * V)
    assert QRat.v_power(-2) * QRat.q_power(1) == QRat(1)


def test_complex_rational():
    assert I * I == ComplexRational(-1)
    z = ComplexRational(Fraction(1, 2), 3)
    assert z * z.conjugate() == ComplexRational(Fraction(1, 4) + 9)
    assert (z / z) == ComplexRational(1)
