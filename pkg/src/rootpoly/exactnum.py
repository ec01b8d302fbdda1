"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction`.  Polynomials and rational functions
live in the single indeterminate ``v`` with ``q = v**2``; ``VPoly`` is a thin
immutable wrapper over FLINT's ``fmpq_poly`` and ``QRat`` keeps numerator and
denominator coprime with a monic denominator so that equality is structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import flint

Rational = Fraction
Scalar = Union[int, Fraction]


class ExactArithmeticError(ArithmeticError):
    """Raised on division by zero or on a non-removable pole."""


class PoleError(ExactArithmeticError):
    def __init__(self, point: Fraction, order: int):
        super().__init__(f"pole of order {order} at v = {point}")
        self.point = point
        self.order = order


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _fmpq(x) -> flint.fmpq:
    x = to_fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def rat_arith(a, b, op: str) -> Fraction:
    a, b = to_fraction(a), to_fraction(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ExactArithmeticError("division by zero")
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def rat_to_str(x) -> str:
    return str(to_fraction(x))


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class ComplexRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @staticmethod
    def _lift(x) -> "ComplexRational":
        if isinstance(x, ComplexRational):
            return x
        return ComplexRational(to_fraction(x), Fraction(0))

    def __add__(self, other):
        o = self._lift(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return ComplexRational(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ExactArithmeticError("division by zero")
        return self * ComplexRational(o.re / n, -o.im / n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            o = self._lift(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"


I = ComplexRational(0, 1)


class VPoly:
    """Univariate polynomial with rational coefficients in ``v``.

    Also used as the ``x``-polynomial type of the one-variable module.
    """

    __slots__ = ("_p",)

    def __init__(self, data=None):
        if data is None:
            p = flint.fmpq_poly()
        elif isinstance(data, flint.fmpq_poly):
            p = data
        elif isinstance(data, VPoly):
            p = data._p
        elif isinstance(data, (int, Fraction)):
            p = flint.fmpq_poly([_fmpq(data)])
        elif isinstance(data, dict):
            p = _from_terms(data.items())
        else:
            p = flint.fmpq_poly([_fmpq(c) for c in data])
        self._p = p

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, object]]) -> "VPoly":
        return cls(_from_terms(terms))

    @classmethod
    def monomial(cls, e: int, c=1) -> "VPoly":
        if e < 0:
            raise ValueError("negative exponent in VPoly")
        return cls.from_terms([(e, c)])

    @property
    def flint(self) -> flint.fmpq_poly:
        return self._p

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero terms as ``(exponent, coefficient)`` with increasing exponents."""
        return [(e, to_fraction(c)) for e, c in enumerate(self._p.coeffs()) if c != 0]

    def coeffs(self) -> list[Fraction]:
        return [to_fraction(c) for c in self._p.coeffs()]

    def degree(self) -> int:
        return self._p.degree()

    def leading(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return to_fraction(self._p.coeffs()[-1])

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def is_one(self) -> bool:
        return self._p.is_one()

    def __bool__(self):
        return not self._p.is_zero()

    @staticmethod
    def _coerce(other):
        if isinstance(other, VPoly):
            return other._p
        if isinstance(other, (int, Fraction)):
            return flint.fmpq_poly([_fmpq(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else VPoly(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else VPoly(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else VPoly(o - self._p)

    def __neg__(self):
        return VPoly(-self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else VPoly(self._p * o)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return VPoly(self._p ** n)

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ExactArithmeticError("polynomial division by zero")
        qq, rr = divmod(self._p, o)
        return VPoly(qq), VPoly(rr)

    def exact_div(self, other) -> "VPoly":
        qq, rr = divmod(self, other)
        if rr:
            raise ExactArithmeticError("inexact polynomial division")
        return qq

    def gcd(self, other: "VPoly") -> "VPoly":
        return VPoly(self._p.gcd(other._p))

    def derivative(self) -> "VPoly":
        return VPoly(self._p.derivative())

    def __call__(self, x) -> Fraction:
        return to_fraction(self._p(_fmpq(x)))

    def compose(self, other: "VPoly") -> "VPoly":
        return VPoly(self._p(other._p))

    def monic(self) -> "VPoly":
        if self.is_zero():
            return self
        return VPoly(self._p / self._p.coeffs()[-1])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __repr__(self):
        return f"VPoly({self})"

    def __str__(self):
        return _poly_str(self.terms(), "v")

    def to_json(self) -> list:
        return [[e, rat_to_str(c)] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data) -> "VPoly":
        return cls.from_terms((int(e), Fraction(c)) for e, c in data)


def _from_terms(terms) -> flint.fmpq_poly:
    terms = [(int(e), to_fraction(c)) for e, c in terms]
    if not terms:
        return flint.fmpq_poly()
    deg = max(e for e, _ in terms)
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in terms:
        if e < 0:
            raise ValueError("negative exponent in VPoly")
        coeffs[e] += c
    return flint.fmpq_poly([_fmpq(c) for c in coeffs])


def _poly_str(terms, var: str) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in reversed(terms):
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append(f"-{mono}")
        elif mono:
            parts.append(f"({c})*{mono}")
        else:
            parts.append(f"({c})" if c.denominator != 1 or c < 0 else str(c))
    return " + ".join(parts)


V = VPoly([0, 1])


class QRat:
    """Element of Q(v), stored as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _canonical: bool = False):
        num = num if isinstance(num, VPoly) else VPoly(num)
        if den is None:
            self.num, self.den = num, VPoly(1)
            return
        den = den if isinstance(den, VPoly) else VPoly(den)
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ExactArithmeticError("zero denominator in rational function")
        if num.is_zero():
            self.num, self.den = num, VPoly(1)
            return
        if den.degree() > 0:
            g = num.gcd(den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading()
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def lift(cls, x) -> "QRat":
        if isinstance(x, QRat):
            return x
        if isinstance(x, (int, Fraction, VPoly)):
            return cls(x)
        raise TypeError(f"cannot lift {type(x).__name__} to QRat")

    @classmethod
    def q_power(cls, e: int) -> "QRat":
        """``q**e`` for integer ``e``, i.e. ``v**(2e)``."""
        return cls.v_power(2 * e)

    @classmethod
    def v_power(cls, e: int) -> "QRat":
        if e >= 0:
            return cls(VPoly.monomial(e))
        return cls(VPoly(1), VPoly.monomial(-e), _canonical=True)

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, VPoly)):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den.is_one() and self.num.degree() <= 0:
            return hash(self.num.leading())
        return hash((self.num, self.den))

    def __neg__(self):
        return QRat(-self.num, self.den, _canonical=True)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.den.is_one():
                return QRat(self.num + other)
            return QRat(self.num + self.den * other, self.den, _canonical=True)
        if not isinstance(other, QRat):
            if isinstance(other, VPoly):
                other = QRat(other)
            else:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRat(self.num + other.num)
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.is_one():
            return QRat(self.num * other.den + other.num * self.den,
                        self.den * other.den, _canonical=True)
        a = other.den.exact_div(g)
        b = self.den.exact_div(g)
        return QRat(self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QRat(VPoly())
            return QRat(self.num * other, self.den, _canonical=True)
        if isinstance(other, VPoly):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRat(self.num * other.num)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num.exact_div(g1), other.den.exact_div(g1)) if not g1.is_one() else (self.num, other.den)
        n2, d1 = (other.num.exact_div(g2), self.den.exact_div(g2)) if not g2.is_one() else (other.num, self.den)
        return QRat(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.num.is_zero():
            raise ExactArithmeticError("division by zero in Q(v)")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ExactArithmeticError("division by zero")
            return QRat(self.num * (1 / Fraction(other)), self.den, _canonical=True)
        if isinstance(other, VPoly):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QRat.lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return QRat(self.num ** n, self.den ** n, _canonical=True)

    def __call__(self, v0) -> Fraction:
        return qrat_eval(self, v0)

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "QRat":
        return cls(VPoly.from_json(data["num"]), VPoly.from_json(data["den"]))


def qrat_normalize(num, den) -> QRat:
    return QRat(num, den)


def _order_at(p: VPoly, v0: Fraction) -> tuple[int, VPoly]:
    """Multiplicity of the root ``v0`` in ``p`` and the cofactor."""
    lin = VPoly([-v0, 1])
    order = 0
    while not p.is_zero() and p(v0) == 0:
        p = p.exact_div(lin)
        order += 1
    return order, p


def qrat_eval(r, v0) -> Fraction:
    """Value (or removable limit) of ``r`` at ``v = v0``."""
    if isinstance(r, (int, Fraction)):
        return to_fraction(r)
    v0 = to_fraction(v0)
    if r.den(v0) != 0:
        return r.num(v0) / r.den(v0)
    # canonical form leaves no common factor, but tolerate non-canonical input
    on, num = _order_at(r.num, v0)
    od, den = _order_at(r.den, v0)
    if od > on:
        raise PoleError(v0, od - on)
    if on > od:
        return Fraction(0)
    return num(v0) / den(v0)


def coeff_to_json(c):
    """Strings for rationals, ``{"num", "den"}`` objects for rational functions."""
    if isinstance(c, QRat):
        return c.to_json()
    return rat_to_str(c)


def coeff_from_json(data):
    if isinstance(data, dict):
        return QRat.from_json(data)
    return Fraction(data)
