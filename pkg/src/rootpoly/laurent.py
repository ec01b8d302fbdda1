"""Laurent polynomials ``sum c_lam X^lam`` over the weight lattice.

``X^lam`` stands for ``e^{i<lam, x>}``.  The derivative ``deriv`` drops the
factor ``i``: ``X^lam -> <lam, xi> X^lam``.  Coefficients are ``Fraction`` or
``QRat``; the two mix freely through Python's numeric operators.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .exactnum import QRat, coeff_from_json, coeff_to_json, to_fraction
from .rootdata import RootSystem, Weight, WeylElement, inner, weyl_orbit


class DivisionError(ArithmeticError):
    """Nonzero remainder in an exact division; signals an operator bug."""


def _order_key(w: Weight):
    return (sum(abs(c) for c in w), w)


class LaurentPoly:
    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: Mapping[Weight, object] | None = None):
        self.rs = rs
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    w = tuple(w)
                    if len(w) != rs.rank:
                        raise ValueError(f"exponent {w} has wrong length for {rs.name}")
                    clean[w] = c
        self.terms = clean

    @classmethod
    def _raw(cls, rs: RootSystem, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.rs = rs
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, rs: RootSystem, w, c=1) -> "LaurentPoly":
        return cls(rs, {tuple(w): Fraction(c) if isinstance(c, int) else c})

    @classmethod
    def one(cls, rs: RootSystem) -> "LaurentPoly":
        return cls.monomial(rs, rs.zero)

    @classmethod
    def zero(cls, rs: RootSystem) -> "LaurentPoly":
        return cls._raw(rs, {})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]))

    def coeff(self, w) -> object:
        return self.terms.get(tuple(w), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, QRat)):
            return self.terms == LaurentPoly.monomial(self.rs, self.rs.zero, other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.monomial(self.rs, self.rs.zero, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return LaurentPoly._raw(self.rs, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.rs, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        if not c:
            return LaurentPoly.zero(self.rs)
        return LaurentPoly(self.rs, {w: c * a for w, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        return lp_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = LaurentPoly.one(self.rs)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def map_coeffs(self, fn: Callable) -> "LaurentPoly":
        return LaurentPoly(self.rs, {w: fn(c) for w, c in self.terms.items()})

    def map_terms(self, fn: Callable[[Weight, object], object]) -> "LaurentPoly":
        return LaurentPoly(self.rs, {w: fn(w, c) for w, c in self.terms.items()})

    def shift(self, w) -> "LaurentPoly":
        """Multiply by ``X^w``."""
        return LaurentPoly._raw(
            self.rs, {tuple(a + b for a, b in zip(u, w)): c for u, c in self.terms.items()})

    def __repr__(self):
        return f"LaurentPoly({self.rs.name}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*X^{list(w)}" for w, c in self.items())

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(w), "coeff": coeff_to_json(c)} for w, c in self.items()]}

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "LaurentPoly":
        return cls(rs, {tuple(t["exp"]): coeff_from_json(t["coeff"]) for t in data["terms"]})

    def to_latex(self) -> str:
        return latex(self)


def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if len(f.terms) > len(g.terms):
        f, g = g, f
    out: dict = {}
    gt = list(g.terms.items())
    for u, a in f.terms.items():
        for w, b in gt:
            key = tuple(x + y for x, y in zip(u, w))
            c = a * b
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return LaurentPoly(f.rs, out)


def constant_term(f: LaurentPoly):
    return f.terms.get(f.rs.zero, Fraction(0))


def bar(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._raw(f.rs, {tuple(-x for x in w): c for w, c in f.terms.items()})


def weyl_act(w: WeylElement, f: LaurentPoly) -> LaurentPoly:
    rs = f.rs
    return LaurentPoly._raw(rs, {w.act(rs, u): c for u, c in f.terms.items()})


def reflect(f: LaurentPoly, i: int) -> LaurentPoly:
    rs = f.rs
    return LaurentPoly._raw(rs, {rs.reflect(i, u): c for u, c in f.terms.items()})


def reflect_root(f: LaurentPoly, root) -> LaurentPoly:
    rs = f.rs
    return LaurentPoly._raw(rs, {rs.reflect_by_root(root, u): c for u, c in f.terms.items()})


def _string_position(u: Weight, a: Weight, p: int) -> tuple[int, Weight]:
    j = u[p] // a[p]
    return j, tuple(x - j * y for x, y in zip(u, a))


def div_exact(f: LaurentPoly, root) -> LaurentPoly:
    """Quotient ``g`` with ``(1 - X^{-alpha}) g = f`` for a root ``alpha``.

    Terms are grouped into alpha-strings ``X^{r + j alpha}``.  Along a string
    the quotient coefficients are the tail sums ``g_j = sum_{i >= j} f_i``;
    divisibility means every string sums to zero.
    """
    rs = f.rs
    a = rs.root_weight(tuple(root))
    p = next(i for i, x in enumerate(a) if x)
    strings: dict[Weight, dict[int, object]] = {}
    for u, c in f.terms.items():
        j, r = _string_position(u, a, p)
        strings.setdefault(r, {})[j] = c
    out = {}
    for r, s in strings.items():
        acc = None
        lo = min(s)
        for j in range(max(s), lo - 1, -1):
            c = s.get(j)
            if c is not None:
                acc = c if acc is None else acc + c
            if acc:
                out[tuple(x + j * y for x, y in zip(r, a))] = acc
        if acc:
            raise DivisionError(f"{f} is not divisible by (1 - X^-{list(a)})")
    return LaurentPoly._raw(rs, out)


def one_minus_x_neg(rs: RootSystem, root) -> LaurentPoly:
    a = rs.root_weight(tuple(root))
    return LaurentPoly(rs, {rs.zero: Fraction(1), tuple(-x for x in a): Fraction(-1)})


def direction_vector(rs: RootSystem, xi) -> tuple[Fraction, ...]:
    """Coefficients ``g`` with ``<lam, xi> = sum lam_i g_i``."""
    xi = tuple(to_fraction(x) for x in xi)
    if not any(xi):
        raise ValueError("direction must be nonzero")
    e = [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]
    return tuple(inner(rs, ei, xi) for ei in e)


def deriv(xi, f: LaurentPoly) -> LaurentPoly:
    """``X^lam -> <lam, xi> X^lam``."""
    g = direction_vector(f.rs, xi)
    return deriv_by_pairing(g, f)


def deriv_by_pairing(g, f: LaurentPoly) -> LaurentPoly:
    out = {}
    for u, c in f.terms.items():
        s = sum((x * y for x, y in zip(u, g) if x), Fraction(0))
        if s:
            out[u] = c * s
    return LaurentPoly._raw(f.rs, out)


def is_invariant(f: LaurentPoly) -> bool:
    return all(reflect(f, i) == f for i in range(f.rs.rank))


def orbit_sum(rs: RootSystem, lam, c=Fraction(1)) -> LaurentPoly:
    return LaurentPoly._raw(rs, {w: c for w in weyl_orbit(rs, tuple(lam))})


def _latex_exponent(w: Weight) -> str:
    parts = []
    for i, c in enumerate(w, start=1):
        if not c:
            continue
        coef = "" if c == 1 else "-" if c == -1 else str(c)
        parts.append(f"{coef}\\varpi_{{{i}}}")
    s = "+".join(parts).replace("+-", "-")
    return s or "0"


def latex_coeff(c) -> str:
    if isinstance(c, QRat):
        return f"\\left({_latex_vpoly(c.num)}\\right)" if c.den.is_one() else \
            f"\\frac{{{_latex_vpoly(c.num)}}}{{{_latex_vpoly(c.den)}}}"
    c = to_fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _latex_vpoly(p) -> str:
    out = []
    for e, c in reversed(p.terms()):
        mono = "" if e == 0 else "v" if e == 1 else f"v^{{{e}}}"
        cs = latex_coeff(c)
        if mono and c == 1:
            cs = ""
        elif mono and c == -1:
            cs = "-"
        out.append(cs + mono)
    return "+".join(out).replace("+-", "-") or "0"


def latex(f: LaurentPoly) -> str:
    """Render with ``X^lam`` written as ``e^{i<lam, x>}``."""
    if not f.terms:
        return "0"
    parts = []
    for w, c in f.items():
        if not any(w):
            parts.append(latex_coeff(c))
            continue
        coef = latex_coeff(c)
        if coef == "1":
            coef = ""
        elif coef == "-1":
            coef = "-"
        parts.append(f"{coef}e^{{i\\langle {_latex_exponent(w)},x\\rangle}}")
    return "+".join(parts).replace("+-", "-")


def sum_polys(rs: RootSystem, polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict = {}
    for p in polys:
        for w, c in p.terms.items():
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
    return LaurentPoly(rs, out)
