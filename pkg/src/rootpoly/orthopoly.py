"""Orbit sums, weight functions, constant-term inner products and the
Jacobi / Macdonald polynomials built from them.

The torus integral of a trigonometric polynomial with normalized Haar measure
is its constant term, so every inner product here is exact:
``<f, g> = CT(f * bar(g) * delta)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactnum import QRat, coeff_to_json, qrat_eval
from .laurent import LaurentPoly, constant_term, orbit_sum
from .rootdata import (
    MultiplicityFn,
    RootSystem,
    RootSystemError,
    Weight,
    dominance_leq,
    dominant_weights,
    is_dominant,
    lower_ideal,
    weyl_orbit,
)

JACOBI = "jacobi"
MACDONALD = "macdonald"


class SingularGramError(ArithmeticError):
    pass


@dataclass(frozen=True)
class WeightFn:
    poly: LaurentPoly
    k: MultiplicityFn
    q: bool = False

    @property
    def rs(self) -> RootSystem:
        return self.poly.rs

    def __getitem__(self, w):
        return self.poly.terms.get(w, 0)


@dataclass
class OrthoPoly:
    rs: RootSystem
    lam: Weight
    coeffs: dict  # mu -> coefficient, ordered along the lower ideal, lam last
    k: MultiplicityFn
    family: str

    def as_laurent(self) -> LaurentPoly:
        out = {}
        for mu, c in self.coeffs.items():
            for w in weyl_orbit(self.rs, mu):
                out[w] = c
        return LaurentPoly(self.rs, out)

    def support(self) -> list[Weight]:
        return [mu for mu, c in self.coeffs.items() if c]

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "family": self.family,
            "k": list(self.k.values),
            "lambda": list(self.lam),
            "coeffs": [{"mu": list(mu), "c": coeff_to_json(c)} for mu, c in self.coeffs.items()],
        }


def monomial_sym(rs: RootSystem, lam) -> LaurentPoly:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    return orbit_sum(rs, lam)


@lru_cache(maxsize=None)
def weight_delta_k(rs: RootSystem, k) -> WeightFn:
    """``prod_{alpha in R} (1 - X^alpha)^{k_alpha}``."""
    k = MultiplicityFn.coerce(rs, k)
    out = LaurentPoly.one(rs)
    for r, a in zip(rs.positive_roots, rs.positive_root_weights):
        kr = k.of_root(rs, r)
        if kr:
            na = tuple(-x for x in a)
            pair = LaurentPoly(rs, {rs.zero: Fraction(2), a: Fraction(-1), na: Fraction(-1)})
            out = out * pair ** kr
    return WeightFn(out, k, False)


def q_pochhammer(rs: RootSystem, a: Weight, m: int) -> LaurentPoly:
    """``(X^a; q)_m = prod_{j<m} (1 - q^j X^a)`` over ``QRat``."""
    out = LaurentPoly.monomial(rs, rs.zero, QRat(1))
    for j in range(m):
        out = out * LaurentPoly(rs, {rs.zero: QRat(1), a: -QRat.q_power(j)})
    return out


@lru_cache(maxsize=None)
def weight_delta_kq(rs: RootSystem, k) -> WeightFn:
    """``prod_{alpha in R} (X^alpha; q)_{k_alpha}``, the integer-k truncation of the
    ratio of infinite q-Pochhammer symbols."""
    k = MultiplicityFn.coerce(rs, k)
    out = LaurentPoly.monomial(rs, rs.zero, QRat(1))
    for r, a in zip(rs.positive_roots, rs.positive_root_weights):
        kr = k.of_root(rs, r)
        if kr:
            na = tuple(-x for x in a)
            out = out * q_pochhammer(rs, a, kr) * q_pochhammer(rs, na, kr)
    return WeightFn(out, k, True)


def weight_for(rs: RootSystem, k, family: str) -> WeightFn:
    k = MultiplicityFn.coerce(rs, k)
    if family == JACOBI:
        return weight_delta_k(rs, k)
    if family == MACDONALD:
        return weight_delta_kq(rs, k)
    raise ValueError(f"unknown family {family!r}")


def at_v1(delta: WeightFn) -> LaurentPoly:
    return delta.poly.map_coeffs(lambda c: qrat_eval(c, 1))


def inner_product(f: LaurentPoly, g: LaurentPoly, delta: WeightFn):
    """``CT(f * bar(g) * delta)`` without expanding the triple product."""
    d = delta.poly.terms
    total = 0
    for a, fa in f.terms.items():
        for b, gb in g.terms.items():
            c = d.get(tuple(y - x for x, y in zip(a, b)))
            if c is not None:
                total = total + fa * gb * c
    return total


def solve_linear(matrix: list[list], rhs: list) -> list:
    """Exact Gaussian elimination over ``Fraction`` or ``QRat`` entries."""
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularGramError("singular Gram matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        inv = 1 / p if isinstance(p, QRat) else Fraction(1) / p
        a[col] = [x * inv if x else x for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y if y else x for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


class OrthoBasis:
    """Gram data and orthogonal polynomials for one ``(rs, k, family)``.

    Orbit-sum Gram entries use W-invariance of the weight:
    ``<m_mu, m_nu> = |W mu| * sum_{b in W nu} delta[b - mu]``.
    """

    def __init__(self, rs: RootSystem, k, family: str = JACOBI):
        self.rs = rs
        self.k = MultiplicityFn.coerce(rs, k)
        self.family = family
        self.delta = weight_for(rs, self.k, family)
        self._gram: dict = {}
        self._polys: dict = {}
        self._orbits: dict = {}

    def orbit(self, mu) -> set:
        o = self._orbits.get(mu)
        if o is None:
            o = self._orbits[mu] = weyl_orbit(self.rs, mu)
        return o

    def gram(self, mu, nu):
        key = (mu, nu) if mu <= nu else (nu, mu)
        val = self._gram.get(key)
        if val is None:
            d = self.delta.poly.terms
            s = 0
            for b in self.orbit(nu):
                c = d.get(tuple(x - y for x, y in zip(b, mu)))
                if c is not None:
                    s = s + c
            val = self._gram[key] = s * len(self.orbit(mu))
        return val

    def poly(self, lam) -> OrthoPoly:
        lam = tuple(lam)
        p = self._polys.get(lam)
        if p is None:
            p = self._polys[lam] = self._build(lam)
        return p

    def _build(self, lam: Weight) -> OrthoPoly:
        ideal = lower_ideal(self.rs, lam)
        strict = ideal[:-1]
        one = QRat(1) if self.family == MACDONALD else Fraction(1)
        if strict:
            mat = [[self.gram(mu, nu) for nu in strict] for mu in strict]
            rhs = [-self.gram(mu, lam) for mu in strict]
            sol = solve_linear(mat, rhs)
        else:
            sol = []
        coeffs = {mu: (c if c else 0 * one) for mu, c in zip(strict, sol)}
        coeffs[lam] = one
        return OrthoPoly(self.rs, lam, coeffs, self.k, self.family)

    def pair(self, p: OrthoPoly, mu):
        """``<P, m_mu>`` from the Gram data."""
        total = 0
        for nu, c in p.coeffs.items():
            if c:
                total = total + c * self.gram(nu, mu)
        return total

    def inner(self, p: OrthoPoly, r: OrthoPoly):
        total = 0
        for mu, c in r.coeffs.items():
            if c:
                total = total + c * self.pair(p, mu)
        return total


@lru_cache(maxsize=64)
def ortho_basis(rs: RootSystem, k, family: str = JACOBI) -> OrthoBasis:
    return OrthoBasis(rs, MultiplicityFn.coerce(rs, k), family)


def ortho_poly(rs: RootSystem, lam, k, family: str = JACOBI) -> OrthoPoly:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    return ortho_basis(rs, MultiplicityFn.coerce(rs, k), family).poly(lam)


def squared_norm(p: OrthoPoly, delta: WeightFn | None = None):
    if delta is None:
        return ortho_basis(p.rs, p.k, p.family).inner(p, p)
    f = p.as_laurent()
    return inner_product(f, f, delta)


def constant_term_of_weight(delta: WeightFn):
    return constant_term(delta.poly)


def norm_ratio(p: OrthoPoly, delta: WeightFn | None = None):
    if delta is None:
        delta = weight_for(p.rs, p.k, p.family)
    return squared_norm(p, delta) / constant_term(delta.poly)


@dataclass
class OrthogonalityReport:
    rs: RootSystem
    k: MultiplicityFn
    family: str
    weights: list
    table: dict = field(repr=False)
    nonzero_off_diagonal: list = field(default_factory=list)
    incomparable_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.nonzero_off_diagonal

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "family": self.family,
            "k": list(self.k.values),
            "weights": [list(w) for w in self.weights],
            "incomparable_pairs": self.incomparable_pairs,
            "nonzero_off_diagonal": [[list(a), list(b)] for a, b in self.nonzero_off_diagonal],
            "table": [{"lambda": list(a), "mu": list(b), "value": coeff_to_json(v)}
                      for (a, b), v in self.table.items()],
            "ok": self.ok,
        }


def full_orthogonality_report(rs: RootSystem, k, family: str = JACOBI, lam_max=None,
                              max_height: int | None = None) -> OrthogonalityReport:
    """``<P_lam, P_mu>`` for every pair in the tested set, comparable or not.

    The set is the lower ideal of ``lam_max`` or all dominant weights of level
    at most ``max_height``.
    """
    if (lam_max is None) == (max_height is None):
        raise ValueError("give exactly one of lam_max, max_height")
    weights = lower_ideal(rs, lam_max) if lam_max is not None else dominant_weights(rs, max_height)
    basis = ortho_basis(rs, MultiplicityFn.coerce(rs, k), family)
    polys = {w: basis.poly(w) for w in weights}
    table, bad, incomparable = {}, [], 0
    for a, b in itertools.combinations_with_replacement(weights, 2):
        val = basis.inner(polys[a], polys[b])
        table[(a, b)] = val
        if a != b:
            if not (dominance_leq(rs, a, b) or dominance_leq(rs, b, a)):
                incomparable += 1
            if val:
                bad.append((a, b))
    return OrthogonalityReport(rs, basis.k, family, weights, table, bad, incomparable)


def macdonald_q1_limit(p: OrthoPoly) -> OrthoPoly:
    if p.family != MACDONALD:
        raise ValueError("expected a Macdonald polynomial")
    coeffs = {mu: qrat_eval(c, 1) for mu, c in p.coeffs.items()}
    return OrthoPoly(p.rs, p.lam, coeffs, p.k, JACOBI)


@dataclass
class PrintedConditionReport:
    """Checks of ``<P_lam, m_mu> = 0`` split by how ``mu`` relates to ``lam``."""

    strictly_below_zero: bool
    incomparable_zero: bool
    above_nonzero_witnesses: list

    def to_json(self) -> dict:
        return {
            "strictly_below_zero": self.strictly_below_zero,
            "incomparable_zero": self.incomparable_zero,
            "above_nonzero_witnesses": [[list(a), list(b)] for a, b in self.above_nonzero_witnesses],
        }


def printed_condition_check(rs: RootSystem, k, family: str = JACOBI,
                            max_height: int = 4) -> PrintedConditionReport:
    """Test the orthogonality ``<P_lam, m_mu> = 0`` against every dominant ``mu``.

    Strictly lower ``mu`` is the construction; incomparable ``mu`` follows from
    full orthogonality; for ``mu`` above ``lam`` the pairing is generally nonzero.
    """
    basis = ortho_basis(rs, MultiplicityFn.coerce(rs, k), family)
    weights = dominant_weights(rs, max_height)
    below, incomp, above = True, True, []
    for lam in weights:
        p = basis.poly(lam)
        for mu in weights:
            if mu == lam:
                continue
            val = basis.pair(p, mu)
            if dominance_leq(rs, mu, lam):
                below = below and not val
            elif dominance_leq(rs, lam, mu):
                if val:
                    above.append((lam, mu))
            else:
                incomp = incomp and not val
    return PrintedConditionReport(below, incomp, above)


def norm_table(rs: RootSystem, k, max_height: int, family: str = JACOBI) -> dict:
    """``CT(delta)`` and ``<P_lam, P_lam> / <P_0, P_0>`` for dominant ``lam``."""
    basis = ortho_basis(rs, MultiplicityFn.coerce(rs, k), family)
    ct = constant_term(basis.delta.poly)
    rows = []
    for lam in dominant_weights(rs, max_height):
        p = basis.poly(lam)
        n = basis.inner(p, p)
        rows.append({"lambda": lam, "norm": n, "ratio": n / ct})
    return {"type": rs.name, "k": basis.k.values, "family": family, "ct": ct, "rows": rows}


def is_positive_at(c, points=(Fraction(1, 2), Fraction(3, 4))) -> bool:
    if isinstance(c, QRat):
        return all(c.num(v) / c.den(v) > 0 for v in points)
    return c > 0
