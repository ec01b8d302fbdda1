"""Dunkl-type operators: rational (on polynomials on V), Heckman and Cherednik
(trigonometric, on Laurent polynomials) and the second-order operator ``L``.

Trigonometric operators are implemented with the ``i`` of ``d/dx e^{i<lam,x>}``
divided out, so they act over the reals:

===================  ==========================================================
operator             realization
===================  ==========================================================
Heckman ``D_xi``     ``deriv_xi + 1/2 sum k<a,xi> (1+X^-a)(1-s_a)/(1-X^-a)``;
                     equals ``-i`` times the trigonometric Dunkl operator
Cherednik            ``deriv_xi + sum k<a,xi> (1-s_a)/(1-X^-a) - <rho(k),xi>``
``L``                ``-(Delta + sum k cot(<a,x>/2) d_a)``; eigenvalue
                     ``<lam, lam + sum k_a a>`` with a plus sign
===================  ==========================================================
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .laurent import (
    DivisionError,
    LaurentPoly,
    deriv_by_pairing,
    direction_vector,
    div_exact,
    is_invariant,
    reflect_root,
    sum_polys,
    weyl_act,
)
from .rootdata import (
    MultiplicityFn,
    RootSystem,
    WeylElement,
    eigenvalue,
    fundamental_coweight,
    inner,
    lower_ideal,
    rho_k,
    weyl_orbit,
)

RATIONAL_DUNKL = "rational_dunkl"
HECKMAN = "heckman"
CHEREDNIK = "cherednik"
L_OPERATOR = "L"


class NotInvariantError(ValueError):
    pass


# ---------------------------------------------------------------- ambient polys


class AmbientPoly:
    """Polynomial on V in the coordinates ``t_i = <alpha_i, x>``."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms=None):
        self.rs = rs
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, rs, terms):
        obj = cls.__new__(cls)
        obj.rs, obj.terms = rs, terms
        return obj

    @classmethod
    def monomial(cls, rs: RootSystem, e, c=1) -> "AmbientPoly":
        return cls(rs, {tuple(e): c})

    @classmethod
    def constant(cls, rs: RootSystem, c) -> "AmbientPoly":
        return cls(rs, {(0,) * rs.rank: c})

    @classmethod
    def linear_form(cls, rs: RootSystem, v) -> "AmbientPoly":
        """The function ``x -> <v, x>`` for ``v`` in fundamental coordinates."""
        r = rs.to_root_coords(v)
        return cls(rs, {tuple(int(i == j) for j in range(rs.rank)): c for i, c in enumerate(r)})

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AmbientPoly):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return AmbientPoly._raw(self.rs, out)

    def __neg__(self):
        return AmbientPoly._raw(self.rs, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AmbientPoly":
        c = Fraction(c)
        if not c:
            return AmbientPoly._raw(self.rs, {})
        return AmbientPoly._raw(self.rs, {e: c * a for e, a in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AmbientPoly):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return AmbientPoly(self.rs, out)

    __rmul__ = scale

    def __repr__(self):
        return f"AmbientPoly({self.rs.name}, {dict(sorted(self.terms.items()))})"

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "AmbientPoly":
        return cls(rs, {tuple(t["exp"]): Fraction(t["coeff"]) for t in data["terms"]})


def ambient_derivative(p: AmbientPoly, xi) -> AmbientPoly:
    """``d_xi p``; ``d_xi t_i = <alpha_i, xi>``."""
    rs = p.rs
    g = [Fraction(xi[i]) * rs.simple_lengths[i] / 2 for i in range(rs.rank)]
    out: dict = {}
    for e, c in p.terms.items():
        for i, n in enumerate(e):
            if n and g[i]:
                f = list(e)
                f[i] -= 1
                f = tuple(f)
                out[f] = out.get(f, 0) + c * n * g[i]
    return AmbientPoly(rs, out)


def _reflection_images(rs: RootSystem, root) -> list[AmbientPoly]:
    """``t_i o s_alpha = t_i - (2<alpha_i, alpha>/<alpha, alpha>) <alpha, x>``."""
    a_len = rs.root_length2(root)
    ell = {tuple(int(i == j) for j in range(rs.rank)): Fraction(r) for i, r in enumerate(root) if r}
    out = []
    for i in range(rs.rank):
        unit = tuple(int(i == j) for j in range(rs.rank))
        c = 2 * rs.pairing(rs.root_weight(unit), root) / a_len
        terms = {unit: Fraction(1)}
        for e, r in ell.items():
            terms[e] = terms.get(e, 0) - c * r
        out.append(AmbientPoly(rs, terms))
    return out


def ambient_reflect(p: AmbientPoly, root) -> AmbientPoly:
    """``x -> p(s_alpha x)``."""
    rs = p.rs
    imgs = _reflection_images(rs, root)
    powers: dict = {}

    def power(i, n):
        key = (i, n)
        if key not in powers:
            powers[key] = AmbientPoly.constant(rs, 1) if n == 0 else power(i, n - 1) * imgs[i]
        return powers[key]

    out = AmbientPoly(rs)
    for e, c in p.terms.items():
        term = AmbientPoly.constant(rs, c)
        for i, n in enumerate(e):
            if n:
                term = term * power(i, n)
        out = out + term
    return out


def divide_by_root_form(p: AmbientPoly, root) -> AmbientPoly:
    """Exact quotient by the linear form ``<alpha, x> = sum r_j t_j``."""
    rs = p.rs
    piv = next(i for i, r in enumerate(root) if r)
    lead = Fraction(root[piv])
    rest = [(j, Fraction(r)) for j, r in enumerate(root) if r and j != piv]
    work = dict(p.terms)
    quot: dict = {}
    while True:
        cands = [e for e in work if e[piv] > 0]
        if not cands:
            break
        e = max(cands, key=lambda e: (e[piv], e))
        c = work.pop(e) / lead
        qe = list(e)
        qe[piv] -= 1
        qe = tuple(qe)
        quot[qe] = quot.get(qe, 0) + c
        for j, r in rest:
            f = list(qe)
            f[j] += 1
            f = tuple(f)
            s = work.get(f, 0) - c * r
            if s:
                work[f] = s
            else:
                work.pop(f, None)
    if any(work.values()):
        raise DivisionError(f"{p} is not divisible by <{list(root)}, x>")
    return AmbientPoly(rs, quot)


def rational_dunkl_apply(rs: RootSystem, xi, k, p: AmbientPoly) -> AmbientPoly:
    """``d_xi p + sum_{a>0} k_a <a, xi> (p - p o s_a) / <a, x>``."""
    k = MultiplicityFn.coerce(rs, k)
    out = ambient_derivative(p, xi)
    for r, a in zip(rs.positive_roots, rs.positive_root_weights):
        ka = k.of_root(rs, r)
        if not ka:
            continue
        coef = ka * inner(rs, a, xi)
        if not coef:
            continue
        diff = p - ambient_reflect(p, r)
        if diff:
            out = out + divide_by_root_form(diff, r).scale(coef)
    return out


# ------------------------------------------------------------ trig operators


def _one_plus_shift(h: LaurentPoly, a) -> LaurentPoly:
    return h + h.shift(tuple(-x for x in a))


def heckman_apply(rs: RootSystem, xi, k, f: LaurentPoly) -> LaurentPoly:
    k = MultiplicityFn.coerce(rs, k)
    out = deriv_by_pairing(direction_vector(rs, xi), f)
    terms = [out]
    for r, a in zip(rs.positive_roots, rs.positive_root_weights):
        ka = k.of_root(rs, r)
        coef = Fraction(ka) * inner(rs, a, xi) / 2 if ka else 0
        if not coef:
            continue
        diff = f - reflect_root(f, r)
        if diff:
            terms.append(div_exact(_one_plus_shift(diff, a), r).scale(coef))
    return sum_polys(rs, terms)


def cherednik_apply(rs: RootSystem, xi, k, f: LaurentPoly) -> LaurentPoly:
    k = MultiplicityFn.coerce(rs, k)
    terms = [deriv_by_pairing(direction_vector(rs, xi), f)]
    for r, a in zip(rs.positive_roots, rs.positive_root_weights):
        ka = k.of_root(rs, r)
        coef = ka * inner(rs, a, xi) if ka else 0
        if not coef:
            continue
        diff = f - reflect_root(f, r)
        if diff:
            terms.append(div_exact(diff, r).scale(coef))
    shift = inner(rs, rho_k(rs, k), xi) / 2
    if shift:
        terms.append(f.scale(-shift))
    return sum_polys(rs, terms)


def L_apply(rs: RootSystem, k, f: LaurentPoly, check: bool = True) -> LaurentPoly:
    if check and not is_invariant(f):
        raise NotInvariantError("L_apply needs a W-invariant argument")
    k = MultiplicityFn.coerce(rs, k)
    terms = [f.map_terms(lambda w, c: inner(rs, w, w) * c)]
    for r, a in zip(rs.positive_roots, rs.positive_root_weights):
        ka = k.of_root(rs, r)
        if not ka:
            continue
        da = f.map_terms(lambda w, c: rs.pairing(w, r) * c)
        if da:
            terms.append(div_exact(_one_plus_shift(da, a), r).scale(ka))
    return sum_polys(rs, terms)


def symmetrized_power_apply(rs: RootSystem, xi, j: int, k, f: LaurentPoly) -> LaurentPoly:
    """``sum_{eta in W xi} D_eta^j f`` with Heckman's operators, on invariant ``f``."""
    if j not in (1, 2, 3):
        raise ValueError("symmetrized powers are limited to j in {1, 2, 3}")
    if not is_invariant(f):
        raise NotInvariantError("symmetrized powers act on W-invariant polynomials")
    k = MultiplicityFn.coerce(rs, k)
    outs = []
    for eta in sorted(weyl_orbit(rs, tuple(Fraction(x) for x in xi))):
        g = f
        for _ in range(j):
            g = heckman_apply(rs, eta, k, g)
        outs.append(g)
    return sum_polys(rs, outs)


@dataclass(frozen=True)
class OperatorSpec:
    kind: str
    rs: RootSystem
    k: MultiplicityFn
    xi: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "k", MultiplicityFn.coerce(self.rs, self.k))
        if self.kind != L_OPERATOR:
            if self.xi is None or not any(self.xi):
                raise ValueError(f"{self.kind} needs a nonzero direction")
            object.__setattr__(self, "xi", tuple(Fraction(x) for x in self.xi))

    def __call__(self, f):
        if self.kind == RATIONAL_DUNKL:
            return rational_dunkl_apply(self.rs, self.xi, self.k, f)
        if self.kind == HECKMAN:
            return heckman_apply(self.rs, self.xi, self.k, f)
        if self.kind == CHEREDNIK:
            return cherednik_apply(self.rs, self.xi, self.k, f)
        if self.kind == L_OPERATOR:
            return L_apply(self.rs, self.k, f)
        raise ValueError(f"unknown operator kind {self.kind!r}")


# ------------------------------------------------------------------- reports


@dataclass
class CommutatorReport:
    a: OperatorSpec
    b: OperatorSpec
    checked: int
    witnesses: list = field(default_factory=list)

    @property
    def vanishes(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        return {
            "kind": self.a.kind,
            "type": self.a.rs.name,
            "k": list(self.a.k.values),
            "xi": [str(x) for x in self.a.xi],
            "eta": [str(x) for x in self.b.xi],
            "checked": self.checked,
            "vanishes": self.vanishes,
            "witnesses": [list(w) for w in self.witnesses[:5]],
        }


def monomial_exponents(rank: int, degree_cap: int) -> Iterable[tuple[int, ...]]:
    for e in itertools.product(range(degree_cap + 1), repeat=rank):
        if sum(e) <= degree_cap:
            yield e


def exponent_box(rank: int, bound: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(-bound, bound + 1), repeat=rank)


def commutator_report(a: OperatorSpec, b: OperatorSpec, cap: int,
                      stop_at_first: bool = False) -> CommutatorReport:
    """Apply ``[A, B]`` to every basis monomial: degree ``<= cap`` for the rational
    operator, exponents with ``|coords| <= cap`` for the trigonometric ones."""
    if a.kind != b.kind or a.rs != b.rs:
        raise ValueError("commutators are taken between operators of the same kind")
    rs = a.rs
    if a.kind == RATIONAL_DUNKL:
        basis = (AmbientPoly.monomial(rs, e) for e in monomial_exponents(rs.rank, cap))
    else:
        basis = (LaurentPoly.monomial(rs, e) for e in exponent_box(rs.rank, cap))
    report = CommutatorReport(a, b, 0)
    for f in basis:
        report.checked += 1
        if a(b(f)) - b(a(f)):
            key = next(iter(f.terms))
            report.witnesses.append(key)
            if stop_at_first:
                break
    return report


def coweight_basis(rs: RootSystem) -> list[tuple[Fraction, ...]]:
    return [fundamental_coweight(rs, i) for i in range(rs.rank)]


def conjugation_witness(rs: RootSystem, k, kind: str = CHEREDNIK, bound: int = 2):
    """First ``(i, xi, mu)`` with ``s_i D_xi s_i X^mu != D_{s_i xi} X^mu``, else ``None``."""
    apply = cherednik_apply if kind == CHEREDNIK else heckman_apply
    for i in range(rs.rank):
        w = WeylElement((i,))
        for xi in coweight_basis(rs):
            wxi = rs.reflect(i, xi)
            for mu in exponent_box(rs.rank, bound):
                f = LaurentPoly.monomial(rs, mu)
                lhs = weyl_act(w, apply(rs, xi, k, weyl_act(w, f)))
                if lhs != apply(rs, wxi, k, f):
                    return i, xi, mu
    return None


def _rank(matrix: list[list[Fraction]]) -> int:
    m = [list(r) for r in matrix]
    rank, rows = 0, len(m)
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rows):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def expand_in_orbit_sums(rs: RootSystem, f: LaurentPoly, basis: list) -> list:
    """Coefficients of invariant ``f`` on orbit sums ``m_mu`` (``mu`` in ``basis``)."""
    coeffs = [f.coeff(mu) for mu in basis]
    check = sum_polys(rs, [LaurentPoly(rs, {w: c for w in weyl_orbit(rs, mu)})
                           for mu, c in zip(basis, coeffs) if c])
    if check != f:
        raise ValueError("polynomial is not in the span of the given orbit sums")
    return coeffs


@dataclass
class EigenspaceReport:
    lam: tuple
    eigenvalue: Fraction
    ideal_size: int
    dimension: int
    collisions: list

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "eigenvalue": str(self.eigenvalue),
                "ideal_size": self.ideal_size, "dimension": self.dimension,
                "collisions": [list(c) for c in self.collisions]}


def eigenspace_report(rs: RootSystem, k, lam) -> EigenspaceReport:
    """Dimension of ``ker(L - E_lam)`` on the span of ``m_mu``, ``mu <= lam``."""
    lam = tuple(lam)
    ideal = lower_ideal(rs, lam)
    e = eigenvalue(rs, lam, k)
    cols = []
    for mu in ideal:
        m = LaurentPoly(rs, {w: Fraction(1) for w in weyl_orbit(rs, mu)})
        img = L_apply(rs, k, m, check=False) - m.scale(e)
        cols.append(expand_in_orbit_sums(rs, img, ideal))
    mat = [[cols[j][i] for j in range(len(ideal))] for i in range(len(ideal))]
    dim = len(ideal) - _rank(mat)
    collisions = [mu for mu in ideal if mu != lam and eigenvalue(rs, mu, k) == e]
    return EigenspaceReport(lam, e, len(ideal), dim, collisions)
