"""One-variable tower: Bessel series, the Dunkl-generalized exponential,
Gegenbauer and q-ultraspherical polynomials, shift operators and the limit
transitions between them.

Gegenbauer polynomials come out of the A1 case of :mod:`orthopoly` with
leading orbit-sum coefficient 1, so ``C_n^k`` has leading term ``2^n x^n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import ComplexRational, I, QRat, VPoly
from .laurent import LaurentPoly, constant_term, div_exact, lp_mul
from .orthopoly import (
    JACOBI,
    MACDONALD,
    OrthoPoly,
    macdonald_q1_limit,
    ortho_poly,
    weight_delta_k,
)
from .rootdata import build_root_system


class ProportionalityError(ArithmeticError):
    pass


class EigenMismatchError(ArithmeticError):
    pass


def A1():
    return build_root_system("A", 1)


# ------------------------------------------------------------------ series


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{j<=N} a_j u^j`` with exact complex-rational coefficients."""

    coeffs: tuple[ComplexRational, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> ComplexRational:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ComplexRational()

    def truncate(self, n: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: n + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[j] + other[j] for j in range(n + 1)))

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(tuple(a * c for a in self.coeffs))

    def reflect(self) -> "TruncatedSeries":
        """``u -> -u``."""
        return TruncatedSeries(tuple(a if j % 2 == 0 else -a for j, a in enumerate(self.coeffs)))

    def to_json(self) -> list:
        return [[str(a.re), str(a.im)] for a in self.coeffs]


def pochhammer(a: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out *= a + i
    return out


def _bessel_real(k: int, n: int) -> list[Fraction]:
    out = []
    for j in range(n + 1):
        if j % 2:
            out.append(Fraction(0))
        else:
            m = j // 2
            out.append(Fraction(-1, 4) ** m / (pochhammer(Fraction(2 * k + 1, 2), m) * math.factorial(m)))
    return out


def bessel_coeffs(k: int, N: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return TruncatedSeries(tuple(ComplexRational(c) for c in _bessel_real(k, N)))


def bessel_eval(k: int, x: float, tol: float = 1e-15) -> float:
    """Partial sum of the Bessel series with a ratio tail bound below ``tol``.

    Once the term ratio ``r_j = (x^2/4) / ((k+1/2+j)(j+1))`` is below 1 it
    decreases, so the tail after term ``j`` is at most ``|t_{j+1}| / (1 - r_{j+1})``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if x == 0:
        return 1.0
    y = x * x / 4
    terms = [1.0]
    t = 1.0
    j = 0
    while True:
        ratio = y / ((k + 0.5 + j) * (j + 1))
        nxt = -t * ratio
        r_next = y / ((k + 0.5 + j + 1) * (j + 2))
        if r_next < 1 and abs(nxt) / (1 - r_next) <= tol:
            terms.append(nxt)
            return math.fsum(terms)
        terms.append(nxt)
        t = nxt
        j += 1
        if j > 10_000:
            raise RuntimeError("Bessel series did not converge")


def gen_exp_coeffs(k: int, N: int) -> TruncatedSeries:
    """``E_k(u) = J_k(u) + i u / (2k+1) J_{k+1}(u)``."""
    even = _bessel_real(k, N)
    odd = _bessel_real(k + 1, N)
    out = []
    for j in range(N + 1):
        if j % 2 == 0:
            out.append(ComplexRational(even[j]))
        else:
            out.append(I * (odd[j - 1] / (2 * k + 1)))
    return TruncatedSeries(tuple(out))


def dunkl1d_apply(k: int, s: TruncatedSeries) -> TruncatedSeries:
    """``f' + k (f(u) - f(-u)) / u`` termwise: ``u^j -> (j + 2k[j odd]) u^{j-1}``."""
    return TruncatedSeries(tuple(s[j] * (j + (2 * k if j % 2 else 0))
                                 for j in range(1, s.order + 1)))


def cos_series(N: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(
        ComplexRational(Fraction((-1) ** (j // 2), math.factorial(j)) if j % 2 == 0 else 0)
        for j in range(N + 1)))


def sinc_series(N: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(
        ComplexRational(Fraction((-1) ** (j // 2), math.factorial(j + 1)) if j % 2 == 0 else 0)
        for j in range(N + 1)))


def exp_i_series(N: int) -> TruncatedSeries:
    out = []
    p = ComplexRational(1)
    for j in range(N + 1):
        out.append(p / math.factorial(j))
        p = p * I
    return TruncatedSeries(tuple(out))


# ------------------------------------------------------------- Gegenbauer


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> VPoly:
    if n == 0:
        return VPoly(1)
    if n == 1:
        return VPoly([0, 1])
    return VPoly([0, 2]) * chebyshev_T(n - 1) - chebyshev_T(n - 2)


X_VAR = VPoly([0, 1])


def cheb_from_trig(p: OrthoPoly) -> VPoly:
    """Substitute ``X^j + X^-j = 2 T_j(x)`` in an A1 orbit-sum expansion."""
    out = VPoly()
    for (j,), c in p.coeffs.items():
        if c:
            out = out + (chebyshev_T(j) * c if j == 0 else chebyshev_T(j) * (2 * c))
    return out


@dataclass(frozen=True)
class Gegenbauer:
    n: int
    k: int
    trig: OrthoPoly
    cheb: VPoly


def gegenbauer(n: int, k: int) -> Gegenbauer:
    p = ortho_poly(A1(), (n,), k, JACOBI)
    return Gegenbauer(n, k, p, cheb_from_trig(p))


def gegenbauer_ode_residual(n: int, k: int) -> VPoly:
    """``(1-x^2) y'' - (2k+1) x y' + n(n+2k) y`` for ``y = C_n^k``."""
    y = gegenbauer(n, k).cheb
    d1 = y.derivative()
    d2 = d1.derivative()
    return (1 - X_VAR * X_VAR) * d2 - X_VAR * d1 * (2 * k + 1) + y * (n * (n + 2 * k))


def to_laurent(p: VPoly) -> LaurentPoly:
    """``x = cos(theta) = (X + X^-1)/2`` on the A1 torus."""
    rs = A1()
    half = LaurentPoly(rs, {(1,): Fraction(1, 2), (-1,): Fraction(1, 2)})
    out = LaurentPoly.zero(rs)
    for c in reversed(p.coeffs()):
        out = out * half + c
    return out


def x_inner(f: VPoly, g: VPoly, k: int) -> Fraction:
    """``(1/pi) int_{-1}^{1} f g (1-x^2)^{k-1/2} dx = CT(f g delta_k) / 4^k``."""
    prod = lp_mul(to_laurent(f), to_laurent(g))
    return constant_term(lp_mul(prod, weight_delta_k(A1(), k).poly)) / 4 ** k


def _ratio(p: VPoly, target: VPoly) -> Fraction:
    if target.is_zero():
        raise ProportionalityError("zero target")
    c = p.leading() / target.leading() if p.degree() == target.degree() else None
    if c is None or p != target * c:
        raise ProportionalityError(f"{p} is not a multiple of {target}")
    return c


@dataclass(frozen=True)
class ShiftPair:
    n: int
    k: int
    raised: VPoly   # d/dx C_n^k
    lowered: VPoly  # ((1-x^2) d/dx - (2k+1) x) C_{n-1}^{k+1}
    a: Fraction     # d/dx C_n^k = a C_{n-1}^{k+1}
    b: Fraction     # lowered = b C_n^k


def shift_down_operator(g: VPoly, k: int) -> VPoly:
    """``(1-x^2)^{-k+1/2} d/dx (1-x^2)^{k+1/2}`` on polynomials."""
    return (1 - X_VAR * X_VAR) * g.derivative() - X_VAR * g * (2 * k + 1)


def shift_pair(n: int, k: int) -> ShiftPair:
    if n < 1:
        raise ValueError("shift operators need n >= 1")
    c_nk = gegenbauer(n, k).cheb
    c_up = gegenbauer(n - 1, k + 1).cheb
    raised = c_nk.derivative()
    lowered = shift_down_operator(c_up, k)
    return ShiftPair(n, k, raised, lowered, _ratio(raised, c_up), _ratio(lowered, c_nk))


def norm_ratio_by_shift(n: int, k: int) -> Fraction:
    """``|C_n^k|_k^2 / |C_{n-1}^{k+1}|_{k+1}^2 = -a/b`` from the shift constants and
    ``<S+ f, g>_{k+1} = -<f, S- g>_k``."""
    sp = shift_pair(n, k)
    return -sp.a / sp.b


def direct_norm_ratio(n: int, k: int) -> Fraction:
    c1 = gegenbauer(n, k).cheb
    c2 = gegenbauer(n - 1, k + 1).cheb
    return x_inner(c1, c1, k) / x_inner(c2, c2, k + 1)


# ------------------------------------------------------- q-ultraspherical


def qultra(n: int, k: int) -> OrthoPoly:
    return ortho_poly(A1(), (n,), k, MACDONALD)


def _v_scale(f: LaurentPoly, sign: int) -> LaurentPoly:
    """``P(q^{+-1/2} z)``: ``X^j -> v^{+-j} X^j``."""
    return f.map_terms(lambda w, c: c * QRat.v_power(sign * w[0]))


def qdiff_apply(f: LaurentPoly, k: int) -> LaurentPoly:
    """``A(z) f(q^{1/2} z) + A(1/z) f(q^{-1/2} z)``, ``A(z) = (1 - q^k z^2)/(1 - z^2)``.

    Over the common denominator ``1 - z^2`` the numerator is
    ``(1 - q^k z^2) f(v z) + (q^k - z^2) f(z / v)``.
    """
    rs = A1()
    qk = QRat.q_power(k)
    one = QRat(1)
    num = (lp_mul(LaurentPoly(rs, {(0,): one, (2,): -qk}), _v_scale(f, 1))
           + lp_mul(LaurentPoly(rs, {(0,): qk, (2,): -one}), _v_scale(f, -1)))
    # 1 - z^2 = -z^2 (1 - z^-2)
    return -div_exact(num, (1,)).shift((-2,))


def expected_q_eigenvalue(n: int, k: int) -> QRat:
    return QRat.v_power(-n) + QRat.v_power(n + 2 * k)


def qdiff_check(p: OrthoPoly) -> QRat:
    """Measured eigenvalue of the q-difference operator on ``p``."""
    (n,) = p.lam
    k = p.k.values[0]
    f = p.as_laurent()
    g = qdiff_apply(f, k)
    e = g.coeff(p.lam)
    if g != f.scale(e):
        raise EigenMismatchError(f"P_{n} is not an eigenfunction")
    if e != expected_q_eigenvalue(n, k):
        raise EigenMismatchError(f"eigenvalue {e} differs from v^-n + v^(n+2k)")
    return e


# ------------------------------------------------------------------ limits


def gegenbauer_float(n: int, k: int, x: float) -> float:
    """Classical three-term recurrence; ``k = 0`` uses ``cos(n arccos x)``."""
    if k == 0:
        return math.cos(n * math.acos(max(-1.0, min(1.0, x))))
    c0, c1 = 1.0, 2.0 * k * x
    if n == 0:
        return c0
    for m in range(2, n + 1):
        c0, c1 = c1, (2.0 * x * (m + k - 1) * c1 - (m + 2 * k - 2) * c0) / m
    return c1


@dataclass(frozen=True)
class LimitResult:
    k: int
    lam: float
    x: float
    N: int
    lhs: float
    rhs: float

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_json(self) -> dict:
        return {"k": self.k, "lambda": self.lam, "x": self.x, "N": self.N,
                "lhs": float(f"{self.lhs:.17g}"), "rhs": float(f"{self.rhs:.17g}"),
                "gap": float(f"{self.gap:.17g}")}


def limit_ultra_to_bessel(k: int, lam: float, x: float, N: int) -> LimitResult:
    """``C_{n_N}^k(cos(x/N)) / C_{n_N}^k(1)`` against ``J_k(lam x)``, ``n_N = round(lam N)``."""
    n = round(lam * N)
    lhs = gegenbauer_float(n, k, math.cos(x / N)) / gegenbauer_float(n, k, 1.0)
    rhs = bessel_eval(k, lam * x, 1e-16)
    return LimitResult(k, lam, x, N, lhs, rhs)


def limit_q_to_1(n: int, k: int) -> dict:
    """Coefficients of ``C_n^{k,q}`` at ``q = 1`` next to those of ``C_n^k``."""
    lim = macdonald_q1_limit(qultra(n, k)).coeffs
    ref = gegenbauer(n, k).trig.coeffs
    return {"n": n, "k": k, "limit": lim, "jacobi": ref, "equal": lim == ref}
