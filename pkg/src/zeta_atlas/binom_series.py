"""Central-binomial series, arcsin-power series, trigonometric zeta sums,
Wallis/Wiener integral formulas, Fettis digamma integrals, Ramanujan's
cotangent formula and the harmonic-number Euler sums.

Conventions shared by the evaluators:

* r(n) = 4^n / C(2n,n), always by the stable recurrence
  r(n) = r(n-1) * 2n/(2n-1), never factorials.
* Series whose boundary terms decay like sqrt(pi n) * n^-k are summed
  explicitly to N (default 2*10^5) and closed with an Euler-Maclaurin tail
  on the asymptotic density r(n) = sqrt(pi n)(1 + 1/(8n) + 1/(128 n^2) - ...).
* Conditionally convergent Fourier-side sums are never summed term by term;
  their closed forms substitute.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .numerics import (QuadratureProblem, SeriesEval, power_log_tail,
                       tanh_sinh_integrate)
from .specfun import (clausen, _cl1, constants, digamma, hurwitz_zeta,
                      polygamma, riemann_zeta)

_SQRT_PI = math.sqrt(math.pi)
_N_SLOW = 200_000  # explicit terms before the asymptotic tail


def cbc_ratio(n_max: int) -> np.ndarray:
    """r(n) = 4^n / C(2n,n) for n = 0..n_max via the multiplicative recurrence."""
    n = np.arange(0, n_max + 1, dtype=float)
    f = np.ones(n_max + 1)
    f[1:] = 2.0 * n[1:] / (2.0 * n[1:] - 1.0)
    return np.cumprod(f)


class CbcTerm:
    """Cached central-binomial helpers up to n_max.

    ``binom(n)`` reproduces C(2n,n) to a few ulp from the ratio; the
    r(n)/sqrt(pi n) -> 1 asymptotic is the class invariant (checked in the
    test suite at n = 10^4 within 1%).
    """

    def __init__(self, n_max: int):
        if n_max < 1:
            raise DomainError("n_max must be >= 1")
        self.n_max = n_max
        self.ratio = cbc_ratio(n_max)

    def binom(self, n: int) -> float:
        if not 0 <= n <= self.n_max:
            raise DomainError("n outside cache range")
        return math.exp(n * math.log(4.0) - math.log(self.ratio[n]))


class HarmonicCache:
    """Prefix sums H_n^(2) = sum_{k<=n} k^-2 (H_0 = 0)."""

    def __init__(self, n_max: int):
        k = np.arange(1, n_max + 1, dtype=float)
        self.h2 = np.concatenate(([0.0], np.cumsum(k ** -2)))

    def __getitem__(self, n: int) -> float:
        return float(self.h2[n])


def _geom_bound(term: float, ratio: float) -> float:
    return abs(term) * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf


# ---------------------------------------------------------------------------
# arcsin powers and the Zucker family
# ---------------------------------------------------------------------------

def arcsin_sq_series(y: float) -> SeriesEval:
    """(arcsin y)^2 as (1/2) sum r(n) y^(2n) / n^2, |y| <= 1."""
    if abs(y) > 1.0:
        raise DomainError("arcsin_sq_series requires |y| <= 1")
    if y == 0.0:
        return SeriesEval(0.0, 0, 0.0, "direct", True)
    y2 = y * y
    if y2 < 1.0:
        r = 1.0
        acc = 0.0
        y2n = 1.0
        for n in range(1, 100_000):
            r *= 2.0 * n / (2.0 * n - 1.0)
            y2n *= y2
            t = 0.5 * r * y2n / (n * n)
            acc += t
            rho = y2 * (n / (n + 1.0)) ** 2 * (2.0 * n + 2.0) / (2.0 * n + 1.0)
            if _geom_bound(t, max(rho, y2)) < 1e-16:
                return SeriesEval(acc, n, _geom_bound(t, max(rho, y2)), "direct", True)
    # |y| = 1: boundary, density (1/2) sqrt(pi n)(1 + 1/8n + 1/128n^2)/n^2
    N = _N_SLOW
    n = np.arange(1, N + 1, dtype=float)
    terms = 0.5 * cbc_ratio(N)[1:] / (n * n)
    val = float(np.sum(terms))
    tail = power_log_tail([(0.5 * _SQRT_PI, 1.5, 0),
                           (0.5 * _SQRT_PI / 8.0, 2.5, 0),
                           (0.5 * _SQRT_PI / 128.0, 3.5, 0)], N)
    return SeriesEval(val + tail, N, 1e-11, "euler_maclaurin", True)


def zucker_sum(u: float) -> SeriesEval:
    """sum_{n>=1} 4^n sin^(2n) u / (n^3 C(2n,n)) for 0 <= u <= pi/2.

    Verification target: 4u^2 log(2 sin u) + 2 Cl_3(2u) + 4u Cl_2(2u) - 2 zeta(3),
    with the u -> 0 limit equal to 0.
    """
    if not 0.0 <= u <= math.pi / 2.0 + 1e-15:
        raise DomainError("zucker_sum requires 0 <= u <= pi/2")
    if u == 0.0:
        return SeriesEval(0.0, 0, 0.0, "direct", True)
    q = math.sin(u) ** 2
    if q < 1.0:
        r = 1.0
        acc = 0.0
        qn = 1.0
        for n in range(1, 200_000):
            r *= 2.0 * n / (2.0 * n - 1.0)
            qn *= q
            t = r * qn / n ** 3
            acc += t
            if _geom_bound(t, q * (2.0 * n + 2.0) / (2.0 * n + 1.0)) < 1e-15:
                return SeriesEval(acc, n, 1e-15, "direct", True)
        return SeriesEval(acc, 200_000, _geom_bound(t, q), "direct", q < 0.999)
    N = _N_SLOW
    n = np.arange(1, N + 1, dtype=float)
    val = float(np.sum(cbc_ratio(N)[1:] / n ** 3))
    tail = power_log_tail([(_SQRT_PI, 2.5, 0), (_SQRT_PI / 8.0, 3.5, 0),
                           (_SQRT_PI / 128.0, 4.5, 0)], N)
    return SeriesEval(val + tail, N, 1e-12, "euler_maclaurin", True)


def zucker_closed_form(u: float) -> float:
    """The Clausen-side of the Zucker identity; 0 at u = 0 by the limit."""
    if u == 0.0:
        return 0.0
    c = constants()
    return (4.0 * u * u * math.log(2.0 * math.sin(u)) + 2.0 * clausen(3, 2.0 * u)
            + 4.0 * u * clausen(2, 2.0 * u) - 2.0 * c.zeta3)


def cbc_power_sum(p: float, k: int) -> SeriesEval:
    """sum_{n>=1} p^n / (n^k C(2n,n)) for p in {1, 2, 4}, k in {2, 3}."""
    if p not in (1.0, 2.0, 4.0) or k not in (2, 3):
        raise DomainError("cbc_power_sum supports p in {1,2,4}, k in {2,3}")
    if p < 4.0:
        q = p / 4.0
        r = 1.0
        acc = 0.0
        qn = 1.0
        for n in range(1, 100_000):
            r *= 2.0 * n / (2.0 * n - 1.0)
            qn *= q
            t = r * qn / n ** k
            acc += t
            if _geom_bound(t, q * 1.05) < 1e-16:
                return SeriesEval(acc, n, 1e-16, "direct", True)
    N = _N_SLOW
    n = np.arange(1, N + 1, dtype=float)
    val = float(np.sum(cbc_ratio(N)[1:] / n ** k))
    tail = power_log_tail([(_SQRT_PI, k - 0.5, 0), (_SQRT_PI / 8.0, k + 0.5, 0),
                           (_SQRT_PI / 128.0, k + 1.5, 0)], N)
    return SeriesEval(val + tail, N, 1e-11, "euler_maclaurin", True)


def catalan_series() -> SeriesEval:
    """G = (1/2) sum_{n>=0} 4^n / ((2n+1)^2 C(2n,n)); returns the series value.

    Terms decay like sqrt(pi n)/(2(2n+1)^2); summed to N = 2*10^5 with the
    asymptotic tail density (sqrt(pi)/8)(n^-3/2 - (7/8) n^-5/2 + (81/128) n^-7/2).
    """
    N = _N_SLOW
    n = np.arange(0, N + 1, dtype=float)
    val = 0.5 * float(np.sum(cbc_ratio(N) / (2.0 * n + 1.0) ** 2))
    tail = power_log_tail([(_SQRT_PI / 8.0, 1.5, 0),
                           (-7.0 * _SQRT_PI / 64.0, 2.5, 0),
                           (81.0 * _SQRT_PI / 1024.0, 3.5, 0)], N)
    return SeriesEval(val + tail, N, 1e-11, "euler_maclaurin", True)


# ---------------------------------------------------------------------------
# Batir-type squared-ratio series
# ---------------------------------------------------------------------------

def batir_sum(variant: str) -> SeriesEval:
    """The 2^(4n) [n!]^4 / [(2n)!]^2 family: terms are r(n)^2 times a
    rational factor; r(n)^2 ~ pi n (1 + 1/(4n) + 1/(32 n^2))."""
    N = _N_SLOW
    n = np.arange(0, N + 1, dtype=float)
    r2 = cbc_ratio(N) ** 2
    if variant == "eq_2_73":
        val = float(np.sum(r2 / (2.0 * n + 1.0) ** 3))
        tail = power_log_tail([(math.pi / 8.0, 2.0, 0),
                               (-5.0 * math.pi / 32.0, 3.0, 0),
                               (37.0 * math.pi / 256.0, 4.0, 0)], N)
    elif variant == "eq_2_74":
        m = n[1:]
        val = float(np.sum(r2[1:] / (m * m * (2.0 * m + 1.0))))
        tail = power_log_tail([(math.pi / 2.0, 2.0, 0),
                               (-math.pi / 8.0, 3.0, 0),
                               (5.0 * math.pi / 64.0, 4.0, 0)], N)
    elif variant == "eq_2_75":
        m = n[1:]
        val = float(np.sum(r2[1:] / m ** 3))
        tail = power_log_tail([(math.pi, 2.0, 0), (math.pi / 4.0, 3.0, 0),
                               (math.pi / 32.0, 4.0, 0)], N)
    elif variant == "eq_2_92":
        m = n[1:]
        h2 = HarmonicCache(N).h2  # h2[j] = H_j^(2)
        hnm1 = h2[:-1]            # H_(n-1)^(2) for n = 1..N
        r = cbc_ratio(N)[1:]
        val = 1.5 * float(np.sum(r * hnm1 / ((2.0 * m + 1.0) * m * m)))
        z2 = math.pi ** 2 / 6.0
        c = 0.75 * _SQRT_PI
        tail = power_log_tail([(c * z2, 2.5, 0),
                               (c * (-0.375 * z2 - 1.0), 3.5, 0)], N)
    else:
        raise DomainError(f"unknown batir variant {variant!r}")
    return SeriesEval(val + tail, N, 1e-10, "euler_maclaurin", True)


# ---------------------------------------------------------------------------
# Wallis and Wiener integral formulas
# ---------------------------------------------------------------------------

def wallis_pair(n: int) -> tuple[float, float]:
    """Both sides of the odd Wallis formula, computed in exact rationals:
    (sum_k C(n,k)(-1)^k/(2k+1), [2^n n!]^2/(2n+1)!)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > 150:
        raise OverflowError("wallis_pair supports n <= 150")
    lhs = sum(Fraction((-1) ** k * math.comb(n, k), 2 * k + 1) for k in range(n + 1))
    rhs = Fraction((2 ** n * math.factorial(n)) ** 2, math.factorial(2 * n + 1))
    return float(lhs), float(rhs)


def sin_power_integral(n: int, x: float) -> float:
    """int_0^x sin^(2n) u du from Wiener's closed form (coefficients built
    from the normalized ratios C(2n,n-j)/4^n, no factorial overflow)."""
    c0 = 1.0 / cbc_ratio(n)[n] if n else 1.0
    acc = c0 * x
    cj = c0
    for j in range(1, n + 1):
        cj *= (n - j + 1.0) / (n + j)
        acc += ((-1) ** j) * cj * math.sin(2.0 * j * x) / j
    return acc


def wiener_integral(n: int, x: float) -> tuple[float, float]:
    """(closed form, quadrature) pair for int_0^x sin^(2n) u du, n >= 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    closed = sin_power_integral(n, x)
    quad = tanh_sinh_integrate(QuadratureProblem(
        lambda u: math.sin(u) ** (2 * n), min(0.0, x), max(0.0, x),
        abs_tol=1e-13)).value
    if x < 0.0:
        quad = -quad
    return closed, quad


# ---------------------------------------------------------------------------
# trigonometric zeta sums
# ---------------------------------------------------------------------------

def _trig_tail(s: float, theta: float, N: int, kind: str) -> float:
    """Two-layer Abel (summation-by-parts) tail of sum_{k>N} trig(k theta)/k^s."""
    z = cmath.exp(1j * theta)
    zN1 = cmath.exp(1j * (N + 1) * theta)
    a1 = (N + 1.0) ** (-s)
    da1 = (N + 2.0) ** (-s) - a1
    t = a1 * zN1 / (1.0 - z) + da1 * zN1 * z / (1.0 - z) ** 2
    return t.real if kind == "cos" else t.imag


def trig_sum(s: float, theta: float, kind: str, n_terms: int = 200_000) -> float:
    """sum_{k>=1} cos/sin(k theta)/k^s for s > 1, direct + Abel tail."""
    if s <= 1.0:
        raise DomainError("trig_sum requires s > 1")
    k = np.arange(1, n_terms + 1, dtype=float)
    ang = k * theta
    w = k ** (-s)
    val = float(np.sum((np.cos(ang) if kind == "cos" else np.sin(ang)) * w))
    return val + _trig_tail(s, theta, n_terms, kind)


_TRIG_FAMILIES = {
    "cos_pi3": (math.pi / 3.0, "cos"),
    "sin_pi3": (math.pi / 3.0, "sin"),
    "cos_2pi3": (2.0 * math.pi / 3.0, "cos"),
    "sin_2pi3": (2.0 * math.pi / 3.0, "sin"),
    "cos_pi2": (math.pi / 2.0, "cos"),
    "sin_pi2": (math.pi / 2.0, "sin"),
}


def trig_zeta_closed(family: str, s: float) -> float:
    """Printed closed forms of the rational-angle zeta sums."""
    z = riemann_zeta(s)
    if family == "cos_pi3":
        return 0.5 * (6.0 ** (1 - s) - 3.0 ** (1 - s) - 2.0 ** (1 - s) + 1.0) * z
    if family == "sin_pi3":
        return math.sqrt(3.0) * ((3.0 ** -s - 1.0) / 2.0 * z
                                 + 6.0 ** -s * (hurwitz_zeta(s, 1.0 / 6.0)
                                                + hurwitz_zeta(s, 1.0 / 3.0)))
    if family == "cos_2pi3":
        return 0.5 * (3.0 ** (1 - s) - 1.0) * z
    if family == "sin_2pi3":
        return math.sqrt(3.0) * ((3.0 ** -s - 1.0) / 2.0 * z
                                 + 3.0 ** -s * hurwitz_zeta(s, 1.0 / 3.0))
    if family == "cos_pi2":
        return 2.0 ** -s * (2.0 ** (1 - s) - 1.0) * z
    if family == "sin_pi2":
        return (2.0 ** -s - 1.0) * z + 2.0 ** (1 - 2 * s) * hurwitz_zeta(s, 0.25)
    raise DomainError(f"unknown family {family!r}")


def trig_zeta_sum(family: str, s: float) -> tuple[float, float]:
    """(direct series, printed closed form) for the registry."""
    if family not in _TRIG_FAMILIES:
        raise DomainError(f"unknown family {family!r}")
    theta, kind = _TRIG_FAMILIES[family]
    return trig_sum(s, theta, kind), trig_zeta_closed(family, s)


# ---------------------------------------------------------------------------
# x / sin x
# ---------------------------------------------------------------------------

def x_over_sin(t: float) -> tuple[float, float, float]:
    """Three routes to int_0^t x/sin x dx for 0 < t <= pi/2 (series route)
    or 0 < t < pi (other two):

    (a) the central-binomial series sum 4^n sin^(2n+1) t/((2n+1)^2 C(2n,n)),
    (b) t log tan(t/2) + Cl_2(t) + Cl_2(pi - t),
    (c) tanh-sinh quadrature.
    """
    if not 0.0 < t < math.pi:
        raise DomainError("x_over_sin requires 0 < t < pi")
    st = math.sin(t)
    if t <= math.pi / 2.0 + 1e-15:
        q = st * st
        if q >= 1.0:  # t = pi/2 boundary
            N = _N_SLOW
            n = np.arange(0, N + 1, dtype=float)
            series = float(np.sum(cbc_ratio(N) / (2.0 * n + 1.0) ** 2))
            series += power_log_tail([(_SQRT_PI / 4.0, 1.5, 0),
                                      (-7.0 * _SQRT_PI / 32.0, 2.5, 0),
                                      (81.0 * _SQRT_PI / 512.0, 3.5, 0)], N)
        else:
            r = 1.0
            series = st
            qn = 1.0
            for n in range(1, 200_000):
                r *= 2.0 * n / (2.0 * n - 1.0)
                qn *= q
                term = r * qn * st / (2.0 * n + 1.0) ** 2
                series += term
                if _geom_bound(term, q * 1.05) < 1e-15:
                    break
    else:
        series = math.nan  # series form restricted to t <= pi/2
    closed = t * math.log(math.tan(0.5 * t)) + clausen(2, t) + clausen(2, math.pi - t)
    quad = tanh_sinh_integrate(QuadratureProblem(
        lambda x: x / math.sin(x), 0.0, t,
        left_singularity="removable", left_value=1.0, abs_tol=1e-13)).value
    return series, closed, quad


# ---------------------------------------------------------------------------
# Fettis integrals and the digamma relations
# ---------------------------------------------------------------------------

def fettis_integral(kind: str, p: float) -> tuple[float, float]:
    """(quadrature, digamma closed form) of the two Fettis integrals."""
    if p < 0:
        raise DomainError("p must be >= 0")
    br = digamma((3.0 + p) / 4.0) - digamma((1.0 + p) / 4.0)
    if kind == "sin_ratio":
        quad = tanh_sinh_integrate(QuadratureProblem(
            lambda x: math.sin(p * x) / math.sin(x), 0.0, math.pi / 2.0,
            left_singularity="removable", left_value=p, abs_tol=1e-13)).value
        closed = math.pi / 2.0 - 0.5 * math.cos(p * math.pi / 2.0) * br
        return quad, closed
    if kind == "one_minus_cos":
        quad = tanh_sinh_integrate(QuadratureProblem(
            lambda x: (1.0 - math.cos(p * x)) / math.sin(x), 0.0, math.pi / 2.0,
            left_singularity="removable", left_value=0.0, abs_tol=1e-13)).value
        closed = (digamma((1.0 + p) / 2.0) - digamma(0.5)
                  - 0.5 * math.sin(p * math.pi / 2.0) * br)
        return quad, closed
    raise DomainError(f"unknown kind {kind!r}")


_RAMANUJAN_SIGNS = (1.0, -1.0, -1.0, 1.0)  # (-1)^(j(j+1)/2)


def ramanujan_cot(n: int, x: float) -> tuple[float, float]:
    """(quadrature, Clausen closed form) of (1/2) int_0^x u^n cot(u/2) du,
    for n >= 1 and 0 < x < 2 pi."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if not 0.0 < x < 2.0 * math.pi:
        raise DomainError("x must lie in (0, 2 pi)")
    left = 2.0 if n == 1 else 0.0
    quad = 0.5 * tanh_sinh_integrate(QuadratureProblem(
        lambda u: u ** n / math.tan(0.5 * u), 0.0, x,
        left_singularity="removable", left_value=left, abs_tol=1e-13)).value
    closed = math.cos(0.5 * math.pi * n) * math.factorial(n) * riemann_zeta(n + 1.0)
    fall = 1.0  # n!/(n-j)!
    for j in range(0, n + 1):
        if j:
            fall *= (n - j + 1.0)
        clv = _cl1(x) if j == 0 else clausen(j + 1, x)
        closed -= _RAMANUJAN_SIGNS[j % 4] * fall * x ** (n - j) * clv
    return quad, closed


# ---------------------------------------------------------------------------
# harmonic-number Euler sums
# ---------------------------------------------------------------------------

def euler_sum_h2(n_terms: int = 100_000) -> tuple[float, float]:
    """(direct sum of H_n^(2)/n^2 with Euler-Maclaurin tail, (7/4) zeta(4))."""
    N = int(n_terms)
    n = np.arange(1, N + 1, dtype=float)
    h2 = np.cumsum(n ** -2)
    val = float(np.sum(h2 / n ** 2))
    z2 = math.pi ** 2 / 6.0
    # H_n^(2) = zeta(2) - 1/n + 1/(2n^2) - 1/(6n^3) + O(n^-5)
    tail = power_log_tail([(z2, 2.0, 0), (-1.0, 3.0, 0),
                           (0.5, 4.0, 0), (-1.0 / 6.0, 5.0, 0)], N)
    return val + tail, 1.75 * riemann_zeta(4.0)


def arcsin_quartic_series(x: float) -> SeriesEval:
    """x^4 = (3/2) sum H_(n-1)^(2) r(n) sin^(2n) x / n^2 for |x| <= pi/2."""
    if abs(x) > math.pi / 2.0 + 1e-15:
        raise DomainError("arcsin_quartic_series requires |x| <= pi/2")
    q = math.sin(x) ** 2
    if q < 1.0:
        r = 1.0
        acc = 0.0
        qn = 1.0
        h = 0.0
        for n in range(1, 200_000):
            r *= 2.0 * n / (2.0 * n - 1.0)
            qn *= q
            t = 1.5 * h * r * qn / (n * n)   # h = H_(n-1)^(2)
            acc += t
            h += 1.0 / (n * n)
            if n > 3 and _geom_bound(t, q * 1.05) < 1e-15:
                return SeriesEval(acc, n, 1e-15, "direct", True)
        return SeriesEval(acc, n, _geom_bound(t, q), "direct", False)
    N = _N_SLOW
    n = np.arange(1, N + 1, dtype=float)
    h2 = np.concatenate(([0.0], np.cumsum(n[:-1] ** -2)))  # H_(n-1)^(2)
    val = 1.5 * float(np.sum(h2 * cbc_ratio(N)[1:] / n ** 2))
    z2 = math.pi ** 2 / 6.0
    c = 1.5 * _SQRT_PI
    tail = power_log_tail([(c * z2, 1.5, 0), (c * (z2 / 8.0 - 1.0), 2.5, 0)], N)
    return SeriesEval(val + tail, N, 5e-9, "euler_maclaurin", True)


def cot_quartic_series(t: float) -> SeriesEval:
    """int_0^t x^4 cot x dx = (3/4) sum r(n) H_(n-1)^(2) sin^(2n) t / n^3."""
    q = math.sin(t) ** 2
    if q < 1.0:
        r = 1.0
        acc = 0.0
        qn = 1.0
        h = 0.0
        for n in range(1, 200_000):
            r *= 2.0 * n / (2.0 * n - 1.0)
            qn *= q
            acc += 0.75 * h * r * qn / n ** 3
            h += 1.0 / (n * n)
            if n > 3 and _geom_bound(0.75 * h * r * qn / n ** 3, q * 1.05) < 1e-15:
                return SeriesEval(acc, n, 1e-15, "direct", True)
    N = _N_SLOW
    n = np.arange(1, N + 1, dtype=float)
    h2 = np.concatenate(([0.0], np.cumsum(n[:-1] ** -2)))
    val = 0.75 * float(np.sum(h2 * cbc_ratio(N)[1:] / n ** 3))
    z2 = math.pi ** 2 / 6.0
    c = 0.75 * _SQRT_PI
    tail = power_log_tail([(c * z2, 2.5, 0), (c * (z2 / 8.0 - 1.0), 3.5, 0)], N)
    return SeriesEval(val + tail, N, 1e-11, "euler_maclaurin", True)


# ---------------------------------------------------------------------------
# the sin(2jx) double sum of (2.12.1)/(2.57)/(2.58)
# ---------------------------------------------------------------------------

def sin2jx_double_sum(x: float, n_terms: int = 8000) -> SeriesEval:
    """sum_n (1/(n^3 C(2n,n))) sum_j (-1)^j C(2n,n-j) sin(2jx)/j.

    The inner sum equals r(n) int_0^x sin^(2n) - x exactly (Wiener), so the
    outer terms approach -x/n^3; the tail correction subtracts the
    telescoped -x sum.  Inner ratios are truncated once
    C(2n,n-j)/C(2n,n) < e^-50 (j ~ 7 sqrt(n)), which drops < 1e-18 mass.
    """
    if not 0.0 < x < math.pi / 2.0:
        raise DomainError("sin2jx_double_sum requires 0 < x < pi/2")
    N = int(n_terms)
    total = 0.0
    for n in range(1, N + 1):
        jmax = min(n, int(7.0 * math.sqrt(n)) + 10)
        j = np.arange(1.0, jmax + 1.0)
        c = np.cumprod((n - j + 1.0) / (n + j))
        signs = np.where((j.astype(np.int64) & 1) == 1, -1.0, 1.0)
        inner = float(np.sum(signs * c * np.sin(2.0 * j * x) / j))
        total += inner / n ** 3
    tail = -x * power_log_tail([(1.0, 3.0, 0)], N)
    # residual: the gaussian r(n) int sin^(2n) part, bounded crudely
    resid = _SQRT_PI * math.sqrt(N) * math.sin(x) ** (2 * N) + 3.0 / N ** 4
    return SeriesEval(total + tail, N, resid + 1e-12, "direct", True)
