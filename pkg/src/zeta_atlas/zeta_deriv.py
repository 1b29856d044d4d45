"""zeta'(-n, t) identities, Fourier forms, Barnes G, Kinkelin/Gosper-Vardi
relations, multiple sine functions and the zeta(2n) generating series.

zeta' values always come from the differentiated Euler-Maclaurin /
Fourier evaluators in specfun; the log-weighted Fourier forms are treated
as identities to verify at a relaxed tolerance, not as evaluators.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import (QuadratureProblem, SeriesEval, bernoulli_numbers,
                       power_log_tail, tanh_sinh_integrate)
from .specfun import (EULER_GAMMA, bernoulli_poly, clausen, _cl1, constants,
                      hurwitz_zeta, hurwitz_zeta_sderiv, log_gamma,
                      riemann_zeta)


@dataclass(frozen=True)
class MultipleSineOrder:
    """Order/argument pair for log S_r; S_1(x) = 2 sin(pi x) exactly."""

    r: int
    x: float

    def __post_init__(self):
        if self.r not in (1, 2, 3):
            raise DomainError("multiple sine order r must be 1, 2 or 3")
        if self.r >= 2 and not 0.0 < self.x < 1.0:
            raise DomainError("log S_r is real-valued only for 0 < x < 1")


@functools.lru_cache(maxsize=8)
def zeta_even_table(k_max: int) -> tuple:
    """zeta(0), zeta(2), ..., zeta(2 k_max) via Euler's Bernoulli formula.

    Beyond 2n = 120 the Bernoulli route would overflow binary64; there
    zeta(2n) = 1 + 2^-2n + 3^-2n to full precision.
    """
    k_bern = min(k_max, 60)
    table = bernoulli_numbers(k_bern)
    out = [-0.5]
    for n in range(1, k_bern + 1):
        sign = -1.0 if n % 2 == 0 else 1.0
        out.append(sign * 2.0 ** (2 * n - 1) * math.pi ** (2 * n)
                   * table.b(2 * n) / math.factorial(2 * n))
    for n in range(k_bern + 1, k_max + 1):
        out.append(1.0 + 2.0 ** (-2 * n) + 3.0 ** (-2 * n))
    return tuple(out)


# ---------------------------------------------------------------------------
# Adamchik reflection and the Fourier zeta' forms
# ---------------------------------------------------------------------------

def adamchik_reflection(n: int, t: float, parity: str,
                        corrected: bool = False) -> tuple[float, float]:
    """Both sides of the reflection formulas for zeta' at negative integers.

    odd (printed):  zeta'(-2n-1, t) - zeta'(-2n-1, 1-t)
                        = (2n+1)!/(2 pi)^(2n+1) Cl_(2n+2)(2 pi t)
    even:           zeta'(-2n, t) + zeta'(-2n, 1-t)
                        = (-1)^n (2n)!/(2 pi)^(2n) Cl_(2n+1)(2 pi t)

    Differentiating Hurwitz's Fourier formula shows the odd case also needs
    a (-1)^n factor (irrelevant at n = 0, decisive at n >= 1);
    corrected=True applies it.
    """
    if not 0.0 < t < 1.0:
        raise DomainError("t must lie in (0, 1)")
    if parity == "odd":
        s = -(2 * n + 1)
        lhs = hurwitz_zeta_sderiv(s, t) - hurwitz_zeta_sderiv(s, 1.0 - t)
        rhs = (math.factorial(2 * n + 1) / (2.0 * math.pi) ** (2 * n + 1)
               * clausen(2 * n + 2, 2.0 * math.pi * t))
        if corrected:
            rhs *= (-1.0) ** n
        return lhs, rhs
    if parity == "even":
        s = -2 * n
        lhs = hurwitz_zeta_sderiv(s, t) + hurwitz_zeta_sderiv(s, 1.0 - t)
        cl = _cl1(2.0 * math.pi * t) if n == 0 else clausen(2 * n + 1, 2.0 * math.pi * t)
        rhs = ((-1.0) ** n * math.factorial(2 * n) / (2.0 * math.pi) ** (2 * n) * cl)
        return lhs, rhs
    raise DomainError("parity must be 'odd' or 'even'")


def fourier_zeta_prime(t: float, order: str, term_budget: int = 200_000,
                       corrected: bool = False) -> tuple[float, float]:
    """The log-weighted Fourier identities for zeta'(-1, t) and zeta'(-2, t).

    order='minus1':
        2 zeta'(-1,t) - B_2(t)(1 - g - log 2pi)
            = -4 sum log n cos(2 n pi t)/(2 pi n)^2 + Cl_2(2 pi t)/(2 pi)
    order='minus2' (printed):
        zeta'(-2,t) - B_3(t)[1/2 - g/3 - (1/2) log 2pi]
            = -4 sum log n sin(2 n pi t)/(2 pi n)^3 - Cl_3(2 pi t)/(2 pi)^2
    With corrected=True the minus2 bracket uses (1/3) log 2pi, the
    coefficient the differentiation of Hurwitz's formula actually yields.

    The series tails fall like log N / N^2 (Dirichlet-bounded), so the pair
    is only compared at a relaxed tolerance.
    """
    if not 0.0 < t <= 1.0:
        raise DomainError("t must lie in (0, 1]")
    N = int(term_budget)
    n = np.arange(2, N + 1, dtype=float)
    two_pi = 2.0 * math.pi
    if order == "minus1":
        lhs = (2.0 * hurwitz_zeta_sderiv(-1.0, t)
               - bernoulli_poly(2, t) * (1.0 - EULER_GAMMA - math.log(two_pi)))
        ser = float(np.sum(np.log(n) * np.cos(two_pi * t * n) / (two_pi * n) ** 2))
        if t == 1.0:
            # cosines are all +1: no Dirichlet cancellation, add the tail
            ser += power_log_tail([(1.0 / two_pi ** 2, 2.0, 1)], N)
        rhs = -4.0 * ser + clausen(2, two_pi * t) / two_pi
        return lhs, rhs
    if order == "minus2":
        coeff = (1.0 / 3.0 if corrected else 0.5) * math.log(two_pi)
        lhs = (hurwitz_zeta_sderiv(-2.0, t)
               - bernoulli_poly(3, t) * (0.5 - EULER_GAMMA / 3.0 - coeff))
        ser = float(np.sum(np.log(n) * np.sin(two_pi * t * n) / (two_pi * n) ** 3))
        rhs = -4.0 * ser - clausen(3, two_pi * t) / two_pi ** 2
        return lhs, rhs
    raise DomainError("order must be 'minus1' or 'minus2'")


# ---------------------------------------------------------------------------
# Barnes G
# ---------------------------------------------------------------------------

def log_barnes_g(one_plus_x: float, abs_tol: float = 1e-15) -> float:
    """log G(1+x) for |x| < 1 by the zeta-coefficient Maclaurin series:

    (x/2) log 2pi - x(1+x)/2 - g x^2/2 + zeta(2) x^3/3 - zeta(3) x^4/4 + ...
    """
    x = one_plus_x - 1.0
    if abs(x) >= 1.0:
        raise DomainError("log_barnes_g requires |x - 1| < 1")
    if x == 0.0:
        return 0.0
    total = (0.5 * x * math.log(2.0 * math.pi) - 0.5 * x * (1.0 + x)
             - 0.5 * EULER_GAMMA * x * x)
    xk = x * x  # x^(k+1) at k = 1
    for k in range(2, 2000):
        xk *= x
        term = (-1.0) ** k * riemann_zeta(float(k)) * xk / (k + 1)
        total += term
        # zeta(k) -> 1, so the tail is essentially geometric in |x|
        if abs(xk) * 2.0 / (k + 2) / max(1e-30, 1.0 - abs(x)) < abs_tol:
            return total
    raise DomainError("log_barnes_g series did not converge (|x| too close to 1)")


def gosper_vardi_rhs(x: float) -> float:
    """zeta'(-1) - zeta'(-1, 1+x) + x log Gamma(1+x): the functional-equation
    route to log G(1+x)."""
    c = constants()
    return c.zeta_prime_minus1 - hurwitz_zeta_sderiv(-1.0, 1.0 + x) \
        + x * log_gamma(1.0 + x)


# ---------------------------------------------------------------------------
# multiple sine functions
# ---------------------------------------------------------------------------

def log_multiple_sine(m: MultipleSineOrder) -> float:
    """log S_r(x) = int_0^x pi t^(r-1) cot(pi t) dt (r = 1 returns
    log(2 sin pi x) directly)."""
    r, x = m.r, m.x
    if r == 1:
        return math.log(2.0 * math.sin(math.pi * x))
    left = 1.0 if r == 2 else 0.0  # limit of pi t^(r-1) cot(pi t) at 0

    def f(t: float) -> float:
        return math.pi * t ** (r - 1) / math.tan(math.pi * t)

    prob = QuadratureProblem(f, 0.0, x, left_singularity="removable",
                             left_value=left, abs_tol=1e-13)
    return tanh_sinh_integrate(prob).value


def log_s3_series(x: float) -> float:
    """log S_3(x) = -sum_{k>=0} zeta(2k) x^(2k+2)/(k+1) (zeta(0) = -1/2)."""
    if not abs(x) < 1.0:
        raise DomainError("|x| < 1 required")
    kmax = max(8, int(40.0 / max(1e-9, -math.log(max(abs(x), 1e-9)))) + 4)
    z = zeta_even_table(kmax)
    total = 0.0
    for k in range(kmax, -1, -1):
        total += -z[k] * x ** (2 * k + 2) / (k + 1)
    return total


def _product_partial(terms, n_factors: int) -> float:
    total = 0.0
    for n in range(1, n_factors + 1):
        total += terms(n)
    return total


def log_s2_product(x: float, n_factors: int = 1000) -> float:
    """Truncated defining product of the double sine (smoke-test quality)."""
    def term(n: int) -> float:
        return n * (math.log1p(-x / n) - math.log1p(x / n)) + 2.0 * x

    return x + _product_partial(term, n_factors)


def log_s3_product(x: float, n_factors: int = 1000) -> float:
    """Truncated defining product of the triple sine (smoke-test quality)."""
    def term(n: int) -> float:
        return n * n * math.log1p(-(x * x) / (n * n)) + x * x

    return 0.5 * x * x + _product_partial(term, n_factors)


def log_barnes_g_product(one_plus_x: float, n_factors: int = 1000) -> float:
    """Truncated defining product of G(1+x) (smoke-test quality)."""
    x = one_plus_x - 1.0

    def term(k: int) -> float:
        return k * math.log1p(x / k) - x + x * x / (2.0 * k)

    return (0.5 * x * math.log(2.0 * math.pi)
            - 0.5 * (x + (1.0 + EULER_GAMMA) * x * x)
            + _product_partial(term, n_factors))


# ---------------------------------------------------------------------------
# log-sin integrals and the Adamchik integral identity
# ---------------------------------------------------------------------------

def log_sin_integral_identity(t: float) -> tuple[float, float]:
    """(quadrature of int_0^t log(2 sin pi x) dx, -[zeta'(-1,t) - zeta'(-1,1-t)])."""
    if not 0.0 < t < 1.0:
        raise DomainError("t must lie in (0, 1)")
    prob = QuadratureProblem(lambda x: math.log(2.0 * math.sin(math.pi * x)),
                             0.0, t, left_singularity="log",
                             right_singularity="log" if t > 0.999 else "none",
                             abs_tol=1e-13)
    quad = tanh_sinh_integrate(prob).value
    closed = -(hurwitz_zeta_sderiv(-1.0, t) - hurwitz_zeta_sderiv(-1.0, 1.0 - t))
    return quad, closed


def adamchik_integral(n: int, v: float) -> tuple[float, float]:
    """Both sides of n int_0^v zeta'(1-n, t) dt
    = [B_(n+1) - B_(n+1)(v)]/(n(n+1)) + zeta'(-n, v) - zeta'(-n)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if not 0.0 < v <= 1.0:
        raise DomainError("v must lie in (0, 1]")
    s = 1.0 - n
    if n == 1:
        # zeta'(0, t) = log Gamma(t) - log sqrt(2 pi): log singularity at 0
        prob = QuadratureProblem(lambda t: hurwitz_zeta_sderiv(0.0, t), 0.0, v,
                                 left_singularity="log", abs_tol=1e-11,
                                 max_level=11)
    else:
        lim = hurwitz_zeta_sderiv(s, 1.0)  # zeta'(1-n, t) -> zeta'(1-n) as t -> 0
        prob = QuadratureProblem(lambda t: hurwitz_zeta_sderiv(s, t), 0.0, v,
                                 left_singularity="removable", left_value=lim,
                                 abs_tol=1e-11, max_level=11)
    lhs = n * tanh_sinh_integrate(prob).value
    table = bernoulli_numbers((n + 3) // 2)  # covers index n+1 (odd ones are 0)
    b_const = table.b(n + 1)
    rhs = ((b_const - bernoulli_poly(n + 1, v)) / (n * (n + 1.0))
           + hurwitz_zeta_sderiv(-float(n), v) - hurwitz_zeta_sderiv(-float(n), 1.0))
    return lhs, rhs


# ---------------------------------------------------------------------------
# zeta(2n) generating series
# ---------------------------------------------------------------------------

def zeta_even_series(t: float, form: str) -> tuple[float, float]:
    """Series/closed-form pairs built on the zeta(2n) generating function.

    cot:      (-2 sum zeta(2n) t^(2n), pi t cot(pi t)), |t| < 1
    log_sin:  (sum_{n>=1} zeta(2n) t^(2n)/n, log(pi t) - log sin(pi t)), 0 < |t| < 1
    fujii_suzuki: (zeta(3), (2 pi^2/7)[log pi - 1/2 - sum zeta(2n)/(n(n+1) 4^n)])
    """
    if form == "fujii_suzuki":
        k = 1
        acc = 0.0
        z = zeta_even_table(60)
        for n in range(1, 61):
            acc += z[n] / (n * (n + 1.0) * 4.0 ** n)
        rhs = 2.0 * math.pi ** 2 / 7.0 * (math.log(math.pi) - 0.5 - acc)
        return riemann_zeta(3.0), rhs
    if not abs(t) < 1.0:
        raise DomainError("|t| < 1 required")
    kmax = max(10, int(40.0 / max(1e-12, -math.log(max(abs(t), 1e-12)))) + 4)
    z = zeta_even_table(kmax)
    if form == "cot":
        lhs = -2.0 * sum(z[n] * t ** (2 * n) for n in range(kmax, -1, -1))
        rhs = 1.0 if t == 0.0 else math.pi * t / math.tan(math.pi * t)
        return lhs, rhs
    if form == "log_sin":
        lhs = sum(z[n] * t ** (2 * n) / n for n in range(kmax, 0, -1))
        rhs = 0.0 if t == 0.0 else (math.log(math.pi * abs(t))
                                    - math.log(abs(math.sin(math.pi * t))))
        return lhs, rhs
    raise DomainError(f"unknown form {form!r}")


def bromwich_sum(n_terms: int = 200_000) -> SeriesEval:
    """sum_n [n log((2n+1)/(2n-1)) - 1] = (1 - log 2)/2.

    Terms are 1/(12 n^2) + 1/(80 n^4) + O(n^-6); summed directly with an
    Euler-Maclaurin tail.
    """
    N = int(n_terms)
    n = np.arange(1, N + 1, dtype=float)
    terms = n * np.log((2.0 * n + 1.0) / (2.0 * n - 1.0)) - 1.0
    val = float(np.sum(terms))
    tail = power_log_tail([(1.0 / 12.0, 2.0, 0), (1.0 / 80.0, 4.0, 0)], N)
    return SeriesEval(val + tail, N, 1e-12, "euler_maclaurin", True)
