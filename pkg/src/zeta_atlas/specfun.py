"""Scalar special functions.

Gamma family, digamma/polygamma, Riemann/Hurwitz/alternating zeta, the
s-derivative of the Hurwitz zeta, the Hurwitz-Lerch transcendent,
polylogarithms, Clausen functions, Bernoulli polynomials and the named
constants everything else consumes.

Evaluation strategy for zeta(s, a) on the real s-line:

* s a nonpositive integer: exact Bernoulli-polynomial values.
* s < -3 (noninteger): the Fourier (Hurwitz-formula) expansion, whose
  series converge absolutely with exponent 1 - s > 4.
* otherwise: Euler-Maclaurin with N = max(20, ceil|s|+20) explicit terms
  and Bernoulli corrections through B_12.

The split exists because the Euler-Maclaurin partial sums grow like
(a+N)^{|s|+1} for s < 0 and binary64 cancellation would dominate past
s ~ -3; the Fourier route has no cancellation there.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .numerics import QuadratureProblem, tanh_sinh_integrate

EULER_GAMMA = 0.5772156649015328606

# B_{2j} for j = 1..7
_B2J = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6)
# B_{2j} / (2j (2j-1)) for the Stirling series
_STIRLING = (1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
             -691.0 / 360360, 1.0 / 156)
# B_{2j} / (2j) for the digamma asymptotic series
_DIGAMMA = (1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132,
            -691.0 / 32760, 1.0 / 12)
# B_{2j} / (2j)! for Euler-Maclaurin, j = 1..6
_EM_BERN = (8.333333333333333e-02, -1.3888888888888889e-03,
            3.3068783068783067e-05, -8.267195767195768e-07,
            2.0876756987868097e-08, -5.284190138687493e-10)


# ---------------------------------------------------------------------------
# gamma family
# ---------------------------------------------------------------------------

def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0: Stirling with Bernoulli correction for x >= 8,
    upward recurrence below."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    shift = 0.0
    while x < 8.0:
        shift -= math.log(x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = 1.0 / x
    for c in _STIRLING:
        series += c * p
        p *= inv2
    return shift + (x - 0.5) * math.log(x) - x + 0.9189385332046727 + series


def digamma(x: float) -> float:
    """psi(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 8.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    p = inv2
    for c in _DIGAMMA:
        series += c * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x - series


def polygamma(k: int, x: float) -> float:
    """psi^(k)(x); k = 0 is digamma, k >= 1 routes through hurwitz_zeta."""
    if k < 0:
        raise DomainError("polygamma order must be >= 0")
    if not x > 0:
        raise DomainError(f"polygamma requires x > 0, got {x}")
    if k == 0:
        return digamma(x)
    sign = 1.0 if k % 2 == 1 else -1.0
    return sign * math.factorial(k) * hurwitz_zeta(k + 1, x)


# ---------------------------------------------------------------------------
# Hurwitz zeta and its s-derivative
# ---------------------------------------------------------------------------

def _em_core(s: float, a: float, want_deriv: bool) -> tuple[float, float]:
    """Euler-Maclaurin zeta(s, a) and (optionally) d/ds zeta(s, a).

    Valid for any real s != 1, but callers dispatch away from deep negative
    s where the partial sums would cancel catastrophically.
    """
    # pull a into [1, inf) with explicit terms
    head = 0.0
    head_d = 0.0
    while a < 1.0:
        t = a ** (-s)
        head += t
        if want_deriv:
            head_d -= math.log(a) * t
        a += 1.0
    N = max(20, int(math.ceil(abs(s))) + 20)
    total = head
    total_d = head_d
    for k in range(N):
        base = a + k
        t = base ** (-s)
        total += t
        if want_deriv:
            total_d -= math.log(base) * t
    A = a + N
    logA = math.log(A)
    # integral (pole) term
    p = A ** (1.0 - s) / (s - 1.0)
    total += p
    if want_deriv:
        total_d += -logA * p - A ** (1.0 - s) / (s - 1.0) ** 2
    # half term
    h = 0.5 * A ** (-s)
    total += h
    if want_deriv:
        total_d -= logA * h
    # Bernoulli corrections through B_12
    for j, c in enumerate(_EM_BERN, start=1):
        m = 2 * j - 1
        rising = 1.0
        for i in range(m):
            rising *= s + i
        term = c * rising * A ** (-s - m)
        total += term
        if want_deriv:
            drising = 0.0
            for i in range(m):
                prod = 1.0
                for l in range(m):
                    if l != i:
                        prod *= s + l
                drising += prod
            total_d += c * A ** (-s - m) * (drising - logA * rising)
    return total, total_d


def _fourier_sum(s: float, a: float, weights: str) -> tuple[float, float]:
    """A = sum cos(2 pi n a) (2 pi n)^(s-1) and B = the sine analogue.

    With weights='log' the sums carry an extra log(2 pi n) factor (for the
    s-derivative).  Requires s < -2 so truncation converges fast.
    """
    N = 60000
    n = np.arange(1, N + 1, dtype=float)
    w = (2.0 * math.pi * n) ** (s - 1.0)
    if weights == "log":
        w = w * np.log(2.0 * math.pi * n)
    ang = 2.0 * math.pi * a * n
    return float(np.sum(np.cos(ang) * w)), float(np.sum(np.sin(ang) * w))


def _hurwitz_fourier(s: float, a: float, want_deriv: bool) -> tuple[float, float]:
    """Hurwitz's Fourier expansion, valid here for s < 0 and 0 < a <= 1."""
    head = 0.0
    head_d = 0.0
    while a > 1.0:
        a -= 1.0
        t = a ** (-s)
        head += t
        if want_deriv:
            head_d -= math.log(a) * t
    g = math.exp(log_gamma(1.0 - s))
    sin_h = math.sin(math.pi * s / 2.0)
    cos_h = math.cos(math.pi * s / 2.0)
    A, B = _fourier_sum(s, a, "plain")
    val = 2.0 * g * (sin_h * A + cos_h * B) + head
    if not want_deriv:
        return val, 0.0
    psi1ms = digamma(1.0 - s)
    Al, Bl = _fourier_sum(s, a, "log")
    d = (-2.0 * g * psi1ms * (sin_h * A + cos_h * B)
         + 2.0 * g * (0.5 * math.pi * cos_h * A - 0.5 * math.pi * sin_h * B
                      + sin_h * Al + cos_h * Bl))
    return val, d + head_d


def _is_int(x: float) -> bool:
    return x == math.floor(x)


def hurwitz_zeta(s: float, a: float) -> float:
    """zeta(s, a) = sum (k+a)^-s, continued to all real s != 1 (a > 0)."""
    if not a > 0:
        raise DomainError(f"hurwitz_zeta requires a > 0, got {a}")
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    if s <= 0.0 and _is_int(s):
        m = int(-s)
        return -bernoulli_poly(m + 1, a) / (m + 1)
    if s < -3.0:
        return _hurwitz_fourier(s, a, False)[0]
    return _em_core(s, a, False)[0]


def hurwitz_zeta_sderiv(s: float, a: float) -> float:
    """d/ds zeta(s, a), by term-wise analytic differentiation (no finite
    differences)."""
    if not a > 0:
        raise DomainError(f"hurwitz_zeta_sderiv requires a > 0, got {a}")
    if s == 1.0:
        raise PoleError("hurwitz_zeta_sderiv has a pole at s = 1")
    if s < -2.5:
        return _hurwitz_fourier(s, a, True)[1]
    return _em_core(s, a, True)[1]


def riemann_zeta(s: float) -> float:
    """zeta(s) via zeta(s, 1)."""
    return hurwitz_zeta(s, 1.0)


def alt_hurwitz_zeta(s: float, y: float) -> float:
    """zeta_a(s, y) = sum (-1)^k (k+y)^-s, entire in s (y > 0).

    Computed as 2^-s [zeta(s, y/2) - zeta(s, (y+1)/2)] with both
    Euler-Maclaurin evaluations sharing N so the 1/(s-1) pole terms combine
    into a finite, smooth expression (the s -> 1 limit is taken via expm1).
    """
    if not y > 0:
        raise DomainError(f"alt_hurwitz_zeta requires y > 0, got {y}")
    a1, a2 = y / 2.0, (y + 1.0) / 2.0
    if s <= 0.0 and _is_int(s):
        m = int(-s)
        d = (-bernoulli_poly(m + 1, a1) + bernoulli_poly(m + 1, a2)) / (m + 1)
        return 2.0 ** (-s) * d
    if s < -3.0:
        return 2.0 ** (-s) * (_hurwitz_fourier(s, a1, False)[0]
                              - _hurwitz_fourier(s, a2, False)[0])

    def parts_no_pole(a: float) -> tuple[float, float]:
        head = 0.0
        while a < 1.0:
            head += a ** (-s)
            a += 1.0
        N = max(20, int(math.ceil(abs(s))) + 20)
        tot = head
        for k in range(N):
            tot += (a + k) ** (-s)
        A = a + N
        tot += 0.5 * A ** (-s)
        for j, c in enumerate(_EM_BERN, start=1):
            m = 2 * j - 1
            rising = 1.0
            for i in range(m):
                rising *= s + i
            tot += c * rising * A ** (-s - m)
        return tot, A

    t1, A1 = parts_no_pole(a1)
    t2, A2 = parts_no_pole(a2)
    # (A1^(1-s) - A2^(1-s)) / (s-1), stable through s = 1
    L = math.log(A2 / A1)
    u = 1.0 - s
    if abs(u) > 1e-8:
        pole = A1 ** u * (-math.expm1(u * L)) / (s - 1.0)
    else:
        pole = A1 ** u * (L + u * L * L / 2.0 + u * u * L ** 3 / 6.0)
    return 2.0 ** (-s) * (t1 - t2 + pole)


def alt_zeta(s: float) -> float:
    """zeta_a(s) = (1 - 2^(1-s)) zeta(s), with the s -> 1 limit log 2."""
    return alt_hurwitz_zeta(s, 1.0)


# ---------------------------------------------------------------------------
# Lerch transcendent and polylogarithm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LerchTriple:
    """Parameters (x, s, y) of Phi(x, s, y) = sum x^k / (k+y)^s."""

    x: float
    s: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise DomainError(f"LerchTriple requires y > 0, got {self.y}")
        if abs(self.x) > 1.0:
            raise DomainError(f"LerchTriple requires |x| <= 1, got {self.x}")
        if self.x == 1.0 and self.s <= 1.0:
            raise PoleError("Phi(1, s, y) diverges for s <= 1")
        if not self.s > 0:
            raise DomainError(f"LerchTriple requires s > 0, got {self.s}")


def lerch_phi(x, s: float | None = None, y: float | None = None) -> float:
    """Hurwitz-Lerch transcendent Phi(x, s, y).

    |x| < 1: direct series with the geometric tail bound
    |x|^N / ((N+y)^s (1-|x|)); the boundary points dispatch to the
    alternating/plain Hurwitz zeta closed forms.
    """
    if isinstance(x, LerchTriple):
        p = x
    else:
        p = LerchTriple(float(x), float(s), float(y))
    if p.x == 0.0:
        return p.y ** (-p.s)
    if p.x == 1.0:
        return hurwitz_zeta(p.s, p.y)
    if p.x == -1.0:
        return alt_hurwitz_zeta(p.s, p.y)
    ax = abs(p.x)
    total = 0.0
    comp = 0.0
    xk = 1.0
    for k in range(0, 1_000_000):
        t = xk * (k + p.y) ** (-p.s)
        snew = total + t
        comp += (total - snew) + t if abs(total) >= abs(t) else (t - snew) + total
        total = snew
        xk *= p.x
        if ax ** (k + 1) / ((k + 1 + p.y) ** p.s * (1.0 - ax)) < 1e-17 * max(1.0, abs(total)):
            break
    return total + comp


def polylog(s: float, x: float) -> float:
    """Li_s(x) for |x| <= 1 (x != 1 when s <= 1)."""
    if abs(x) > 1.0:
        raise DomainError(f"polylog requires |x| <= 1, got {x}")
    if x == 1.0:
        if s <= 1.0:
            raise DomainError("polylog diverges at x = 1 for s <= 1")
        return riemann_zeta(s)
    if x == -1.0:
        return -alt_zeta(s)
    if x == 0.0:
        return 0.0
    total = 0.0
    comp = 0.0
    xn = 1.0
    ax = abs(x)
    for n in range(1, 1_000_000):
        xn *= x
        t = xn / float(n) ** s
        snew = total + t
        comp += (total - snew) + t if abs(total) >= abs(t) else (t - snew) + total
        total = snew
        tail = ax ** (n + 1) / (float(n + 1) ** s * (1.0 - ax))
        if tail < 1e-17 * max(1.0, abs(total)) and n > 4:
            break
    return total + comp


# ---------------------------------------------------------------------------
# Clausen functions
# ---------------------------------------------------------------------------

def _cl1(theta: float) -> float:
    """Cl_1(theta) = -log(2 sin(theta/2)), theta not a multiple of 2 pi."""
    s = math.sin(0.5 * math.fmod(theta, 2.0 * math.pi))
    if s == 0.0:
        raise DomainError("Cl_1 is singular at multiples of 2 pi")
    return -math.log(abs(2.0 * s))


def _clausen_series(n: int, theta: float) -> float:
    """Trig series for Cl_n, n >= 3, theta in (0, pi].

    Direct numpy summation to N plus a two-layer Abel (summation by parts)
    tail: the remainder after the explicit corrections is below
    n(n+1) N^(-n-2) |1-z|^-2 which is negligible at N = 2 * 10^4.
    """
    N = 20000
    k = np.arange(1, N + 1, dtype=float)
    ang = k * theta
    w = k ** (-float(n))
    if n % 2:  # odd index: cosine series
        total = float(np.sum(np.cos(ang) * w))
    else:
        total = float(np.sum(np.sin(ang) * w))
    z = cmath.exp(1j * theta)
    zN1 = cmath.exp(1j * (N + 1) * theta)
    a1 = (N + 1.0) ** (-float(n))
    da1 = (N + 2.0) ** (-float(n)) - a1
    tail = a1 * zN1 / (1.0 - z) + da1 * zN1 * z / (1.0 - z) ** 2
    total += tail.real if n % 2 else tail.imag
    return total


def clausen(n: int, theta: float) -> float:
    """Clausen function Cl_n(theta), n >= 2.

    Paper convention: even index uses the sine series, odd index the cosine
    series.  The angle is reduced mod 2 pi and folded onto [0, pi] by the
    parity symmetry.  Cl_2 is evaluated as the log-sine integral (the DE
    quadrature absorbs the endpoint log); higher orders use the trig series.
    """
    if n < 2:
        raise DomainError("clausen requires n >= 2")
    t = math.fmod(theta, 2.0 * math.pi)
    if t < 0.0:
        t += 2.0 * math.pi
    sign = 1.0
    if t > math.pi:
        t = 2.0 * math.pi - t
        if n % 2 == 0:
            sign = -1.0
    if t == 0.0:
        return riemann_zeta(n) if n % 2 else 0.0
    if n == 2:
        prob = QuadratureProblem(lambda u: math.log(2.0 * math.sin(0.5 * u)),
                                 0.0, t, left_singularity="log",
                                 abs_tol=1e-13, max_level=12)
        return -sign * tanh_sinh_integrate(prob).value
    if t < 0.05:
        # duplication toward larger arguments:
        #   even n: Cl_n(t) = 2^(1-n) Cl_n(2t) + Cl_n(pi - t)
        #   odd  n: Cl_n(t) = 2^(1-n) Cl_n(2t) - Cl_n(pi - t)
        branch = clausen(n, 2.0 * t) * 2.0 ** (1 - n)
        other = clausen(n, math.pi - t)
        return sign * (branch + other if n % 2 == 0 else branch - other)
    return sign * _clausen_series(n, t)


# ---------------------------------------------------------------------------
# Bernoulli polynomials
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _bernoulli_poly_coeffs(n: int) -> tuple:
    from .numerics import bernoulli_numbers

    table = bernoulli_numbers((n + 2) // 2)
    # coefficient of t^(n-k) is C(n,k) B_k
    return tuple(float(math.comb(n, k) * table.b_exact(k)) for k in range(n + 1))


def bernoulli_poly(n: int, t: float) -> float:
    """Bernoulli polynomial B_n(t) by its explicit Bernoulli-number expansion."""
    if n < 0:
        raise DomainError("bernoulli_poly requires n >= 0")
    coeffs = _bernoulli_poly_coeffs(n)  # coeffs[k] multiplies t^(n-k)
    acc = 0.0
    for c in coeffs:
        acc = acc * t + c
    return acc


# ---------------------------------------------------------------------------
# named constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantsBlock:
    pi: float
    log2: float
    euler_gamma: float
    zeta3: float
    catalan_g: float
    zeta_prime_minus1: float
    zeta_prime_minus2: float
    provenance: tuple  # (name, tag) pairs, tag in {closed_form, computed}

    def as_dict(self) -> dict:
        return {
            "pi": self.pi, "log2": self.log2, "euler_gamma": self.euler_gamma,
            "zeta3": self.zeta3, "catalan_g": self.catalan_g,
            "zeta_prime_minus1": self.zeta_prime_minus1,
            "zeta_prime_minus2": self.zeta_prime_minus2,
        }


@functools.lru_cache(maxsize=1)
def constants() -> ConstantsBlock:
    """Computed once, immutable afterwards.

    zeta'(-1) comes from the functional-equation relation with zeta'(2);
    zeta'(-2) is the closed form -zeta(3)/(4 pi^2).
    """
    z3 = riemann_zeta(3.0)
    catalan = (hurwitz_zeta(2.0, 0.25) - math.pi ** 2) / 8.0
    zp2 = hurwitz_zeta_sderiv(2.0, 1.0)
    zpm1 = ((1.0 - EULER_GAMMA - math.log(2.0 * math.pi)) / 12.0
            + zp2 / (2.0 * math.pi ** 2))
    zpm2 = -z3 / (4.0 * math.pi ** 2)
    return ConstantsBlock(
        pi=math.pi, log2=math.log(2.0), euler_gamma=EULER_GAMMA,
        zeta3=z3, catalan_g=catalan,
        zeta_prime_minus1=zpm1, zeta_prime_minus2=zpm2,
        provenance=(("pi", "closed_form"), ("log2", "closed_form"),
                    ("euler_gamma", "closed_form"), ("zeta3", "computed"),
                    ("catalan_g", "computed"),
                    ("zeta_prime_minus1", "computed"),
                    ("zeta_prime_minus2", "closed_form")),
    )
