"""Finite binomial sums S_n(x, y) and the Hasse-type double series built on them.

The inner sums S_n(x, y) = sum_k C(n,k) x^k (k+y)^-s are n-th finite
differences when x < 0 and lose ~2^n ulp to cancellation; binary64 is good
to n <= 40 and the double-double mode to n <= 90.  The slowly convergent
1/(n+1)-weighted outer series therefore use stable cumulative recurrences,
available at y = 1 for integer exponents:

    S_n(-x, 1, 1) = (1 - q^(n+1)) / ((n+1) x),          q = 1 - x
    S_n(-x, 1, 2) = I_(n+1) / ((n+1) x),   I_m = sum_{j<=m} (1 - q^j)/j
    S_n(-x, 1, 3) = mean of S_(0..n)(-x, 1, 2)

(each accumulates positive increments, so no cancellation), with
Euler-Maclaurin tails anchored at the last computed partial sums.  The
t -> -1 alternating series are defined as Abel means and evaluated through
the Euler-transformed (k-swapped) form of the t-weighted series, which is
the only ordering that converges in floating point near the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .doubledouble import DD, dd_pow
from .errors import DomainError, PoleError, PrecisionLossError
from .numerics import (SeriesEval, _Accumulator, abel_mean, geometric_schedule,
                       power_log_tail)
from .specfun import EULER_GAMMA, LerchTriple

_BINARY64_CAP = 40
_DD_CAP = 90


@dataclass(frozen=True)
class HasseParams:
    """Parameter block for a weighted double series."""

    triple: LerchTriple
    weight: str  # reciprocal_n_plus_1 | geometric | half_power | alternating_sign | reciprocal_power
    term_budget: int = 200_000
    precision: str = "binary64"  # binary64 | double_double

    def __post_init__(self):
        if self.weight not in ("reciprocal_n_plus_1", "geometric", "half_power",
                               "alternating_sign", "reciprocal_power"):
            raise DomainError(f"unknown weight tag {self.weight!r}")
        if self.precision not in ("binary64", "double_double"):
            raise DomainError(f"unknown precision tag {self.precision!r}")


# ---------------------------------------------------------------------------
# the inner finite sum
# ---------------------------------------------------------------------------

def finite_binomial_sum(n: int, x: float, y: float, s: float,
                        precision: str = "binary64",
                        abs_tol: Optional[float] = None) -> float:
    """S_n(x, y) = sum_k C(n,k) x^k (k+y)^-s, compensated left to right.

    For x < 0 this is an n-th difference; the precision ladder caps n at 40
    (binary64) / 90 (double_double).  Past the cap, or when the roundoff
    estimate exceeds abs_tol, a PrecisionLossError carries the estimate.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    if not y > 0:
        raise DomainError(f"finite_binomial_sum requires y > 0, got {y}")
    if precision not in ("binary64", "double_double"):
        raise DomainError(f"unknown precision tag {precision!r}")
    if x < 0:
        cap = _DD_CAP if precision == "double_double" else _BINARY64_CAP
        if n > cap:
            mid_mag = math.comb(n, n // 2) * abs(x) ** (n // 2) * (n // 2 + y) ** (-s)
            raise PrecisionLossError(
                f"n={n} exceeds the {precision} cancellation cap {cap}",
                estimate=math.ulp(max(mid_mag, 1.0)) * (n + 1))
    if precision == "double_double" and x < 0:
        acc = DD(0.0)
        xk = DD(1.0)
        xdd = DD(x)
        for k in range(n + 1):
            c = DD.from_int(math.comb(n, k))
            term = c * xk * dd_pow(DD(k + y), -s)
            acc = acc + term
            xk = xk * xdd
        return float(acc)
    acc = _Accumulator()
    max_abs = 0.0
    for k in range(n + 1):
        term = math.comb(n, k) * x ** k * (k + y) ** (-s)
        max_abs = max(max_abs, abs(term))
        acc.add(term)
    value = acc.value()
    if x < 0 and abs_tol is not None:
        est = math.ulp(max_abs) * (n + 1)
        if est > abs_tol:
            raise PrecisionLossError(
                f"cancellation estimate {est:.3e} exceeds abs_tol", estimate=est)
    return value


# ---------------------------------------------------------------------------
# stable ladders for the 1/(n+1)-weighted series (y = 1, integer exponent)
# ---------------------------------------------------------------------------

def _ladder_weighted_sum(x: float, sigma: int, n_terms: int) -> tuple[float, float]:
    """sum_{n>=0} S_n(-x, 1, sigma) / (n+1) for x in (0, 1], sigma in {1,2,3}.

    Partial sums are exact cumulative recurrences; the tail is
    Euler-Maclaurin on the asymptotic term shape with constants anchored at
    the computed prefix (no external constants enter).  Returns
    (value, tail_residual_estimate).
    """
    N = int(n_terms)
    q = 1.0 - x
    j = np.arange(1.0, N + 2.0)  # j = n + 1 = m
    with np.errstate(under="ignore"):
        qj = q ** np.minimum(j, 4000.0) if q > 0.0 else np.zeros_like(j)
    one_minus_qj = 1.0 - qj
    M = float(N + 1)
    logM = math.log(M)

    if sigma == 1:
        terms = one_minus_qj / (j * j * x)
        partial = float(np.sum(terms))
        tail = power_log_tail([(1.0 / x, 2.0, 0)], N + 1)
        resid = 2.0 / M ** 3 / x
        return partial + tail, resid
    I = np.cumsum(one_minus_qj / j)  # I_m, m = 1..N+1
    if sigma == 2:
        terms = I / (j * j * x)
        partial = float(np.sum(terms))
        # I_m = C_I + ln m + 1/(2m) - 1/(12 m^2) + O(q^m); anchor C_I at m = M
        C_I = float(I[-1]) - logM - 0.5 / M + 1.0 / (12.0 * M * M)
        tail = power_log_tail([(C_I / x, 2.0, 0), (1.0 / x, 2.0, 1),
                               (0.5 / x, 3.0, 0), (-1.0 / (12.0 * x), 4.0, 0)],
                              N + 1)
        resid = (logM + abs(C_I) + 1.0) / M ** 3 / x
        return partial + tail, resid
    if sigma == 3:
        S2 = I / (j * x)
        A = np.cumsum(S2)  # A_m = sum of S2_0..S2_(m-1)
        terms = A / (j * j)
        partial = float(np.sum(terms))
        C_I = float(I[-1]) - logM - 0.5 / M
        # A_m ~ A* + (ln^2 m / 2 + C_I ln m + (ln m + C_I - 1)/(2m)) / x
        shape_M = (logM * logM / 2.0 + C_I * logM + (logM + C_I - 1.0) / (2.0 * M)) / x
        A_star = float(A[-1]) - shape_M
        tail = power_log_tail(
            [(A_star, 2.0, 0),
             (0.5 / x, 2.0, 2), (C_I / x, 2.0, 1),
             (0.5 / x, 3.0, 1), ((C_I - 1.0) / (2.0 * x), 3.0, 0)],
            N + 1)
        resid = (logM ** 2 + 1.0) / M ** 2 / x * 0.5
        return partial + tail, resid
    raise DomainError("ladder supports sigma in {1, 2, 3}")


def _exact_int(v: float) -> Optional[int]:
    return int(v) if float(v).is_integer() else None


# ---------------------------------------------------------------------------
# Hasse's global zeta representation  (1/(s-1)) sum 1/(n+1) S_n(-1, 1, s-1)
# ---------------------------------------------------------------------------

def hasse_zeta(s: float, term_budget: int = 200_000) -> SeriesEval:
    """zeta(s) from the Hasse double series; s != 1.

    Integer s in {2, 3, 4} run the stable ladder with an anchored tail;
    integer s <= 0 terminate exactly (the inner sums vanish once the
    polynomial degree is exceeded).  Other s fall back to direct inner sums
    below the cancellation cap with an empirical last-increment tail bound.
    """
    if s == 1.0:
        raise PoleError("Hasse series undefined at s = 1")
    si = _exact_int(s)
    if si is not None and si <= 0:
        deg = 1 - si
        total = Fraction(0)
        for n in range(deg + 1):
            inner = sum(Fraction((-1) ** k * math.comb(n, k)) * Fraction(k + 1) ** deg
                        for k in range(n + 1))
            total += inner / (n + 1)
        value = float(total / (si - 1))
        return SeriesEval(value, deg + 1, 0.0, "direct", True)
    if si is not None and 2 <= si <= 4:
        raw, resid = _ladder_weighted_sum(1.0, si - 1, term_budget)
        return SeriesEval(raw / (s - 1.0), term_budget, abs(resid / (s - 1.0)),
                          "direct", True)
    # generic real s: honest but cap-limited
    acc = _Accumulator()
    last = math.inf
    n = 0
    while n <= _DD_CAP:
        prec = "binary64" if n <= _BINARY64_CAP else "double_double"
        inner = finite_binomial_sum(n, -1.0, 1.0, s - 1.0, precision=prec)
        last = inner / (n + 1)
        acc.add(last)
        n += 1
    return SeriesEval(acc.value() / (s - 1.0), n, abs(last / (s - 1.0)),
                      "direct", False)


def hasse_lerch_lhs(x: float, s: float, y: float,
                    term_budget: int = 200_000) -> SeriesEval:
    """LHS double series of the log-weighted Lerch identity:
    sum_n 1/(n+1) sum_k C(n,k) (-1)^k x^k (k+y)^-s, for x in (0, 1].

    Verification target: s Phi(x, s+1, y) - log x Phi(x, s, y).
    """
    if not 0.0 < x <= 1.0:
        raise DomainError("hasse_lerch_lhs requires x in (0, 1]")
    if not y > 0:
        raise DomainError("y must be positive")
    si = _exact_int(s)
    if y == 1.0 and si is not None and 1 <= si <= 3:
        value, resid = _ladder_weighted_sum(x, si, term_budget)
        return SeriesEval(value, term_budget, abs(resid), "direct", True)
    acc = _Accumulator()
    last = math.inf
    n = 0
    while n <= _DD_CAP:
        prec = "binary64" if n <= _BINARY64_CAP else "double_double"
        inner = finite_binomial_sum(n, -x, y, s, precision=prec)
        last = inner / (n + 1)
        acc.add(last)
        n += 1
    # terms fall off like n^-(1+y) (log factors aside): crude tail estimate
    tail = abs(last) * (_DD_CAP + 1) / max(y, 0.25)
    return SeriesEval(acc.value(), n, tail, "direct", False)


# ---------------------------------------------------------------------------
# the t-weighted geometric family  sum_n t^n S_n(x, y)
# ---------------------------------------------------------------------------

def _kswap_value(t: float, x: float, s: float, y: float) -> float:
    """Euler-transformed evaluation (1/(1-t)) sum_k (xt/(1-t))^k (k+y)^-s.

    This is the k-first rearrangement of sum_n t^n S_n(x, y); it is the only
    ordering that is computable near t = -1 where the n-ordered inner sums
    would need ~|n| extra bits.
    """
    q = x * t / (1.0 - t)
    aq = abs(q)
    if aq >= 1.0:
        raise DomainError(f"k-swapped series diverges: |xt/(1-t)| = {aq}")
    if aq == 0.0:
        return y ** (-s) / (1.0 - t)
    K = int(max(80.0, 48.0 / -math.log(aq)) + 10)
    total = 0.0
    logq = math.log(aq)
    neg = q < 0.0
    chunk = 1 << 20
    k0 = 0
    while k0 < K:
        k = np.arange(k0, min(K, k0 + chunk), dtype=float)
        w = np.exp(k * logq)
        if neg:
            w[(k.astype(np.int64) & 1) == 1] *= -1.0
        total += float(np.sum(w * (k + y) ** (-s)))
        k0 += chunk
    return total / (1.0 - t)


def _edgeworth_boundary(s: float, y: float, p: float,
                        n_rows: int = 3000) -> tuple[float, float]:
    """sum_n [t(1+x)]^n E[(K_n + y)^-s] on the boundary t(1+x) = 1.

    Here K_n ~ Binomial(n, p) with p = x/(1+x); the weighted inner sums are
    binomial means of (k+y)^-s, built by the pmf row recurrence (all
    positive, no cancellation).  Terms decay only like n^-s, so the tail
    adds the Edgeworth expansion through the fourth central moment, each
    piece a power of w = np + y summed in closed form by Euler-Maclaurin.
    Returns (value, residual_estimate); the sum equals Phi-boundary values
    such as zeta(s, y) once the caller applies its outer prefactor.
    """
    N = int(n_rows)
    qp = 1.0 - p
    row = np.array([1.0])
    acc = _Accumulator()
    for n in range(N + 1):
        if n:
            nxt = np.empty(n + 1)
            nxt[0] = qp * row[0]
            nxt[-1] = p * row[-1]
            if n > 1:
                nxt[1:-1] = qp * row[1:] + p * row[:-1]
            row = nxt
        k = np.arange(0.0, n + 1.0)
        acc.add(float(np.sum(row * (k + y) ** (-s))))

    def step_tail(r: float, W: float) -> float:
        # sum_{j>=1} (W + j p)^-r by Euler-Maclaurin in j
        base = W + p
        phi = base ** (-r)
        dphi = -r * p * base ** (-r - 1.0)
        return base ** (1.0 - r) / (p * (r - 1.0)) + 0.5 * phi - dphi / 12.0

    W0 = N * p + y
    pw = {r: step_tail(s + r, W0) for r in range(5)}
    s1_, s2_, s3_, s4_ = (s + 1.0, s * 0 + s + 2.0, s + 3.0, s + 4.0)
    c2 = s * (s + 1.0)
    c3 = c2 * (s + 2.0)
    c4 = c3 * (s + 3.0)
    # central moments with n = (w - y)/p:  var = n p q, mu3 = n p q (1-2p),
    # mu4 = 3 var^2 + var (1 - 6 p q)
    # var/2 f''  ->  (q/2) c2 [(w-y) w^-s-2]
    t2 = (qp / 2.0) * c2 * (pw[1] - y * pw[2])
    # mu3/6 f''' -> -(q(1-2p)/6) c3 [(w-y) w^-s-3]
    t3 = -(qp * (1.0 - 2.0 * p) / 6.0) * c3 * (pw[2] - y * pw[3])
    # mu4/24 f'''' with (w-y)^2 w^-s-4 = w^-s-2 - 2y w^-s-3 + y^2 w^-s-4
    quad = pw[2] - 2.0 * y * pw[3] + y * y * pw[4]
    lin = pw[3] - y * pw[4]
    t4 = (3.0 * qp * qp * quad + qp * (1.0 - 6.0 * p * qp) * lin) * c4 / 24.0
    tail = pw[0] + t2 + t3 + t4
    resid = abs(c4 * (s + 4.0) * (s + 5.0)) * (N * p) ** 3 \
        * W0 ** (-s - 6.0) / 720.0 * N + 1e-15 * abs(acc.value())
    return acc.value() + tail, resid


def geometric_weighted_sum(t: float, x: float, s: float, y: float,
                           term_budget: int = 4000,
                           abs_tol: float = 1e-13) -> SeriesEval:
    """sum_n t^n S_n(x, y), target (1/(1-t)) Phi(tx/(1-t), s, y).

    Routing: inside |t|(1+|x|) < 1 the double series is summed in the
    n-order it is written in (double-double inner sums once n passes the
    binary64 cap); the positive boundary t(1+x) = 1 (x > 0) takes the
    binomial-mean Edgeworth path; other t in (-1, 0) fall back to the
    Euler-transformed k-swap, which is the analytic continuation of the
    same sum.
    """
    if not y > 0:
        raise DomainError("y must be positive")
    if t == 0.0:
        return SeriesEval(y ** (-s), 1, 0.0, "direct", True)
    r = abs(t) * (1.0 + abs(x))
    if r < 1.0 or (t == 0.5 and -1.0 <= x < 0.0):
        acc = _Accumulator()
        tn = 1.0
        bound = math.inf
        n = 0
        small = 0
        while n <= max(term_budget, _DD_CAP):
            if x < 0 and n > _DD_CAP:
                raise PrecisionLossError(
                    "direct route needs more terms than the double-double cap",
                    estimate=bound)
            prec = "binary64" if (x >= 0 or n <= _BINARY64_CAP) else "double_double"
            term = tn * finite_binomial_sum(n, x, y, s, precision=prec)
            acc.add(term)
            tn *= t
            n += 1
            if r < 1.0:
                bound = (r ** n) / (1.0 - r) * max(1.0, y ** (-s))
            else:
                bound = abs(term) * 2.0
            if bound <= abs_tol:
                small += 1
                if small >= 2 or r < 1.0:
                    return SeriesEval(acc.value(), n, bound, "direct", True)
            else:
                small = 0
        return SeriesEval(acc.value(), n, bound, "direct", False)
    if x > 0.0 and 0.0 < t < 1.0 and abs(t * (1.0 + x) - 1.0) < 1e-12:
        value, resid = _edgeworth_boundary(s, y, x / (1.0 + x))
        return SeriesEval(value, 3000, resid + 1e-13, "euler_maclaurin", True)
    if -1.0 < t < 0.0 and abs(x * t / (1.0 - t)) < 1.0:
        value = _kswap_value(t, x, s, y)
        return SeriesEval(value, 0, 1e-15 * max(1.0, abs(value)), "euler_accel", True)
    raise DomainError(
        f"(t={t}, x={x}) outside the convergence region |t|(1+|x|) < 1; "
        "the t -> -1 boundary is handled by alternating_weight_series")


# ---------------------------------------------------------------------------
# t -> -1 boundary family (Abel means)
# ---------------------------------------------------------------------------

_VARIANTS = {
    # variant: (x, uses_n_plus_1)
    "eq_1_21": (-2.0, False),
    "eq_1_22": (-2.0, True),
    "eq_1_23": (2.0, False),
    "eq_1_25": (0.5, False),
}


def alternating_weight_series(variant: str, s_or_n: float, y: float = 1.0,
                              m_lo: int = 4, m_hi: int = 14) -> SeriesEval:
    """sum_n (-1)^n S_n(., y) as an Abel mean t -> -1^- of the t-weighted sum.

    Targets: eq_1_21 -> Phi(1,s,y)/2; eq_1_22 -> zeta(n+1)/2;
    eq_1_23 -> zeta_a(s)/2; eq_1_25 -> -2 Li_s(-1/4).
    """
    if variant not in _VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    x, plus_one = _VARIANTS[variant]
    s = float(s_or_n) + (1.0 if plus_one else 0.0)
    if variant in ("eq_1_22", "eq_1_23", "eq_1_25"):
        y = 1.0
    schedule = geometric_schedule(-1.0, m_lo, m_hi)
    out = abel_mean(lambda t: _kswap_value(t, x, s, y), schedule, extrapolate=True)
    return out
