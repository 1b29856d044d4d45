"""Precision-controlled summation, acceleration, quadrature and Bernoulli numbers.

Everything else in the package is built on the operations here.  All values
are binary64 with compensated accumulation; the finite binomial sums that
need more carry a double-double mode (see :mod:`zeta_atlas.hasse`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import ConvergenceError, DomainError, NonfiniteIntegrandError

_EPS = 2.220446049250313e-16


# ---------------------------------------------------------------------------
# result / problem records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesEval:
    """A numeric value plus the evidence that produced it.

    tail_bound is an absolute bound (or estimate, when the method note says
    so) on the discarded remainder; ``converged`` records whether the
    stopping rule was satisfied rather than the budget running out.
    """

    value: float
    terms_used: int
    tail_bound: float
    method: str  # direct | euler_accel | abel_mean | quadrature | euler_maclaurin
    converged: bool


@dataclass
class QuadratureProblem:
    """One definite integral with endpoint annotations.

    Endpoint tags: ``none``, ``log``, ``inverse_sqrt``, ``removable``.  The
    double-exponential map absorbs log and inverse-sqrt endpoint
    singularities without special casing; ``removable`` means the integrand
    has a finite limit that the caller may supply via left_value/right_value
    (used only if a node collapses onto the endpoint in floating point).
    """

    integrand: Callable[[float], float]
    a: float
    b: float
    left_singularity: str = "none"
    right_singularity: str = "none"
    abs_tol: float = 1e-12
    max_level: int = 12
    left_value: Optional[float] = None
    right_value: Optional[float] = None

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"quadrature interval must have a < b, got [{self.a}, {self.b}]")
        if self.abs_tol <= 0:
            raise DomainError("abs_tol must be positive")
        for tag in (self.left_singularity, self.right_singularity):
            if tag not in ("none", "log", "inverse_sqrt", "removable"):
                raise DomainError(f"unknown endpoint tag {tag!r}")


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0 .. B_{2m}; odd indices above 1 are zero.

    ``fractions`` holds the exact rational values (index = Bernoulli index),
    ``values`` the once-rounded floats.
    """

    fractions: tuple
    values: tuple = field(default=())

    def b(self, n: int) -> float:
        return self.values[n]

    def b_exact(self, n: int) -> Fraction:
        return self.fractions[n]


# ---------------------------------------------------------------------------
# compensated accumulation
# ---------------------------------------------------------------------------

def compensated_sum(terms: Sequence[float]) -> float:
    """Sum with Neumaier compensation: error O(1) ulp regardless of length."""
    total = 0.0
    comp = 0.0
    for t in terms:
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
    return total + comp


class _Accumulator:
    """Incremental Neumaier accumulator."""

    __slots__ = ("total", "comp")

    def __init__(self):
        self.total = 0.0
        self.comp = 0.0

    def add(self, t: float) -> None:
        s = self.total + t
        if abs(self.total) >= abs(t):
            self.comp += (self.total - s) + t
        else:
            self.comp += (t - s) + self.total
        self.total = s

    def value(self) -> float:
        return self.total + self.comp


# ---------------------------------------------------------------------------
# series summation and acceleration
# ---------------------------------------------------------------------------

def sum_series(term: Callable[[int], float],
               tail_bound: Optional[Callable[[int], float]] = None,
               abs_tol: float = 1e-12,
               max_terms: int = 10_000_000,
               start: int = 0) -> SeriesEval:
    """Sum term(start) + term(start+1) + ... until the tail is under abs_tol.

    With an analytic ``tail_bound(next_index)`` the stop is rigorous.
    Without one, the heuristic stop requires 8 consecutive terms below
    abs_tol/8 (trig series have non-monotone terms; one small term proves
    nothing).
    """
    if abs_tol <= 0:
        raise DomainError("abs_tol must be positive")
    acc = _Accumulator()
    small_run = 0
    k = start
    n_used = 0
    while n_used < max_terms:
        t = term(k)
        acc.add(t)
        n_used += 1
        k += 1
        if tail_bound is not None:
            tb = tail_bound(k)
            if tb <= abs_tol:
                return SeriesEval(acc.value(), n_used, tb, "direct", True)
        else:
            if abs(t) < abs_tol / 8.0:
                small_run += 1
                if small_run >= 8:
                    return SeriesEval(acc.value(), n_used, abs_tol, "direct", True)
            else:
                small_run = 0
    partial = SeriesEval(acc.value(), n_used,
                         tail_bound(k) if tail_bound is not None else math.inf,
                         "direct", False)
    raise ConvergenceError(f"series did not converge in {max_terms} terms", partial)


def euler_transform_sum(a: Callable[[int], float],
                        abs_tol: float = 1e-14,
                        max_terms: int = 400) -> SeriesEval:
    """Euler (binomial) transform of the alternating series sum (-1)^k a(k).

    Computes sum_n Delta^n a(0) / 2^(n+1) with numerically formed forward
    differences.  Geometric convergence for totally monotone a; the stop is
    two consecutive transformed terms below abs_tol.
    """
    if abs_tol <= 0:
        raise DomainError("abs_tol must be positive")
    diff_row: list[float] = []
    acc = _Accumulator()
    last_sizes = (math.inf, math.inf)
    for n in range(max_terms):
        # extend the difference table with a(n); diff_row[j] = Delta^j a(n-j)
        val = a(n)
        new_row = [val]
        for prev in diff_row:
            # Delta^{j+1} a(n-j-1) = Delta^j a(n-j) - Delta^j a(n-j-1)
            new_row.append(new_row[-1] - prev)
        diff_row = new_row
        t = ((-1) ** n) * diff_row[-1] / 2.0 ** (n + 1)
        acc.add(t)
        last_sizes = (last_sizes[1], abs(t))
        if n >= 2 and max(last_sizes) <= abs_tol:
            return SeriesEval(acc.value(), n + 1, max(last_sizes), "euler_accel", True)
    partial = SeriesEval(acc.value(), max_terms, max(last_sizes), "euler_accel", False)
    raise ConvergenceError("euler transform did not converge", partial)


def geometric_schedule(boundary: float = -1.0, lo: int = 4, hi: int = 20) -> list[float]:
    """Schedule t_m = boundary -/+ 2^-m approaching the boundary from inside."""
    sign = 1.0 if boundary <= 0 else -1.0
    return [boundary + sign * 2.0 ** (-m) for m in range(lo, hi + 1)]


def _richardson_diagonal(vals: Sequence[float]) -> list[float]:
    """Successive Richardson eliminations for errors c1*h + c2*h^2 + ... with
    h halving between samples.  Returns the table diagonal."""
    row = list(vals)
    diag = [row[-1]]
    for j in range(1, len(vals)):
        f = 2.0 ** j
        row = [(f * row[i] - row[i - 1]) / (f - 1.0) for i in range(1, len(row))]
        diag.append(row[-1])
    return diag


def _log_basis_fit(eps: Sequence[float], vals: Sequence[float], powers: int = 4) -> float:
    """Least-squares limit for data A + sum_p eps^p (B_p + C_p ln eps).

    Boundary values of Lerch-type sums carry eps*ln(eps) terms that plain
    power Richardson only damps; fitting the log columns removes them.
    """
    import numpy as np

    e = np.asarray(eps, dtype=float)
    L = np.log(e)
    cols = [np.ones_like(e)]
    for p in range(1, powers + 1):
        cols.append(e ** p)
        cols.append(e ** p * L)
    A = np.stack(cols, axis=1)
    coef, *_ = np.linalg.lstsq(A, np.asarray(vals, dtype=float), rcond=None)
    return float(coef[0])


def abel_mean(limit_fn: Callable[[float], float],
              schedule: Sequence[float],
              extrapolate: bool = True) -> SeriesEval:
    """Abel/boundary limit of limit_fn along a geometric schedule.

    The extrapolation is Richardson on the halving distances, extended with
    eps^p*ln(eps) columns (present whenever the boundary function has a
    logarithmic branch).  tail_bound is the last extrapolation increment.
    """
    schedule = list(schedule)
    if len(schedule) < 2:
        raise DomainError("schedule needs at least two points")
    vals = [limit_fn(t) for t in schedule]
    for v in vals:
        if not math.isfinite(v):
            raise DomainError("limit_fn not finite on the schedule")
    if not extrapolate:
        inc = abs(vals[-1] - vals[-2])
        return SeriesEval(vals[-1], len(vals), inc, "abel_mean", True)

    boundary = schedule[-1] + math.copysign(
        abs(schedule[-1] - schedule[-2]), schedule[-1] - schedule[-2])
    # distances to the (extrapolated) boundary; geometric by construction
    eps = [abs(t - boundary) for t in schedule]

    diag = _richardson_diagonal(vals)
    increments = [abs(diag[i] - diag[i - 1]) for i in range(1, len(diag))]
    best_plain = diag[-1]
    if len(vals) >= 6:
        fit = _log_basis_fit(eps, vals, powers=min(5, len(vals) // 2 - 1))
        fit_prev = _log_basis_fit(eps[:-1], vals[:-1], powers=min(5, (len(vals) - 1) // 2 - 1))
        tail = abs(fit - fit_prev) + _EPS * abs(fit)
        value = fit
    else:
        value = best_plain
        tail = increments[-1] if increments else math.inf
    if increments and min(increments) > abs(increments[0]) * 4 + 1e-300:
        partial = SeriesEval(value, len(vals), tail, "abel_mean", False)
        raise ConvergenceError("extrapolation increments do not decrease", partial)
    return SeriesEval(value, len(vals), tail, "abel_mean", True)


# ---------------------------------------------------------------------------
# tanh-sinh (double-exponential) quadrature
# ---------------------------------------------------------------------------

_T_MAX = 6.56  # beyond this the DE weights underflow double precision


def tanh_sinh_integrate(p: QuadratureProblem) -> SeriesEval:
    """Double-exponential quadrature with level doubling.

    Levels halve the mesh until two successive totals differ by <= abs_tol;
    the last difference is reported as the tail bound.  Endpoint-singular
    integrands (log, inverse-sqrt) are absorbed by the map; nodes are open,
    so the endpoints themselves are never evaluated.
    """
    half = 0.5 * (p.b - p.a)
    mid = 0.5 * (p.a + p.b)
    f = p.integrand

    def node_sum(ts: Sequence[float]) -> float:
        acc = _Accumulator()
        for t in ts:
            ch = math.cosh(t)
            sh = math.sinh(t)
            q = 1.5707963267948966 * sh
            u = math.tanh(q)
            # w = (pi/2) cosh(t) / cosh(q)^2, computed in log space once
            # cosh(q)^2 would overflow (q > ~350 => e^{2q} > double max)
            if abs(q) > 350.0:
                w = 6.283185307179586 * ch * math.exp(-2.0 * abs(q))
            else:
                w = 1.5707963267948966 * ch / math.cosh(q) ** 2
            if w == 0.0:
                continue
            for sgn in ((1.0,) if t == 0.0 else (1.0, -1.0)):
                x = mid + half * (sgn * u)
                if x <= p.a or x >= p.b:
                    # node collapsed onto an endpoint in floating point
                    lim = p.left_value if x <= p.a else p.right_value
                    if lim is not None:
                        acc.add(w * lim)
                    continue
                fx = f(x)
                if not math.isfinite(fx):
                    if 1.0 - abs(u) < 1e-12:
                        continue  # singular endpoint regime; weight negligible
                    raise NonfiniteIntegrandError(
                        f"integrand not finite at x={x!r} (t={t!r})")
                acc.add(w * fx)
        return acc.value()

    h = 1.0
    ts = [k * h for k in range(int(_T_MAX / h) + 1)]
    total = node_sum(ts) * h
    prev = math.inf
    level = 0
    evals = len(ts) * 2 - 1
    while level < p.max_level:
        level += 1
        h *= 0.5
        new_ts = [k * h for k in range(1, int(_T_MAX / h) + 1, 2)]
        total = total * 0.5 + node_sum(new_ts) * h
        evals += len(new_ts) * 2
        diff = abs(total - prev)
        prev = total
        if level >= 2 and diff <= p.abs_tol:
            return SeriesEval(total * half, evals, diff * abs(half), "quadrature", True)
    partial = SeriesEval(total * half, evals, abs(total - prev) * abs(half),
                         "quadrature", False)
    raise ConvergenceError(
        f"quadrature did not reach {p.abs_tol} in {p.max_level} levels", partial)


def integrate(f: Callable[[float], float], a: float, b: float,
              abs_tol: float = 1e-12, **kw) -> float:
    """Convenience wrapper returning just the value."""
    return tanh_sinh_integrate(QuadratureProblem(f, a, b, abs_tol=abs_tol, **kw)).value


def integrate_zero_to_inf(f: Callable[[float], float], abs_tol: float = 1e-12,
                          max_level: int = 12) -> float:
    """Integral over (0, inf) via u = -log v, v in (0, 1).

    The transformed integrand f(-log v)/v keeps its endpoint behaviour mild
    for the exponentially damped integrands used here; the DE map absorbs
    the remaining algebraic-log endpoint growth.
    """
    def g(v: float) -> float:
        return f(-math.log(v)) / v

    return integrate(g, 0.0, 1.0, abs_tol=abs_tol, max_level=max_level,
                     left_singularity="log", right_singularity="none")


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

def bernoulli_numbers(m: int) -> BernoulliTable:
    """B_0 .. B_{2m} by the defining recurrence, exact rationals then floats.

    sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1 pins each B_n.  Raises
    OverflowError once a value leaves binary64 range.
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    n_max = 2 * m
    fracs: list[Fraction] = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = Fraction(0)
        for k in range(n):
            s += math.comb(n + 1, k) * fracs[k]
        fracs.append(-s / (n + 1))
    values = []
    for fr in fracs:
        try:
            values.append(float(fr))
        except OverflowError:
            raise OverflowError(
                f"Bernoulli number B_{len(values)} exceeds binary64 range")
    return BernoulliTable(tuple(fracs), tuple(values))


# ---------------------------------------------------------------------------
# Euler-Maclaurin tails for slowly decaying series
# ---------------------------------------------------------------------------

def power_log_tail(coeffs: Sequence[tuple[float, float, int]], n_last: int) -> float:
    """sum_{n > n_last} of sum_i c_i * ln(n)^l_i / n^p_i  (p_i > 1, l_i in 0..2).

    Euler-Maclaurin with the integral, half-term and first derivative term;
    the neglected correction is O(g''(M)) which callers keep below their
    tolerance by choosing n_last large enough.
    """
    M = float(n_last + 1)
    L = math.log(M)
    total = 0.0
    for c, pexp, lpow in coeffs:
        q = pexp - 1.0
        if q <= 0:
            raise DomainError("tail exponent must exceed 1")
        if lpow == 0:
            integral = M ** (-q) / q
            g = M ** (-pexp)
            dg = -pexp * M ** (-pexp - 1.0)
        elif lpow == 1:
            integral = M ** (-q) * (q * L + 1.0) / (q * q)
            g = L * M ** (-pexp)
            dg = (1.0 - pexp * L) * M ** (-pexp - 1.0)
        elif lpow == 2:
            integral = M ** (-q) * (q * q * L * L + 2.0 * q * L + 2.0) / (q ** 3)
            g = L * L * M ** (-pexp)
            dg = (2.0 * L - pexp * L * L) * M ** (-pexp - 1.0)
        else:
            raise DomainError("log power must be 0, 1 or 2")
        total += c * (integral + 0.5 * g - dg / 12.0)
    return total
