"""Minimal double-double (pairwise extended precision) arithmetic.

A value is an unevaluated sum hi + lo with |lo| <= ulp(hi)/2, giving about
106 significant bits.  Only the operations needed by the binomial-sum
evaluator are provided: +, -, *, /, integer conversion, exp, log and real
powers.  Python 3.10 has no fused multiply-add, so products are split with
Dekker's algorithm.
"""

from __future__ import annotations

import math

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


class DD:
    """Immutable double-double number."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float, lo: float = 0.0):
        self.hi = hi
        self.lo = lo

    @staticmethod
    def from_int(n: int) -> "DD":
        # exact for |n| < 2**106
        hi = float(n)
        lo = float(n - int(hi))
        return DD(*quick_two_sum(hi, lo))

    def __repr__(self):
        return f"DD({self.hi!r}, {self.lo!r})"

    def __float__(self):
        return self.hi + self.lo

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __add__(self, other):
        if not isinstance(other, DD):
            other = DD(float(other))
        s, e = two_sum(self.hi, other.hi)
        e += self.lo + other.lo
        return DD(*quick_two_sum(s, e))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, DD):
            other = DD(float(other))
        return self + (-other)

    def __rsub__(self, other):
        return DD(float(other)) + (-self)

    def __mul__(self, other):
        if not isinstance(other, DD):
            other = DD(float(other))
        p, e = two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        return DD(*quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, DD):
            other = DD(float(other))
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        s, e = quick_two_sum(q1, q2)
        return DD(*quick_two_sum(s, e + q3))

    def __rtruediv__(self, other):
        return DD(float(other)) / self


_DD_LN2 = DD(0.6931471805599453, 2.3190468138462996e-17)
_DD_ONE = DD(1.0)


def dd_exp(x: DD) -> DD:
    """exp for double-double, via range reduction and a Taylor series."""
    if x.hi > 709.0:
        raise OverflowError("dd_exp overflow")
    if x.hi < -709.0:
        return DD(0.0)
    n = round(float(x) / 0.6931471805599453)
    r = x - _DD_LN2 * n
    # |r| <= ln2/2; Taylor to degree 20 reaches ~1e-33
    term = DD(1.0)
    total = DD(1.0)
    for k in range(1, 21):
        term = term * r / k
        total = total + term
    return DD(math.ldexp(total.hi, n), math.ldexp(total.lo, n))


def dd_log(a: DD) -> DD:
    """log for double-double (a > 0), one Newton refinement of math.log."""
    if a.hi <= 0.0:
        raise ValueError("dd_log domain")
    y0 = math.log(a.hi)
    # e = a*exp(-y0) - 1 is ~1 ulp; log(a) = y0 + log1p(e) ~ y0 + e - e^2/2
    e = a * dd_exp(DD(-y0)) - 1.0
    corr = e - e * e * 0.5
    return DD(y0) + corr


def dd_powi(a: DD, n: int) -> DD:
    """Integer power by binary exponentiation."""
    if n < 0:
        return _DD_ONE / dd_powi(a, -n)
    result = DD(1.0)
    base = a
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def dd_pow(a: DD, x: float) -> DD:
    """a**x for a > 0 and real x; exact-ish integer powers take a fast path."""
    if x == int(x) and abs(x) <= 512:
        return dd_powi(a, int(x))
    return dd_exp(dd_log(a) * DD(x))
