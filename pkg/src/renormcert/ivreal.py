"""Outward-rounded interval arithmetic over binary64.

Every operation returns a machine interval that is guaranteed to contain
the exact mathematical result for all points of the operand intervals.
Rounding is realized portably: each endpoint is computed in
round-to-nearest and then stepped one representable number outward
(``math.nextafter``).  Since +, -, *, /, sqrt are correctly rounded per
IEEE 754, the nearest result is within half an ulp of the truth, so a
one-ulp outward step always restores containment.

exp and ln are built from argument reduction plus a truncated Taylor
series whose remainder is enclosed explicitly, so no correctness
assumption on the platform libm is needed.

Endpoints are always finite; an operation that would overflow binary64
raises :class:`OverflowIntervalError` instead of producing ``inf``.
Underflow to subnormals (or to zero on the side away from the true
value's sign) is harmless and permitted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Interval",
    "IntervalError",
    "OverflowIntervalError",
    "DivisionByZeroInterval",
    "DomainError",
    "point",
    "from_decimal",
    "add",
    "sub",
    "mul",
    "div",
    "neg",
    "absi",
    "inv",
    "sqrti",
    "expi",
    "lni",
    "powi",
    "ipow",
    "mag",
    "mig",
    "hull",
    "contains",
]

_INF = math.inf


class IntervalError(ArithmeticError):
    """Base class for interval arithmetic failures."""


class OverflowIntervalError(IntervalError, OverflowError):
    """An endpoint left the binary64 range."""


class DivisionByZeroInterval(IntervalError, ZeroDivisionError):
    """Divisor or inversion operand straddles or touches zero."""


class DomainError(IntervalError, ValueError):
    """Operand leaves the mathematical domain (sqrt of negative, ln of
    non-positive, ...)."""


def _dn(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] with finite binary64 endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise DomainError("NaN endpoint")
        if math.isinf(self.lo) or math.isinf(self.hi):
            raise OverflowIntervalError(f"non-finite endpoint [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    # -- conversions / display ------------------------------------------

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def hex(self) -> str:
        """C99 hexadecimal-literal rendering, the bit-exact audit form."""
        return f"[{float.hex(self.lo)},{float.hex(self.hi)}]"

    @property
    def width(self) -> float:
        return _up(self.hi - self.lo)

    @property
    def mid(self) -> float:
        return self.lo + 0.5 * (self.hi - self.lo)

    # -- operator sugar (exact floats/ints coerce to point intervals) ---

    def __add__(self, other: "Interval | float | int") -> "Interval":
        return add(self, _coerce(other))

    def __radd__(self, other: float | int) -> "Interval":
        return add(_coerce(other), self)

    def __sub__(self, other: "Interval | float | int") -> "Interval":
        return sub(self, _coerce(other))

    def __rsub__(self, other: float | int) -> "Interval":
        return sub(_coerce(other), self)

    def __mul__(self, other: "Interval | float | int") -> "Interval":
        return mul(self, _coerce(other))

    def __rmul__(self, other: float | int) -> "Interval":
        return mul(_coerce(other), self)

    def __truediv__(self, other: "Interval | float | int") -> "Interval":
        return div(self, _coerce(other))

    def __rtruediv__(self, other: float | int) -> "Interval":
        return div(_coerce(other), self)

    def __neg__(self) -> "Interval":
        return neg(self)

    def __contains__(self, x: float) -> bool:
        return contains(self, x)


def _coerce(x: "Interval | float | int") -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval(float(x), float(x))


def point(x: float) -> Interval:
    """Degenerate interval [x, x]."""
    return Interval(float(x), float(x))


ZERO = point(0.0)
ONE = point(1.0)


def from_decimal(text: str) -> Interval:
    """Tightest interval containing the exact decimal value of ``text``.

    Width is one ulp unless the decimal is exactly representable.
    """
    exact = Fraction(text.strip())
    near = float(exact)
    if math.isinf(near):
        raise OverflowIntervalError(f"decimal {text!r} outside binary64 range")
    fnear = Fraction(near)
    if fnear == exact:
        return Interval(near, near)
    if fnear < exact:
        return Interval(near, _up(near))
    return Interval(_dn(near), near)


def _mk(lo: float, hi: float) -> Interval:
    """Outward-round a nearest-rounded endpoint pair into an interval."""
    lo, hi = _dn(lo), _up(hi)
    if math.isinf(lo) or math.isinf(hi):
        raise OverflowIntervalError(f"overflow to [{lo}, {hi}]")
    return Interval(lo, hi)


# -- the four arithmetic operations -------------------------------------


def add(a: Interval, b: Interval) -> Interval:
    return _mk(a.lo + b.lo, a.hi + b.hi)


def sub(a: Interval, b: Interval) -> Interval:
    return _mk(a.lo - b.hi, a.hi - b.lo)


def mul(a: Interval, b: Interval) -> Interval:
    p1 = a.lo * b.lo
    p2 = a.lo * b.hi
    p3 = a.hi * b.lo
    p4 = a.hi * b.hi
    return _mk(min(p1, p2, p3, p4), max(p1, p2, p3, p4))


def div(a: Interval, b: Interval) -> Interval:
    if not b.lo * b.hi > 0.0:
        raise DivisionByZeroInterval(f"divisor {b!r} meets zero")
    q1 = a.lo / b.lo
    q2 = a.lo / b.hi
    q3 = a.hi / b.lo
    q4 = a.hi / b.hi
    return _mk(min(q1, q2, q3, q4), max(q1, q2, q3, q4))


# -- exact operations ----------------------------------------------------


def neg(a: Interval) -> Interval:
    # negation of a binary64 is exact: no widening
    return Interval(-a.hi, -a.lo)


def absi(a: Interval) -> Interval:
    lo = max(0.0, a.lo, -a.hi)
    hi = -min(0.0, a.lo, -a.hi)
    return Interval(lo, hi)


def mag(a: Interval) -> float:
    """Exact upper bound on |x| over the interval."""
    return max(abs(a.lo), abs(a.hi))


def mig(a: Interval) -> float:
    """Exact lower bound on |x| over the interval (0 if it meets zero)."""
    if a.lo <= 0.0 <= a.hi:
        return 0.0
    return min(abs(a.lo), abs(a.hi))


def hull(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def contains(a: Interval, x: float) -> bool:
    return a.lo <= x <= a.hi


# -- inversion and roots --------------------------------------------------


def inv(a: Interval) -> Interval:
    if not a.lo * a.hi > 0.0:
        raise DivisionByZeroInterval(f"inverse of {a!r} meets zero")
    return _mk(1.0 / a.hi, 1.0 / a.lo)


def _sqrt_dn(x: float) -> float:
    r = math.sqrt(x)
    # r*r == x is necessary for exactness; confirm with exact arithmetic
    if r * r == x and Fraction(r) * Fraction(r) == Fraction(x):
        return r
    return _dn(r)


def _sqrt_up(x: float) -> float:
    r = math.sqrt(x)
    if r * r == x and Fraction(r) * Fraction(r) == Fraction(x):
        return r
    return _up(r)


def sqrti(a: Interval) -> Interval:
    if a.lo < 0.0:
        raise DomainError(f"sqrt of {a!r}")
    return Interval(max(0.0, _sqrt_dn(a.lo)), _sqrt_up(a.hi))


# -- exp / ln via truncated series with enclosed remainder ----------------
#
# Both functions run their Taylor cores in fixed-point integer arithmetic
# (scale 2**-_FIX bits) with directed rounding on every step, add a
# rigorous tail bound, and convert outward to binary64 once at the end.
# Point-input result widths stay at 1-2 ulp over the full argument range.

_FIX = 200  # working precision in bits; ~60 guard digits over binary64

# ln 2 enclosure: _LN2_INT/2**_FIX < ln 2 < (_LN2_INT+1)/2**_FIX
# (integer floor of ln2 * 2**200, from a 70-digit reference value)
_LN2_INT = (
    Fraction("0.6931471805599453094172321214581765680755001343602552541206800094934")
    * (1 << _FIX)
).__floor__()

# ... and the adjacent-float enclosure used where an Interval is handy
_LN2 = Interval(float.fromhex("0x1.62e42fefa39efp-1"),
                float.fromhex("0x1.62e42fefa39f0p-1"))

_EXP_TERMS = 16   # |t| <= 0.35: tail <= 2*0.35^17/17! ~ 1.6e-22
_ATANH_TERMS = 12  # |u| <= 0.1716: tail <= 2*0.1716^29 ~ 6e-23


def _float_dn(q: Fraction) -> float:
    """Largest binary64 <= q (raises on magnitude overflow upward)."""
    v = float(q)
    if math.isinf(v):
        if v < 0:
            raise OverflowIntervalError("result overflows binary64")
        return float.fromhex("0x1.fffffffffffffp+1023")
    return _dn(v) if Fraction(v) > q else v


def _float_up(q: Fraction) -> float:
    v = float(q)
    if math.isinf(v):
        if v > 0:
            raise OverflowIntervalError("result overflows binary64")
        return -float.fromhex("0x1.fffffffffffffp+1023")
    return _up(v) if Fraction(v) < q else v


def _imul_dn(a: int, b: int) -> int:
    return (a * b) >> _FIX  # Python >> floors, also for negatives


def _imul_up(a: int, b: int) -> int:
    return -((-(a * b)) >> _FIX)


def _idiv_dn(a: int, k: int) -> int:
    return a // k


def _idiv_up(a: int, k: int) -> int:
    return -((-a) // k)


def _exp_series_fix(t_lo: int, t_hi: int, tmax: int) -> tuple[int, int]:
    """Enclosure of exp on [t_lo, t_hi]/2**_FIX, |t| <= tmax/2**_FIX <= 0.5."""
    one = 1 << _FIX
    tot_lo = tot_hi = one
    term_lo = term_hi = one
    for k in range(1, _EXP_TERMS + 1):
        p = (_imul_dn(term_lo, t_lo), _imul_dn(term_lo, t_hi),
             _imul_dn(term_hi, t_lo), _imul_dn(term_hi, t_hi))
        q = (_imul_up(term_lo, t_lo), _imul_up(term_lo, t_hi),
             _imul_up(term_hi, t_lo), _imul_up(term_hi, t_hi))
        term_lo, term_hi = _idiv_dn(min(p), k), _idiv_up(max(q), k)
        tot_lo += term_lo
        tot_hi += term_hi
    # tail: 2 * tmax^(N+1)/(N+1)!  (the factor 2 covers 1/(1-|t|), |t| <= 1/2)
    tp = tmax
    for _ in range(_EXP_TERMS):
        tp = _imul_up(tp, tmax) + 1
    tail = _idiv_up(2 * tp, math.factorial(_EXP_TERMS + 1)) + 1
    return tot_lo - tail, tot_hi + tail


def _fix_to_float_dn(s: int, shift: int) -> float:
    """Largest float <= s * 2**shift (s a moderate-size integer)."""
    v = math.ldexp(float(s), shift)  # <= 1 rounding; 2 if subnormal
    if math.isinf(v):
        if v < 0:
            raise OverflowIntervalError("result overflows binary64")
        return float.fromhex("0x1.fffffffffffffp+1023")
    return _dn(_dn(v)) if abs(v) < 2.3e-308 else _dn(v)


def _fix_to_float_up(s: int, shift: int) -> float:
    v = math.ldexp(float(s), shift)
    if math.isinf(v):
        if v > 0:
            raise OverflowIntervalError("result overflows binary64")
        return -float.fromhex("0x1.fffffffffffffp+1023")
    return _up(_up(v)) if abs(v) < 2.3e-308 else _up(v)


def _exp_point(x: float) -> Interval:
    if x == 0.0:
        return ONE
    if x >= 709.8:
        raise OverflowIntervalError(f"exp({x}) overflows")
    if abs(x) < 2.0**-100:
        # 1 + x dominates all other terms at this scale
        pad = math.ulp(1.0)
        return Interval(_dn(1.0 + x - pad), _up(1.0 + x + pad))
    k = int(round(x / 0.6931471805599453))
    ix = int(math.ldexp(x, _FIX))  # exact: |x| > 2^-100
    t_lo, t_hi = ix - k * (_LN2_INT + 1), ix - k * _LN2_INT
    if k < 0:
        t_lo, t_hi = ix - k * _LN2_INT, ix - k * (_LN2_INT + 1)
    tmax = max(abs(t_lo), abs(t_hi))
    if tmax >= (1 << _FIX) // 2:  # unreachable; guards the tail constant
        raise DomainError("exp reduction out of range")
    s_lo, s_hi = _exp_series_fix(t_lo, t_hi, tmax)
    lo = _fix_to_float_dn(s_lo, k - _FIX)
    hi = _fix_to_float_up(s_hi, k - _FIX)
    return Interval(max(lo, 0.0), hi)


def expi(a: Interval) -> Interval:
    return Interval(_exp_point(a.lo).lo, _exp_point(a.hi).hi)


def _atanh_series_fix(u_lo: int, u_hi: int) -> tuple[int, int]:
    tot_lo, tot_hi = u_lo, u_hi
    term_lo, term_hi = u_lo, u_hi
    # u^2 enclosure
    usq_lo = min(_imul_dn(u_lo, u_lo), _imul_dn(u_lo, u_hi), _imul_dn(u_hi, u_hi))
    usq_lo = max(usq_lo, 0)
    usq_hi = max(_imul_up(u_lo, u_lo), _imul_up(u_lo, u_hi), _imul_up(u_hi, u_hi))
    for k in range(1, _ATANH_TERMS + 1):
        p = (_imul_dn(term_lo, usq_lo), _imul_dn(term_lo, usq_hi),
             _imul_dn(term_hi, usq_lo), _imul_dn(term_hi, usq_hi))
        q = (_imul_up(term_lo, usq_lo), _imul_up(term_lo, usq_hi),
             _imul_up(term_hi, usq_lo), _imul_up(term_hi, usq_hi))
        term_lo, term_hi = min(p), max(q)
        tot_lo += _idiv_dn(term_lo, 2 * k + 1)
        tot_hi += _idiv_up(term_hi, 2 * k + 1)
    umax = max(abs(u_lo), abs(u_hi))
    tp = umax
    for _ in range(2 * _ATANH_TERMS + 2):
        tp = _imul_up(tp, umax) + 1
    tail = 2 * tp + 1  # covers 1/(1-u^2) <= 2 for |u| <= 0.18
    return tot_lo - tail, tot_hi + tail


def _ln_point(x: float) -> Interval:
    if x <= 0.0:
        raise DomainError(f"ln({x})")
    if x == 1.0:
        return ZERO
    f, e = math.frexp(x)  # x = f * 2**e, f in [0.5, 1)
    if f < 0.7071067811865476:
        f *= 2.0
        e -= 1
    # u = (f-1)/(f+1), |u| <= 0.1716, enclosed in fixed point
    fi = int(math.ldexp(f, _FIX))  # exact
    num, den = fi - (1 << _FIX), fi + (1 << _FIX)
    u_lo = (num << _FIX) // den
    u_hi = u_lo + 1
    s_lo, s_hi = _atanh_series_fix(u_lo, u_hi)
    if e >= 0:
        lo_i = 2 * s_lo + e * _LN2_INT
        hi_i = 2 * s_hi + e * (_LN2_INT + 1)
    else:
        lo_i = 2 * s_lo + e * (_LN2_INT + 1)
        hi_i = 2 * s_hi + e * _LN2_INT
    return Interval(_fix_to_float_dn(lo_i, -_FIX), _fix_to_float_up(hi_i, -_FIX))


def lni(a: Interval) -> Interval:
    if a.lo <= 0.0:
        raise DomainError(f"ln of {a!r}")
    return Interval(_ln_point(a.lo).lo, _ln_point(a.hi).hi)


def powi(a: Interval, b: Interval) -> Interval:
    """a**b for a > 0 via exp(b * ln a)."""
    if a.lo <= 0.0:
        raise DomainError(f"pow base {a!r} not positive")
    return expi(mul(b, lni(a)))


def ipow(a: Interval, n: int) -> Interval:
    """Sharp integer power (handles even powers of sign-changing intervals)."""
    if n < 0:
        return inv(ipow(a, -n))
    if n == 0:
        return ONE
    if n == 1:
        return a
    if n % 2 == 0:
        m = absi(a)
        return Interval(_pow_dn(m.lo, n), _pow_up(m.hi, n))
    if a.lo >= 0.0:
        return Interval(_pow_dn(a.lo, n), _pow_up(a.hi, n))
    if a.hi <= 0.0:
        return Interval(-_pow_up(-a.lo, n), -_pow_dn(-a.hi, n))
    return Interval(-_pow_up(-a.lo, n), _pow_up(a.hi, n))


def _pow_dn(x: float, n: int) -> float:
    # x >= 0: repeated squaring, rounding every step down
    result, base = 1.0, x
    while n:
        if n & 1:
            result = _dn(result * base)
        n >>= 1
        if n:
            base = _dn(base * base)
    return max(result, 0.0)


def _pow_up(x: float, n: int) -> float:
    result, base = 1.0, x
    while n:
        if n & 1:
            result = _up(result * base)
        n >>= 1
        if n:
            base = _up(base * base)
    return result
