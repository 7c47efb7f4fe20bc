"""
Exact rational intervals.

Endpoints are :class:`fractions.Fraction` values, always stored reduced with a
positive denominator. Intervals are inclusive and may be singletons; building
one from unordered endpoints sorts them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import ContainsZero, ParseError

RationalLike = Union[int, Fraction, str]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions and exact strings ("3/4", "1.25") to a Fraction.

    Floats are refused: they would smuggle binary rounding into exact work.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}", 0) from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True, init=False)
class Interval:
    """Inclusive interval ``lo : hi`` with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __init__(self, a: RationalLike, b: RationalLike | None = None):
        a = as_rational(a)
        b = a if b is None else as_rational(b)
        if b < a:
            a, b = b, a
        object.__setattr__(self, "lo", a)
        object.__setattr__(self, "hi", b)

    @classmethod
    def point(cls, q: RationalLike) -> Interval:
        return cls(q, q)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    @property
    def magnitude(self) -> Fraction:
        """Largest absolute value of any point."""
        return max(abs(self.lo), abs(self.hi))

    @property
    def mignitude(self) -> Fraction:
        """Smallest absolute value of any point."""
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def contains(self, q: RationalLike) -> bool:
        q = as_rational(q)
        return self.lo <= q <= self.hi

    def __contains__(self, q: RationalLike) -> bool:
        return self.contains(q)

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def within(self, other: Interval) -> bool:
        """True when self is nested in (or equal to) other."""
        return other.lo <= self.lo and self.hi <= other.hi

    def intersects(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: Interval) -> Interval | None:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def hull(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def halves(self) -> tuple[Interval, Interval]:
        m = self.midpoint
        return Interval(self.lo, m), Interval(m, self.hi)

    def __str__(self) -> str:
        if self.is_singleton:
            return format_rational(self.lo)
        return f"{format_rational(self.lo)} : {format_rational(self.hi)}"

    def __repr__(self) -> str:
        return f"Interval({self})"

    def __add__(self, other: Interval) -> Interval:
        return interval_add(self, other)

    def __sub__(self, other: Interval) -> Interval:
        return interval_sub(self, other)

    def __mul__(self, other: Interval) -> Interval:
        return interval_mul(self, other)

    def __truediv__(self, other: Interval) -> Interval:
        return interval_div(self, other)

    def __neg__(self) -> Interval:
        return interval_neg(self)

    def __pow__(self, n: int) -> Interval:
        return interval_pow(self, n)


class IntervalRelation(Enum):
    DISJOINT = "Disjoint"
    STRICTLY_OVERLAPPING = "StrictlyOverlapping"
    NESTED_FIRST_IN_SECOND = "NestedFirstInSecond"
    NESTED_SECOND_IN_FIRST = "NestedSecondInFirst"
    EQUAL = "Equal"


def relate(x: Interval, y: Interval) -> IntervalRelation:
    if x == y:
        return IntervalRelation.EQUAL
    if x.hi < y.lo or y.hi < x.lo:
        return IntervalRelation.DISJOINT
    if x.within(y):
        return IntervalRelation.NESTED_FIRST_IN_SECOND
    if y.within(x):
        return IntervalRelation.NESTED_SECOND_IN_FIRST
    return IntervalRelation.STRICTLY_OVERLAPPING


def separation(x: Interval, y: Interval) -> Fraction:
    """Gap between two intervals, 0 when they meet."""
    return max(Fraction(0), y.lo - x.hi, x.lo - y.hi)


def distance(x: Interval, y: Interval) -> Fraction:
    """Largest distance between a point of x and a point of y."""
    return max(x.hi - y.lo, y.hi - x.lo)


def metrics(x: Interval, y: Interval) -> tuple[Fraction, Fraction]:
    return separation(x, y), distance(x, y)


# -- arithmetic ---------------------------------------------------------------

def interval_add(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo + y.lo, x.hi + y.hi)


def interval_neg(x: Interval) -> Interval:
    return Interval(-x.hi, -x.lo)


def interval_sub(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo - y.hi, x.hi - y.lo)


def interval_mul(x: Interval, y: Interval) -> Interval:
    products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
    return Interval(min(products), max(products))


def interval_recip(x: Interval) -> Interval:
    if x.contains_zero():
        raise ContainsZero("reciprocal of an interval containing 0")
    return Interval(1 / x.hi, 1 / x.lo)


def interval_div(x: Interval, y: Interval) -> Interval:
    return interval_mul(x, interval_recip(y))


def interval_pow(x: Interval, n: int) -> Interval:
    """n-fold interval product of x with itself (n != 0).

    For mixed-sign x this is wider than the set of n-th powers: every factor
    ranges independently over x, so (-2:3)^4 is -54:81.
    """
    if n == 0:
        raise ValueError("the 0th power of an interval is not defined")
    if n < 0:
        if x.contains_zero():
            raise ContainsZero("negative power of an interval containing 0")
        return interval_recip(interval_pow(x, -n))
    if x.lo >= 0 or x.hi <= 0:
        a, b = x.lo ** n, x.hi ** n
        return Interval(a, b)
    # mixed signs: s dominates in magnitude, t is the other endpoint
    if -x.lo >= x.hi:
        s, t = x.lo, x.hi
    else:
        s, t = x.hi, x.lo
    return Interval(s ** n, s ** (n - 1) * t)


# -- decimal strings ----------------------------------------------------------

class DecimalMode(Enum):
    SHORT_ROUNDING = "short"
    TRUNCATION = "trunc"
    LONG_ROUNDING = "long"
    BIG_UNCERTAINTY = "big"


_DECIMAL = re.compile(r"([+-]?)(\d+)(?:\.(\d+))?")


def parse_decimal(text: str) -> tuple[int, Fraction, int]:
    """Split a decimal string into (sign, magnitude, number of fraction digits)."""
    m = _DECIMAL.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"malformed decimal {text!r}", 0, {"digits"})
    sign = -1 if m.group(1) == "-" else 1
    frac = m.group(3) or ""
    magnitude = Fraction(int(m.group(2) + frac), 10 ** len(frac))
    return sign, magnitude, len(frac)


def decimal_to_interval(text: str, mode: DecimalMode) -> Interval:
    """Interval implied by a decimal string under one of four readings.

    With ``n`` fraction digits and ``u = 10**-n``:
    short rounding is ``x ± u/2``, truncation ``x : x+u``, long rounding
    ``x ± u`` and big uncertainty ``x ± 5u``. A leading minus mirrors the
    interval of the magnitude, so truncation moves away from zero.
    """
    sign, x, digits = parse_decimal(text)
    unit = Fraction(1, 10 ** digits)
    if mode is DecimalMode.SHORT_ROUNDING:
        lo, hi = x - unit / 2, x + unit / 2
    elif mode is DecimalMode.TRUNCATION:
        lo, hi = x, x + unit
    elif mode is DecimalMode.LONG_ROUNDING:
        lo, hi = x - unit, x + unit
    elif mode is DecimalMode.BIG_UNCERTAINTY:
        lo, hi = x - 5 * unit, x + 5 * unit
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Interval(sign * lo, sign * hi)


def format_decimal(q: Fraction, min_digits: int = 0) -> str:
    """Exact decimal text for a fraction whose denominator divides a power of ten."""
    den, twos, fives = q.denominator, 0, 0
    while den % 2 == 0:
        den, twos = den // 2, twos + 1
    while den % 5 == 0:
        den, fives = den // 5, fives + 1
    if den != 1:
        raise ValueError(f"{q} has no finite decimal expansion")
    digits = max(twos, fives, min_digits)
    whole, frac = divmod(abs(q.numerator) * 10 ** digits // q.denominator, 10 ** digits)
    sign = "-" if q < 0 else ""
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def parse_interval(text: str) -> Interval:
    """Parse ``"p/q:r/s"``, decimal endpoints, or a single rational."""
    parts = text.split(":")
    if len(parts) > 2:
        raise ParseError(f"too many ':' in {text!r}", text.index(":", text.index(":") + 1), {"rational"})
    ends = []
    offset = 0
    for part in parts:
        try:
            ends.append(Fraction(part.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad interval endpoint {part.strip()!r}", offset, {"rational", "decimal"}) from exc
        offset += len(part) + 1
    return Interval(*ends)
