"""
Concrete oracles: n-th roots, e, pi, sign-change (IVT) oracles, and two
demonstration oracles whose value is not known (Collatz) or not fixed in
advance (coin toss). Also a few exact helpers around these numbers.
"""

from __future__ import annotations

import math
import random
import threading
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .core import NO, YES, Oracle, Outcome, answer, undecided
from .errors import InvalidInput, PreconditionViolated
from .fonsi import Fonsi, SeriesSpec, from_series
from .interval import Interval, RationalLike, as_rational


# -- n-th roots ------------------------------------------------------------------

def iroot(m: int, n: int) -> int:
    """Largest integer r with r**n <= m, for m >= 0 and n >= 1."""
    if m < 0 or n < 1:
        raise InvalidInput("iroot needs m >= 0 and n >= 1")
    if m < 2 or n == 1:
        return m
    if n == 2:
        return math.isqrt(m)
    r = 1 << -(-m.bit_length() // n)  # an upper bound
    while True:
        nxt = ((n - 1) * r + m // r ** (n - 1)) // n
        if nxt >= r:
            break
        r = nxt
    while r ** n > m:
        r -= 1
    while (r + 1) ** n <= m:
        r += 1
    return r


def _exact_root(q: Fraction, n: int) -> Fraction | None:
    num, den = iroot(q.numerator, n), iroot(q.denominator, n)
    if num ** n == q.numerator and den ** n == q.denominator:
        return Fraction(num, den)
    return None


class RootOracle(Oracle):
    """The positive n-th root of q > 0."""

    def __init__(self, q: RationalLike, n: int):
        super().__init__()
        q = as_rational(q)
        if q <= 0 or n < 1:
            raise InvalidInput(f"root needs q > 0 and n >= 1, got q={q}, n={n}")
        self.q, self.n = q, n
        self.root_hint = _exact_root(q, n)
        self.description = f"root({q},{n})"

    def query(self, iv: Interval) -> Outcome:
        if iv.hi <= 0:
            return NO
        return answer(max(iv.lo, Fraction(0)) ** self.n <= self.q <= iv.hi ** self.n)

    def known_yes(self) -> Interval:
        return Interval(0, max(Fraction(1), self.q))

    def narrow(self, eps: RationalLike, within: Interval | None = None) -> Interval:
        eps = as_rational(eps)
        if eps <= 0:
            raise InvalidInput("eps must be positive")
        if self.root_hint is not None:
            return Interval.point(self.root_hint)
        # smallest k with 2**k >= 1/eps
        k = (-(-eps.denominator // eps.numerator) - 1).bit_length()
        scale = 2 ** k
        r = iroot(math.floor(self.q * scale ** self.n), self.n)
        found = Interval(Fraction(r, scale), Fraction(r + 1, scale))
        if within is None:
            return found
        common = found.intersect(within)
        if common is None:
            raise InvalidInput(f"{within} is not a Yes interval of {self}")
        return common


def nth_root(q: RationalLike, n: int) -> Oracle:
    return RootOracle(q, n)


def newton_iterates(q: RationalLike, n: int, x0: RationalLike) -> Iterator[Fraction]:
    """x0, x1, ... with x_{k+1} = ((n-1) x_k + q / x_k^(n-1)) / n."""
    q, x = as_rational(q), as_rational(x0)
    while True:
        yield x
        x = ((n - 1) * x + q / x ** (n - 1)) / n


def newton_root_fonsi(q: RationalLike, n: int, x0: RationalLike) -> Fonsi:
    """Family ``x_k : q / x_k^(n-1)``, which always brackets the n-th root."""
    q, x0 = as_rational(q), as_rational(x0)
    if q <= 0 or x0 <= 0 or n < 1:
        raise InvalidInput("need q > 0, x0 > 0 and n >= 1")
    members: list[Interval] = []
    iterates = newton_iterates(q, n, x0)
    lock = threading.Lock()

    def shrink(eps: Fraction) -> Interval:
        with lock:
            for iv in members:
                if iv.length <= eps:
                    return iv
            while True:
                x = next(iterates)
                iv = Interval(x, q / x ** (n - 1))
                members.append(iv)
                if iv.length <= eps:
                    return iv

    return Fonsi(shrink, f"newton root({q},{n})", _exact_root(q, n))


# -- e ------------------------------------------------------------------------------

def e_series() -> Fonsi:
    """``S_n : S_n + 1/(n! n)`` with ``S_n = sum_{i<=n} 1/i!``."""
    spec = SeriesSpec(term=lambda i: Fraction(1, math.factorial(i)),
                      tail_bound=lambda n: Fraction(1, math.factorial(n) * n),
                      first=1)
    return from_series(spec, description="e")


def compound_bracket(n: int) -> Interval:
    """Exact ``(1+1/n)^n : (1+1/n)^(n+1)``."""
    if n < 1:
        raise InvalidInput("n must be at least 1")
    base = Fraction(n + 1, n)
    low = base ** n
    return Interval(low, low * base)


def _power_bounds(base: Fraction, k: int, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic lower and upper bounds for base**k (base >= 1), rounding outward."""
    one = 1 << bits
    lo_b = base.numerator * one // base.denominator
    hi_b = -(-base.numerator * one // base.denominator)
    lo_acc, hi_acc = one, one
    while k:
        if k & 1:
            lo_acc = lo_acc * lo_b >> bits
            hi_acc = -(-(hi_acc * hi_b) >> bits)
        k >>= 1
        if k:
            lo_b = lo_b * lo_b >> bits
            hi_b = -(-(hi_b * hi_b) >> bits)
    return Fraction(lo_acc, one), Fraction(hi_acc, one)


_EXACT_COMPOUND_LIMIT = 2000


def e_compound() -> Fonsi:
    """Family from ``(1+1/n)^n : (1+1/n)^(n+1)``, whose length is below 3/n.

    Large n uses a dyadic enclosure of that bracket computed with outward
    rounding, so every member still contains e.
    """

    def shrink(eps: Fraction) -> Interval:
        n = max(1, math.ceil(3 / eps))
        if n <= _EXACT_COMPOUND_LIMIT:
            return compound_bracket(n)
        n *= 2  # leaves half of eps for rounding
        bits = 64 + 2 * max(1, math.ceil(math.log2(n)))
        while True:
            base = Fraction(n + 1, n)
            lo, _ = _power_bounds(base, n, bits)
            _, hi = _power_bounds(base, n + 1, bits)
            if hi - lo <= eps:
                return Interval(lo, hi)
            bits *= 2

    return Fonsi(shrink, "e (compound)")


def e_denominator_exclusion(q: int) -> bool:
    """True when no fraction r/q lies strictly inside ``S_q : S_q + 1/(q! q)``."""
    if q < 1:
        raise InvalidInput("q must be at least 1")
    s = sum(Fraction(1, math.factorial(i)) for i in range(q + 1))
    lo = q * s
    hi = lo + Fraction(1, math.factorial(q))
    return not (math.floor(lo) + 1 < hi)


# -- pi -----------------------------------------------------------------------------

def _bbp_term(i: int) -> Fraction:
    k = 8 * i
    return Fraction(1, 16 ** i) * (Fraction(4, k + 1) - Fraction(2, k + 4)
                                   - Fraction(1, k + 5) - Fraction(1, k + 6))


def pi_bbp() -> Fonsi:
    """``S_n : S_n + 1/(15 * 16^n)`` from the hexadecimal digit-extraction series."""
    spec = SeriesSpec(term=_bbp_term, tail_bound=lambda n: Fraction(1, 15 * 16 ** n), first=0)
    return from_series(spec, description="pi")


# -- sign change oracles ----------------------------------------------------------

class Sign(Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1
    UNKNOWN = None


def sin_sign(q: RationalLike, depth: int = 30) -> Sign:
    """Sign of sin(q) from ``depth`` power series terms and the Lagrange remainder.

    Unknown when the resulting bracket contains 0 (and q is not 0).
    """
    q = as_rational(q)
    if depth < 1:
        raise InvalidInput("depth must be at least 1")
    if q == 0:
        return Sign.ZERO
    total, term = Fraction(0), q
    for k in range(depth):
        total += term
        term = -term * q * q / ((2 * k + 2) * (2 * k + 3))
    remainder = abs(term)
    if total - remainder > 0:
        return Sign.POSITIVE
    if total + remainder < 0:
        return Sign.NEGATIVE
    return Sign.UNKNOWN


class SignChangeOracle(Oracle):
    """Root of a monotone function on ``a:b``, known only through the sign
    of ``f(q) - y`` at rationals.

    Callers promise that f is strictly monotone on ``a:b``. Intervals reaching
    outside ``a:b`` are answered by their intersection with it.
    """

    def __init__(self, sign: Callable[[Fraction], Sign], a: RationalLike, b: RationalLike,
                 description: str = "ivt"):
        super().__init__()
        self.sign = sign
        self.domain = Interval(a, b)
        self.description = description
        at_lo, at_hi = sign(self.domain.lo), sign(self.domain.hi)
        if Sign.UNKNOWN in (at_lo, at_hi):
            raise InvalidInput("endpoint signs are not computable")
        if at_lo is Sign.ZERO:
            self.root_hint = self.domain.lo
        elif at_hi is Sign.ZERO:
            self.root_hint = self.domain.hi
        elif at_lo is at_hi:
            raise InvalidInput(f"no sign change on {self.domain}")

    def query(self, iv: Interval) -> Outcome:
        part = iv.intersect(self.domain)
        if part is None:
            return NO
        s, t = self.sign(part.lo), self.sign(part.hi)
        if Sign.UNKNOWN in (s, t):
            return undecided("precision")
        if Sign.ZERO in (s, t):
            return YES
        return answer(s is not t)

    def known_yes(self) -> Interval:
        return self.domain


def ivt_oracle(sign: Callable[[Fraction], Sign], a: RationalLike, b: RationalLike,
               description: str = "ivt") -> Oracle:
    return SignChangeOracle(sign, a, b, description)


def sine_pi_oracle(depth: int = 30) -> Oracle:
    """pi as the zero of sin on 3:4."""
    return ivt_oracle(lambda q: sin_sign(q, depth), 3, 4, "pi (sine)")


# -- demonstration oracles --------------------------------------------------------

def collatz_terminates(k: int, max_steps: int = 10 ** 6) -> bool:
    steps = 0
    while k != 1:
        k = k // 2 if k % 2 == 0 else 3 * k + 1
        steps += 1
        if steps > max_steps:
            return False
    return True


class CollatzOracle(Oracle):
    """0 if every Collatz sequence reaches 1, otherwise 1/N for the first
    failure N. Termination is checked up to ``bound``, which leaves the
    candidates 0 and 1/N for N > bound.
    """

    def __init__(self, bound: int = 10 ** 4):
        super().__init__()
        if bound < 1:
            raise InvalidInput("bound must be at least 1")
        for k in range(1, bound + 1):
            if not collatz_terminates(k):
                self.root_hint = Fraction(1, k)
                break
        self.bound = bound
        self.description = f"collatz({bound})"

    def query(self, iv: Interval) -> Outcome:
        if self.root_hint is not None:
            return answer(iv.contains(self.root_hint))
        edge = Fraction(1, self.bound + 1)
        if iv.lo <= 0 and iv.hi >= edge:
            return YES
        if iv.contains(0):
            return undecided("conjecture")
        if iv.hi < 0 or iv.lo > edge:
            return NO
        # 0 < lo <= hi < edge: the candidates 1/N inside have N in [1/hi, 1/lo]
        if math.floor(1 / iv.lo) >= math.ceil(1 / iv.hi):
            return undecided("conjecture")
        return NO

    def known_yes(self) -> Interval:
        return Interval(-1, 1)


def collatz_oracle(bound: int = 10 ** 4) -> Oracle:
    return CollatzOracle(bound)


class CoinTossOracle(Oracle):
    """An oracle that settles its number one random bit at a time.

    The current interval C starts as ``start``; ends may become open once a
    flip assigns the other side of a cut. ``transcript`` records every query
    and answer. Single owner only: queries mutate the state.
    """

    mutable = True

    def __init__(self, bits: Iterable[int] | int | None = None, start: Interval = Interval(0, 1)):
        super().__init__()
        if start.is_singleton:
            raise InvalidInput("start must have positive length")
        if bits is None or isinstance(bits, int):
            rng = random.Random(bits)
            self._bits: Iterator[int] = iter(lambda: rng.getrandbits(1), None)
        else:
            self._bits = iter(bits)
        self.lo, self.hi = start.lo, start.hi
        self.lo_open = self.hi_open = False
        self.transcript: list[tuple[Interval, Outcome]] = []
        self.description = "coin toss"

    def _flip(self) -> bool:
        return bool(next(self._bits))

    def current(self) -> tuple[Interval, bool, bool]:
        return Interval(self.lo, self.hi), self.lo_open, self.hi_open

    def _answer(self, iv: Interval) -> Outcome:
        a, b = iv.lo, iv.hi
        if a <= self.lo and b >= self.hi:
            return YES
        if b < self.lo or a > self.hi or (b == self.lo and self.lo_open) or (a == self.hi and self.hi_open):
            return NO
        cuts_lo, cuts_hi = a > self.lo, b < self.hi
        if cuts_lo and cuts_hi:
            if self._flip():
                self.lo, self.hi, self.lo_open, self.hi_open = a, b, False, False
                return YES
            if self._flip():
                self.hi, self.hi_open = a, True
            else:
                self.lo, self.lo_open = b, True
            return NO
        keep = self._flip()
        if cuts_hi:  # the query covers the left part of C up to b
            if keep:
                self.hi, self.hi_open = b, False
            else:
                self.lo, self.lo_open = b, True
        else:  # the query covers the right part of C from a
            if keep:
                self.lo, self.lo_open = a, False
            else:
                self.hi, self.hi_open = a, True
        return answer(keep)

    def query(self, iv: Interval) -> Outcome:
        with self._lock:
            out = self._answer(iv)
            self.transcript.append((iv, out))
            return out

    def known_yes(self) -> Interval:
        return Interval(self.lo, self.hi)


def coin_toss_oracle(bits: Iterable[int] | int | None = None,
                     start: Interval = Interval(0, 1)) -> Oracle:
    return CoinTossOracle(bits, start)


# -- exact helpers ----------------------------------------------------------------

def _witness_step(r: Fraction, n: int, gap: Fraction) -> Fraction:
    big = max(Fraction(1), 3 * n * r ** (n - 1) / gap, 3 * (r + 1) ** n / gap)
    return Fraction(1, math.ceil(big))


def power_witness_below(r: RationalLike, q: RationalLike, n: int) -> Fraction:
    """Some s > r with s**n < q, given 0 <= r and r**n < q."""
    r, q = as_rational(r), as_rational(q)
    if n < 1 or r < 0 or q <= 0 or not r ** n < q:
        raise PreconditionViolated("need n >= 1, r >= 0, q > 0 and r**n < q")
    return r + _witness_step(r, n, q - r ** n)


def power_witness_above(r: RationalLike, q: RationalLike, n: int) -> Fraction:
    """Some 0 < s < r with s**n > q, given r > 0, q >= 0 and r**n > q."""
    r, q = as_rational(r), as_rational(q)
    if n < 1 or r <= 0 or q < 0 or not r ** n > q:
        raise PreconditionViolated("need n >= 1, r > 0, q >= 0 and r**n > q")
    step = _witness_step(r, n, r ** n - q)
    while not (r - step > 0 and (r - step) ** n > q):
        step /= 2
    return r - step


def pythagorean_sqrt2_interval(t: RationalLike) -> Interval:
    """``(1+t^2)/(1-t^2) : (1+t^2)/(2t)``, a bracket of sqrt 2 for 0 < t < 1."""
    t = as_rational(t)
    if not 0 < t < 1:
        raise InvalidInput("t must satisfy 0 < t < 1")
    top = 1 + t * t
    return Interval(top / (1 - t * t), top / (2 * t))
