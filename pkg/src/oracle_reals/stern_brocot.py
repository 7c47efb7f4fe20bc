"""
Mediant approximation and continued fractions.

A Farey interval keeps its endpoints as unreduced pairs ``(p, q)`` so that
``1/0`` can stand for infinity and the determinant ``q*r - p*s`` survives
mediant splitting. The mediant process walks the Stern-Brocot tree; the
lengths of runs of same-side moves are the continued fraction terms.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import DEFAULT_BUDGET, Oracle, Outcome
from .errors import BudgetExceeded, InvalidInput, ParseError, TargetOutsideInterval
from .interval import Interval, RationalLike, as_rational


class Pair(NamedTuple):
    """A fraction kept as written; ``den`` may be 0 for ``±1/0``."""

    num: int
    den: int

    @classmethod
    def of(cls, q: RationalLike) -> Pair:
        q = as_rational(q)
        return cls(q.numerator, q.denominator)

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    @property
    def value(self) -> Fraction:
        if self.den == 0:
            raise ValueError(f"{self} is not a finite rational")
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


INFINITY = Pair(1, 0)


def _pair(x: Pair | RationalLike | tuple[int, int]) -> Pair:
    if isinstance(x, Pair):
        return x
    if isinstance(x, tuple):
        return Pair(*x)
    return Pair.of(x)


@dataclass(frozen=True, init=False)
class FareyInterval:
    lo: Pair
    hi: Pair

    def __init__(self, lo: Pair | RationalLike | tuple[int, int], hi: Pair | RationalLike | tuple[int, int]):
        lo, hi = _pair(lo), _pair(hi)
        if lo.den < 0 or hi.den < 0:
            raise InvalidInput("denominators must be non-negative")
        if lo.den == 0:
            raise InvalidInput("the left endpoint must be finite")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def determinant(self) -> int:
        return self.lo.den * self.hi.num - self.lo.num * self.hi.den

    @property
    def is_finite(self) -> bool:
        return self.hi.is_finite

    def as_interval(self) -> Interval:
        return Interval(self.lo.value, self.hi.value)

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


CANONICAL_START = FareyInterval(Pair(0, 1), INFINITY)


def mediant(fi: FareyInterval) -> Pair:
    return Pair(fi.lo.num + fi.hi.num, fi.lo.den + fi.hi.den)


class Side(Enum):
    LEFT = "L"   # the number is below the mediant: the right endpoint moves
    RIGHT = "R"  # the number is above the mediant: the left endpoint moves


def cf_step(fi: FareyInterval, side: Side, k: int = 1) -> FareyInterval:
    """``k`` same-side mediant moves at once."""
    if k < 1:
        raise InvalidInput("k must be at least 1")
    lo, hi = fi.lo, fi.hi
    if side is Side.LEFT:
        return FareyInterval(lo, Pair(hi.num + k * lo.num, hi.den + k * lo.den))
    return FareyInterval(Pair(lo.num + k * hi.num, lo.den + k * hi.den), hi)


# -- continued fractions ----------------------------------------------------------

@dataclass(frozen=True)
class CFExpansion:
    terms: tuple[int, ...]
    exact: bool = False

    def __post_init__(self) -> None:
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise InvalidInput("a continued fraction needs at least one term")
        if any(t < 1 for t in terms[1:]):
            raise InvalidInput("terms after the first must be positive")
        if self.exact and len(terms) > 1 and terms[-1] == 1:
            terms = terms[:-2] + (terms[-2] + 1,)
        object.__setattr__(self, "terms", terms)

    def __str__(self) -> str:
        head, rest = self.terms[0], [str(t) for t in self.terms[1:]]
        if not self.exact:
            rest.append("…")
        if not rest:
            return f"[{head}]"
        return f"[{head}; {', '.join(rest)}]"

    @classmethod
    def parse(cls, text: str) -> CFExpansion:
        m = re.fullmatch(r"\s*\[\s*(-?\d+)\s*(?:;\s*(.*?))?\s*\]\s*", text)
        if m is None:
            raise ParseError(f"malformed continued fraction {text!r}", 0, {"["})
        rest = [p.strip() for p in (m.group(2) or "").split(",") if p.strip()]
        exact = not (rest and rest[-1] in ("…", "..."))
        if not exact:
            rest = rest[:-1]
        try:
            return cls((int(m.group(1)), *(int(p) for p in rest)), exact)
        except ValueError as exc:
            raise ParseError(f"malformed continued fraction {text!r}", m.start(2) or 0, {"integer"}) from exc

    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("only exact expansions have a single value")
        return cf_eval(self).lo.value


def cf_eval(cf: CFExpansion | Sequence[int]) -> FareyInterval:
    """Bracket left by consuming the terms in the mediant process.

    Exact expansions return the degenerate interval at their value.
    """
    if not isinstance(cf, CFExpansion):
        cf = CFExpansion(tuple(cf))
    fi = FareyInterval(Pair(cf.terms[0], 1), INFINITY)
    last = fi.lo
    for i, t in enumerate(cf.terms[1:]):
        side = Side.LEFT if i % 2 == 0 else Side.RIGHT
        fi = cf_step(fi, side, t)
        last = fi.hi if side is Side.LEFT else fi.lo
    if cf.exact:
        return FareyInterval(last, last)
    return fi


def cf_of_rational(q: RationalLike) -> CFExpansion:
    q = as_rational(q)
    terms = []
    num, den = q.numerator, q.denominator
    while den:
        a, rem = divmod(num, den)
        terms.append(a)
        num, den = den, rem
    return CFExpansion(tuple(terms), exact=True)


def _sb_runs(fi: FareyInterval) -> list[int] | None:
    """Run lengths of the tree path that reaches ``fi`` from 0/1 : 1/0.

    The first entry counts right moves and may be negative when the interval
    lies below 0. None when ``fi`` is not a Farey pair.
    """
    if fi.determinant != 1:
        return None
    shift = max(0, -math.floor(Fraction(fi.lo.num, fi.lo.den)))
    lo = Pair(fi.lo.num + shift * fi.lo.den, fi.lo.den)
    hi = Pair(fi.hi.num + shift * fi.hi.den, fi.hi.den)
    target = FareyInterval(lo, hi)
    cur = CANONICAL_START
    runs = [0]
    while (cur.lo, cur.hi) != (target.lo, target.hi):
        m = mediant(cur)
        # target sits left of m when its right end is at or below m
        if target.hi.num * m.den <= m.num * target.hi.den and target.hi.den != 0:
            cur, side = FareyInterval(cur.lo, m), Side.LEFT
        else:
            cur, side = FareyInterval(m, cur.hi), Side.RIGHT
        _record(runs, side)
    runs[0] -= shift
    return runs


def _record(runs: list[int], side: Side) -> None:
    want_even = side is Side.RIGHT
    if (len(runs) % 2 == 1) == want_even:
        runs[-1] += 1
    else:
        runs.append(1)


# -- mediant process ----------------------------------------------------------------

@dataclass
class MediantResult:
    intervals: list[FareyInterval] = field(default_factory=list)
    mediants: list[Pair] = field(default_factory=list)
    runs: list[int] | None = None
    root: Fraction | None = None
    root_pair: Pair | None = None
    straddle: Interval | None = None
    steps: int = 0

    @property
    def current(self) -> FareyInterval:
        return self.intervals[-1]

    @property
    def cf(self) -> CFExpansion | None:
        """Terms settled so far; the last run may still grow unless exact."""
        if self.runs is None:
            return None
        if self.root is not None:
            return CFExpansion(tuple(self.runs), exact=True)
        if len(self.runs) == 1:
            return CFExpansion((self.runs[0],), exact=False)
        return CFExpansion(tuple(self.runs[:-1]), exact=False)


def _ask(r: Oracle, lo: Pair, hi: Pair) -> Outcome:
    return r.query(Interval(lo.value, hi.value))


def mediant_process(r: Oracle, start: FareyInterval = CANONICAL_START,
                    max_steps: int = DEFAULT_BUDGET, max_terms: int | None = None) -> MediantResult:
    """Approximate the number of ``r`` by repeated mediant splitting.

    Each step asks whether the mediant itself is the number, then which side
    holds it. When the mediant's singleton (or both sides) comes back
    Undecided, symmetric straddling intervals around it are tried instead and
    the shortest affirmed one is kept in ``straddle``. Stops after
    ``max_steps`` queries rounds, or once ``max_terms`` continued fraction
    terms are settled. Raises BudgetExceeded (with the partial result) when
    it gets stuck before any straddling interval is affirmed.
    """
    res = MediantResult(intervals=[start], runs=_sb_runs(start))
    cur = start
    # splitting never reaches an endpoint, so check those once up front
    for end in (start.lo, start.hi):
        if end.is_finite and r.query(Interval.point(end.value)).is_yes:
            res.root, res.root_pair = end.value, end
            res.runs = list(cf_of_rational(end.value).terms)
            return res
    while res.steps < max_steps:
        if max_terms is not None and res.runs is not None and len(res.runs) - 1 >= max_terms:
            break
        res.steps += 1
        m = mediant(cur)
        res.mediants.append(m)
        side = _choose_side(r, cur, m)
        if side == "root":
            res.root, res.root_pair = m.value, m
            if res.runs is not None:
                res.runs[-1] += 1
            break
        if side is None:
            resumed = _straddle(r, cur, m, res, max_steps)
            if resumed is None:
                break
            cur = resumed
            res.intervals.append(cur)
            res.runs = _sb_runs(cur)
            continue
        cur = FareyInterval(cur.lo, m) if side is Side.LEFT else FareyInterval(m, cur.hi)
        res.intervals.append(cur)
        if res.runs is not None:
            _record(res.runs, side)
    return res


def _choose_side(r: Oracle, cur: FareyInterval, m: Pair) -> Side | str | None:
    at_m = r.query(Interval.point(m.value))
    if at_m.is_yes:
        return "root"
    if at_m.is_undecided:
        return None
    left = _ask(r, cur.lo, m)
    if left.is_yes:
        return Side.LEFT
    if left.is_no:
        return Side.RIGHT
    if cur.hi.is_finite:
        right = _ask(r, m, cur.hi)
        if right.is_yes:
            return Side.RIGHT
        if right.is_no:
            return Side.LEFT
    return None


def _straddle(r: Oracle, cur: FareyInterval, m: Pair, res: MediantResult,
              max_steps: int) -> FareyInterval | None:
    """Try ``L_k : R_k`` around the stuck mediant for k = 1, 2, ...

    ``L_k`` and ``R_k`` are k-fold mediants of m with its left and right
    neighbours. A Yes keeps shrinking; a No means the number sits in one of
    the two pieces just given up, and the normal process resumes there.
    """
    left = cur.lo
    right = cur.hi if cur.hi.is_finite else Pair(2 * m.num - left.num, 2 * m.den - left.den)
    prev_l, prev_r = left, right
    k = 0
    while res.steps < max_steps:
        k += 1
        res.steps += 1
        lk = Pair(left.num + k * m.num, left.den + k * m.den)
        rk = Pair(right.num + k * m.num, right.den + k * m.den)
        out = _ask(r, lk, rk)
        if out.is_yes:
            res.straddle = Interval(lk.value, rk.value)
            prev_l, prev_r = lk, rk
            continue
        if out.is_no:
            piece = _ask(r, prev_l, lk)
            if piece.is_yes:
                return FareyInterval(prev_l, lk)
            piece = _ask(r, rk, prev_r)
            if piece.is_yes:
                return FareyInterval(rk, prev_r)
        break
    if res.straddle is None:
        raise BudgetExceeded(f"stuck at mediant {m} of {cur}", partial=res)
    return None


# -- weighted mediants --------------------------------------------------------------

@dataclass(frozen=True)
class WeightedMediant:
    m: int
    n: int
    r: int
    reached: Pair


def weighted_mediant_solve(lo: Pair | RationalLike | tuple[int, int],
                           hi: Pair | RationalLike | tuple[int, int],
                           target: RationalLike) -> WeightedMediant:
    """Coprime weights m, n with ``(m*a + n*c) / (m*b + n*d) = r*e / r*f``.

    ``lo = a/b`` and ``hi = c/d`` are taken as written (not reduced); the
    target ``e/f`` is reduced. The process started at ``lo : hi`` reaches
    the target as the unreduced fraction ``reached``.
    """
    lo, hi = _pair(lo), _pair(hi)
    if lo.den <= 0 or hi.den <= 0:
        raise InvalidInput("endpoints need positive denominators")
    t = as_rational(target)
    a, b, c, d = lo.num, lo.den, hi.num, hi.den
    e, f = t.numerator, t.denominator
    if not (a * f < e * b and e * d < c * f):
        raise TargetOutsideInterval(f"{t} is not strictly between {lo} and {hi}")
    det = b * c - a * d
    u, v = c * f - d * e, b * e - a * f
    s = math.gcd(u, v)
    m, n, r = u // s, v // s, det // s
    return WeightedMediant(m, n, r, Pair(m * a + n * c, m * b + n * d))
