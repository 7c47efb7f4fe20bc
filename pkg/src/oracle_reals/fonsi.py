"""
Families of overlapping, shrinking intervals and the oracles they define.

A family is represented by its ``shrink`` rule: given a width ``eps`` it
returns one member of length at most ``eps``. Any two members intersect.
"""

from __future__ import annotations

import bisect
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .core import DEFAULT_BUDGET, NO, YES, Oracle, Outcome, answer, undecided
from .errors import InvalidInput, NoSmallEnough, UndecidedError
from .interval import Interval, IntervalRelation, RationalLike, as_rational, relate


@dataclass(frozen=True)
class Fonsi:
    shrink: Callable[[Fraction], Interval]
    description: str = "fonsi"
    root_hint: Fraction | None = None


class FonsiOracle(Oracle):
    """Oracle answering from a family: Yes once a member fits inside the
    query, No once a member misses it, Undecided when ``budget`` halvings
    leave the member straddling an endpoint."""

    def __init__(self, fonsi: Fonsi, budget: int = DEFAULT_BUDGET):
        super().__init__()
        self.fonsi = fonsi
        self.budget = budget
        self.description = fonsi.description
        self.root_hint = fonsi.root_hint
        self._first: Interval | None = None

    def query(self, iv: Interval) -> Outcome:
        if self.root_hint is not None:
            return answer(iv.contains(self.root_hint))
        eps = iv.length if iv.length > 0 else Fraction(1)
        for _ in range(self.budget):
            try:
                member = self.fonsi.shrink(eps)
            except NoSmallEnough:
                return undecided("family exhausted")
            rel = relate(member, iv)
            if rel in (IntervalRelation.NESTED_FIRST_IN_SECOND, IntervalRelation.EQUAL):
                return YES
            if rel is IntervalRelation.DISJOINT:
                return NO
            eps /= 2
        return undecided("boundary")

    def known_yes(self) -> Interval:
        if self._first is None:
            self._first = self.fonsi.shrink(Fraction(1))
        return self._first

    def narrow(self, eps: RationalLike, within: Interval | None = None) -> Interval:
        eps = as_rational(eps)
        if eps <= 0:
            raise InvalidInput("eps must be positive")
        if self.root_hint is not None:
            return Interval.point(self.root_hint)
        member = self.fonsi.shrink(eps)
        if within is None:
            return member
        common = member.intersect(within)
        if common is None:
            raise UndecidedError(f"member {member} misses the Yes interval {within}")
        return common


def fonsi_to_oracle(f: Fonsi, budget: int = DEFAULT_BUDGET) -> Oracle:
    return FonsiOracle(f, budget)


class _IndexedFamily:
    """Memoised members ``value(i) : value(i) + bound(i)`` for i >= first.

    Keeps running minima of the bounds so the first index with a bound
    below eps is a binary search once the prefix is computed.
    """

    def __init__(self, value: Callable[[int], Fraction], bound: Callable[[int], Fraction],
                 first: int, max_index: int):
        self._value = value
        self._bound = bound
        self._first = first
        self._max_index = max_index
        self._bounds: list[Fraction] = []
        self._neg_running_min: list[Fraction] = []
        self._lock = threading.Lock()

    def member(self, i: int) -> Interval:
        v = as_rational(self._value(i))
        return Interval(v, v + as_rational(self._bound(i)))

    def first_index(self, eps: Fraction) -> int:
        with self._lock:
            if not self._neg_running_min or -self._neg_running_min[-1] > eps:
                while True:
                    i = self._first + len(self._bounds)
                    if i > self._max_index:
                        raise NoSmallEnough(f"no error bound <= {eps} up to index {self._max_index}")
                    b = as_rational(self._bound(i))
                    if b < 0:
                        raise InvalidInput(f"negative error bound at index {i}")
                    self._bounds.append(b)
                    prev = -self._neg_running_min[-1] if self._neg_running_min else b
                    self._neg_running_min.append(-min(prev, b))
                    if b <= eps:
                        break
            return self._first + bisect.bisect_left(self._neg_running_min, -eps)

    def shrink(self, eps: Fraction) -> Interval:
        return self.member(self.first_index(as_rational(eps)))


def from_error_sequence(values: Callable[[int], RationalLike], bounds: Callable[[int], RationalLike],
                        first: int = 0, max_index: int = 10 ** 6,
                        description: str = "error-bounded sequence") -> Fonsi:
    """Family ``q_i : q_i + e_i`` for a sequence whose later terms stay in
    each earlier member; shrink(eps) picks the first i with ``e_i <= eps``."""
    family = _IndexedFamily(values, bounds, first, max_index)
    return Fonsi(family.shrink, description)


@dataclass(frozen=True)
class SeriesSpec:
    term: Callable[[int], RationalLike]
    tail_bound: Callable[[int], RationalLike]
    first: int = 0


class _PartialSums:
    def __init__(self, term: Callable[[int], RationalLike]):
        self._term = term
        self._sums: list[Fraction] = []
        self._lock = threading.Lock()

    def __call__(self, n: int) -> Fraction:
        with self._lock:
            while len(self._sums) <= n:
                prev = self._sums[-1] if self._sums else Fraction(0)
                self._sums.append(prev + as_rational(self._term(len(self._sums))))
            return self._sums[n]


def from_series(spec: SeriesSpec, signed: bool = False, description: str = "series") -> Fonsi:
    """Family from partial sums ``S_n`` with tail bound ``p_n``.

    Positive series give ``S_n : S_n + p_n``; ``signed`` series (absolutely
    convergent, any sign) give ``S_n - p_n : S_n + p_n``.
    """
    sums = _PartialSums(spec.term)
    if signed:
        return from_error_sequence(lambda n: sums(n) - as_rational(spec.tail_bound(n)),
                                   lambda n: 2 * as_rational(spec.tail_bound(n)),
                                   first=spec.first, description=description)
    return from_error_sequence(sums, spec.tail_bound, first=spec.first, description=description)


def from_cauchy(seq: Callable[[int], Oracle],
                modulus: Callable[[int], tuple[int, Interval]],
                description: str = "Cauchy limit") -> Fonsi:
    """Family for the limit of a sequence of oracles.

    ``modulus(M)`` must return ``(N, I)`` with ``|I| <= 1/M`` and ``I`` a Yes
    interval of every term from ``N`` on; the term ``seq(N)`` is checked.
    """

    def shrink(eps: Fraction) -> Interval:
        m = math.ceil(1 / as_rational(eps))
        n, iv = modulus(m)
        if iv.length > Fraction(1, m):
            raise NoSmallEnough(f"modulus gave {iv}, longer than 1/{m}")
        if not seq(n).query(iv).is_yes:
            raise NoSmallEnough(f"{iv} is not a Yes interval of term {n}")
        return iv

    return Fonsi(shrink, description)


# -- anti-diagonal ----------------------------------------------------------------

def anti_diagonal_intervals(oracles: Sequence[Oracle], count: int | None = None) -> list[Interval]:
    """Nested intervals I_0, I_1, ... with I_i a No interval of every a_j, j <= i.

    Start from 0:1. A No answer keeps the current interval the first time and
    takes its left half afterwards, so the intervals always shrink. A Yes
    answer keeps whichever half is No; when both halves are Yes the oracle
    sits at the midpoint and the left quarter is taken. Past the end of the
    list the left half is taken at every step.
    """
    count = len(oracles) if count is None else count
    out: list[Interval] = []
    cur = Interval(0, 1)
    for i in range(count):
        left, right = cur.halves()
        if i >= len(oracles):
            cur = left
            out.append(cur)
            continue
        a = oracles[i]
        whole = a.query(cur)
        if whole.is_undecided:
            raise UndecidedError(f"oracle {i} on {cur}: {whole.reason}")
        if whole.is_no:
            cur = cur if i == 0 else left
        else:
            on_left = a.query(left)
            if on_left.is_undecided:
                raise UndecidedError(f"oracle {i} on {left}: {on_left.reason}")
            if on_left.is_no:
                cur = left
            else:
                on_right = a.query(right)
                if on_right.is_undecided:
                    raise UndecidedError(f"oracle {i} on {right}: {on_right.reason}")
                cur = right if on_right.is_no else left.halves()[0]
        out.append(cur)
    return out


def anti_diagonal(oracles: Sequence[Oracle]) -> Fonsi:
    """Family whose oracle differs from every oracle in the list."""
    oracles = list(oracles)
    cache: list[Interval] = []
    lock = threading.Lock()

    def shrink(eps: Fraction) -> Interval:
        with lock:
            i = 0
            while True:
                if i >= len(cache):
                    cache[:] = anti_diagonal_intervals(oracles, max(2 * len(cache), len(oracles), 8))
                if cache[i].length <= eps:
                    return cache[i]
                i += 1

    return Fonsi(shrink, "anti-diagonal")
