"""
Oracles: rules that answer whether an inclusive rational interval holds a
particular real number.

An oracle answers Yes, No, or Undecided. Undecided is reserved for oracles
whose knowledge or budget runs out; decidable rules (rationals, n-th roots)
never produce it.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded, InvalidInput, NotYesInterval, UndecidedError
from .interval import Interval, RationalLike, as_rational

DEFAULT_BUDGET = 10_000


class Answer(Enum):
    YES = "Yes"
    NO = "No"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Outcome:
    answer: Answer
    reason: str = ""

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def is_no(self) -> bool:
        return self.answer is Answer.NO

    @property
    def is_undecided(self) -> bool:
        return self.answer is Answer.UNDECIDED

    def __str__(self) -> str:
        if self.is_undecided:
            return f"Undecided({self.reason})"
        return self.answer.value


YES = Outcome(Answer.YES)
NO = Outcome(Answer.NO)


def undecided(reason: str) -> Outcome:
    return Outcome(Answer.UNDECIDED, reason)


def answer(flag: bool) -> Outcome:
    return YES if flag else NO


class Oracle:
    """Base class for all oracles.

    Subclasses implement :meth:`query` and :meth:`known_yes`. The default
    :meth:`narrow` bisects with midpoint queries and remembers the shortest
    Yes interval it has seen, so repeated refinement only pays for new bits.
    """

    root_hint: Fraction | None = None
    mutable: bool = False
    description: str = "oracle"

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._best: Interval | None = None

    def query(self, iv: Interval) -> Outcome:
        raise NotImplementedError

    def known_yes(self) -> Interval:
        """Some interval this oracle affirms."""
        raise NotImplementedError

    def narrow(self, eps: RationalLike, within: Interval | None = None) -> Interval:
        """A Yes interval of length at most ``eps``, nested in ``within`` if given.

        ``within`` must itself be a Yes interval.
        """
        eps = as_rational(eps)
        if eps <= 0:
            raise InvalidInput("eps must be positive")
        if self.root_hint is not None:
            return Interval.point(self.root_hint)
        with self._lock:
            start = self._start_for(within)
            if start.length <= eps:
                return start
            result = refine_bisect(self, start, eps, check_start=False)
            if self._best is None or result.length < self._best.length:
                self._best = result
            return result

    def _start_for(self, within: Interval | None) -> Interval:
        base = within if within is not None else self.known_yes()
        if self._best is not None:
            common = self._best.intersect(base)
            if common is not None:
                return common
        return base

    def __str__(self) -> str:
        return self.description


class RuleOracle(Oracle):
    """Oracle defined by a plain Python rule ``Interval -> Outcome``."""

    def __init__(self, rule: Callable[[Interval], Outcome], start: Interval,
                 description: str = "rule", root_hint: RationalLike | None = None):
        super().__init__()
        self._rule = rule
        self._start = start
        self.description = description
        self.root_hint = None if root_hint is None else as_rational(root_hint)

    def query(self, iv: Interval) -> Outcome:
        return self._rule(iv)

    def known_yes(self) -> Interval:
        return self._start


class RationalOracle(Oracle):
    def __init__(self, q: RationalLike):
        super().__init__()
        self.root_hint = as_rational(q)
        self.description = str(self.root_hint)

    def query(self, iv: Interval) -> Outcome:
        return answer(iv.contains(self.root_hint))

    def known_yes(self) -> Interval:
        return Interval.point(self.root_hint)


def rational_oracle(q: RationalLike) -> Oracle:
    return RationalOracle(q)


# -- refinement -----------------------------------------------------------------

def refine_bisect(r: Oracle, start: Interval, eps: RationalLike, *,
                  check_start: bool = True, budget: int | None = None) -> Interval:
    """Bisect a Yes interval until it is no longer than ``eps``.

    Each round queries the midpoint singleton (a Yes there ends the search)
    and then the left half. The result is nested in ``start``.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise InvalidInput("eps must be positive")
    if check_start:
        first = r.query(start)
        if not first.is_yes:
            raise NotYesInterval(f"{start} is not a Yes interval ({first})")
    cur = start
    steps = 0
    while cur.length > eps:
        if budget is not None and steps >= budget:
            raise BudgetExceeded(f"bisection stopped at {cur}", partial=cur)
        steps += 1
        m = cur.midpoint
        at_mid = r.query(Interval.point(m))
        if at_mid.is_yes:
            return Interval.point(m)
        if at_mid.is_undecided:
            raise BudgetExceeded(f"midpoint {m} undecided: {at_mid.reason}", partial=cur)
        left, right = cur.halves()
        side = r.query(left)
        if side.is_yes:
            cur = left
        elif side.is_no:
            cur = right
        else:
            side = r.query(right)
            if not side.is_yes:
                raise BudgetExceeded(f"halves of {cur} undecided", partial=cur)
            cur = right
    return cur


@dataclass(frozen=True)
class RootAt:
    value: Fraction


def partition_select(r: Oracle, yes: Interval, cuts: Sequence[RationalLike]) -> int | RootAt:
    """Index of the unique Yes piece of ``yes`` cut at ``cuts``, or the cut
    that is itself a Yes singleton."""
    points = [as_rational(c) for c in cuts]
    for a, b in zip(points, points[1:]):
        if not a < b:
            raise InvalidInput("cuts must be strictly increasing")
    if points and not (yes.lo < points[0] and points[-1] < yes.hi):
        raise InvalidInput("cuts must lie strictly inside the interval")
    for c in points:
        out = r.query(Interval.point(c))
        if out.is_yes:
            return RootAt(c)
        if out.is_undecided:
            raise UndecidedError(f"cut {c}: {out.reason}")
    edges = [yes.lo, *points, yes.hi]
    for i, (a, b) in enumerate(zip(edges, edges[1:])):
        out = r.query(Interval(a, b))
        if out.is_yes:
            return i
        if out.is_undecided:
            raise UndecidedError(f"piece {a} : {b}: {out.reason}")
    raise NotYesInterval(f"no piece of {yes} is a Yes interval")


# -- comparison ------------------------------------------------------------------

class Relation(Enum):
    LESS = "<"
    GREATER = ">"
    COMPATIBLE = "?"


@dataclass(frozen=True)
class Comparison:
    relation: Relation
    left: Interval
    right: Interval
    resolution: Interval | None = None

    def render(self, a: str = "a", b: str = "b") -> str:
        if self.relation is Relation.COMPATIBLE:
            return f"{a} ? {b} within [{self.resolution}]"
        return f"{a} {self.relation.value} {b}"

    def __str__(self) -> str:
        return self.render()


def compare(r: Oracle, s: Oracle, eps: RationalLike,
            r_start: Interval | None = None, s_start: Interval | None = None) -> Comparison:
    """Order two oracles, or report the interval on which both are affirmed.

    Both are refined in halving steps down to ``eps/2``; disjoint Yes
    intervals decide the order. Otherwise the hull of the last pair is Yes
    for both and no longer than ``eps``.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise InvalidInput("eps must be positive")
    r_start = r_start if r_start is not None else r.known_yes()
    s_start = s_start if s_start is not None else s.known_yes()
    if r.root_hint is not None and s.root_hint is not None:
        a, b = Interval.point(r.root_hint), Interval.point(s.root_hint)
        if a == b:
            return Comparison(Relation.COMPATIBLE, a, b, a)
        return Comparison(Relation.LESS if a.lo < b.lo else Relation.GREATER, a, b)
    target = eps / 2
    width = max(r_start.length, s_start.length, target)
    while True:
        width = max(width / 2, target)
        a = r.narrow(width, within=r_start)
        b = s.narrow(width, within=s_start)
        if a.hi < b.lo:
            return Comparison(Relation.LESS, a, b)
        if b.hi < a.lo:
            return Comparison(Relation.GREATER, a, b)
        if width == target:
            return Comparison(Relation.COMPATIBLE, a, b, a.hull(b))


def separate_points(r: Oracle, yes: Interval, c: RationalLike, d: RationalLike) -> Interval:
    """A Yes interval inside ``yes`` that leaves out ``c`` or ``d`` (or both)."""
    c, d = sorted((as_rational(c), as_rational(d)))
    if c == d:
        raise InvalidInput("points must differ")
    if not (yes.contains(c) and yes.contains(d)):
        raise InvalidInput("points must lie in the Yes interval")
    m = (c + d) / 2
    at_mid = r.query(Interval.point(m))
    if at_mid.is_yes:
        return Interval.point(m)
    if at_mid.is_undecided:
        raise UndecidedError(f"midpoint {m}: {at_mid.reason}")
    left = Interval(yes.lo, m)
    out = r.query(left)
    if out.is_yes:
        return left
    if out.is_undecided:
        raise UndecidedError(f"{left}: {out.reason}")
    return Interval(m, yes.hi)


# -- axiom harness --------------------------------------------------------------

@dataclass
class Violation:
    prop: str
    witness: tuple[Interval, ...]

    def __str__(self) -> str:
        return f"{self.prop}: " + ", ".join(str(w) for w in self.witness)


@dataclass
class AxiomReport:
    checked: int = 0
    undecided: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_point(rng: random.Random, iv: Interval) -> Fraction:
    if iv.is_singleton:
        return iv.lo
    den = rng.randint(1, 64)
    return iv.lo + iv.length * Fraction(rng.randint(0, den), den)


def _random_subinterval(rng: random.Random, iv: Interval) -> Interval:
    return Interval(_random_point(rng, iv), _random_point(rng, iv))


def axiom_check(r: Oracle, seeds: Iterable[Interval], trials: int = 100, seed: int = 0) -> AxiomReport:
    """Sample intervals around the seeds and look for broken oracle properties.

    Checks Consistency (a Yes interval stays Yes when widened), Separating
    (a cut point is a Yes singleton or exactly one side is Yes), and
    Disjointness (no two disjoint intervals are both Yes). Undecided answers
    are counted, never reported as violations.
    """
    seeds = list(seeds)
    if not seeds:
        raise InvalidInput("at least one seed interval is required")
    rng = random.Random(seed)
    report = AxiomReport()
    yes_seen: list[Interval] = []

    def ask(iv: Interval) -> Outcome:
        report.checked += 1
        out = r.query(iv)
        if out.is_undecided:
            report.undecided += 1
        return out

    for t in range(trials):
        base = seeds[t % len(seeds)]
        iv = _random_subinterval(rng, base)
        out = ask(iv)
        if out.is_yes:
            yes_seen.append(iv)
            pad = base.length / rng.randint(1, 16)
            wider = Interval(iv.lo - pad * rng.randint(0, 1), iv.hi + pad * rng.randint(0, 1))
            if not ask(wider).is_yes:
                report.violations.append(Violation("Consistency", (iv, wider)))
            if not iv.is_singleton:
                c = iv.lo + iv.length * Fraction(rng.randint(1, 15), 16)
                at_c = ask(Interval.point(c))
                if not at_c.is_yes and not at_c.is_undecided:
                    left = ask(Interval(iv.lo, c))
                    right = ask(Interval(c, iv.hi))
                    if not (left.is_undecided or right.is_undecided) and left.is_yes == right.is_yes:
                        report.violations.append(Violation("Separating", (iv, Interval.point(c))))
        # an unconditioned sample, so disjointness sees more than refinements
        probe = _random_subinterval(rng, base)
        if ask(probe).is_yes:
            yes_seen.append(probe)

    for i, a in enumerate(yes_seen):
        for b in yes_seen[i + 1:]:
            if not a.intersects(b):
                report.violations.append(Violation("Disjointness", (a, b)))
                break
    return report
