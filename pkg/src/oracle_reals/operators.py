"""
Oracle arithmetic by lifting interval operators.

An interval operator comes with a Lipschitz certificate: on any tuple J
nested in a starting tuple I, ``|f(J)| <= M_I * |J|`` where ``|J|`` is the
longest component. Refining every input to ``eps / (arity * M_I)`` therefore
makes the image shorter than ``eps``, and the images form a shrinking
family whose oracle is the result.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .core import DEFAULT_BUDGET, Oracle, Outcome, answer, rational_oracle
from .errors import ContainsZero, DomainError, InconsistentPredicates, InvalidInput
from .fonsi import Fonsi, FonsiOracle
from .interval import (
    Interval,
    distance as interval_distance,
    interval_add,
    interval_div,
    interval_mul,
    interval_neg,
    interval_pow,
    interval_recip,
    interval_sub,
    separation,
)


@dataclass(frozen=True)
class IntervalOperator:
    name: str
    arity: int
    apply: Callable[..., Interval]
    lipschitz_bound: Callable[[Sequence[Interval]], Fraction]


def _const(m: int) -> Callable[[Sequence[Interval]], Fraction]:
    return lambda tup: Fraction(m)


def _mul_bound(tup: Sequence[Interval]) -> Fraction:
    return 2 * max(iv.magnitude for iv in tup)


def _recip_bound(tup: Sequence[Interval]) -> Fraction:
    m = tup[0].mignitude
    if m == 0:
        raise ContainsZero("reciprocal of an interval containing 0")
    return 1 / (m * m)


def _div_bound(tup: Sequence[Interval]) -> Fraction:
    x, y = tup
    m = y.mignitude
    if m == 0:
        raise ContainsZero("division by an interval containing 0")
    # clamped at 1 so the cube dominates both factors of the product bound
    big = max(Fraction(1), x.magnitude, 1 / m)
    return 2 * big ** 3


def _pow_bound(n: int) -> Callable[[Sequence[Interval]], Fraction]:
    def bound(tup: Sequence[Interval]) -> Fraction:
        iv = tup[0]
        if n > 0:
            return n * iv.magnitude ** (n - 1)
        k = -n
        m = iv.mignitude
        if m == 0:
            raise ContainsZero("negative power of an interval containing 0")
        # must hold for every sub-interval, including ones next to m
        return k / m ** (k + 1)
    return bound


ADD = IntervalOperator("add", 2, interval_add, _const(2))
SUB = IntervalOperator("sub", 2, interval_sub, _const(2))
NEG = IntervalOperator("neg", 1, interval_neg, _const(1))
MUL = IntervalOperator("mul", 2, interval_mul, _mul_bound)
RECIP = IntervalOperator("recip", 1, interval_recip, _recip_bound)
DIV = IntervalOperator("div", 2, interval_div, _div_bound)
DISTANCE = IntervalOperator(
    "distance", 2, lambda a, b: Interval(separation(a, b), interval_distance(a, b)), _const(2))


def pow_operator(n: int) -> IntervalOperator:
    if n == 0:
        raise InvalidInput("exponent must be nonzero")
    return IntervalOperator(f"pow{n}", 1, lambda iv: interval_pow(iv, n), _pow_bound(n))


def max_operator(arity: int) -> IntervalOperator:
    return IntervalOperator("max", arity,
                            lambda *ivs: Interval(max(i.lo for i in ivs), max(i.hi for i in ivs)),
                            _const(1))


def min_operator(arity: int) -> IntervalOperator:
    return IntervalOperator("min", arity,
                            lambda *ivs: Interval(min(i.lo for i in ivs), min(i.hi for i in ivs)),
                            _const(1))


def _find_domain_tuple(f: IntervalOperator, args: Sequence[Oracle], starts: list[Interval],
                       budget: int) -> list[Interval]:
    """Refine the inputs by halving until ``f`` is defined on them."""
    widths = [s.length for s in starts]
    current = list(starts)
    for k in range(budget + 1):
        try:
            f.apply(*current)
            f.lipschitz_bound(current)
            return current
        except ContainsZero:
            if all(iv.is_singleton for iv in current):
                break
        scale = Fraction(1, 2 ** (k + 1))
        current = [o.narrow(w * scale, within=s) if w > 0 else s
                   for o, s, w in zip(args, starts, widths)]
    raise DomainError("possibly zero")


class LiftedOracle(FonsiOracle):
    def __init__(self, f: IntervalOperator, args: Sequence[Oracle], starts: Sequence[Interval],
                 budget: int):
        self.op = f
        self.args = tuple(args)
        self.starts = tuple(starts)
        self.bound = f.lipschitz_bound(self.starts)
        hint = None
        if all(a.root_hint is not None for a in self.args):
            image = f.apply(*(Interval.point(a.root_hint) for a in self.args))
            if image.is_singleton:
                hint = image.lo
        names = ", ".join(str(a) for a in self.args)
        super().__init__(Fonsi(self._image, f"{f.name}({names})", hint), budget)

    def _image(self, eps: Fraction) -> Interval:
        if self.bound == 0:
            delta = eps
        else:
            delta = eps / (self.op.arity * self.bound)
        while True:
            inputs = [a.narrow(delta, within=s) for a, s in zip(self.args, self.starts)]
            image = self.op.apply(*inputs)
            if image.length <= eps:
                return image
            delta /= 2  # only reachable if a certificate is too optimistic

    def known_yes(self) -> Interval:
        return self.op.apply(*self.starts)


def lift(f: IntervalOperator, args: Sequence[Oracle], starts: Sequence[Interval] | None = None,
         budget: int = DEFAULT_BUDGET) -> Oracle:
    """Oracle of ``f`` applied to the numbers behind ``args``.

    ``starts`` are Yes intervals of the arguments (their known Yes intervals
    by default). When ``f`` is undefined there, the inputs are refined by
    halving, at most ``budget`` times, before giving up with DomainError.
    """
    if len(args) != f.arity:
        raise InvalidInput(f"{f.name} takes {f.arity} arguments, got {len(args)}")
    starts = list(starts) if starts is not None else [a.known_yes() for a in args]
    starts = _find_domain_tuple(f, args, starts, budget)
    return LiftedOracle(f, args, starts, budget)


def add(r: Oracle, s: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(ADD, (r, s), budget=budget)


def sub(r: Oracle, s: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(SUB, (r, s), budget=budget)


def neg(r: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(NEG, (r,), budget=budget)


def mul(r: Oracle, s: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(MUL, (r, s), budget=budget)


def recip(r: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(RECIP, (r,), budget=budget)


def div(r: Oracle, s: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(DIV, (r, s), budget=budget)


def pow_int(r: Oracle, n: int, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(pow_operator(n), (r,), budget=budget)


def distance(r: Oracle, s: Oracle, budget: int = DEFAULT_BUDGET) -> Oracle:
    return lift(DISTANCE, (r, s), budget=budget)


def sup_finite(oracles: Sequence[Oracle], budget: int = DEFAULT_BUDGET) -> Oracle:
    if not oracles:
        raise InvalidInput("need at least one oracle")
    return lift(max_operator(len(oracles)), oracles, budget=budget)


def inf_finite(oracles: Sequence[Oracle], budget: int = DEFAULT_BUDGET) -> Oracle:
    if not oracles:
        raise InvalidInput("need at least one oracle")
    return lift(min_operator(len(oracles)), oracles, budget=budget)


class SupremumOracle(Oracle):
    """Supremum of a set of rationals described by two monotone tests.

    ``is_member_ge(q)`` says q does not exceed the supremum (some member is
    at least q, or members come arbitrarily close to q); ``is_upper_bound(q)``
    says q is at or above every member. Then ``a:b`` is Yes exactly when a
    passes the first test and b the second. Every answer is recorded and
    checked against the monotonicity of both tests.
    """

    def __init__(self, is_member_ge: Callable[[Fraction], bool],
                 is_upper_bound: Callable[[Fraction], bool], seed: Interval):
        super().__init__()
        self._below = is_member_ge
        self._above = is_upper_bound
        self._seen: dict[Fraction, tuple[bool, bool]] = {}
        self._seen_lock = threading.Lock()
        self._seed = seed
        self.description = "sup"
        if self._test(seed.lo)[1] and not self._test(seed.lo)[0]:
            raise InvalidInput(f"seed lower end {seed.lo} lies above the supremum")
        if not self._test(seed.hi)[1]:
            raise InvalidInput(f"seed upper end {seed.hi} is not an upper bound")
        if self._test(seed.lo)[1]:
            self.root_hint = seed.lo
        elif self._test(seed.hi)[0]:
            self.root_hint = seed.hi

    def _test(self, q: Fraction) -> tuple[bool, bool]:
        with self._seen_lock:
            if q in self._seen:
                return self._seen[q]
            result = (bool(self._below(q)), bool(self._above(q)))
            if not (result[0] or result[1]):
                raise InconsistentPredicates(f"{q} is neither below the supremum nor an upper bound")
            for p, earlier in self._seen.items():
                (lo, lo_res), (hi, hi_res) = sorted([(p, earlier), (q, result)])
                if lo_res[1] and not hi_res[1]:
                    raise InconsistentPredicates(f"upper bound at {lo} but not at {hi}")
                if hi_res[0] and not lo_res[0]:
                    raise InconsistentPredicates(f"below the supremum at {hi} but not at {lo}")
            self._seen[q] = result
            return result

    def query(self, iv: Interval) -> Outcome:
        lo_below, _ = self._test(iv.lo)
        _, hi_above = self._test(iv.hi)
        return answer(lo_below and hi_above)

    def known_yes(self) -> Interval:
        return self._seed


def sup_rational_set(is_member_ge: Callable[[Fraction], bool],
                     is_upper_bound: Callable[[Fraction], bool], seed: Interval) -> Oracle:
    return SupremumOracle(is_member_ge, is_upper_bound, seed)


__all__ = [
    "IntervalOperator", "ADD", "SUB", "NEG", "MUL", "RECIP", "DIV", "DISTANCE",
    "pow_operator", "max_operator", "min_operator", "lift", "LiftedOracle",
    "add", "sub", "neg", "mul", "recip", "div", "pow_int", "distance",
    "sup_finite", "inf_finite", "sup_rational_set", "SupremumOracle", "rational_oracle",
]
