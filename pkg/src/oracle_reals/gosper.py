"""
Continued fraction arithmetic on the bihomographic form

    z = (a + b x + c y + d x y) / (e + f x + g y + h x y)

Ingesting the next term p of x substitutes ``x = p + 1/x'``; a term r of z
is emitted once all four corner values (x, y each 0 or infinity) share the
floor r, and then ``z = r + 1/z'``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import InvalidInput


class GosperOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class Var(Enum):
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class BihomState:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int
    h: int

    def __post_init__(self) -> None:
        if not (self.e or self.f or self.g or self.h):
            raise InvalidInput("the denominator must not vanish identically")

    @property
    def numerator(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    @property
    def denominator(self) -> tuple[int, int, int, int]:
        return self.e, self.f, self.g, self.h

    def corners(self) -> list[Fraction | float | None]:
        """Values at (x, y) = (0,0), (inf,0), (0,inf), (inf,inf).

        A zero denominator gives ``±math.inf``; 0/0 gives None.
        """
        out: list[Fraction | float | None] = []
        for n, d in zip(self.numerator, self.denominator):
            if d:
                out.append(Fraction(n, d))
            elif n:
                out.append(math.inf if n > 0 else -math.inf)
            else:
                out.append(None)
        return out

    def corner_floors(self) -> list[int | None]:
        """Floors of the finite corners, None for infinite or undefined ones."""
        return [math.floor(c) if isinstance(c, Fraction) else None for c in self.corners()]

    def live_corners(self) -> list[int]:
        """Indices of the corners that matter.

        A variable whose coefficients all vanish (its input has ended) no
        longer affects the value, so only its 0 corners are kept.
        """
        x_live = any((self.b, self.d, self.f, self.h))
        y_live = any((self.c, self.d, self.g, self.h))
        return [i for i in range(4) if (x_live or i in (0, 2)) and (y_live or i in (0, 1))]

    def rows(self) -> str:
        return " ".join(map(str, self.numerator)) + " / " + " ".join(map(str, self.denominator))

    def __str__(self) -> str:
        return self.rows()


def gosper_init(op: GosperOp) -> BihomState:
    seeds = {
        GosperOp.ADD: (0, 1, 1, 0, 1, 0, 0, 0),
        GosperOp.SUB: (0, 1, -1, 0, 1, 0, 0, 0),
        GosperOp.MUL: (0, 0, 0, 1, 1, 0, 0, 0),
        GosperOp.DIV: (0, 1, 0, 0, 0, 0, 1, 0),  # x / y
    }
    return BihomState(*seeds[op])


def _sub_x(row: tuple[int, int, int, int], p: int) -> tuple[int, int, int, int]:
    a, b, c, d = row
    return b, a + b * p, d, c + d * p


def _sub_y(row: tuple[int, int, int, int], p: int) -> tuple[int, int, int, int]:
    a, b, c, d = row
    return c, d, a + c * p, b + d * p


def _end_x(row: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    a, b, c, d = row
    return b, 0, d, 0


def _end_y(row: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    a, b, c, d = row
    return c, d, 0, 0


def gosper_ingest(st: BihomState, var: Var, term: int) -> BihomState:
    """Substitute ``var = term + 1/var'``."""
    sub = _sub_x if var is Var.X else _sub_y
    return BihomState(*sub(st.numerator, term), *sub(st.denominator, term))


def gosper_finish(st: BihomState, var: Var) -> BihomState:
    """Let an input whose expansion has ended go to infinity (its last
    term is already in the state)."""
    end = _end_x if var is Var.X else _end_y
    return BihomState(*end(st.numerator), *end(st.denominator))


def gosper_extract(st: BihomState) -> tuple[int | None, BihomState]:
    """Emit the next output term when all four corners agree on it."""
    dens = st.denominator
    live = [dens[i] for i in st.live_corners()]
    if any(d == 0 for d in live):
        return None, st
    if not (all(d > 0 for d in live) or all(d < 0 for d in live)):
        return None, st
    floors = {st.numerator[i] // dens[i] for i in st.live_corners()}
    if len(floors) != 1:
        return None, st
    r = floors.pop()
    rest = tuple(n - d * r for n, d in zip(st.numerator, dens))
    if not any(rest):
        return r, st  # exact: nothing left after r
    return r, BihomState(*dens, *rest)


Schedule = Callable[[int], Var]


def alternate(step: int) -> Var:
    return Var.X if step % 2 == 0 else Var.Y


@dataclass
class GosperRun:
    terms: list[int]
    states: list[BihomState]
    exact: bool = False


def gosper_stream(op: GosperOp, x_terms: Iterable[int], y_terms: Iterable[int],
                  rounds: int, schedule: Schedule = alternate,
                  finite_inputs: bool = False) -> GosperRun:
    """Run ``rounds`` ingest steps chosen by ``schedule``, extracting as many
    output terms as possible after each one.

    With ``finite_inputs`` the given terms are the whole expansions; an
    input that runs out is sent to infinity. Otherwise they are prefixes and
    running out simply stops ingestion of that input.
    """
    sources: dict[Var, Iterator[int]] = {Var.X: iter(x_terms), Var.Y: iter(y_terms)}
    done = {Var.X: False, Var.Y: False}
    st = gosper_init(op)
    run = GosperRun([], [st])
    for step in range(rounds):
        var = schedule(step)
        if done[var]:
            var = Var.Y if var is Var.X else Var.X
            if done[var]:
                break
        term = next(sources[var], None)
        if term is None:
            done[var] = True
            if not finite_inputs:
                continue
            end = _end_x if var is Var.X else _end_y
            if not any(end(st.denominator)):
                # the remainder after the last emitted term is infinite
                run.exact = True
                return run
            st = gosper_finish(st, var)
        else:
            st = gosper_ingest(st, var, term)
        run.states.append(st)
        while True:
            r, nxt = gosper_extract(st)
            if r is None:
                break
            run.terms.append(r)
            if nxt is st:
                run.exact = True
                return run
            st = nxt
            run.states.append(st)
    return run


def gosper_round(st: BihomState, x_term: int, y_term: int) -> tuple[list[int], BihomState]:
    """Ingest one term of x and one of y, then extract all that is settled."""
    st = gosper_ingest(gosper_ingest(st, Var.X, x_term), Var.Y, y_term)
    emitted = []
    while True:
        r, nxt = gosper_extract(st)
        if r is None or nxt is st:
            if r is not None:
                emitted.append(r)
            return emitted, st
        emitted.append(r)
        st = nxt
