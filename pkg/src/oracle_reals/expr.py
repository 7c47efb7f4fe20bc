"""
Arithmetic expressions over exact reals.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' ['-'] integer] | '-' factor
    atom   := literal | 'pi' | 'e' | 'root' '(' literal ',' integer ')' | '(' expr ')'

A literal is an integer, a decimal such as ``1.41``, or a fraction ``p/q``
written without spaces; ``3/4^2`` therefore means ``(3/4)^2``. ``root(q, n)``
is the positive n-th root of q.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import operators as ops
from .constants import nth_root, pi_bbp, e_series
from .core import DEFAULT_BUDGET, Comparison, Oracle, Outcome, compare, rational_oracle
from .errors import BudgetExceeded, DomainError, InvalidInput, ParseError
from .fonsi import FonsiOracle
from .interval import (
    DecimalMode,
    Interval,
    RationalLike,
    as_rational,
    decimal_to_interval,
    format_decimal,
)
from .stern_brocot import CFExpansion, FareyInterval, mediant_process


# -- syntax tree ------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class E:
    pass


@dataclass(frozen=True)
class Root:
    radicand: Fraction
    index: int


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div:
    left: Expr
    right: Expr


Expr = Union[Lit, Pi, E, Root, Neg, Pow, Add, Sub, Mul, Div]

_BINARY = {Add: "+", Sub: "-", Mul: "*", Div: "/"}
_BY_SYMBOL = {v: k for k, v in _BINARY.items()}


# -- tokens -----------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+/\d+|\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^(),]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(Token("end", "", pos))
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos,
                             {"number", "name", "operator"})
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()


# -- parser -----------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _fail(self, expected: set[str]) -> ParseError:
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        return ParseError(f"unexpected {what}", t.pos, expected)

    def _eat(self, text: str) -> None:
        if self.tok.text != text or self.tok.kind == "end":
            raise self._fail({text})
        self.i += 1

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            raise self._fail({"+", "-", "*", "/", "^", "end of input"})
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            cls = _BY_SYMBOL[self.tok.text]
            self.i += 1
            node = cls(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            cls = _BY_SYMBOL[self.tok.text]
            self.i += 1
            node = cls(node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.i += 1
            return Neg(self.factor())
        node = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.i += 1
            node = Pow(node, self.integer(signed=True))
        return node

    def integer(self, signed: bool = False) -> int:
        sign = 1
        if signed and self.tok.kind == "op" and self.tok.text == "-":
            sign = -1
            self.i += 1
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            raise self._fail({"integer", "-"} if signed and sign == 1 else {"integer"})
        self.i += 1
        return sign * int(t.text)

    def literal(self) -> Fraction:
        t = self.tok
        if t.kind != "num":
            raise self._fail({"number"})
        self.i += 1
        try:
            return Fraction(t.text)
        except ZeroDivisionError:
            raise DomainError(f"zero denominator in {t.text} at offset {t.pos}") from None

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            return Lit(self.literal())
        if t.kind == "name":
            if t.text == "pi":
                self.i += 1
                return Pi()
            if t.text == "e":
                self.i += 1
                return E()
            if t.text == "root":
                self.i += 1
                self._eat("(")
                radicand = self.literal()
                self._eat(",")
                index = self.integer()
                if index < 1:
                    raise ParseError("root index must be at least 1", self.tokens[self.i - 1].pos, {"integer"})
                self._eat(")")
                return Root(radicand, index)
            raise ParseError(f"unknown name {t.text!r}", t.pos, {"pi", "e", "root"})
        if t.kind == "op" and t.text == "(":
            self.i += 1
            node = self.expr()
            self._eat(")")
            return node
        raise self._fail({"number", "pi", "e", "root", "(", "-"})


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- printer ----------------------------------------------------------------------

def _literal_text(q: Fraction) -> str:
    return str(q)


def _wrapped(node: Expr) -> str:
    text = to_text(node)
    if isinstance(node, (Lit, Pi, E, Root)):
        return text
    return f"({text})"


def to_text(node: Expr) -> str:
    """Source text that parses back to ``node``."""
    if isinstance(node, Lit):
        return _literal_text(node.value)
    if isinstance(node, Pi):
        return "pi"
    if isinstance(node, E):
        return "e"
    if isinstance(node, Root):
        return f"root({_literal_text(node.radicand)},{node.index})"
    if isinstance(node, Neg):
        return f"-{_wrapped(node.operand)}"
    if isinstance(node, Pow):
        return f"{_wrapped(node.base)}^{node.exponent}"
    symbol = _BINARY[type(node)]
    return f"{_wrapped(node.left)} {symbol} {_wrapped(node.right)}"


# -- evaluation -------------------------------------------------------------------

def to_oracle(node: Expr, budget: int = DEFAULT_BUDGET) -> Oracle:
    if isinstance(node, Lit):
        return rational_oracle(node.value)
    if isinstance(node, Pi):
        return FonsiOracle(pi_bbp(), budget)
    if isinstance(node, E):
        return FonsiOracle(e_series(), budget)
    if isinstance(node, Root):
        if node.radicand <= 0:
            raise DomainError(f"root of non-positive {node.radicand}")
        return nth_root(node.radicand, node.index)
    if isinstance(node, Neg):
        return ops.neg(to_oracle(node.operand, budget), budget)
    if isinstance(node, Pow):
        if node.exponent == 0:
            return rational_oracle(1)
        return ops.pow_int(to_oracle(node.base, budget), node.exponent, budget)
    combine = {Add: ops.add, Sub: ops.sub, Mul: ops.mul, Div: ops.div}[type(node)]
    return combine(to_oracle(node.left, budget), to_oracle(node.right, budget), budget)


def _oracle(expr: Expr | str, budget: int) -> Oracle:
    return to_oracle(parse(expr) if isinstance(expr, str) else expr, budget)


def evaluate(expr: Expr | str, eps: RationalLike, budget: int = DEFAULT_BUDGET) -> Interval:
    """A Yes interval of length at most ``eps``."""
    eps = as_rational(eps)
    if eps <= 0:
        raise InvalidInput("eps must be positive")
    return _oracle(expr, budget).narrow(eps)


def member(expr: Expr | str, iv: Interval, budget: int = DEFAULT_BUDGET) -> Outcome:
    return _oracle(expr, budget).query(iv)


def _integer_start(o: Oracle) -> tuple[int, bool]:
    """``(k, True)`` when the number is the integer k, else ``(k, False)``
    with the number strictly between k and k+1."""
    iv = o.narrow(Fraction(1, 2))
    lo, hi = math.floor(iv.lo), math.floor(iv.hi)
    for k in sorted({lo, hi}):
        if o.query(Interval.point(k)).is_yes:
            return k, True
    if lo == hi:
        return lo, False
    return (lo if o.query(Interval(lo, hi)).is_yes else hi), False


def continued_fraction(expr: Expr | str, terms: int, budget: int = DEFAULT_BUDGET) -> CFExpansion:
    """The first ``terms`` continued fraction terms (fewer if exact)."""
    if terms < 1:
        raise InvalidInput("terms must be at least 1")
    o = _oracle(expr, budget)
    k, is_integer = _integer_start(o)
    if is_integer:
        return CFExpansion((k,), exact=True)
    try:
        res = mediant_process(o, FareyInterval(k, k + 1), max_steps=budget, max_terms=terms)
    except BudgetExceeded as exc:
        partial = exc.partial.cf if exc.partial is not None else None
        raise BudgetExceeded(f"stopped after {exc.partial.steps} steps", partial=partial) from exc
    cf = res.cf
    if res.root is None and len(cf.terms) < terms:
        raise BudgetExceeded(f"only {len(cf.terms)} terms within the budget", partial=cf)
    return cf


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def decimal(expr: Expr | str, digits: int, mode: DecimalMode = DecimalMode.TRUNCATION,
            budget: int = DEFAULT_BUDGET) -> str:
    """``text ∈ [lo : hi]`` where reading ``text`` under ``mode`` gives a Yes interval."""
    if digits < 1:
        raise InvalidInput("digits must be at least 1")
    o = _oracle(expr, budget)
    unit = Fraction(1, 10 ** digits)
    width = unit
    for _ in range(budget):
        iv = o.narrow(width)
        ks = [_round_half_up(iv.midpoint / unit), math.floor(iv.lo / unit)]
        ks += [math.ceil(iv.lo / unit), math.floor(iv.hi / unit), math.ceil(iv.hi / unit)]
        texts = []
        for k in dict.fromkeys(ks):
            texts.append(format_decimal(k * unit, digits))
            if k == 0:
                texts.append("-" + format_decimal(Fraction(0), digits))
        for text in texts:
            bracket = decimal_to_interval(text, mode)
            if iv.within(bracket):
                return (f"{text} ∈ [{format_decimal(bracket.lo, digits)} : "
                        f"{format_decimal(bracket.hi, digits)}]")
        width /= 2
    raise BudgetExceeded(f"no {digits}-digit reading settled within the budget")


def comparison(a: Expr | str, b: Expr | str, eps: RationalLike,
               budget: int = DEFAULT_BUDGET) -> tuple[Comparison, str]:
    left = parse(a) if isinstance(a, str) else a
    right = parse(b) if isinstance(b, str) else b
    result = compare(to_oracle(left, budget), to_oracle(right, budget), eps)
    return result, result.render(to_text(left), to_text(right))

