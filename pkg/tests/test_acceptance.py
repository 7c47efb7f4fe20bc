"""Acceptance checks, one test per criterion.

Run with pytest for a PASS/FAIL line per criterion in the terminal summary,
or directly (``python tests/test_acceptance.py``) for the same lines alone.
"""

import math
import random
from fractions import Fraction as F

from oracle_reals import (
    BihomState,
    FareyInterval,
    GosperOp,
    Interval,
    Pair,
    Relation,
    Var,
    add,
    axiom_check,
    cf_eval,
    compare,
    compound_bracket,
    e_compound,
    e_denominator_exclusion,
    e_series,
    fonsi_to_oracle,
    gosper_extract,
    gosper_ingest,
    gosper_init,
    gosper_round,
    lift,
    mediant_process,
    mul,
    neg,
    newton_iterates,
    nth_root,
    pi_bbp,
    pythagorean_sqrt2_interval,
    rational_oracle,
    recip,
    sine_pi_oracle,
    sub,
    weighted_mediant_solve,
)
from oracle_reals.expr import member
from oracle_reals.interval import DecimalMode, decimal_to_interval, interval_pow
from oracle_reals.operators import (
    ADD,
    DISTANCE,
    DIV,
    MUL,
    NEG,
    RECIP,
    SUB,
    max_operator,
    min_operator,
    pow_operator,
)
from oracle_reals.stern_brocot import CANONICAL_START

I = Interval
EPS6 = F(1, 10 ** 6)

TITLES = {
    1: "interval arithmetic goldens",
    2: "square root of 2 mediant sequence",
    3: "cube root of 11 from its continued fraction",
    4: "Newton iterates for the cube root of 11",
    5: "pi by series and by sine sign changes",
    6: "root(2,2)*(e+pi) from component intervals",
    7: "bihomographic e+pi and root(2,2)^2",
    8: "weighted mediants and rational roots",
    9: "two constructions of e",
    10: "square root of 2 from Pythagorean triples",
    11: "oracle axioms, field laws, Lipschitz bounds",
    12: "decimal reading modes",
}


def compatible(a, b, eps):
    c = compare(a, b, eps)
    return c.relation is Relation.COMPATIBLE and c.resolution.length <= eps


def test_criterion_01_interval_goldens():
    assert I(2, 3) * I(5, 7) == I(10, 21)
    assert I(-2, 7) * I(3, 5) == I(-10, 35)
    assert I(-2, 7) * I(-3, 5) == I(-21, 35)
    assert I(-2, -7) * I(-3, -5) == I(6, 35)
    assert interval_pow(I(-2, 3), 4) == I(-54, 81)
    x, y, z = I(2, 3), I(4, 7), I(-6, -3)
    left, right = x * (y + z), x * y + x * z
    assert left == I(-6, 12) and right == I(-10, 15)
    assert left.within(right) and left != right


def test_criterion_02_sqrt2_mediants():
    res = mediant_process(nth_root(2, 2), CANONICAL_START, max_steps=9)
    assert [m.value for m in res.mediants] == [
        F(1), F(2), F(3, 2), F(4, 3), F(7, 5), F(10, 7), F(17, 12), F(24, 17), F(41, 29)]
    assert res.cf.terms == (1, 2, 2, 2) and str(res.cf).startswith("[1; 2, 2")


def test_criterion_03_cube_root_11():
    fi = cf_eval([2, 4, 2, 6, 1, 1, 2, 1, 2, 9, 88])
    assert (fi.lo, fi.hi) == (Pair(2204607, 991289), Pair(25022, 11251))
    assert fi.as_interval().length == F(1, 991289 * 11251)


def test_criterion_04_newton():
    it = newton_iterates(11, 3, 2)
    assert [next(it) for _ in range(4)] == [2, F(9, 4), F(2162, 972), F(1894566349, 851880969)]


def test_criterion_05_pi():
    assert fonsi_to_oracle(pi_bbp()).query(I(F("3.141592"), F("3.141609"))).is_yes
    res = mediant_process(sine_pi_oracle(), FareyInterval(Pair(3, 1), Pair(4, 1)), max_steps=21)
    assert res.runs[:3] == [3, 7, 15]
    assert (res.current.lo.value, res.current.hi.value) == (F(333, 106), F(22, 7))


def test_criterion_06_root2_times_e_plus_pi():
    expr = "root(2,2)*(e+pi)"
    assert member(expr, I(F("8.286"), F("8.288"))).is_yes
    assert member(expr, I(F("8.1"), F("8.2"))).is_no
    pi = I(F("3.141592"), F("3.141609"))
    e = I(F("2.71827"), F("2.718294"))
    root2 = I(F("1.41420"), F("1.41422"))
    composed = root2 * (e + pi)
    assert composed.within(I(F("8.2870"), F("8.28719"))), f"composed interval is {composed}"


def test_criterion_07_bihomographic():
    st = gosper_init(GosperOp.ADD)
    for e_term, pi_term in [(2, 3), (1, 7), (2, 15), (1, 1)]:
        st = gosper_ingest(gosper_ingest(st, Var.X, pi_term), Var.Y, e_term)
    assert st == BihomState(1847, 1969, 2498, 2663, 318, 339, 424, 452)
    first, st = gosper_extract(st)
    second, st = gosper_extract(st)
    assert (first, second) == (5, 1)

    st, emitted = gosper_init(GosperOp.MUL), []
    for i in range(50):
        term = 1 if i == 0 else 2
        out, st = gosper_round(st, term, term)
        emitted += out
        if i >= 1:
            assert {f for f in st.corner_floors() if f is not None} <= {1, 2}
    assert emitted == []


def test_criterion_08_weighted_mediants():
    assert weighted_mediant_solve(F(1, 4), F(19, 9), 2).reached == Pair(134, 67)
    assert weighted_mediant_solve(F(7, 8), F(11, 12), F(9, 10)).reached == Pair(18, 20)
    rng = random.Random(2024)
    for k in range(200):
        den = rng.randint(1, 300)
        q = F(rng.randint(0, 5 * den), den)
        start = CANONICAL_START if k % 2 else FareyInterval(Pair(math.floor(q), 1), Pair(math.floor(q) + 1, 1))
        res = mediant_process(rational_oracle(q), start, max_steps=5000)
        assert res.root == q


def test_criterion_09_e():
    series, compound = fonsi_to_oracle(e_series()), fonsi_to_oracle(e_compound())
    assert compatible(series, compound, EPS6)
    for q in range(1, 9):
        assert e_denominator_exclusion(q)
    partial = [sum(F(1, math.factorial(i)) for i in range(n + 1)) for n in range(22)]
    for n in range(1, 21):
        a, b = compound_bracket(n).lo, compound_bracket(n).hi
        a1, b1 = compound_bracket(n + 1).lo, compound_bracket(n + 1).hi
        assert (a, b) == ((1 + F(1, n)) ** n, (1 + F(1, n)) ** (n + 1))
        assert a < a1 < b1 < b
    short = [n for n in range(1, 21) if not compound_bracket(n).lo < partial[n]]
    assert not short, f"lower end not below the partial sum for n in {short}"


def test_criterion_10_pythagorean():
    assert pythagorean_sqrt2_interval(F(1, 2)) == I(F(5, 4), F(5, 3))
    assert pythagorean_sqrt2_interval(F(2, 5)) == I(F(29, 21), F(29, 20))
    assert pythagorean_sqrt2_interval(F(29, 70)) == I(F(5741, 4059), F(5741, 4060))


def _rand_q(rng, lo=-20, hi=20, den=50):
    return F(rng.randint(lo * den, hi * den), rng.randint(1, den))


def _axioms_hold(o):
    return axiom_check(o, [o.narrow(1)], trials=100).ok


def _lipschitz_holds(op, avoid_zero, rng):
    def interval(clear):
        while True:
            iv = I(_rand_q(rng), _rand_q(rng))
            if not clear or not iv.contains(0):
                return iv

    def inside(iv):
        return I(*(iv.lo + iv.length * F(rng.randint(0, 97), 97) for _ in range(2)))

    for _ in range(100):
        outer = [interval(avoid_zero and k == op.arity - 1) for k in range(op.arity)]
        inner = [inside(iv) for iv in outer]
        image = op.apply(*inner)
        if image.length > op.lipschitz_bound(outer) * max(iv.length for iv in inner):
            return False
        if not image.within(op.apply(*outer)):
            return False
    return True


def test_criterion_11_properties():
    rng = random.Random(11)
    roots = [nth_root(F(rng.randint(1, 400), rng.randint(1, 40)), rng.randint(2, 6)) for _ in range(20)]
    rationals = [rational_oracle(_rand_q(rng)) for _ in range(20)]
    constants = [fonsi_to_oracle(e_series()), fonsi_to_oracle(pi_bbp())]
    pool = roots + rationals + constants

    for o in roots + rationals:
        assert _axioms_hold(o)
    for _ in range(10):
        a, b = rng.sample(roots + rationals, 2)
        assert _axioms_hold(add(a, b)) and _axioms_hold(mul(a, b))

    zero, one = rational_oracle(0), rational_oracle(1)
    for _ in range(20):
        r, s, t = rng.sample(pool, 3)
        laws = [
            (add(r, s), add(s, r)),
            (mul(r, s), mul(s, r)),
            (add(add(r, s), t), add(r, add(s, t))),
            (mul(mul(r, s), t), mul(r, mul(s, t))),
            (mul(r, add(s, t)), add(mul(r, s), mul(r, t))),
            (add(r, neg(r)), zero),
            (sub(r, s), add(r, neg(s))),
        ]
        if not compare(r, zero, F(1, 1000)).relation is Relation.COMPATIBLE:
            laws.append((mul(r, recip(r)), one))
        for left, right in laws:
            assert compatible(left, right, EPS6)

    operators = [
        (ADD, False), (SUB, False), (NEG, False), (MUL, False), (DISTANCE, False),
        (RECIP, True), (DIV, True), (pow_operator(2), False), (pow_operator(3), False),
        (pow_operator(-2), True), (max_operator(3), False), (min_operator(2), False),
    ]
    for op, avoid_zero in operators:
        assert _lipschitz_holds(op, avoid_zero, rng), op.name
    assert lift(ADD, (roots[0], roots[1]), [roots[0].narrow(1), roots[1].narrow(1)]).narrow(EPS6).length <= EPS6


def test_criterion_12_decimal_modes():
    expected = {
        DecimalMode.SHORT_ROUNDING: I(F("1.405"), F("1.415")),
        DecimalMode.TRUNCATION: I(F("1.41"), F("1.42")),
        DecimalMode.LONG_ROUNDING: I(F("1.40"), F("1.42")),
        DecimalMode.BIG_UNCERTAINTY: I(F("1.36"), F("1.46")),
    }
    for mode, iv in expected.items():
        assert decimal_to_interval("1.41", mode) == iv
    root2, e, pi = (decimal_to_interval(t, DecimalMode.TRUNCATION) for t in ("1.41", "2.72", "3.14"))
    assert root2 * (e + pi) == I(F("8.2626"), F("8.3496"))


CRITERIA = {
    int(name.split("_")[2]): fn
    for name, fn in sorted(globals().items())
    if name.startswith("test_criterion_")
}


if __name__ == "__main__":
    for number, fn in CRITERIA.items():
        try:
            fn()
            status = "PASS"
        except AssertionError as exc:
            status = f"FAIL ({exc})" if str(exc) else "FAIL"
        print(f"criterion {number:2d} {status}: {TITLES[number]}")
