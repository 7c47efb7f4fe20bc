from fractions import Fraction as F

import pytest

from oracle_reals import (
    Interval,
    NotYesInterval,
    Relation,
    RootAt,
    RuleOracle,
    answer,
    axiom_check,
    compare,
    mul,
    nth_root,
    partition_select,
    rational_oracle,
    refine_bisect,
    separate_points,
    undecided,
)
from oracle_reals.errors import BudgetExceeded, InvalidInput

I = Interval
SQRT2 = nth_root(2, 2)


class TestRationalOracle:
    def test_answers(self):
        half = rational_oracle(F(1, 2))
        assert half.query(I(0, 1)).is_yes
        assert half.query(I(F(1, 2))).is_yes
        assert half.query(I(2, 3)).is_no
        assert half.root_hint == F(1, 2)

    def test_outcome_text(self):
        assert str(rational_oracle(1).query(I(0, 2))) == "Yes"
        assert undecided("boundary").reason == "boundary"


class TestRefineBisect:
    def test_sqrt2_quarter(self):
        # 1:3/2 holds sqrt 2, then 5/4:3/2
        assert refine_bisect(SQRT2, I(1, 2), F(1, 4)) == I(F(5, 4), F(3, 2))

    def test_midpoint_root(self):
        assert refine_bisect(rational_oracle(F(1, 2)), I(0, 1), F(1, 1000)) == I(F(1, 2))

    @pytest.mark.parametrize("k", range(1, 12))
    def test_length_is_power_of_two(self, k):
        out = refine_bisect(SQRT2, I(1, 2), F(1, 2 ** k))
        assert out.length == F(1, 2 ** k)
        assert out.within(I(1, 2)) and SQRT2.query(out).is_yes

    def test_start_must_be_yes(self):
        with pytest.raises(NotYesInterval):
            refine_bisect(SQRT2, I(2, 3), F(1, 8))

    def test_eps_positive(self):
        with pytest.raises(InvalidInput):
            refine_bisect(SQRT2, I(1, 2), 0)

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            refine_bisect(SQRT2, I(1, 2), F(1, 2 ** 20), budget=3)
        assert info.value.partial.length == F(1, 8)

    def test_undecided_midpoint(self):
        stuck = RuleOracle(lambda iv: undecided("test") if iv.is_singleton else answer(iv.contains(F(1, 3))),
                           I(0, 1))
        with pytest.raises(BudgetExceeded):
            refine_bisect(stuck, I(0, 1), F(1, 16))


class TestPartitionSelect:
    def test_sqrt2_two_cuts(self):
        assert partition_select(SQRT2, I(1, 2), [F(5, 4), F(3, 2)]) == 1

    def test_cut_is_root(self):
        assert partition_select(rational_oracle(F(3, 2)), I(1, 2), [F(3, 2)]) == RootAt(F(3, 2))

    def test_four_thirds(self):
        assert partition_select(SQRT2, I(1, 2), [F(4, 3)]) == 1

    def test_bad_cuts(self):
        with pytest.raises(InvalidInput):
            partition_select(SQRT2, I(1, 2), [F(3, 2), F(5, 4)])
        with pytest.raises(InvalidInput):
            partition_select(SQRT2, I(1, 2), [2])


class TestCompare:
    def test_sqrt2_less_than_sqrt3(self):
        c = compare(SQRT2, nth_root(3, 2), F(1, 4), I(1, 2), I(1, 2))
        assert c.relation is Relation.LESS
        assert c.left.hi < c.right.lo

    def test_greater(self):
        assert compare(nth_root(3, 2), SQRT2, F(1, 100)).relation is Relation.GREATER

    def test_identical_rationals(self):
        c = compare(rational_oracle(2), rational_oracle(2), F(1, 10))
        assert c.relation is Relation.COMPATIBLE and c.resolution == I(2)

    def test_square_of_root_vs_two(self):
        c = compare(mul(SQRT2, SQRT2, budget=60), rational_oracle(2), F(1, 1000))
        assert c.relation is Relation.COMPATIBLE
        assert c.resolution.length <= F(1, 500) and c.resolution.contains(2)

    def test_render(self):
        c = compare(rational_oracle(2), rational_oracle(2), F(1, 10))
        assert c.render("x", "y") == "x ? y within [2]"
        c = compare(SQRT2, nth_root(3, 2), F(1, 100))
        assert c.render("x", "y") == "x < y"


class TestSeparatePoints:
    def test_sqrt2(self):
        out = separate_points(SQRT2, I(1, 2), F(5, 4), F(7, 4))
        assert SQRT2.query(out).is_yes and out.within(I(1, 2))
        assert not (out.contains(F(5, 4)) and out.contains(F(7, 4)))

    def test_rational(self):
        r = rational_oracle(F(3, 2))
        out = separate_points(r, I(1, 2), F(3, 2), F(7, 4))
        assert r.query(out).is_yes and not out.contains(F(7, 4))

    def test_endpoints(self):
        out = separate_points(SQRT2, I(1, 2), 1, 2)
        assert SQRT2.query(out).is_yes
        assert not (out.contains(1) and out.contains(2))

    def test_equal_points_rejected(self):
        with pytest.raises(InvalidInput):
            separate_points(SQRT2, I(1, 2), F(3, 2), F(3, 2))


class TestAxiomCheck:
    def test_sqrt2_passes(self):
        report = axiom_check(SQRT2, [I(0, 2)], 100)
        assert report.ok and report.checked >= 100

    def test_rational_zero_passes(self):
        assert axiom_check(rational_oracle(0), [I(-1, 1)], 100).ok

    def test_two_disjoint_yes_intervals(self):
        # affirms both 1.4:1.5 and 1.7:1.8 style intervals
        bad = RuleOracle(lambda iv: answer(iv.contains(F(7, 5)) or iv.contains(F(9, 5))), I(1, 2))
        report = axiom_check(bad, [I(1, 2), I(F(7, 5), F(3, 2)), I(F(17, 10), F(9, 5))], 100)
        assert any(v.prop == "Disjointness" for v in report.violations)

    def test_needs_seeds(self):
        with pytest.raises(InvalidInput):
            axiom_check(SQRT2, [], 10)


class TestYesIntervalProperties:
    def test_intersection_of_yes_intervals(self):
        pairs = [(I(1, 2), I(F(7, 5), 3)), (I(F(141, 100), F(3, 2)), I(0, F(71, 50)))]
        for a, b in pairs:
            assert SQRT2.query(a).is_yes and SQRT2.query(b).is_yes
            assert SQRT2.query(a.intersect(b)).is_yes

    def test_union_of_overlapping_no_intervals(self):
        a, b = I(0, 1), I(F(1, 2), F(7, 5))
        assert SQRT2.query(a).is_no and SQRT2.query(b).is_no
        assert SQRT2.query(a.hull(b)).is_no

    def test_no_interval_has_disjoint_yes_witness(self):
        no = I(F(3, 2), 2)
        assert SQRT2.query(no).is_no
        witness = refine_bisect(SQRT2, I(1, 2), F(1, 16))
        assert not witness.intersects(no)
