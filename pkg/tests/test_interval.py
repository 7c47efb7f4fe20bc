from fractions import Fraction as F

import pytest

from oracle_reals.errors import ContainsZero, ParseError
from oracle_reals.interval import (
    DecimalMode,
    Interval,
    IntervalRelation,
    as_rational,
    decimal_to_interval,
    distance,
    format_decimal,
    interval_pow,
    metrics,
    parse_decimal,
    parse_interval,
    relate,
    separation,
)


def I(a, b=None):
    return Interval(a, b)


class TestConstruction:
    def test_endpoints_are_sorted(self):
        iv = I(3, 1)
        assert (iv.lo, iv.hi) == (1, 3)

    def test_singleton(self):
        assert I(F(2, 3)).is_singleton
        assert str(I(F(2, 3))) == "2/3"

    def test_str(self):
        assert str(I(F(1, 2), 2)) == "1/2 : 2"

    def test_floats_are_refused(self):
        with pytest.raises(TypeError):
            I(0.5, 1)

    def test_string_endpoints(self):
        assert I("1.25", "3/2") == I(F(5, 4), F(3, 2))

    def test_bad_string(self):
        with pytest.raises(ParseError):
            as_rational("one")

    def test_magnitude_and_mignitude(self):
        assert I(-3, 2).magnitude == 3
        assert I(-3, 2).mignitude == 0
        assert I(-5, -2).mignitude == 2


class TestArithmetic:
    @pytest.mark.parametrize("x, y, expected", [
        (I(2, 3), I(5, 7), I(10, 21)),
        (I(-2, 7), I(3, 5), I(-10, 35)),
        (I(-2, 7), I(-3, 5), I(-21, 35)),
        (I(-7, -2), I(-5, -3), I(6, 35)),
    ])
    def test_products(self, x, y, expected):
        assert x * y == expected

    def test_sum_and_difference(self):
        assert I(1, 2) + I(3, 5) == I(4, 7)
        assert I(1, 2) - I(3, 5) == I(-4, -1)
        assert -I(1, 2) == I(-2, -1)

    def test_mixed_sign_power_is_repeated_product(self):
        assert interval_pow(I(-2, 3), 4) == I(-54, 81)
        x = I(-2, 3)
        assert x * x * x * x == I(-54, 81)

    def test_same_sign_powers(self):
        assert I(2, 3) ** 3 == I(8, 27)
        assert I(-3, -2) ** 2 == I(4, 9)
        assert I(-3, -2) ** 3 == I(-27, -8)

    def test_negative_power(self):
        assert I(2, 4) ** -1 == I(F(1, 4), F(1, 2))
        assert I(2, 4) ** -2 == I(F(1, 16), F(1, 4))
        with pytest.raises(ContainsZero):
            I(-1, 1) ** -2

    def test_zeroth_power_rejected(self):
        with pytest.raises(ValueError):
            I(1, 2) ** 0

    def test_reciprocal_needs_nonzero(self):
        with pytest.raises(ContainsZero):
            I(1) / I(-1, 2)
        assert I(1) / I(2, 4) == I(F(1, 4), F(1, 2))

    def test_subdistributivity_witness(self):
        x, y, z = I(2, 3), I(4, 7), I(-6, -3)
        left = x * (y + z)
        right = x * y + x * z
        assert left == I(-6, 12) and right == I(-10, 15)
        assert left.within(right) and left != right


class TestRelations:
    @pytest.mark.parametrize("x, y, rel", [
        (I(0, 1), I(2, 3), IntervalRelation.DISJOINT),
        (I(0, 2), I(1, 3), IntervalRelation.STRICTLY_OVERLAPPING),
        (I(1, 2), I(0, 3), IntervalRelation.NESTED_FIRST_IN_SECOND),
        (I(0, 3), I(1, 2), IntervalRelation.NESTED_SECOND_IN_FIRST),
        (I(0, 3), I(0, 3), IntervalRelation.EQUAL),
        (I(0, 1), I(1, 2), IntervalRelation.STRICTLY_OVERLAPPING),
    ])
    def test_relate(self, x, y, rel):
        assert relate(x, y) is rel

    def test_separation_and_distance(self):
        assert separation(I(0, 1), I(3, 4)) == 2
        assert distance(I(0, 1), I(3, 4)) == 4
        assert metrics(I(0, 2), I(1, 3)) == (0, 3)

    def test_intersect_and_hull(self):
        assert I(0, 2).intersect(I(1, 3)) == I(1, 2)
        assert I(0, 1).intersect(I(2, 3)) is None
        assert I(0, 1).hull(I(2, 3)) == I(0, 3)

    def test_halves(self):
        assert I(0, 1).halves() == (I(0, F(1, 2)), I(F(1, 2), 1))


class TestDecimals:
    @pytest.mark.parametrize("mode, expected", [
        (DecimalMode.SHORT_ROUNDING, I(F("1.405"), F("1.415"))),
        (DecimalMode.TRUNCATION, I(F("1.41"), F("1.42"))),
        (DecimalMode.LONG_ROUNDING, I(F("1.40"), F("1.42"))),
        (DecimalMode.BIG_UNCERTAINTY, I(F("1.36"), F("1.46"))),
    ])
    def test_modes(self, mode, expected):
        assert decimal_to_interval("1.41", mode) == expected

    def test_negative_mirrors(self):
        assert decimal_to_interval("-1.41", DecimalMode.TRUNCATION) == I(F("-1.42"), F("-1.41"))

    def test_integer_text(self):
        assert decimal_to_interval("8", DecimalMode.TRUNCATION) == I(8, 9)

    def test_parse_decimal(self):
        assert parse_decimal("-3.140") == (-1, F(314, 100), 3)
        with pytest.raises(ParseError):
            parse_decimal("3.1.4")

    def test_format_decimal(self):
        assert format_decimal(F(31415, 10000)) == "3.1415"
        assert format_decimal(F(3), 2) == "3.00"
        assert format_decimal(F(-1, 8)) == "-0.125"
        with pytest.raises(ValueError):
            format_decimal(F(1, 3))


class TestParseInterval:
    def test_fractions(self):
        assert parse_interval("1/2:3/4") == I(F(1, 2), F(3, 4))

    def test_decimals(self):
        assert parse_interval("8.286:8.288") == I(F("8.286"), F("8.288"))

    def test_single(self):
        assert parse_interval("2/3") == I(F(2, 3))

    def test_errors_carry_offsets(self):
        with pytest.raises(ParseError) as info:
            parse_interval("1:x")
        assert info.value.position == 2
        with pytest.raises(ParseError):
            parse_interval("1:2:3")
