"""Unit tests for exact rational parsing and rendering."""

from fractions import Fraction

import pytest

from attnet.allocations import lrp
from attnet.exceptions import InvalidInputError
from attnet.games.fan import difference_value
from attnet.games.limit import an_value
from attnet.network import BipartiteNetwork, grand_coalition
from attnet.rationals import as_delta, format_decimal, format_exact, format_value, parse_rational


class TestParseRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1/2", Fraction(1, 2)),
            ("3", Fraction(3)),
            ("0.125", Fraction(1, 8)),
            (".25", Fraction(1, 4)),
            ("2/4", Fraction(1, 2)),
            (" 3/4 ", Fraction(3, 4)),
            ("0", Fraction(0)),
        ],
    )
    def test_accepted_literals(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["0.3...", "1e-3", "1/", "abc", "", "1/2/3", "0.(3)"])
    def test_malformed_literals_rejected(self, text):
        with pytest.raises(InvalidInputError) as exc:
            parse_rational(text, field="delta")
        assert exc.value.field == "delta"

    def test_zero_denominator_rejected(self):
        with pytest.raises(InvalidInputError, match="zero denominator"):
            parse_rational("1/0")

    def test_negative_rejected_by_default(self):
        with pytest.raises(InvalidInputError, match="nonnegative"):
            parse_rational("-1/2")

    def test_negative_allowed_when_requested(self):
        assert parse_rational("-1/2", allow_negative=True) == Fraction(-1, 2)

    def test_decimal_converts_exactly(self):
        """0.1 is one tenth, not the nearest binary float."""
        assert parse_rational("0.1") == Fraction(1, 10)


class TestFormatting:
    def test_exact_integer(self):
        assert format_exact(Fraction(10)) == "10"

    def test_exact_fraction_lowest_terms(self):
        assert format_exact(Fraction(34, 6)) == "17/3"

    def test_exact_negative_denominator_normalized(self):
        assert format_exact(Fraction(1, -2)) == "-1/2"

    def test_decimal_significant_digits(self):
        assert format_decimal(Fraction(2047, 512), 4) == "3.998"
        assert format_decimal(Fraction(313, 32), 6) == "9.78125"

    def test_decimal_round_half_even(self):
        assert format_decimal(Fraction(25, 1000), 1) == "0.02"
        assert format_decimal(Fraction(35, 1000), 1) == "0.04"

    def test_decimal_two_places_of_shapley_value(self):
        assert format_decimal(Fraction(22, 7), 3) == "3.14"
        assert format_decimal(Fraction(41, 21), 3) == "1.95"

    def test_format_value_switches_mode(self):
        assert format_value(Fraction(17, 3), exact=True) == "17/3"
        assert format_value(Fraction(17, 3), exact=False, digits=3) == "5.67"


class TestAsDelta:
    def test_coerces_integers_and_fractions(self):
        assert as_delta(0) == 0
        assert isinstance(as_delta(1), Fraction)
        assert as_delta(Fraction(1, 3)) == Fraction(1, 3)

    @pytest.mark.parametrize(
        "call",
        [
            lambda: as_delta(Fraction(-1, 4)),
            lambda: an_value(grand_coalition(BipartiteNetwork.from_sizes(1, 2)), Fraction(-1, 4)),
            lambda: lrp(BipartiteNetwork.from_sizes(1, 2), Fraction(-1, 4)),
            lambda: difference_value(grand_coalition(BipartiteNetwork.from_sizes(1, 2)), Fraction(-1, 4), 1),
        ],
        ids=["helper", "an_value", "lrp", "difference_value"],
    )
    def test_negative_delta_rejected_everywhere(self, call):
        with pytest.raises(InvalidInputError) as exc:
            call()
        assert exc.value.field == "delta"
