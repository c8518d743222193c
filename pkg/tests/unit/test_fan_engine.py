"""Unit tests for the finite attenuation network engine.

Reference values are for the star K={1}, M={2,3} at δ = 1/2.
"""

from fractions import Fraction

import pytest

from attnet.exceptions import InvalidInputError
from attnet.games.fan import (
    closed_form_entry,
    difference_table,
    difference_value,
    fan_series,
    fan_signature_value,
    fan_table,
    fan_value,
    fan_value_oracle,
    individual_productivity,
    productivity_matrix_closed,
    productivity_matrix_oracle,
    walk_counts,
)
from attnet.games.models import AttenuationParams, GameKind
from attnet.network import BipartiteNetwork, grand_coalition, induce

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


class TestAttenuationParams:
    def test_negative_delta_rejected(self):
        with pytest.raises(InvalidInputError) as exc:
            AttenuationParams(delta=Fraction(-1, 2), horizon=1)
        assert exc.value.field == "delta"

    @pytest.mark.parametrize("horizon", [-1, 1.5, True])
    def test_bad_horizon_rejected(self, horizon):
        with pytest.raises(InvalidInputError):
            AttenuationParams(delta=HALF, horizon=horizon)

    def test_delta_coerced_to_fraction(self):
        assert isinstance(AttenuationParams(delta=1, horizon=0).delta, Fraction)


class TestFanValues:
    @pytest.mark.parametrize(
        "t, expected",
        [(0, Fraction(3)), (1, Fraction(5)), (2, Fraction(13, 2)), (3, Fraction(15, 2)), (10, Fraction(313, 32))],
    )
    def test_grand_coalition_of_star(self, star_two, t, expected):
        """
        Given the star K={1}, M={2,3} at δ = 1/2
        When v^t(N) is computed by the closed form
        Then it matches the reference value
        """
        assert fan_value(grand_coalition(star_two), AttenuationParams(HALF, t)) == expected

    @pytest.mark.parametrize(
        "t, expected",
        [(0, Fraction(2)), (1, Fraction(3)), (2, Fraction(7, 2)), (3, Fraction(15, 4)), (10, Fraction(2047, 512))],
    )
    def test_center_with_one_worker(self, star_two, t, expected):
        assert fan_value(induce(star_two, [1, 2]), AttenuationParams(HALF, t)) == expected

    @pytest.mark.parametrize("t", [0, 1, 5])
    def test_one_sided_coalitions_have_size_value(self, star_two, t):
        params = AttenuationParams(HALF, t)

        assert fan_value(induce(star_two, [2, 3]), params) == 2
        assert fan_value(induce(star_two, [1]), params) == 1
        assert fan_value(induce(star_two, []), params) == 0

    def test_zero_delta_is_size(self, star_three):
        assert fan_value(grand_coalition(star_three), AttenuationParams(Fraction(0), 7)) == 4

    @pytest.mark.parametrize("t", range(0, 9))
    def test_closed_form_matches_oracle(self, square, t):
        coalition = grand_coalition(square)
        params = AttenuationParams(THIRD, t)

        assert fan_value(coalition, params) == fan_value_oracle(coalition, params)


class TestProductivity:
    def test_individual_productivity_of_star(self, star_two):
        """
        Given the star at δ = 1/2, t = 2
        When each node's row sum is computed
        Then the center earns 5/2, each worker 2, and they add up to v^2(N)
        """
        coalition = grand_coalition(star_two)
        params = AttenuationParams(HALF, 2)

        assert individual_productivity(coalition, 1, params) == Fraction(5, 2)
        assert individual_productivity(coalition, 2, params) == 2
        assert individual_productivity(coalition, 3, params) == 2

    def test_non_member_has_zero_productivity(self, star_two):
        coalition = induce(star_two, [1, 2])

        assert individual_productivity(coalition, 3, AttenuationParams(HALF, 4)) == 0

    def test_row_sums_match_closed_form(self, square):
        coalition = grand_coalition(square)
        params = AttenuationParams(THIRD, 4)
        matrix = productivity_matrix_oracle(coalition, params)

        expected = tuple(individual_productivity(coalition, node, params) for node in coalition.ordered_members)
        assert matrix.row_sums() == expected
        assert matrix.row_sums()[0] == Fraction(211, 81)

    def test_oracle_matrix_matches_closed_form_entries(self, square):
        """
        Given |K| = |M| = 2 at δ = 1/3, t = 4
        When M^4 is built by literal powers and by the block closed form
        Then every entry agrees
        """
        coalition = grand_coalition(square)
        params = AttenuationParams(THIRD, 4)

        oracle = productivity_matrix_oracle(coalition, params)
        closed = productivity_matrix_closed(coalition, params)

        assert oracle.entries == closed.entries
        assert closed_form_entry(coalition, 1, 1, params) == Fraction(107, 81)
        assert closed_form_entry(coalition, 1, 2, params) == Fraction(26, 81)
        assert closed_form_entry(coalition, 1, 3, params) == Fraction(13, 27)

    def test_matrix_at_horizon_zero_is_identity(self, star_two):
        matrix = productivity_matrix_oracle(grand_coalition(star_two), AttenuationParams(HALF, 0))

        assert matrix.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_closed_form_entry_rejects_non_member(self, star_two):
        with pytest.raises(InvalidInputError):
            closed_form_entry(induce(star_two, [1, 2]), 1, 3, AttenuationParams(HALF, 2))

    def test_walk_counts(self, star_two):
        """Walks from the center: 1, 2, 2, 4, 4; from a worker: 1, 1, 2, 2, 4."""
        counts = walk_counts(grand_coalition(star_two), 4)

        assert [row[0] for row in counts] == [1, 2, 2, 4, 4]
        assert [row[1] for row in counts] == [1, 1, 2, 2, 4]

    def test_long_horizon_does_not_overflow(self):
        network = BipartiteNetwork.from_sizes(4, 4)
        counts = walk_counts(grand_coalition(network), 40)

        assert counts[40][0] == 4 * 16**19 * 4


class TestDifferenceGames:
    @pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
    def test_difference_is_consecutive_gap(self, star_two, t):
        coalition = grand_coalition(star_two)

        gap = fan_value(coalition, AttenuationParams(HALF, t)) - fan_value(coalition, AttenuationParams(HALF, t - 1))
        assert difference_value(coalition, HALF, t) == gap

    def test_reference_values(self, star_two):
        coalition = grand_coalition(star_two)

        assert difference_value(coalition, HALF, 1) == 2
        assert difference_value(coalition, HALF, 2) == Fraction(3, 2)
        assert difference_value(coalition, HALF, 3) == 1

    @pytest.mark.parametrize("t", [0, -1])
    def test_horizon_zero_rejected(self, star_two, t):
        """d^0 would need v^{-1}; it is refused rather than defined."""
        with pytest.raises(InvalidInputError) as exc:
            difference_value(grand_coalition(star_two), HALF, t)
        assert exc.value.field == "t"

    def test_one_sided_difference_is_zero(self, star_two):
        assert difference_value(induce(star_two, [2, 3]), HALF, 2) == 0

    def test_fan_series_accumulates_differences(self, star_two):
        coalition = grand_coalition(star_two)
        series = fan_series(coalition, AttenuationParams(HALF, 10))

        assert series == [fan_value(coalition, AttenuationParams(HALF, t)) for t in range(11)]


class TestTables:
    def test_fan_table_covers_every_signature(self, star_two):
        table = fan_table(star_two, AttenuationParams(HALF, 2))

        assert table.kind is GameKind.FAN
        assert set(table.values) == set(star_two.signatures())
        assert table.grand_value == Fraction(13, 2)
        assert table.value((1, 1)) == fan_signature_value((1, 1), AttenuationParams(HALF, 2))

    def test_difference_table(self, star_two):
        table = difference_table(star_two, HALF, 3)

        assert table.kind is GameKind.DIFFERENCE
        assert table.horizon == 3
        assert table.value((0, 2)) == 0
        assert table.grand_value == 1

    def test_table_marginal(self, star_two):
        table = fan_table(star_two, AttenuationParams(HALF, 1))

        assert table.marginal(star_two.side_of(1), (1, 2)) == 3

    def test_table_marginal_needs_a_member(self, star_two):
        table = fan_table(star_two, AttenuationParams(HALF, 1))

        with pytest.raises(ValueError):
            table.marginal(star_two.side_of(1), (0, 2))
