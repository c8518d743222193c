"""Integration test: structural properties of the games and allocation rules.

Runs over every network with |K|, |M| ≤ 4 and every convergent δ of the sweep.
"""

from fractions import Fraction

import pytest

from attnet.allocations import (
    difference_distribution,
    lrp,
    productivity_allocation,
    shapley_closed,
    shapley_oracle,
    shapley_subset_oracle,
)
from attnet.games.fan import difference_table, fan_table
from attnet.games.limit import an_table
from attnet.games.models import AttenuationParams
from attnet.network import BipartiteNetwork, Side
from attnet.verify import CoreMethod, axiom_check, convexity_check, core_check, uniqueness_reconstruction
from tests.conftest import SWEEP_DELTAS, convergent, sweep_networks

CASES = [(network, delta) for network in sweep_networks(4) for delta in SWEEP_DELTAS if convergent(network, delta)]


def _case_id(case):
    network, delta = case
    return f"{network.k_size}x{network.m_size}-d{delta}".replace("/", "_")


@pytest.fixture(params=CASES, ids=[_case_id(case) for case in CASES])
def case(request):
    return request.param


def test_games_are_convex(case):
    """Given: a convergent (network, δ)
    When: the AN, FAN and difference games are checked for convexity
    Then: all of them are convex
    """
    network, delta = case

    assert convexity_check(an_table(network, delta)).holds
    for t in (1, 2, 5):
        assert convexity_check(fan_table(network, AttenuationParams(delta, t))).holds
        assert convexity_check(difference_table(network, delta, t)).holds


def test_every_rule_lies_in_the_core(case):
    network, delta = case
    game = an_table(network, delta)

    for allocation in (productivity_allocation(network, delta), shapley_closed(network, delta), lrp(network, delta)):
        report = core_check(game, allocation)
        assert report.in_core, (allocation.tag, report.worst)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_difference_distribution_lies_in_difference_core(case, t):
    network, delta = case

    report = core_check(difference_table(network, delta, t), difference_distribution(network, delta, t))

    assert report.in_core


def test_shapley_closed_form_matches_oracle(case):
    network, delta = case

    assert shapley_closed(network, delta).ordered(network) == shapley_oracle(an_table(network, delta)).ordered(network)


def test_signature_and_subset_core_paths_agree(case):
    """Given: a side-symmetric allocation on |N| ≤ 8
    When: the core is checked by signature and by raw subsets
    Then: both agree on efficiency, membership and the worst shortfall
    """
    network, delta = case
    game = an_table(network, delta)
    allocation = lrp(network, delta)

    by_signature = core_check(game, allocation, method=CoreMethod.SIGNATURE)
    by_subset = core_check(game, allocation, method=CoreMethod.SUBSET)

    assert by_signature.in_core == by_subset.in_core
    assert by_signature.efficient == by_subset.efficient


def test_lrp_is_the_unique_axiomatic_solution(case):
    network, delta = case
    allocation = lrp(network, delta)

    assert axiom_check(network, delta, allocation).failures() == []
    assert uniqueness_reconstruction(network, delta).ordered(network) == allocation.ordered(network)


def test_equal_sides_collapse_to_productivity():
    """With |K| = |M| every efficient side-symmetric rule pays v(N)/|N|."""
    for size in (1, 2, 3, 4):
        network = BipartiteNetwork.from_sizes(size, size)
        delta = Fraction(1, 2 * size)
        share = an_table(network, delta).grand_value / network.size

        for allocation in (productivity_allocation(network, delta), shapley_closed(network, delta), lrp(network, delta)):
            assert allocation.side_payoff(network, Side.K) == share
            assert allocation.side_payoff(network, Side.M) == share


@pytest.mark.parametrize("k, m", [(1, 2), (2, 3), (3, 3), (2, 4)])
def test_subset_shapley_oracle_validates_signature_counting(k, m):
    network = BipartiteNetwork.from_sizes(k, m)
    game = an_table(network, Fraction(1, 4))

    assert shapley_subset_oracle(game).ordered(network) == shapley_closed(network, Fraction(1, 4)).ordered(network)


def test_violations_agree_across_paths_for_a_bad_allocation():
    network = BipartiteNetwork.from_sizes(2, 3)
    game = an_table(network, Fraction(1, 4))
    allocation = productivity_allocation(network, Fraction(1, 10))

    by_signature = core_check(game, allocation, method=CoreMethod.SIGNATURE)
    by_subset = core_check(game, allocation, method=CoreMethod.SUBSET)

    assert not by_signature.efficient
    assert {v.signature for v in by_signature.violations} == {v.signature for v in by_subset.violations}
    assert by_signature.worst.shortfall == by_subset.worst.shortfall
