"""Integration test: FAN values converge to the AN game exactly when k·m·δ² < 1."""

from fractions import Fraction

import pytest

from attnet.allocations import lrp, lrp_series_oracle, lrp_tail_bound
from attnet.constants import LIMIT_GAP_TOLERANCE
from attnet.games.fan import difference_value, fan_series, fan_value
from attnet.games.limit import an_value, convergence_check, limit_gap_horizon
from attnet.games.models import AttenuationParams
from attnet.network import BipartiteNetwork, grand_coalition, representative
from tests.conftest import SWEEP_DELTAS, convergent, sweep_networks


@pytest.mark.parametrize("network", sweep_networks(4), ids=lambda n: f"{n.k_size}x{n.m_size}")
def test_gap_closes_at_the_reported_horizon(network):
    """Given: every signature S and convergent δ of the sweep
    When: v^t(S) is evaluated at the gap horizon
    Then: it lies within 1e-6 of v(S)
    """
    for delta in SWEEP_DELTAS:
        if not convergent(network, delta):
            continue
        for signature in network.signatures():
            coalition = representative(network, signature)
            horizon = limit_gap_horizon(signature, delta)
            gap = an_value(coalition, delta) - fan_value(coalition, AttenuationParams(delta, horizon))
            assert 0 <= gap < Fraction(LIMIT_GAP_TOLERANCE)


def test_divergence_witness():
    """Given: K={1}, M={2,3} at δ = 3/4, where 2·δ² = 9/8 > 1
    When: the FAN values are followed to t = 240
    Then: v^240/v^4 exceeds 10^6 and the increments never shrink within a parity class
    """
    network = BipartiteNetwork(k_labels=(1,), m_labels=(2, 3))
    delta = Fraction(3, 4)
    coalition = grand_coalition(network)

    assert not convergence_check(network, delta).converges

    series = fan_series(coalition, AttenuationParams(delta, 240))
    assert series[4] == Fraction(1059, 64)
    assert series[240] / series[4] > 10**6

    increments = [difference_value(coalition, delta, t) for t in range(1, 241)]
    evens, odds = increments[1::2], increments[0::2]
    assert all(a <= b for a, b in zip(evens, evens[1:]))
    assert all(a <= b for a, b in zip(odds, odds[1:]))


def test_boundary_does_not_converge():
    """At δ = 1/λ_max the increments are constant, so the values grow without bound."""
    network = BipartiteNetwork.from_sizes(2, 2)
    delta = Fraction(1, 2)
    coalition = grand_coalition(network)

    assert not convergence_check(network, delta).converges
    assert {difference_value(coalition, delta, t) for t in range(2, 21, 2)} == {4}


def test_lrp_series_converges_to_closed_form():
    network = BipartiteNetwork.from_sizes(2, 3)
    delta = Fraction(1, 4)
    closed = lrp(network, delta)

    for t_max in (10, 30, 60):
        series = lrp_series_oracle(network, delta, t_max)
        bound = lrp_tail_bound(network, delta, t_max)
        for node in network.nodes:
            assert 0 <= closed.payoff(node) - series.payoff(node) <= bound
    assert lrp_tail_bound(network, delta, 60) < Fraction(LIMIT_GAP_TOLERANCE)
