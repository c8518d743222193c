"""Integration test: coalition structure and spectral radius over small networks."""

from itertools import combinations

import pytest

from attnet.network import all_coalitions, induce, spectral_radius, spectral_radius_estimate
from tests.conftest import sweep_networks


@pytest.mark.parametrize("network", sweep_networks(5), ids=lambda n: f"{n.k_size}x{n.m_size}")
def test_squared_radius_matches_power_iteration(network):
    """Given: every coalition S of a network with |K|, |M| ≤ 5
    When: λ_max(S) is estimated by power iteration on G(S)²
    Then: the estimate squared equals the exact radicand k_S·m_S within 1e-9
    """
    for coalition in all_coalitions(network):
        radicand = spectral_radius(coalition).radicand
        estimate = spectral_radius_estimate(network, coalition)

        assert radicand == coalition.k_count * coalition.m_count
        assert abs(estimate**2 - radicand) < 1e-9, coalition.signature


@pytest.mark.parametrize("network", sweep_networks(3), ids=lambda n: f"{n.k_size}x{n.m_size}")
def test_induce_is_idempotent(network):
    for coalition in all_coalitions(network):
        again = induce(network, coalition.members)

        assert again == coalition
        assert induce(network, reversed(again.ordered_members)) == coalition


@pytest.mark.parametrize("network", sweep_networks(3), ids=lambda n: f"{n.k_size}x{n.m_size}")
def test_signatures_are_hereditary(network):
    """Given: every pair of coalitions S ⊆ T
    Then: k_S ≤ k_T and m_S ≤ m_T
    """
    coalitions = list(all_coalitions(network))
    for smaller, larger in combinations(coalitions, 2):
        for s, t in ((smaller, larger), (larger, smaller)):
            if s.members <= t.members:
                assert s.k_count <= t.k_count
                assert s.m_count <= t.m_count
