"""Unit tests for bipartite networks, coalitions and spectral radii."""

import math
from fractions import Fraction

import numpy as np
import pytest

from attnet.exceptions import InvalidInputError, UnknownNodeError
from attnet.network import (
    BipartiteNetwork,
    Coalition,
    Side,
    adjacency,
    all_coalitions,
    grand_coalition,
    induce,
    representative,
    spectral_radius,
    spectral_radius_estimate,
    to_networkx,
)
from attnet.network.models import label_list


class TestBipartiteNetwork:
    def test_from_sizes_labels(self):
        """
        Given sizes (2, 3)
        When the network is built from sizes
        Then labels are K1..K2 and M1..M3, K side first
        """
        network = BipartiteNetwork.from_sizes(2, 3)

        assert network.k_labels == ("K1", "K2")
        assert network.m_labels == ("M1", "M2", "M3")
        assert network.nodes == ("K1", "K2", "M1", "M2", "M3")
        assert network.size == 5
        assert network.signature == (2, 3)

    def test_side_lookup(self, star_two):
        assert star_two.side_of(1) is Side.K
        assert star_two.side_of(3) is Side.M

    def test_unknown_node_rejected(self, star_two):
        with pytest.raises(UnknownNodeError) as exc:
            star_two.side_of(99)
        assert exc.value.node == 99

    @pytest.mark.parametrize(
        "k_labels, m_labels, message",
        [
            ((), ("a",), "non-empty"),
            (("a",), (), "non-empty"),
            (("a", "a"), ("b",), "repeats"),
            (("a",), ("a", "b"), "share"),
        ],
    )
    def test_invalid_bipartitions(self, k_labels, m_labels, message):
        with pytest.raises(InvalidInputError, match=message):
            BipartiteNetwork(k_labels=k_labels, m_labels=m_labels)

    def test_signatures_cover_the_grid(self):
        network = BipartiteNetwork.from_sizes(1, 2)

        assert network.signatures() == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


class TestCoalitions:
    def test_induce_orders_members_like_the_network(self, square):
        """
        Given members named out of order and with a repetition
        When the coalition is induced
        Then members follow network order, K first
        """
        coalition = induce(square, [4, 2, 3, 4])

        assert coalition.k_members == (2,)
        assert coalition.m_members == (3, 4)
        assert coalition.signature == (1, 2)
        assert coalition.ordered_members == (2, 3, 4)

    def test_induce_rejects_unknown_node(self, square):
        with pytest.raises(UnknownNodeError):
            induce(square, [1, 7])

    def test_empty_coalition(self, square):
        empty = induce(square, [])

        assert empty.signature == (0, 0)
        assert len(empty) == 0
        assert spectral_radius(empty).radicand == 0

    def test_without_removes_one_member(self, square):
        coalition = grand_coalition(square).without(3)

        assert coalition.signature == (2, 1)
        assert 3 not in coalition
        assert coalition.side_of(3) is None
        assert coalition.side_of(1) is Side.K

    def test_without_rejects_non_member(self, square):
        with pytest.raises(UnknownNodeError):
            induce(square, [1]).without(3)

    def test_representative_takes_first_labels(self, star_three):
        coalition = representative(star_three, (1, 2))

        assert coalition == Coalition(k_members=(1,), m_members=(2, 3))

    def test_representative_rejects_oversized_signature(self, star_two):
        with pytest.raises(ValueError):
            representative(star_two, (2, 0))

    def test_all_coalitions_enumerates_power_set(self, square):
        coalitions = list(all_coalitions(square))

        assert len(coalitions) == 16
        assert coalitions[0].size == 0
        assert coalitions[-1] == grand_coalition(square)
        assert len({c.members for c in coalitions}) == 16

    def test_label_list(self):
        assert label_list(("K1", "M1", "M2")) == "{K1,M1,M2}"


class TestAdjacency:
    def test_block_structure(self, star_two):
        """
        Given the star K={1}, M={2,3}
        When G(N) is built
        Then the center links to both workers and workers do not link
        """
        expected = np.array([[0, 1, 1], [1, 0, 0], [1, 0, 0]])

        np.testing.assert_array_equal(adjacency(grand_coalition(star_two)), expected)

    def test_single_side_coalition_has_no_edges(self, square):
        assert not adjacency(induce(square, [3, 4])).any()

    def test_matches_networkx(self):
        network = BipartiteNetwork.from_sizes(2, 3)
        graph = to_networkx(network)

        assert graph.number_of_edges() == 6
        assert graph.nodes["K1"]["bipartite"] == 0
        assert graph.nodes["M3"]["bipartite"] == 1


class TestSpectralRadius:
    @pytest.mark.parametrize("k, m, radicand", [(1, 2, 2), (2, 2, 4), (3, 3, 9), (0, 4, 0)])
    def test_radicand_is_product_of_counts(self, k, m, radicand):
        network = BipartiteNetwork.from_sizes(max(k, 1), m)

        assert spectral_radius(representative(network, (k, m))).radicand == radicand

    def test_exact_root_when_perfect_square(self):
        network = BipartiteNetwork.from_sizes(2, 2)
        radius = spectral_radius(grand_coalition(network))

        assert radius.exact_root() == 2
        assert str(radius) == "2"

    def test_irrational_root_kept_symbolic(self, star_two):
        radius = spectral_radius(grand_coalition(star_two))

        assert radius.exact_root() is None
        assert str(radius) == "sqrt(2)"
        assert float(radius) == pytest.approx(math.sqrt(2))

    def test_admits_is_half_open(self):
        """The boundary delta = 1/λ_max diverges."""
        radius = spectral_radius(grand_coalition(BipartiteNetwork.from_sizes(2, 2)))

        assert radius.admits(Fraction(0))
        assert radius.admits(Fraction(49, 100))
        assert not radius.admits(Fraction(1, 2))
        assert radius.margin(Fraction(1, 3)) == Fraction(5, 9)

    @pytest.mark.parametrize("k, m", [(3, 3), (1, 4), (2, 3)])
    def test_power_iteration_agrees_with_closed_form(self, k, m):
        """
        Given a complete bipartite network
        When λ_max(N) is estimated by power iteration on the networkx adjacency
        Then it agrees with √(k·m) to 1e-9
        """
        network = BipartiteNetwork.from_sizes(k, m)

        estimate = spectral_radius_estimate(network, grand_coalition(network))

        assert abs(estimate - math.sqrt(k * m)) < 1e-9

    def test_power_iteration_on_edgeless_coalition(self, square):
        assert spectral_radius_estimate(square, induce(square, [1, 2])) == 0.0
