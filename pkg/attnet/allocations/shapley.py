"""Shapley coefficients and the enumeration oracles.

φ_i(v) = Σ_{S∋i} γ(S)·[v(S) − v(S ∖ {i})] with γ(S) = (s−1)!(n−s)!/n!.

Since game values depend on S only through (k_S, m_S), the sum over
coalitions collapses to a sum over signatures: for i ∈ K there are
C(|K|−1, k−1)·C(|M|, m) coalitions S ∋ i of signature (k, m). That count
times γ is the coefficient Π^K_M(k, m).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from attnet.allocations.models import Allocation, RuleTag
from attnet.constants import MAX_SHAPLEY_PLAYERS, MAX_SUBSET_SHAPLEY_PLAYERS
from attnet.exceptions import CapacityExceededError
from attnet.games.models import GameTable
from attnet.network.models import Side
from attnet.network.topology import all_coalitions

logger = logging.getLogger(__name__)


def gamma(size: int, players: int) -> Fraction:
    """γ(S) = (s−1)!(n−s)!/n! for a coalition of ``size`` s ≥ 1 among n players."""
    if not 1 <= size <= players:
        raise ValueError(f"Coalition size must lie in [1, {players}], got {size}")
    return Fraction(factorial(size - 1) * factorial(players - size), factorial(players))


def pi_coefficient(x_size: int, y_size: int, i: int, j: int) -> Fraction:
    """Π^X_Y(i, j) = C(|Y|, j)·C(|X|−1, i−1)·(i+j−1)!(|X|+|Y|−i−j)!/(|X|+|Y|)!.

    The probability that a fixed player of X, arriving in a uniformly random
    order, finds itself completing a coalition with i members of X and j of Y.
    """
    n = x_size + y_size
    return Fraction(
        comb(y_size, j) * comb(x_size - 1, i - 1) * factorial(i + j - 1) * factorial(n - i - j),
        factorial(n),
    )


@dataclass(frozen=True)
class ShapleyCoefficients:
    """Π^X_Y for a fixed pair of side sizes.

    Attributes:
        x_size: |X|, the side of the player being valued
        y_size: |Y|, the opposite side
    """

    x_size: int
    y_size: int

    def pi(self, i: int, j: int) -> Fraction:
        return pi_coefficient(self.x_size, self.y_size, i, j)

    def index_range(self) -> list[tuple[int, int]]:
        """(i, j) with 1 ≤ i ≤ |X| and 0 ≤ j ≤ |Y|."""
        return [(i, j) for i in range(1, self.x_size + 1) for j in range(self.y_size + 1)]

    def total(self) -> Fraction:
        """Σ Π over the index range; exactly 1."""
        return sum((self.pi(i, j) for i, j in self.index_range()), Fraction(0))


def shapley_coefficients(k_size: int, m_size: int, side: Side) -> ShapleyCoefficients:
    """Coefficients for a player on ``side``: Π^K_M on K, Π^M_K on M."""
    if side is Side.K:
        return ShapleyCoefficients(x_size=k_size, y_size=m_size)
    return ShapleyCoefficients(x_size=m_size, y_size=k_size)


def shapley_oracle(game: GameTable) -> Allocation:
    """Exact Shapley value of ``game`` by weighted marginals over signatures.

    For i ∈ K: Σ_{k=1}^{|K|} Σ_{m=0}^{|M|} C(|K|−1,k−1)·C(|M|,m)·γ(k+m)·[v(k,m) − v(k−1,m)],
    and symmetrically for i ∈ M.

    Raises:
        CapacityExceededError: If |N| exceeds MAX_SHAPLEY_PLAYERS
    """
    network = game.network
    n = network.size
    if n > MAX_SHAPLEY_PLAYERS:
        raise CapacityExceededError("shapley oracle", n, MAX_SHAPLEY_PLAYERS)

    big_k, big_m = network.signature
    phi_k = Fraction(0)
    phi_m = Fraction(0)
    for k, m in network.signatures():
        if k >= 1:
            count = comb(big_k - 1, k - 1) * comb(big_m, m)
            phi_k += count * gamma(k + m, n) * game.marginal(Side.K, (k, m))
        if m >= 1:
            count = comb(big_m - 1, m - 1) * comb(big_k, k)
            phi_m += count * gamma(k + m, n) * game.marginal(Side.M, (k, m))

    logger.debug("Shapley oracle over %d signatures for %s", len(game.values), network.signature)
    return Allocation.from_sides(network, phi_k, phi_m, RuleTag.SHAPLEY_ORACLE, delta=game.delta, horizon=game.horizon)


def shapley_subset_oracle(game: GameTable) -> Allocation:
    """Shapley value by the raw sum over all 2^n coalitions.

    Validates the signature counting behind ``shapley_oracle``.

    Raises:
        CapacityExceededError: If |N| exceeds MAX_SUBSET_SHAPLEY_PLAYERS
    """
    network = game.network
    n = network.size
    if n > MAX_SUBSET_SHAPLEY_PLAYERS:
        raise CapacityExceededError("subset shapley oracle", n, MAX_SUBSET_SHAPLEY_PLAYERS)

    payoffs = {node: Fraction(0) for node in network.nodes}
    for coalition in all_coalitions(network):
        if coalition.size == 0:
            continue
        weight = gamma(coalition.size, n)
        value = game.value_of(coalition)
        for node in coalition.ordered_members:
            payoffs[node] += weight * (value - game.value_of(coalition.without(node)))

    logger.debug("Subset Shapley oracle enumerated %d coalitions", 2**n)
    return Allocation(payoffs=payoffs, rule=RuleTag.SHAPLEY_SUBSET, delta=game.delta, horizon=game.horizon)
