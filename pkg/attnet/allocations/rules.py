"""Allocation rules for AN and difference games.

Every rule here is side-symmetric: all nodes on one side receive the same
payoff, so each rule reduces to computing one value per side.
"""

import logging
from fractions import Fraction

from attnet.allocations.models import Allocation, RuleTag
from attnet.allocations.shapley import shapley_coefficients
from attnet.exceptions import InvalidInputError
from attnet.games.fan import difference_signature_value
from attnet.games.limit import require_convergent, side_limit_productivity, side_marginal_contribution
from attnet.network.models import BipartiteNetwork, Side
from attnet.rationals import as_delta

logger = logging.getLogger(__name__)


def productivity_allocation(network: BipartiteNetwork, delta: Fraction) -> Allocation:
    """p^N(δ): each node receives its limit productivity in the grand coalition.

    Raises:
        DivergentAttenuationError: If |K||M|δ² ≥ 1
    """
    delta = as_delta(delta)
    signature = network.signature
    return Allocation.from_sides(
        network,
        side_limit_productivity(signature, Side.K, delta),
        side_limit_productivity(signature, Side.M, delta),
        RuleTag.PRODUCTIVITY,
        delta=delta,
    )


def _shapley_side(network: BipartiteNetwork, side: Side, delta: Fraction) -> Fraction:
    coefficients = shapley_coefficients(network.k_size, network.m_size, side)
    value = Fraction(0)
    for own, opposite in coefficients.index_range():
        signature = (own, opposite) if side is Side.K else (opposite, own)
        value += coefficients.pi(own, opposite) * side_marginal_contribution(signature, side, delta)
    return value


def shapley_closed(network: BipartiteNetwork, delta: Fraction) -> Allocation:
    """Explicit Shapley value of the AN game.

    φ_i = Σ_{k=1}^{|K|} Σ_{m=0}^{|M|} Π^K_M(k, m)·(1+mδ)²/((1−kmδ²)(1−kmδ²+mδ²)) for i ∈ K,
    and the double sum with Π^M_K(m, k) and the M-side marginal for i ∈ M.

    Raises:
        DivergentAttenuationError: If |K||M|δ² ≥ 1
    """
    delta = as_delta(delta)
    require_convergent(network.signature, delta)
    phi_k = _shapley_side(network, Side.K, delta)
    phi_m = _shapley_side(network, Side.M, delta)
    logger.debug("Closed-form Shapley for %s at delta=%s: (%s, %s)", network.signature, delta, phi_k, phi_m)
    return Allocation.from_sides(network, phi_k, phi_m, RuleTag.SHAPLEY_CLOSED, delta=delta)


def _require_horizon(t: int) -> int:
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidInputError(f"t must be an integer >= 1, got {t!r}", field="t", value=t)
    return t


def difference_distribution(network: BipartiteNetwork, delta: Fraction, t: int) -> Allocation:
    """x^t(δ): d_δ^t(N)/|N| scaled by the link ratio of each side.

    x_i = (d_δ^t(N)/|N|)·(|M|/|K|) for i ∈ K and (d_δ^t(N)/|N|)·(|K|/|M|) for i ∈ M.

    Raises:
        InvalidInputError: If t < 1
    """
    delta = as_delta(delta)
    _require_horizon(t)
    big_k, big_m = network.signature
    share = difference_signature_value(network.signature, delta, t) / network.size
    return Allocation.from_sides(
        network,
        share * Fraction(big_m, big_k),
        share * Fraction(big_k, big_m),
        RuleTag.DIFFERENCE_X,
        delta=delta,
        horizon=t,
    )


def difference_distribution_explicit(network: BipartiteNetwork, delta: Fraction, t: int) -> Allocation:
    """x^t(δ) from the parity-split explicit powers.

    t even: |K|^{t/2−1}|M|^{t/2+1}δ^t on K and |K|^{t/2+1}|M|^{t/2−1}δ^t on M.
    t odd: (2/|N|)|K|^{(t−1)/2}|M|^{(t+3)/2}δ^t on K and the mirror on M.
    """
    delta = as_delta(delta)
    _require_horizon(t)
    big_k, big_m = network.signature
    if t % 2 == 0:
        half = t // 2
        x_k = Fraction(big_k ** (half + 1) * big_m ** (half + 1), big_k**2) * delta**t
        x_m = Fraction(big_k ** (half + 1) * big_m ** (half + 1), big_m**2) * delta**t
    else:
        low, high = (t - 1) // 2, (t + 3) // 2
        x_k = Fraction(2 * big_k**low * big_m**high, network.size) * delta**t
        x_m = Fraction(2 * big_k**high * big_m**low, network.size) * delta**t
    return Allocation.from_sides(network, x_k, x_m, RuleTag.DIFFERENCE_X, delta=delta, horizon=t)


def lrp(network: BipartiteNetwork, delta: Fraction) -> Allocation:
    """Link ratio productivity distribution ω(δ) = 1_N + Σ_{u≥1} x^u(δ).

    ω_i = 1 + (|M|/|K|·δ + 2|M|/(|N||K|))·|K||M|δ/(1 − |K||M|δ²) for i ∈ K,
    with |K| and |M| swapped for i ∈ M. At δ = 0 this is 1_N.

    Raises:
        DivergentAttenuationError: If |K||M|δ² ≥ 1
    """
    delta = as_delta(delta)
    big_k, big_m = network.signature
    n = network.size
    margin = require_convergent(network.signature, delta)
    growth = big_k * big_m * delta / margin
    omega_k = 1 + (Fraction(big_m, big_k) * delta + Fraction(2 * big_m, n * big_k)) * growth
    omega_m = 1 + (Fraction(big_k, big_m) * delta + Fraction(2 * big_k, n * big_m)) * growth
    return Allocation.from_sides(network, omega_k, omega_m, RuleTag.LRP, delta=delta)


def lrp_series_oracle(network: BipartiteNetwork, delta: Fraction, t_max: int) -> Allocation:
    """Partial sum 1_N + Σ_{u=1}^{t_max} x^u(δ).

    Raises:
        InvalidInputError: If t_max < 1
    """
    delta = as_delta(delta)
    _require_horizon(t_max)
    omega_k = Fraction(1)
    omega_m = Fraction(1)
    for u in range(1, t_max + 1):
        step = difference_distribution(network, delta, u)
        omega_k += step.side_payoff(network, Side.K)
        omega_m += step.side_payoff(network, Side.M)
    return Allocation.from_sides(network, omega_k, omega_m, RuleTag.LRP_SERIES, delta=delta, horizon=t_max)


def lrp_tail_bound(network: BipartiteNetwork, delta: Fraction, t_max: int) -> Fraction:
    """Componentwise bound on ω(δ) − lrp_series_oracle(t_max).

    With r = |K||M|δ² and W = ⌊t_max/2⌋ the K-side tail is at most
    (|M|/|K| + 2|M|/(|N||K|δ))·r^{W+1}/(1 − r); the M side swaps |K| and |M|.
    """
    delta = as_delta(delta)
    big_k, big_m = network.signature
    if delta == 0:
        return Fraction(0)
    margin = require_convergent(network.signature, delta)
    ratio = big_k * big_m * delta * delta
    n = network.size
    scale = max(
        Fraction(big_m, big_k) + Fraction(2 * big_m, n * big_k) / delta,
        Fraction(big_k, big_m) + Fraction(2 * big_k, n * big_m) / delta,
    )
    return scale * ratio ** (t_max // 2 + 1) / margin
