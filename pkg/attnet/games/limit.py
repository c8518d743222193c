"""Attenuation network (AN) games: the t → ∞ limit of FAN games.

For a coalition S the FAN values converge iff δ ∈ [0, 1/λ_max(S)), i.e.
k_S·m_S·δ² < 1, and the limit is

    v_δ(S) = (k_S + m_S + 2 k_S m_S δ) / (1 − k_S m_S δ²).

The whole family converges iff the grand coalition's test passes, since
every subcoalition has a smaller radicand.
"""

import logging
from fractions import Fraction

from attnet.exceptions import DivergentAttenuationError, InvalidInputError
from attnet.games.models import ConvergenceVerdict, GameKind, GameTable
from attnet.network.models import BipartiteNetwork, Coalition, NodeId, Side, Signature
from attnet.rationals import as_delta

logger = logging.getLogger(__name__)


def require_convergent(signature: Signature, delta: Fraction) -> Fraction:
    """Return 1 − k m δ² after checking it is positive.

    Raises:
        DivergentAttenuationError: If k m δ² ≥ 1 (the boundary diverges)
    """
    k, m = signature
    margin = 1 - k * m * delta * delta
    if margin <= 0:
        raise DivergentAttenuationError(signature, delta)
    return margin


def convergence_check(network: BipartiteNetwork, delta: Fraction) -> ConvergenceVerdict:
    """Decide whether the FAN family on ``network`` converges at ``delta``.

    Exact rational test k_N·m_N·δ² < 1.
    """
    delta = as_delta(delta)
    radicand = network.k_size * network.m_size
    margin = 1 - radicand * delta * delta
    verdict = ConvergenceVerdict(converges=margin > 0, threshold_radicand=radicand, margin=margin, delta=delta)
    logger.debug("Convergence for %s at delta=%s: %s", network.signature, delta, verdict.converges)
    return verdict


def an_signature_value(signature: Signature, delta: Fraction) -> Fraction:
    """v_δ for any coalition of the given signature."""
    delta = as_delta(delta)
    k, m = signature
    margin = require_convergent(signature, delta)
    return (k + m + 2 * k * m * delta) / margin


def an_value(coalition: Coalition, delta: Fraction) -> Fraction:
    """v_δ(S) = (k_S + m_S + 2 k_S m_S δ)/(1 − k_S m_S δ²).

    Gated on the coalition's own signature; one-sided coalitions always
    converge to |S|.

    Raises:
        DivergentAttenuationError: If k_S m_S δ² ≥ 1
    """
    return an_signature_value(coalition.signature, delta)


def side_limit_productivity(signature: Signature, side: Side, delta: Fraction) -> Fraction:
    """lim_t p_i^S(δ, t) for a member on ``side`` of a coalition with ``signature``."""
    delta = as_delta(delta)
    k, m = signature
    margin = require_convergent(signature, delta)
    opposite = m if side is Side.K else k
    return (1 + opposite * delta) / margin


def limit_productivity(coalition: Coalition, node: NodeId, delta: Fraction) -> Fraction:
    """p_i^S(δ): (1 + m_S δ)/(1 − k_S m_S δ²) on K, (1 + k_S δ)/(1 − k_S m_S δ²) on M.

    Returns:
        The limit productivity, or 0 when ``node`` is not in S

    Raises:
        DivergentAttenuationError: If k_S m_S δ² ≥ 1
    """
    side = coalition.side_of(node)
    if side is None:
        return Fraction(0)
    return side_limit_productivity(coalition.signature, side, delta)


def side_marginal_contribution(signature: Signature, side: Side, delta: Fraction) -> Fraction:
    """v_δ(S) − v_δ(S ∖ {i}) for i on ``side``, by signature.

    For i ∈ K: (1 + m δ)² / ((1 − k m δ²)(1 − k m δ² + m δ²)); the M side
    swaps the roles of k and m.
    """
    delta = as_delta(delta)
    k, m = signature
    own = k if side is Side.K else m
    if own == 0:
        raise InvalidInputError(f"Signature {signature} has no member on side {side.value}", field="node")
    margin = require_convergent(signature, delta)
    opposite = m if side is Side.K else k
    return (1 + opposite * delta) ** 2 / (margin * (margin + opposite * delta * delta))


def marginal_contribution(coalition: Coalition, node: NodeId, delta: Fraction) -> Fraction:
    """Closed-form marginal contribution of ``node`` to S.

    Raises:
        InvalidInputError: If ``node`` is not a member of S
        DivergentAttenuationError: If k_S m_S δ² ≥ 1
    """
    side = coalition.side_of(node)
    if side is None:
        raise InvalidInputError(f"Node {node!r} is not a member of the coalition", field="node", value=node)
    return side_marginal_contribution(coalition.signature, side, delta)


def an_table(network: BipartiteNetwork, delta: Fraction) -> GameTable:
    """Materialize v_δ over every signature.

    Raises:
        DivergentAttenuationError: If δ diverges for the grand coalition
    """
    delta = as_delta(delta)
    require_convergent(network.signature, delta)
    values = {sig: an_signature_value(sig, delta) for sig in network.signatures()}
    logger.debug("Built AN table for %s with delta=%s", network.signature, delta)
    return GameTable(network=network, values=values, kind=GameKind.AN, delta=delta)


def limit_gap_bound(signature: Signature, delta: Fraction, t: int) -> Fraction:
    """Exact upper bound on v_δ(S) − v_δ^t(S).

    With r = k m δ² and W = ⌊t/2⌋ the tail of the difference series is at
    most (2/δ + k + m)·r^{W+1}/(1 − r).
    """
    delta = as_delta(delta)
    k, m = signature
    if delta == 0 or k * m == 0:
        return Fraction(0)
    margin = require_convergent(signature, delta)
    ratio = k * m * delta * delta
    return (2 / delta + k + m) * ratio ** (t // 2 + 1) / margin


def limit_gap_horizon(signature: Signature, delta: Fraction, tail: float = 1e-8) -> int:
    """Smallest even t with (k m δ²)^{t/2} < ``tail``.

    Returns 0 when the FAN values are already exact (δ = 0 or no edges).

    Raises:
        DivergentAttenuationError: If k m δ² ≥ 1
    """
    delta = as_delta(delta)
    k, m = signature
    require_convergent(signature, delta)
    ratio = k * m * delta * delta
    if ratio == 0:
        return 0
    target = Fraction(tail)
    half, power = 1, ratio
    while power >= target:
        half += 1
        power *= ratio
    return 2 * half
