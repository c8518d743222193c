"""Finite attenuation network (FAN) games.

For a coalition S of a complete bipartite network, the productivity matrix
M^t(g(S), δ) = Σ_{u=0}^{t} δ^u G^u(S) weights every walk of length u ≤ t by
δ^u. Node i's productivity p_i^S(δ, t) is its row sum and the FAN game is
v_δ^t(S) = Σ_{i∈S} p_i^S(δ, t).

Closed forms are the production path. The matrix-power functions
(``walk_counts``, ``productivity_matrix_oracle``) literally multiply
adjacency matrices and exist to check them.
"""

import logging
from fractions import Fraction

import numpy as np

from attnet.exceptions import InvalidInputError
from attnet.games.models import AttenuationParams, GameKind, GameTable, ProductivityMatrix
from attnet.network.models import BipartiteNetwork, Coalition, NodeId, Side, Signature
from attnet.network.topology import adjacency
from attnet.rationals import as_delta

logger = logging.getLogger(__name__)


# ===========================
# Matrix-power oracle
# ===========================


def adjacency_powers(coalition: Coalition, horizon: int) -> list[np.ndarray]:
    """G^0(S), ..., G^t(S) by repeated exact integer multiplication.

    Entries are Python integers (object dtype), so long horizons never
    overflow.
    """
    base = adjacency(coalition).astype(object)
    power = np.identity(coalition.size, dtype=np.int64).astype(object)
    powers = [power]
    for _ in range(horizon):
        power = power @ base
        powers.append(power)
    return powers


def walk_counts(coalition: Coalition, horizon: int) -> list[tuple[int, ...]]:
    """Row sums of G^u(S) for u = 0..t: the number of walks of length u from each member."""
    return [tuple(int(x) for x in power.sum(axis=1)) for power in adjacency_powers(coalition, horizon)]


def productivity_matrix_oracle(coalition: Coalition, params: AttenuationParams) -> ProductivityMatrix:
    """Evaluate Σ_{u=0}^{t} δ^u G^u(S) literally.

    M^0 is the identity.
    """
    size = coalition.size
    entries = [[Fraction(0)] * size for _ in range(size)]
    weight = Fraction(1)
    for power in adjacency_powers(coalition, params.horizon):
        for i in range(size):
            row = entries[i]
            for j in range(size):
                row[j] += weight * int(power[i, j])
        weight *= params.delta
    logger.debug("Oracle productivity matrix for %s at t=%d", coalition.signature, params.horizon)
    return ProductivityMatrix(entries=tuple(tuple(row) for row in entries), params=params)


def fan_value_oracle(coalition: Coalition, params: AttenuationParams) -> Fraction:
    """v_δ^t(S) as the total of the oracle productivity matrix."""
    return productivity_matrix_oracle(coalition, params).total()


# ===========================
# Closed forms
# ===========================


def closed_form_entry(coalition: Coalition, row: NodeId, col: NodeId, params: AttenuationParams) -> Fraction:
    """Entry m_ij^t(g(S), δ) from the block structure of G^u(S).

    G^{2d}(S) has k_S^{d-1}·m_S^d on the K×K block and k_S^d·m_S^{d-1} on the
    M×M block; G^{2d+1}(S) has (k_S·m_S)^d on both cross blocks.

    Raises:
        InvalidInputError: If either node is not a member of S
    """
    row_side = coalition.side_of(row)
    col_side = coalition.side_of(col)
    if row_side is None or col_side is None:
        missing = row if row_side is None else col
        raise InvalidInputError(f"Node {missing!r} is not a member of the coalition", field="node", value=missing)

    k, m = coalition.signature
    delta, t = params.delta, params.horizon
    value = Fraction(1) if row == col else Fraction(0)

    if row_side is col_side:
        # even walk lengths u = 2d, d >= 1
        for d in range(1, t // 2 + 1):
            count = k ** (d - 1) * m**d if row_side is Side.K else k**d * m ** (d - 1)
            value += count * delta ** (2 * d)
    else:
        # odd walk lengths u = 2d + 1, d >= 0
        for d in range(0, (t - 1) // 2 + 1):
            value += (k * m) ** d * delta ** (2 * d + 1)
    return value


def productivity_matrix_closed(coalition: Coalition, params: AttenuationParams) -> ProductivityMatrix:
    """M^t(g(S), δ) assembled entry by entry from ``closed_form_entry``."""
    order = coalition.ordered_members
    entries = tuple(tuple(closed_form_entry(coalition, i, j, params) for j in order) for i in order)
    return ProductivityMatrix(entries=entries, params=params)


def _side_productivity(signature: Signature, side: Side, params: AttenuationParams) -> Fraction:
    k, m = signature
    delta = params.delta
    value = Fraction(1)
    for u in range(1, params.horizon + 1):
        w, odd = divmod(u, 2)
        if not odd:
            value += (k * m) ** w * delta**u
        elif side is Side.K:
            # u = 2w + 1: walks K -> M of odd length reach m_S columns
            value += k**w * m ** (w + 1) * delta**u
        else:
            value += k ** (w + 1) * m**w * delta**u
    return value


def individual_productivity(coalition: Coalition, node: NodeId, params: AttenuationParams) -> Fraction:
    """p_i^S(δ, t), the row sum of M^t(g(S), δ) for node i.

    For i ∈ K and even t this is
    1 + Σ_{u=1}^{t/2} (k_S m_S)^u δ^{2u} + Σ_{u=1}^{t/2} k_S^{u-1} m_S^u δ^{2u-1};
    the M side and odd horizons follow the same per-step pattern.

    Returns:
        The productivity, or 0 when ``node`` is not a member of S
    """
    side = coalition.side_of(node)
    if side is None:
        return Fraction(0)
    return _side_productivity(coalition.signature, side, params)


def fan_signature_value(signature: Signature, params: AttenuationParams) -> Fraction:
    """v_δ^t for any coalition of the given signature.

    |S|                                                         t = 0
    |S| + (|S|δ + 2) Σ_{u=1}^{t/2} (k m)^u δ^{2u-1}               t even
    |S| + (|S|δ + 2) Σ_{u=1}^{(t-1)/2} (k m)^u δ^{2u-1}
        + 2 (k m)^{(t+1)/2} δ^t                                 t odd
    """
    k, m = signature
    size = k + m
    delta, t = params.delta, params.horizon
    if t == 0:
        return Fraction(size)

    total = Fraction(0)
    for u in range(1, t // 2 + 1):
        total += (k * m) ** u * delta ** (2 * u - 1)
    value = size + (size * delta + 2) * total
    if t % 2 == 1:
        value += 2 * (k * m) ** ((t + 1) // 2) * delta**t
    return Fraction(value)


def fan_value(coalition: Coalition, params: AttenuationParams) -> Fraction:
    """v_δ^t(S) by the closed form."""
    return fan_signature_value(coalition.signature, params)


def difference_signature_value(signature: Signature, delta: Fraction, t: int) -> Fraction:
    """d_δ^t for a signature; see ``difference_value``."""
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidInputError(
            f"Difference games are defined for t >= 1 (d^t = v^t - v^(t-1)), got t={t!r}",
            field="t",
            value=t,
        )
    delta = as_delta(delta)
    k, m = signature
    if t % 2 == 0:
        return Fraction((k + m) * (k * m) ** (t // 2)) * delta**t
    return Fraction(2 * (k * m) ** ((t + 1) // 2)) * delta**t


def difference_value(coalition: Coalition, delta: Fraction, t: int) -> Fraction:
    """d_δ^t(S) = v_δ^t(S) − v_δ^{t−1}(S).

    Parity-split exact form: |S|(k_S m_S)^{t/2} δ^t for even t and
    2(k_S m_S)^{(t+1)/2} δ^t for odd t.

    Raises:
        InvalidInputError: If t < 1 (d^0 would need v^{-1})
    """
    return difference_signature_value(coalition.signature, delta, t)


def fan_series(coalition: Coalition, params: AttenuationParams) -> list[Fraction]:
    """[v_δ^0(S), ..., v_δ^t(S)] accumulated from the difference games."""
    values = [Fraction(coalition.size)]
    for u in range(1, params.horizon + 1):
        values.append(values[-1] + difference_value(coalition, params.delta, u))
    return values


# ===========================
# Tables
# ===========================


def fan_table(network: BipartiteNetwork, params: AttenuationParams) -> GameTable:
    """Materialize v_δ^t over every signature of ``network``."""
    values = {sig: fan_signature_value(sig, params) for sig in network.signatures()}
    logger.debug(
        "Built FAN table for %s with delta=%s, t=%d (%d signatures)",
        network.signature,
        params.delta,
        params.horizon,
        len(values),
    )
    return GameTable(
        network=network,
        values=values,
        kind=GameKind.FAN,
        delta=params.delta,
        horizon=params.horizon,
    )


def difference_table(network: BipartiteNetwork, delta: Fraction, t: int) -> GameTable:
    """Materialize the difference game d_δ^t over every signature."""
    values = {sig: difference_signature_value(sig, delta, t) for sig in network.signatures()}
    return GameTable(
        network=network,
        values=values,
        kind=GameKind.DIFFERENCE,
        delta=Fraction(delta),
        horizon=t,
    )
