"""Core membership.

Core(N, v) = {x : Σ_{i∈N} x_i = v(N) and Σ_{i∈S} x_i ≥ v(S) for all S ⊆ N}.

For a side-symmetric allocation the payoff of S depends only on (k_S, m_S),
so (|K|+1)(|M|+1) inequalities replace the 2^n subset inequalities. Other
allocations go through the raw subset path.
"""

import logging
from fractions import Fraction

from attnet.allocations.models import Allocation
from attnet.constants import MAX_CORE_PLAYERS, MAX_SUBSET_CORE_PLAYERS
from attnet.exceptions import CapacityExceededError, InvalidInputError
from attnet.games.models import GameTable
from attnet.network.models import Side
from attnet.network.topology import all_coalitions
from attnet.verify.models import CoreMethod, CoreReport, CoreViolation

logger = logging.getLogger(__name__)


def _signature_violations(game: GameTable, allocation: Allocation) -> tuple[list[CoreViolation], int]:
    network = game.network
    k_payoff = allocation.side_payoff(network, Side.K)
    m_payoff = allocation.side_payoff(network, Side.M)
    violations = []
    signatures = network.signatures()
    for k, m in signatures:
        value = game.value((k, m))
        payoff = k * k_payoff + m * m_payoff
        if payoff < value:
            violations.append(CoreViolation(signature=(k, m), value=value, payoff=payoff))
    return violations, len(signatures)


def _subset_violations(game: GameTable, allocation: Allocation) -> tuple[list[CoreViolation], int]:
    violations = []
    checked = 0
    for coalition in all_coalitions(game.network):
        checked += 1
        value = game.value_of(coalition)
        payoff = sum((allocation.payoff(node) for node in coalition.ordered_members), Fraction(0))
        if payoff < value:
            violations.append(
                CoreViolation(
                    signature=coalition.signature,
                    value=value,
                    payoff=payoff,
                    members=coalition.ordered_members,
                )
            )
    return violations, checked


def _resolve_method(game: GameTable, allocation: Allocation, method: CoreMethod) -> CoreMethod:
    network = game.network
    symmetric = allocation.is_side_symmetric(network)
    if method is CoreMethod.AUTO:
        method = CoreMethod.SIGNATURE if symmetric else CoreMethod.SUBSET

    if method is CoreMethod.SIGNATURE:
        if not symmetric:
            raise InvalidInputError(
                "Signature-level core checking needs equal payoffs within each side; use the subset method",
                field="allocation",
            )
        if network.size > MAX_CORE_PLAYERS:
            raise CapacityExceededError("core check", network.size, MAX_CORE_PLAYERS)
    elif network.size > MAX_SUBSET_CORE_PLAYERS:
        raise CapacityExceededError("subset core check", network.size, MAX_SUBSET_CORE_PLAYERS)
    return method


def core_check(game: GameTable, allocation: Allocation, method: CoreMethod = CoreMethod.AUTO) -> CoreReport:
    """Check whether ``allocation`` lies in the core of ``game``.

    Args:
        game: Characteristic function by signature
        allocation: Payoff vector over the game's network
        method: AUTO picks the signature path for side-symmetric allocations
            and the subset path otherwise

    Returns:
        CoreReport with violations sorted by worst shortfall, ties broken by
        lexicographic signature

    Raises:
        InvalidInputError: If the allocation's nodes differ from the network's,
            or SIGNATURE is forced on an asymmetric allocation
        CapacityExceededError: If the chosen enumeration exceeds its bound
    """
    network = game.network
    allocation.require_covers(network)
    method = _resolve_method(game, allocation, method)

    if method is CoreMethod.SIGNATURE:
        violations, checked = _signature_violations(game, allocation)
    else:
        violations, checked = _subset_violations(game, allocation)
    violations.sort(key=CoreViolation.sort_key)

    total = allocation.total()
    logger.debug(
        "Core check (%s) on %s: %d inequalities, %d violations",
        method.value,
        network.signature,
        checked,
        len(violations),
    )
    return CoreReport(
        efficient=total == game.grand_value,
        violations=tuple(violations),
        grand_value=game.grand_value,
        total=total,
        method=method,
        checked=checked,
    )
