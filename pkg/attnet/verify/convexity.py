"""Convexity, superadditivity and monotonicity at the signature level.

A game is convex when v(S) − v(S ∖ {i}) ≤ v(T) − v(T ∖ {i}) whenever
i ∈ S ⊆ T. For signature-valued games every pair of signatures
(k, m) ≤ (k', m') is realized by nested coalitions, so comparing marginals
across all such pairs is exhaustive.
"""

import logging
from collections.abc import Iterator

from attnet.constants import MAX_CORE_PLAYERS
from attnet.exceptions import CapacityExceededError
from attnet.games.models import GameTable
from attnet.network.models import Side, Signature
from attnet.verify.models import PropertyReport, PropertyViolation

logger = logging.getLogger(__name__)


def _require_capacity(game: GameTable, operation: str) -> None:
    if game.network.size > MAX_CORE_PLAYERS:
        raise CapacityExceededError(operation, game.network.size, MAX_CORE_PLAYERS)


def _nested_pairs(game: GameTable) -> Iterator[tuple[Signature, Signature]]:
    """(small, large) with small ≤ large componentwise, lexicographic order."""
    signatures = game.network.signatures()
    for small in signatures:
        for large in signatures:
            if small[0] <= large[0] and small[1] <= large[1]:
                yield small, large


def convexity_check(game: GameTable) -> PropertyReport:
    """Compare marginals of both sides across every nested signature pair.

    Returns:
        PropertyReport carrying the first violating quadruple
        (side, small signature, large signature, marginals)
    """
    _require_capacity(game, "convexity check")
    checked = 0
    for side in Side:
        for small, large in _nested_pairs(game):
            own = 0 if side is Side.K else 1
            if small[own] == 0 or small == large:
                continue
            checked += 1
            before = game.marginal(side, small)
            after = game.marginal(side, large)
            if before > after:
                logger.debug("Convexity fails for %s at %s <= %s", side.value, small, large)
                return PropertyReport(
                    name="convexity",
                    holds=False,
                    violation=PropertyViolation(signatures=(small, large), left=before, right=after, side=side),
                    checked=checked,
                )
    return PropertyReport(name="convexity", holds=True, checked=checked)


def superadditivity_check(game: GameTable) -> PropertyReport:
    """v(S) + v(T) ≤ v(S ∪ T) for disjoint S, T."""
    _require_capacity(game, "superadditivity check")
    big_k, big_m = game.network.signature
    checked = 0
    for first in game.network.signatures():
        for second in game.network.signatures():
            union = (first[0] + second[0], first[1] + second[1])
            if union[0] > big_k or union[1] > big_m:
                continue
            checked += 1
            left = game.value(first) + game.value(second)
            right = game.value(union)
            if left > right:
                return PropertyReport(
                    name="superadditivity",
                    holds=False,
                    violation=PropertyViolation(signatures=(first, second, union), left=left, right=right),
                    checked=checked,
                )
    return PropertyReport(name="superadditivity", holds=True, checked=checked)


def monotonicity_check(game: GameTable) -> PropertyReport:
    """S ⊆ T ⇒ v(S) ≤ v(T)."""
    _require_capacity(game, "monotonicity check")
    checked = 0
    for small, large in _nested_pairs(game):
        checked += 1
        left, right = game.value(small), game.value(large)
        if left > right:
            return PropertyReport(
                name="monotonicity",
                holds=False,
                violation=PropertyViolation(signatures=(small, large), left=left, right=right),
                checked=checked,
            )
    return PropertyReport(name="monotonicity", holds=True, checked=checked)
