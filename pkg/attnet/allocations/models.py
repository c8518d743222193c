"""Allocation models."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from types import MappingProxyType

from attnet.exceptions import InvalidInputError
from attnet.network.models import BipartiteNetwork, NodeId, Side


class RuleTag(Enum):
    """Which rule produced an allocation."""

    PRODUCTIVITY = "productivity"
    SHAPLEY_CLOSED = "shapley_closed"
    SHAPLEY_ORACLE = "shapley_oracle"
    SHAPLEY_SUBSET = "shapley_subset"
    LRP = "lrp"
    LRP_SERIES = "lrp_series"
    DIFFERENCE_X = "difference_x"
    UNIQUENESS = "uniqueness"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Allocation:
    """A payoff vector φ = (φ_i)_{i∈N}.

    Attributes:
        payoffs: Node id → exact payoff, in network node order
        rule: The rule that produced the payoffs
        delta: δ the rule was evaluated at (None for custom vectors)
        horizon: t for difference distributions and series partial sums
    """

    payoffs: Mapping[NodeId, Fraction]
    rule: RuleTag = RuleTag.CUSTOM
    delta: Fraction | None = None
    horizon: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "payoffs", MappingProxyType({node: Fraction(v) for node, v in self.payoffs.items()}))

    @classmethod
    def from_sides(
        cls,
        network: BipartiteNetwork,
        k_payoff: Fraction,
        m_payoff: Fraction,
        rule: RuleTag,
        delta: Fraction | None = None,
        horizon: int | None = None,
    ) -> "Allocation":
        """Build a side-symmetric allocation: ``k_payoff`` on K, ``m_payoff`` on M."""
        payoffs = {node: Fraction(k_payoff) for node in network.k_labels}
        payoffs.update({node: Fraction(m_payoff) for node in network.m_labels})
        return cls(payoffs=payoffs, rule=rule, delta=delta, horizon=horizon)

    @classmethod
    def from_sequence(cls, network: BipartiteNetwork, values: Sequence[Fraction]) -> "Allocation":
        """Pair ``values`` with the network's nodes (K side first).

        Raises:
            InvalidInputError: If the number of values differs from |N|
        """
        if len(values) != network.size:
            raise InvalidInputError(
                f"Allocation has {len(values)} payoffs but the network has {network.size} nodes",
                field="allocation",
                value=len(values),
            )
        return cls(payoffs=dict(zip(network.nodes, values)))

    @property
    def tag(self) -> str:
        """Rule tag, with the horizon for difference distributions: ``difference_x(3)``."""
        if self.rule is RuleTag.DIFFERENCE_X:
            return f"{self.rule.value}({self.horizon})"
        return self.rule.value

    def payoff(self, node: NodeId) -> Fraction:
        return self.payoffs[node]

    def total(self) -> Fraction:
        return sum(self.payoffs.values(), Fraction(0))

    def covers(self, network: BipartiteNetwork) -> bool:
        """True iff the payoffs are indexed by exactly the network's nodes."""
        return set(self.payoffs) == set(network.nodes)

    def require_covers(self, network: BipartiteNetwork) -> None:
        """Raise InvalidInputError unless the allocation matches ``network``."""
        if self.covers(network):
            return
        missing = [str(x) for x in network.nodes if x not in self.payoffs]
        extra = sorted(str(x) for x in self.payoffs if x not in network)
        raise InvalidInputError(
            f"Allocation does not match the network (missing: {missing}, extra: {extra})",
            field="allocation",
        )

    def side_values(self, network: BipartiteNetwork, side: Side) -> tuple[Fraction, ...]:
        labels = network.k_labels if side is Side.K else network.m_labels
        return tuple(self.payoffs[x] for x in labels)

    def is_side_symmetric(self, network: BipartiteNetwork) -> bool:
        """True iff every side pays all its nodes the same."""
        return all(len(set(self.side_values(network, side))) == 1 for side in Side)

    def side_payoff(self, network: BipartiteNetwork, side: Side) -> Fraction:
        """The common payoff on ``side``.

        Raises:
            ValueError: If the side is not paid uniformly
        """
        values = set(self.side_values(network, side))
        if len(values) != 1:
            raise ValueError(f"Side {side.value} is not paid uniformly")
        return values.pop()

    def ordered(self, network: BipartiteNetwork) -> tuple[Fraction, ...]:
        """Payoffs in network node order."""
        return tuple(self.payoffs[x] for x in network.nodes)
