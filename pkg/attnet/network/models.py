"""Data models for complete bipartite networks and coalitions.

A complete bipartite network is fully described by its two ordered label
lists; the edge set {(i, j) : i ∈ K, j ∈ M} is structural and never stored.
"""

from dataclasses import dataclass, field
from enum import Enum
from collections.abc import Hashable, Iterable

from attnet.exceptions import InvalidInputError, UnknownNodeError

NodeId = Hashable
Signature = tuple[int, int]


class Side(Enum):
    """The two sides of the bipartition."""

    K = "K"
    M = "M"


@dataclass(frozen=True)
class BipartiteNetwork:
    """A complete bipartite network g = (K, M, E).

    Attributes:
        k_labels: Ordered node identifiers of side K. Must be non-empty and
                  duplicate-free.
        m_labels: Ordered node identifiers of side M. Must be non-empty,
                  duplicate-free and disjoint from k_labels.

    Raises:
        InvalidInputError: If a side is empty, a label repeats, or the sides
            share a label.
    """

    k_labels: tuple[NodeId, ...]
    m_labels: tuple[NodeId, ...]
    _sides: dict[NodeId, Side] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate the bipartition and index the node sides."""
        object.__setattr__(self, "k_labels", tuple(self.k_labels))
        object.__setattr__(self, "m_labels", tuple(self.m_labels))

        if not self.k_labels or not self.m_labels:
            raise InvalidInputError(
                f"Both sides must be non-empty, got |K|={len(self.k_labels)}, |M|={len(self.m_labels)}",
                field="network",
            )
        for name, labels in (("K", self.k_labels), ("M", self.m_labels)):
            if len(set(labels)) != len(labels):
                duplicates = sorted({str(x) for x in labels if labels.count(x) > 1})
                raise InvalidInputError(
                    f"Side {name} repeats node identifiers: {', '.join(duplicates)}",
                    field=name,
                    value=duplicates,
                )
        shared = set(self.k_labels) & set(self.m_labels)
        if shared:
            raise InvalidInputError(
                f"Sides K and M share node identifiers: {', '.join(sorted(map(str, shared)))}",
                field="network",
                value=sorted(map(str, shared)),
            )

        sides = {label: Side.K for label in self.k_labels}
        sides.update({label: Side.M for label in self.m_labels})
        object.__setattr__(self, "_sides", sides)

    @classmethod
    def from_sizes(cls, k: int, m: int) -> "BipartiteNetwork":
        """Build a network with default labels K1..Kk and M1..Mm."""
        return cls(
            k_labels=tuple(f"K{i}" for i in range(1, k + 1)),
            m_labels=tuple(f"M{j}" for j in range(1, m + 1)),
        )

    @property
    def k_size(self) -> int:
        return len(self.k_labels)

    @property
    def m_size(self) -> int:
        return len(self.m_labels)

    @property
    def size(self) -> int:
        """Total number of nodes n = |K| + |M|."""
        return len(self.k_labels) + len(self.m_labels)

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        """All nodes, K side first, in label order."""
        return self.k_labels + self.m_labels

    @property
    def signature(self) -> Signature:
        """Signature of the grand coalition (|K|, |M|)."""
        return (self.k_size, self.m_size)

    def side_of(self, node: NodeId) -> Side:
        """Return the side of ``node``.

        Raises:
            UnknownNodeError: If the node is not in the network
        """
        try:
            return self._sides[node]
        except (KeyError, TypeError):
            raise UnknownNodeError(node) from None

    def __contains__(self, node: object) -> bool:
        try:
            return node in self._sides
        except TypeError:
            return False

    def signatures(self) -> list[Signature]:
        """All signatures (k, m), 0 ≤ k ≤ |K|, 0 ≤ m ≤ |M|, in lexicographic order."""
        return [(k, m) for k in range(self.k_size + 1) for m in range(self.m_size + 1)]


@dataclass(frozen=True)
class Coalition:
    """A subset S of a network's nodes, with its signature (k_S, m_S).

    Coalitions are built by ``attnet.network.topology.induce``; member order
    follows the network's label order, K members first.

    Attributes:
        k_members: Members on side K, in network order
        m_members: Members on side M, in network order
    """

    k_members: tuple[NodeId, ...] = ()
    m_members: tuple[NodeId, ...] = ()

    @property
    def members(self) -> frozenset:
        return frozenset(self.k_members) | frozenset(self.m_members)

    @property
    def k_count(self) -> int:
        """k_S = |S ∩ K|."""
        return len(self.k_members)

    @property
    def m_count(self) -> int:
        """m_S = |S ∩ M|."""
        return len(self.m_members)

    @property
    def size(self) -> int:
        return len(self.k_members) + len(self.m_members)

    @property
    def signature(self) -> Signature:
        return (len(self.k_members), len(self.m_members))

    @property
    def ordered_members(self) -> tuple[NodeId, ...]:
        """Members in adjacency-matrix order (K members first)."""
        return self.k_members + self.m_members

    def side_of(self, node: NodeId) -> Side | None:
        """Side of ``node`` inside this coalition, or None if not a member."""
        if node in self.k_members:
            return Side.K
        if node in self.m_members:
            return Side.M
        return None

    def __contains__(self, node: object) -> bool:
        return node in self.k_members or node in self.m_members

    def __len__(self) -> int:
        return self.size

    def without(self, node: NodeId) -> "Coalition":
        """Return S ∖ {node}."""
        if node not in self:
            raise UnknownNodeError(node)
        return Coalition(
            k_members=tuple(x for x in self.k_members if x != node),
            m_members=tuple(x for x in self.m_members if x != node),
        )


def label_list(labels: Iterable[NodeId]) -> str:
    """Render labels as ``{a,b,c}`` for reports."""
    return "{" + ",".join(str(x) for x in labels) + "}"
