"""Coalition induction, adjacency matrices and spectral radii.

Every subnetwork induced by a coalition of a complete bipartite network is
itself complete bipartite on (K(S), M(S)), so each quantity here depends on
the coalition only through its signature (k_S, m_S).
"""

import logging
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

from attnet.constants import MAX_POWER_ITERATIONS, POWER_ITERATION_TOLERANCE
from attnet.exceptions import UnknownNodeError
from attnet.network.models import BipartiteNetwork, Coalition, NodeId, Side, Signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralRadius:
    """λ_max(S) = √(k_S·m_S), held exactly as its radicand.

    Comparisons against δ are done by squaring, so no irrational arithmetic
    is ever needed: δ < 1/λ_max ⇔ radicand·δ² < 1.

    Attributes:
        radicand: k_S·m_S
    """

    radicand: int

    def exact_root(self) -> int | None:
        """Return λ_max as an integer when the radicand is a perfect square."""
        root = math.isqrt(self.radicand)
        return root if root * root == self.radicand else None

    def admits(self, delta: Fraction) -> bool:
        """True iff δ lies in the half-open interval [0, 1/λ_max)."""
        return delta >= 0 and self.radicand * delta * delta < 1

    def margin(self, delta: Fraction) -> Fraction:
        """1 − radicand·δ², positive iff δ is admitted."""
        return 1 - self.radicand * Fraction(delta) ** 2

    def __float__(self) -> float:
        return math.sqrt(self.radicand)

    def __str__(self) -> str:
        root = self.exact_root()
        return str(root) if root is not None else f"sqrt({self.radicand})"


def induce(network: BipartiteNetwork, members: Iterable[NodeId]) -> Coalition:
    """Return the coalition induced by ``members``.

    Args:
        network: The parent network
        members: Node identifiers; order and repetition are irrelevant

    Returns:
        Coalition with members ordered as in the network

    Raises:
        UnknownNodeError: Naming the first identifier not in the network
    """
    wanted = set()
    for node in members:
        if node not in network:
            raise UnknownNodeError(node)
        wanted.add(node)
    return Coalition(
        k_members=tuple(x for x in network.k_labels if x in wanted),
        m_members=tuple(x for x in network.m_labels if x in wanted),
    )


def grand_coalition(network: BipartiteNetwork) -> Coalition:
    """The coalition N of all nodes."""
    return Coalition(k_members=network.k_labels, m_members=network.m_labels)


def representative(network: BipartiteNetwork, signature: Signature) -> Coalition:
    """First coalition (in label order) with the given signature."""
    k, m = signature
    if not (0 <= k <= network.k_size and 0 <= m <= network.m_size):
        raise ValueError(f"Signature {signature} does not fit network {network.signature}")
    return Coalition(k_members=network.k_labels[:k], m_members=network.m_labels[:m])


def all_coalitions(network: BipartiteNetwork) -> Iterator[Coalition]:
    """Enumerate all 2^n coalitions, smallest first, deterministic order."""
    nodes = network.nodes
    for size in range(len(nodes) + 1):
        for members in combinations(nodes, size):
            yield induce(network, members)


def adjacency(coalition: Coalition) -> np.ndarray:
    """Adjacency matrix G(S) of the induced subnetwork.

    Block form [[0, 1], [1, 0]] with the K block k_S×k_S first. Entries are
    0/1 integers indexed by ``coalition.ordered_members``.
    """
    k, m = coalition.signature
    matrix = np.zeros((k + m, k + m), dtype=np.int64)
    matrix[:k, k:] = 1
    matrix[k:, :k] = 1
    return matrix


def spectral_radius(coalition: Coalition) -> SpectralRadius:
    """λ_max(S) = √(k_S·m_S), exactly."""
    return SpectralRadius(radicand=coalition.k_count * coalition.m_count)


def to_networkx(network: BipartiteNetwork) -> nx.Graph:
    """Build the network as a networkx graph with a ``bipartite`` node attribute.

    The edge set is generated by networkx itself, independently of
    ``adjacency``, which makes it usable as an oracle.
    """
    graph = nx.complete_bipartite_graph(network.k_size, network.m_size)
    mapping = dict(enumerate(network.nodes))
    graph = nx.relabel_nodes(graph, mapping)
    nx.set_node_attributes(
        graph,
        {node: (0 if network.side_of(node) is Side.K else 1) for node in network.nodes},
        "bipartite",
    )
    return graph


def spectral_radius_estimate(
    network: BipartiteNetwork,
    coalition: Coalition,
    tolerance: float = POWER_ITERATION_TOLERANCE,
    max_iterations: int = MAX_POWER_ITERATIONS,
) -> float:
    """Estimate λ_max(S) by power iteration on G(S)².

    The adjacency comes from networkx. G(S) itself has the symmetric pair of
    eigenvalues ±λ_max, so iteration runs on the square, whose top eigenvalue
    λ_max² is unique.

    Returns:
        The estimated spectral radius (0.0 for edgeless coalitions)
    """
    order = list(coalition.ordered_members)
    if not order:
        return 0.0
    graph = to_networkx(network).subgraph(order)
    matrix = nx.to_numpy_array(graph, nodelist=order, dtype=float)
    square = matrix @ matrix

    vector = np.ones(len(order)) / math.sqrt(len(order))
    estimate = 0.0
    for iteration in range(max_iterations):
        image = square @ vector
        norm = float(np.linalg.norm(image))
        if norm == 0.0:
            return 0.0
        vector = image / norm
        previous, estimate = estimate, float(vector @ square @ vector)
        if abs(estimate - previous) <= tolerance * max(1.0, estimate):
            logger.debug("Power iteration converged after %d steps for %s", iteration + 1, coalition.signature)
            break
    return math.sqrt(max(estimate, 0.0))
