"""Complete bipartite networks, coalitions and their spectra."""

from attnet.network.models import BipartiteNetwork, Coalition, NodeId, Side, Signature
from attnet.network.topology import (
    SpectralRadius,
    adjacency,
    all_coalitions,
    grand_coalition,
    induce,
    representative,
    spectral_radius,
    spectral_radius_estimate,
    to_networkx,
)

__all__ = [
    "BipartiteNetwork",
    "Coalition",
    "NodeId",
    "Side",
    "Signature",
    "SpectralRadius",
    "adjacency",
    "all_coalitions",
    "grand_coalition",
    "induce",
    "representative",
    "spectral_radius",
    "spectral_radius_estimate",
    "to_networkx",
]
