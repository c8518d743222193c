"""EF, EB and LBP axioms, their independence, and the unique solution.

EF   Σ_{i∈N} φ_i = v_δ(N)
EB   φ_i = φ_j whenever i and j lie on the same side
LBP  (1/|M|)·Σ_{i∈K}(φ_i − 1) = (1/|K|)·Σ_{j∈M}(φ_j − 1)

The constant 1 in LBP is the intrinsic productivity of every node.
"""

import logging
from fractions import Fraction

from attnet.allocations.models import Allocation, RuleTag
from attnet.allocations.rules import productivity_allocation
from attnet.constants import INTRINSIC_PRODUCTIVITY
from attnet.games.limit import an_signature_value, convergence_check
from attnet.games.models import GameTable
from attnet.network.models import BipartiteNetwork, Side
from attnet.verify.models import (
    Axiom,
    AxiomReport,
    AxiomWitness,
    IndependenceCase,
    IndependenceReport,
)

logger = logging.getLogger(__name__)


def _equality_witness(network: BipartiteNetwork, allocation: Allocation) -> AxiomWitness:
    for side in Side:
        labels = network.k_labels if side is Side.K else network.m_labels
        first = labels[0]
        for other in labels[1:]:
            if allocation.payoff(other) != allocation.payoff(first):
                return AxiomWitness(
                    axiom=Axiom.EB,
                    left=allocation.payoff(first),
                    right=allocation.payoff(other),
                    detail=f"{first} vs {other} on {side.value}",
                )
    first = network.k_labels[0]
    return AxiomWitness(axiom=Axiom.EB, left=allocation.payoff(first), right=allocation.payoff(first), detail="within-side payoffs equal")


def _link_balance_witness(network: BipartiteNetwork, allocation: Allocation) -> AxiomWitness:
    big_k, big_m = network.signature
    surplus_k = sum((allocation.payoff(x) - INTRINSIC_PRODUCTIVITY for x in network.k_labels), Fraction(0))
    surplus_m = sum((allocation.payoff(x) - INTRINSIC_PRODUCTIVITY for x in network.m_labels), Fraction(0))
    return AxiomWitness(axiom=Axiom.LBP, left=surplus_k / big_m, right=surplus_m / big_k)


def axiom_check(
    network: BipartiteNetwork,
    delta: Fraction,
    allocation: Allocation,
    game: GameTable | None = None,
) -> AxiomReport:
    """Evaluate EF, EB and LBP exactly.

    Args:
        network: The network
        delta: Attenuation factor; EF compares against v_δ(N)
        allocation: Payoffs to check
        game: Optional table whose grand value replaces v_δ(N) for EF

    Raises:
        InvalidInputError: If the allocation does not cover the network
        DivergentAttenuationError: If no table is given and δ diverges
    """
    allocation.require_covers(network)
    grand_value = game.grand_value if game is not None else an_signature_value(network.signature, delta)
    witnesses = {
        Axiom.EF: AxiomWitness(axiom=Axiom.EF, left=allocation.total(), right=grand_value),
        Axiom.EB: _equality_witness(network, allocation),
        Axiom.LBP: _link_balance_witness(network, allocation),
    }
    return AxiomReport(witnesses=witnesses)


def uniqueness_reconstruction(network: BipartiteNetwork, delta: Fraction) -> Allocation:
    """The unique allocation satisfying EF, EB and LBP.

    Solves |K|φ_K + |M|φ_M = v_δ(N) together with
    (|K|/|M|)(|K|φ_K − |K|) = |M|φ_M − |M|:

        φ_K = (v_δ(N)|M| − |M|² + |K|²)/(|K||N|)
        φ_M = 1 + (|K|²/|M|²)(φ_K − 1)

    Raises:
        DivergentAttenuationError: If |K||M|δ² ≥ 1
    """
    delta = Fraction(delta)
    big_k, big_m = network.signature
    grand_value = an_signature_value(network.signature, delta)
    phi_k = (grand_value * big_m - big_m**2 + big_k**2) / (big_k * network.size)
    phi_m = 1 + Fraction(big_k**2, big_m**2) * (phi_k - 1)
    return Allocation.from_sides(network, phi_k, phi_m, RuleTag.UNIQUENESS, delta=delta)


def _case(name, network, delta, allocation, expected, note="") -> IndependenceCase:
    report = axiom_check(network, delta, allocation)
    case = IndependenceCase(
        name=name,
        network=network,
        delta=delta,
        allocation=allocation,
        report=report,
        expected_failure=expected,
        note=note,
    )
    logger.debug("%s: failures=%s", name, [a.value for a in report.failures()])
    return case


def independence_suite() -> IndependenceReport:
    """The three allocations showing that no axiom follows from the other two.

    - LBP fails: p^N(1/2) on K={1}, M={2,3}.
    - EB fails: (0, 2, 0, 2) on K={1,2}, M={3,4} at δ = 0.
    - EF fails: p^N(δ) − 1_N on |K| = |M| = 2. At the customary δ = 1/2 the
      AN game diverges (4·(1/2)² = 1), so the allocation is evaluated at
      δ = 1/3 and the divergence is recorded in the case note.
    """
    lbp_network = BipartiteNetwork(k_labels=(1,), m_labels=(2, 3))
    lbp_delta = Fraction(1, 2)
    lbp_case = _case(
        "LBP fails",
        lbp_network,
        lbp_delta,
        productivity_allocation(lbp_network, lbp_delta),
        Axiom.LBP,
    )

    eb_network = BipartiteNetwork(k_labels=(1, 2), m_labels=(3, 4))
    eb_allocation = Allocation.from_sequence(eb_network, [Fraction(0), Fraction(2), Fraction(0), Fraction(2)])
    eb_case = _case("EB fails", eb_network, Fraction(0), eb_allocation, Axiom.EB)

    ef_network = BipartiteNetwork(k_labels=(1, 2), m_labels=(3, 4))
    stated = Fraction(1, 2)
    ef_delta = Fraction(1, 3)
    shifted = productivity_allocation(ef_network, ef_delta)
    ef_allocation = Allocation(payoffs={node: value - INTRINSIC_PRODUCTIVITY for node, value in shifted.payoffs.items()})
    note = ""
    if not convergence_check(ef_network, stated).converges:
        note = f"delta={stated} diverges for (2,2); evaluated at delta={ef_delta}"
    ef_case = _case("EF fails", ef_network, ef_delta, ef_allocation, Axiom.EF, note=note)

    return IndependenceReport(cases=(lbp_case, eb_case, ef_case))
