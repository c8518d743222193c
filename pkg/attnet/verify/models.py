"""Report models for the verification suite."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from attnet.allocations.models import Allocation
from attnet.network.models import BipartiteNetwork, NodeId, Side, Signature


class CoreMethod(Enum):
    """How coalitions are enumerated by the core check."""

    AUTO = "auto"
    SIGNATURE = "signature"
    SUBSET = "subset"


@dataclass(frozen=True)
class CoreViolation:
    """A coalition that receives less than its own value.

    Attributes:
        signature: (k_S, m_S) of the blocking coalition
        value: v(S)
        payoff: Σ_{i∈S} φ_i
        members: The concrete coalition on the subset path; None when the
            violation was found at signature level
    """

    signature: Signature
    value: Fraction
    payoff: Fraction
    members: tuple[NodeId, ...] | None = None

    def __post_init__(self):
        if self.shortfall <= 0:
            raise ValueError(f"Not a violation: payoff {self.payoff} covers value {self.value}")

    @property
    def shortfall(self) -> Fraction:
        return self.value - self.payoff

    def sort_key(self) -> tuple:
        """Worst shortfall first, then lexicographic signature, then members."""
        members = tuple(str(x) for x in self.members) if self.members is not None else ()
        return (-self.shortfall, self.signature, members)


@dataclass(frozen=True)
class CoreReport:
    """Outcome of checking an allocation against Core(N, v).

    Attributes:
        efficient: Σ φ_i = v(N)
        violations: Blocking coalitions, worst first
        grand_value: v(N)
        total: Σ φ_i
        method: Enumeration actually used
        checked: Number of inequalities evaluated
    """

    efficient: bool
    violations: tuple[CoreViolation, ...]
    grand_value: Fraction
    total: Fraction
    method: CoreMethod
    checked: int = 0

    def __post_init__(self):
        if self.efficient != (self.total == self.grand_value):
            raise ValueError("efficient must agree with total == grand_value")

    @property
    def in_core(self) -> bool:
        return self.efficient and not self.violations

    @property
    def worst(self) -> CoreViolation | None:
        return self.violations[0] if self.violations else None


@dataclass(frozen=True)
class PropertyViolation:
    """First counterexample found for a game property.

    Attributes:
        signatures: The signatures involved, in the order the inequality reads
        left: Left-hand side of the inequality that should hold (left ≤ right)
        right: Right-hand side
        side: Side of the player whose marginal was compared (convexity only)
    """

    signatures: tuple[Signature, ...]
    left: Fraction
    right: Fraction
    side: Side | None = None

    def describe(self) -> str:
        where = " ".join(f"({k},{m})" for k, m in self.signatures)
        player = f" for a {self.side.value} player" if self.side is not None else ""
        return f"{where}{player}: {self.left} > {self.right}"


@dataclass(frozen=True)
class PropertyReport:
    """Whether a game is convex, superadditive or monotonic.

    Attributes:
        name: "convexity", "superadditivity" or "monotonicity"
        holds: True iff no counterexample exists
        violation: The first counterexample in enumeration order
        checked: Number of inequalities evaluated
    """

    name: str
    holds: bool
    violation: PropertyViolation | None = None
    checked: int = 0

    def __post_init__(self):
        if self.holds != (self.violation is None):
            raise ValueError("A failing property must carry exactly one violation")


class Axiom(Enum):
    EF = "EF"
    EB = "EB"
    LBP = "LBP"


@dataclass(frozen=True)
class AxiomWitness:
    """Both sides of an axiom's equation, evaluated exactly."""

    axiom: Axiom
    left: Fraction
    right: Fraction
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.left == self.right

    def describe(self) -> str:
        relation = "=" if self.holds else "!="
        text = f"{self.axiom.value}: {self.left} {relation} {self.right}"
        return f"{text} ({self.detail})" if self.detail else text


@dataclass(frozen=True)
class AxiomReport:
    """EF, EB and LBP for one allocation.

    Attributes:
        witnesses: Evaluated equation per axiom; EB's witness names the
            first unequal pair, or the first pair compared when EB holds
    """

    witnesses: dict[Axiom, AxiomWitness] = field(default_factory=dict)

    def __post_init__(self):
        missing = [axiom.value for axiom in Axiom if axiom not in self.witnesses]
        if missing:
            raise ValueError(f"Missing witnesses for: {missing}")

    @property
    def ef(self) -> bool:
        return self.witnesses[Axiom.EF].holds

    @property
    def eb(self) -> bool:
        return self.witnesses[Axiom.EB].holds

    @property
    def lbp(self) -> bool:
        return self.witnesses[Axiom.LBP].holds

    def failures(self) -> list[Axiom]:
        return [axiom for axiom in Axiom if not self.witnesses[axiom].holds]


@dataclass(frozen=True)
class IndependenceCase:
    """One allocation that satisfies two of the three axioms.

    Attributes:
        name: Short label such as "LBP fails"
        network: Network the allocation lives on
        delta: δ the axioms were evaluated at
        allocation: The counterexample allocation
        report: Axiom evaluation
        expected_failure: The one axiom that must fail
        note: Free text, e.g. when the evaluation δ differs from the stated one
    """

    name: str
    network: BipartiteNetwork
    delta: Fraction
    allocation: Allocation
    report: AxiomReport
    expected_failure: Axiom
    note: str = ""

    @property
    def confirmed(self) -> bool:
        return self.report.failures() == [self.expected_failure]


@dataclass(frozen=True)
class IndependenceReport:
    cases: tuple[IndependenceCase, ...]

    @property
    def confirmed(self) -> bool:
        return all(case.confirmed for case in self.cases)
