"""Custom exceptions for attnet.

Every error raised on purpose by the library derives from AttnetError and
carries the exit code the command-line front end maps it to.
"""

from fractions import Fraction

from attnet.constants import (
    EXIT_CAPACITY_ERROR,
    EXIT_DOMAIN_ERROR,
    EXIT_INPUT_ERROR,
)


class AttnetError(Exception):
    """Base class for attnet errors.

    Attributes:
        message: Human-readable error text
        kind: Short machine-readable category ("input", "domain", "capacity")
        exit_code: Process exit status used by the CLI
    """

    kind = "error"
    exit_code = 1

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class InvalidInputError(AttnetError, ValueError):
    """Raised when user-supplied input is malformed or out of range.

    Examples: a negative attenuation factor, a repeating decimal, t = 0 for a
    difference game, an allocation that does not cover the network.

    Attributes:
        field: Name of the offending field (may be None)
        value: The offending value (may be None)
    """

    kind = "input"
    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message: str, field: str | None = None, value: object = None):
        """Initialize InvalidInputError.

        Args:
            message: Description of the problem
            field: Name of the offending field
            value: The offending value
        """
        self.field = field
        self.value = value
        super().__init__(message)


class UnknownNodeError(InvalidInputError):
    """Raised when a node identifier does not belong to the network.

    Attributes:
        node: The unknown node identifier
    """

    def __init__(self, node: object):
        self.node = node
        super().__init__(f"Unknown node identifier: {node!r}", field="node", value=node)


class DivergentAttenuationError(AttnetError, ArithmeticError):
    """Raised when δ lies outside the convergence interval [0, 1/λ_max(S)).

    λ_max(S) = √(k_S·m_S), so convergence is the exact test
    k_S·m_S·δ² < 1. The boundary itself diverges.

    Attributes:
        signature: Coalition signature (k_S, m_S) that fails the test
        delta: The attenuation factor
        radicand: k_S·m_S (the threshold is 1/√radicand)
    """

    kind = "domain"
    exit_code = EXIT_DOMAIN_ERROR

    def __init__(self, signature: tuple[int, int], delta: Fraction):
        """Initialize DivergentAttenuationError.

        Args:
            signature: (k_S, m_S) of the divergent coalition
            delta: The attenuation factor that was requested
        """
        self.signature = signature
        self.delta = delta
        self.radicand = signature[0] * signature[1]
        super().__init__(
            f"Attenuation factor {delta} diverges for signature {signature}: "
            f"requires delta < 1/sqrt({self.radicand}), "
            f"but {self.radicand}*delta^2 = {self.radicand * delta * delta} >= 1"
        )


class CapacityExceededError(AttnetError):
    """Raised when an enumeration would exceed its configured player bound.

    Attributes:
        operation: Name of the operation that refused to run
        players: Number of players requested
        limit: Maximum supported number of players
    """

    kind = "capacity"
    exit_code = EXIT_CAPACITY_ERROR

    def __init__(self, operation: str, players: int, limit: int):
        self.operation = operation
        self.players = players
        self.limit = limit
        super().__init__(
            f"{operation} supports up to {limit} players, but the network has {players}"
        )
