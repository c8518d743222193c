"""Data models for attenuation network games."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType

from attnet.exceptions import InvalidInputError
from attnet.network.models import BipartiteNetwork, Coalition, Side, Signature


@dataclass(frozen=True)
class AttenuationParams:
    """Attenuation factor δ and walk horizon t.

    Attributes:
        delta: Nonnegative exact attenuation factor δ
        horizon: Nonnegative maximum walk length t

    Raises:
        InvalidInputError: If δ < 0 or t < 0.
    """

    delta: Fraction
    horizon: int

    def __post_init__(self):
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.delta < 0:
            raise InvalidInputError(f"delta must be >= 0, got {self.delta}", field="delta", value=self.delta)
        if isinstance(self.horizon, bool) or not isinstance(self.horizon, int) or self.horizon < 0:
            raise InvalidInputError(f"horizon must be an integer >= 0, got {self.horizon!r}", field="t", value=self.horizon)


@dataclass(frozen=True)
class ProductivityMatrix:
    """M^t(g(S), δ) = Σ_{u=0}^{t} δ^u G^u(S).

    Attributes:
        entries: s×s exact entries, indexed by ``coalition.ordered_members``
        params: The (δ, t) the matrix was built for
    """

    entries: tuple[tuple[Fraction, ...], ...]
    params: AttenuationParams

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def row_sums(self) -> tuple[Fraction, ...]:
        """p_i^S(δ, t) for every member, in member order."""
        return tuple(sum(row, Fraction(0)) for row in self.entries)

    def total(self) -> Fraction:
        return sum(self.row_sums(), Fraction(0))


class GameKind(Enum):
    """Which characteristic function a GameTable holds."""

    FAN = "fan"
    AN = "an"
    DIFFERENCE = "difference"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GameTable:
    """A characteristic function stored by coalition signature.

    Game values depend on S only through (k_S, m_S), so the full 2^n
    characteristic function is recovered by signature lookup.

    Attributes:
        network: The network the game is played on
        values: Signature (k, m) → exact value, for every 0 ≤ k ≤ |K|, 0 ≤ m ≤ |M|
        kind: Which game the values describe
        delta: δ for engine-built tables (None for custom tables)
        horizon: t for FAN and difference tables

    Raises:
        InvalidInputError: If a signature is missing, v(∅) ≠ 0, or an
            engine-built table breaks the one-sided value rule.
    """

    network: BipartiteNetwork
    values: Mapping[Signature, Fraction]
    kind: GameKind = GameKind.CUSTOM
    delta: Fraction | None = None
    horizon: int | None = None

    def __post_init__(self):
        values = {tuple(sig): Fraction(v) for sig, v in self.values.items()}
        object.__setattr__(self, "values", MappingProxyType(values))

        missing = [sig for sig in self.network.signatures() if sig not in values]
        if missing:
            raise InvalidInputError(f"Game table is missing signatures: {missing[:5]}", field="values", value=missing)
        extra = sorted(set(values) - set(self.network.signatures()))
        if extra:
            raise InvalidInputError(f"Game table has signatures outside the network: {extra[:5]}", field="values", value=extra)
        if values[(0, 0)] != 0:
            raise InvalidInputError(f"v(empty) must be 0, got {values[(0, 0)]}", field="values", value=values[(0, 0)])

        # One-sided coalitions have no walks of positive length
        if self.kind in (GameKind.FAN, GameKind.AN, GameKind.DIFFERENCE):
            for (k, m), value in values.items():
                if k * m != 0:
                    continue
                expected = 0 if self.kind is GameKind.DIFFERENCE else k + m
                if value != expected:
                    raise InvalidInputError(
                        f"{self.kind.value} value for one-sided signature {(k, m)} must be {expected}, got {value}",
                        field="values",
                    )

    def value(self, signature: Signature) -> Fraction:
        return self.values[signature]

    def value_of(self, coalition: Coalition) -> Fraction:
        return self.values[coalition.signature]

    @property
    def grand_value(self) -> Fraction:
        """v(N)."""
        return self.values[self.network.signature]

    def marginal(self, side: Side, signature: Signature) -> Fraction:
        """v(S) − v(S ∖ {i}) for a player i on ``side`` and S of ``signature``.

        Raises:
            ValueError: If S has no member on ``side``
        """
        k, m = signature
        if side is Side.K:
            if k == 0:
                raise ValueError(f"Signature {signature} has no K member")
            return self.values[(k, m)] - self.values[(k - 1, m)]
        if m == 0:
            raise ValueError(f"Signature {signature} has no M member")
        return self.values[(k, m)] - self.values[(k, m - 1)]


@dataclass(frozen=True)
class ConvergenceVerdict:
    """Result of the convergence test for the limit game.

    Attributes:
        converges: True iff radicand·δ² < 1
        threshold_radicand: k_N·m_N; the threshold is 1/√threshold_radicand
        margin: 1 − k_N·m_N·δ², positive iff convergent
        delta: The tested attenuation factor
    """

    converges: bool
    threshold_radicand: int
    margin: Fraction
    delta: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        if self.converges != (self.margin > 0):
            raise ValueError("converges must agree with the sign of margin")
