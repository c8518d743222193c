"""CLI argument parsing."""

import argparse
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

from attnet import __version__
from attnet.constants import DEFAULT_SIGNIFICANT_DIGITS
from attnet.exceptions import InvalidInputError
from attnet.rationals import parse_rational
from attnet.services.renderers import OutputFormat


class Command(Enum):
    FAN = "fan"
    AN = "an"
    DIFF = "diff"
    SHAPLEY = "shapley"
    LRP = "lrp"
    PRODUCTIVITY = "productivity"
    CORE_CHECK = "core-check"
    CONVEXITY = "convexity"
    AXIOMS = "axioms"
    CONVERGE = "converge"
    REFERENCE_TABLES = "reference-tables"


class Rule(Enum):
    """Allocation rules selectable with --rule."""

    PRODUCTIVITY = "productivity"
    SHAPLEY = "shapley"
    SHAPLEY_ORACLE = "shapley-oracle"
    LRP = "lrp"
    DIFFERENCE = "difference"
    UNIQUENESS = "uniqueness"


class GameChoice(Enum):
    FAN = "fan"
    AN = "an"
    DIFF = "diff"


# Commands that need a network and a delta
_NETWORK_COMMANDS = {c for c in Command if c is not Command.REFERENCE_TABLES}


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration.

    Attributes:
        command: Subcommand to run
        k: |K| for a network given by sizes
        m: |M| for a network given by sizes
        network_path: JSON network document (alternative to k/m)
        delta: Exact attenuation factor
        horizon: Walk horizon t, when the command uses one
        coalition: Node labels (as typed) or ("N",) for the grand coalition
        oracle: Use the brute-force path instead of the closed form
        output: Output format
        exact: Render rationals as p/q instead of decimals
        digits: Significant digits for decimal rendering
        out: Write the rendered output to this path instead of stdout
        force: Allow --out to replace an existing file
        rule: Allocation rule for core-check and axioms
        allocation: Explicit payoffs in network node order
        game: Game checked by convexity and core-check
        independence: Run the axiom independence cases
        verbose: Debug logging on stderr
    """

    command: Command
    k: int | None = None
    m: int | None = None
    network_path: Path | None = None
    delta: Fraction | None = None
    horizon: int | None = None
    coalition: tuple[str, ...] | None = None
    oracle: bool = False
    output: OutputFormat = OutputFormat.TEXT
    exact: bool = False
    digits: int = DEFAULT_SIGNIFICANT_DIGITS
    out: Path | None = None
    force: bool = False
    rule: Rule | None = None
    allocation: tuple[Fraction, ...] | None = None
    game: GameChoice = GameChoice.AN
    independence: bool = False
    verbose: bool = False

    def __post_init__(self):
        if self.delta is not None and self.delta < 0:
            raise InvalidInputError(f"delta must be nonnegative, got {self.delta}", field="delta", value=self.delta)
        if self.horizon is not None and self.horizon < 0:
            raise InvalidInputError(f"t must be nonnegative, got {self.horizon}", field="t", value=self.horizon)
        if self.digits < 1:
            raise InvalidInputError(f"digits must be positive, got {self.digits}", field="digits", value=self.digits)

        if self.command in _NETWORK_COMMANDS and not (self.command is Command.AXIOMS and self.independence):
            has_sizes = self.k is not None or self.m is not None
            if has_sizes and self.network_path is not None:
                raise InvalidInputError("Give either --k/--m or --network, not both", field="network")
            if not has_sizes and self.network_path is None:
                raise InvalidInputError("A network is required: --k and --m, or --network FILE", field="network")
            if has_sizes and (self.k is None or self.m is None):
                raise InvalidInputError("--k and --m must be given together", field="network")
            if has_sizes and (self.k < 1 or self.m < 1):
                raise InvalidInputError("--k and --m must be positive", field="network")
            if self.delta is None:
                raise InvalidInputError("--delta is required", field="delta")

        if self.command in (Command.FAN, Command.DIFF) and self.horizon is None:
            raise InvalidInputError(f"{self.command.value} needs -t/--horizon", field="t")
        if self.command in (Command.CORE_CHECK, Command.AXIOMS) and not self.independence:
            if self.rule is None and self.allocation is None:
                raise InvalidInputError("Give --rule or --allocation", field="rule")
            if self.rule is not None and self.allocation is not None:
                raise InvalidInputError("Give --rule or --allocation, not both", field="rule")


def _rational(field: str):
    def parse(text: str) -> Fraction:
        try:
            return parse_rational(text, field=field)
        except InvalidInputError as e:
            raise argparse.ArgumentTypeError(e.message) from None

    return parse


def _payoffs(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part, field="allocation", allow_negative=True) for part in text.split(","))
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(e.message) from None


def _add_network_options(parser: argparse.ArgumentParser, horizon: bool = True) -> None:
    group = parser.add_argument_group("network")
    group.add_argument("--k", type=int, help="Number of K-side nodes (labels K1..Kk)")
    group.add_argument("--m", type=int, help="Number of M-side nodes (labels M1..Mm)")
    group.add_argument("--network", type=Path, dest="network_path", metavar="FILE", help="JSON network document")
    parser.add_argument("--delta", type=_rational("delta"), help="Attenuation factor: p/q, integer or finite decimal")
    if horizon:
        parser.add_argument("-t", "--horizon", type=int, help="Maximum walk length t")


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("output")
    group.add_argument(
        "--format",
        dest="output",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )
    group.add_argument("--exact", action="store_true", help="Render values as exact p/q")
    group.add_argument(
        "--digits",
        type=int,
        default=DEFAULT_SIGNIFICANT_DIGITS,
        help=f"Significant digits for decimal output (default: {DEFAULT_SIGNIFICANT_DIGITS})",
    )
    group.add_argument("-o", "--out", type=Path, help="Write output to FILE instead of stdout")
    group.add_argument("--force", action="store_true", help="Let --out replace an existing file")
    group.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="attnet",
        description="Exact productivity games on complete bipartite networks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, text in (
        (Command.FAN, "Truncated FAN game values v^t"),
        (Command.AN, "Limit AN game values v"),
        (Command.DIFF, "Difference game values d^t (t >= 1)"),
    ):
        sub = commands.add_parser(name.value, help=text)
        _add_network_options(sub, horizon=name is not Command.AN)
        sub.add_argument("--coalition", help="Comma-separated node labels, or N for the grand coalition")
        if name is Command.FAN:
            sub.add_argument("--oracle", action="store_true", help="Use the matrix-power oracle")
        _add_output_options(sub)

    sub = commands.add_parser(Command.SHAPLEY.value, help="Shapley value of the AN game")
    _add_network_options(sub, horizon=False)
    sub.add_argument("--oracle", action="store_true", help="Sum weighted marginals over signatures")
    _add_output_options(sub)

    sub = commands.add_parser(Command.LRP.value, help="Link ratio productivity distribution")
    _add_network_options(sub)
    sub.add_argument("--oracle", action="store_true", help="Partial sum through -t instead of the closed form")
    _add_output_options(sub)

    sub = commands.add_parser(Command.PRODUCTIVITY.value, help="Node productivities in the grand coalition")
    _add_network_options(sub)
    sub.add_argument("--oracle", action="store_true", help="Row sums of the matrix-power oracle (needs -t)")
    _add_output_options(sub)

    for name, text in (
        (Command.CORE_CHECK, "Check an allocation against the core"),
        (Command.AXIOMS, "Evaluate the EF, EB and LBP axioms"),
    ):
        sub = commands.add_parser(name.value, help=text)
        _add_network_options(sub)
        sub.add_argument("--rule", choices=[r.value for r in Rule], help="Allocation rule to check")
        sub.add_argument("--allocation", type=_payoffs, help="Comma-separated payoffs in node order (K side first)")
        if name is Command.CORE_CHECK:
            sub.add_argument(
                "--game",
                choices=[g.value for g in GameChoice],
                default=None,
                help="Game to check against (default: diff for --rule difference, an otherwise)",
            )
        else:
            sub.add_argument("--independence", action="store_true", help="Run the axiom independence cases")
        _add_output_options(sub)

    sub = commands.add_parser(Command.CONVEXITY.value, help="Convexity, superadditivity and monotonicity")
    _add_network_options(sub)
    sub.add_argument("--game", choices=[g.value for g in GameChoice], default=GameChoice.AN.value)
    _add_output_options(sub)

    sub = commands.add_parser(Command.CONVERGE.value, help="Convergence verdict for the AN game")
    _add_network_options(sub, horizon=False)
    _add_output_options(sub)

    sub = commands.add_parser(Command.REFERENCE_TABLES.value, help="Rebuild the reference tables and diff them against goldens")
    _add_output_options(sub)

    return parser


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments.

    Raises:
        SystemExit: On invalid arguments (via argparse, exit status 2)
    """
    return build_parser().parse_args(argv)


def config_from_namespace(args: argparse.Namespace) -> RunConfig:
    """Build a RunConfig from parsed arguments.

    Raises:
        InvalidInputError: If the combination of options is invalid
    """
    command = Command(args.command)
    rule = getattr(args, "rule", None)
    game = getattr(args, "game", None)
    if game is None:
        game = GameChoice.DIFF.value if rule == Rule.DIFFERENCE.value else GameChoice.AN.value
    coalition = getattr(args, "coalition", None)
    return RunConfig(
        command=command,
        k=getattr(args, "k", None),
        m=getattr(args, "m", None),
        network_path=getattr(args, "network_path", None),
        delta=getattr(args, "delta", None),
        horizon=getattr(args, "horizon", None),
        coalition=tuple(part.strip() for part in coalition.split(",") if part.strip()) if coalition else None,
        oracle=getattr(args, "oracle", False),
        output=OutputFormat(args.output),
        exact=args.exact,
        digits=args.digits,
        out=args.out,
        force=args.force,
        rule=Rule(rule) if rule else None,
        allocation=getattr(args, "allocation", None),
        game=GameChoice(game),
        independence=getattr(args, "independence", False),
        verbose=args.verbose,
    )
