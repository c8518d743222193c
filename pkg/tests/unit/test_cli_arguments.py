"""Unit tests for CLI argument parsing and run configuration."""

from fractions import Fraction
from pathlib import Path

import pytest

from attnet.cli.args import Command, GameChoice, Rule, RunConfig, config_from_namespace, parse_arguments
from attnet.exceptions import InvalidInputError
from attnet.services.renderers import OutputFormat


def _config(argv: list[str]) -> RunConfig:
    return config_from_namespace(parse_arguments(argv))


class TestParsing:
    def test_fan_command(self):
        config = _config(["fan", "--k", "1", "--m", "2", "--delta", "1/2", "-t", "3", "--exact"])

        assert config.command is Command.FAN
        assert (config.k, config.m) == (1, 2)
        assert config.delta == Fraction(1, 2)
        assert config.horizon == 3
        assert config.exact
        assert config.output is OutputFormat.TEXT

    def test_decimal_delta_is_exact(self):
        assert _config(["an", "--k", "1", "--m", "2", "--delta", "0.1"]).delta == Fraction(1, 10)

    def test_coalition_split(self):
        config = _config(["an", "--k", "1", "--m", "2", "--delta", "1/2", "--coalition", "K1, M2"])

        assert config.coalition == ("K1", "M2")

    def test_allocation_payoffs(self):
        config = _config(["core-check", "--k", "1", "--m", "2", "--delta", "1/2", "--allocation", "10,0,-1/2"])

        assert config.allocation == (Fraction(10), Fraction(0), Fraction(-1, 2))
        assert config.game is GameChoice.AN

    def test_difference_rule_defaults_to_difference_game(self):
        config = _config(["core-check", "--k", "1", "--m", "2", "--delta", "1/2", "-t", "2", "--rule", "difference"])

        assert config.rule is Rule.DIFFERENCE
        assert config.game is GameChoice.DIFF

    def test_network_file(self):
        config = _config(["shapley", "--network", "net.json", "--delta", "1/3", "--format", "json"])

        assert config.network_path == Path("net.json")
        assert config.output is OutputFormat.JSON

    def test_reference_tables_needs_no_network(self):
        config = _config(["reference-tables"])

        assert config.command is Command.REFERENCE_TABLES
        assert config.delta is None

    def test_independence_needs_no_network(self):
        assert _config(["axioms", "--independence"]).independence

    @pytest.mark.parametrize("delta", ["0.3...", "1/0", "-1/2", "abc"])
    def test_malformed_delta_exits_with_usage_error(self, delta):
        with pytest.raises(SystemExit) as exc:
            parse_arguments(["an", "--k", "1", "--m", "2", "--delta", delta])
        assert exc.value.code == 2

    @pytest.mark.parametrize("extra", [["--oracle"], ["-t", "3"]])
    def test_limit_game_takes_no_oracle_or_horizon(self, extra):
        """The AN game has no walk horizon and no oracle path on the command line."""
        with pytest.raises(SystemExit) as exc:
            parse_arguments(["an", "--k", "1", "--m", "2", "--delta", "1/2", *extra])
        assert exc.value.code == 2

    def test_fan_keeps_oracle_and_horizon(self):
        config = _config(["fan", "--k", "1", "--m", "2", "--delta", "1/2", "-t", "3", "--oracle"])

        assert config.oracle
        assert config.horizon == 3


class TestValidation:
    @pytest.mark.parametrize(
        "argv, field",
        [
            (["an", "--delta", "1/2"], "network"),
            (["an", "--k", "1", "--delta", "1/2"], "network"),
            (["an", "--k", "0", "--m", "2", "--delta", "1/2"], "network"),
            (["an", "--k", "1", "--m", "2", "--network", "n.json", "--delta", "1/2"], "network"),
            (["an", "--k", "1", "--m", "2"], "delta"),
            (["fan", "--k", "1", "--m", "2", "--delta", "1/2"], "t"),
            (["diff", "--k", "1", "--m", "2", "--delta", "1/2"], "t"),
            (["fan", "--k", "1", "--m", "2", "--delta", "1/2", "-t", "-1"], "t"),
            (["core-check", "--k", "1", "--m", "2", "--delta", "1/2"], "rule"),
            (["axioms", "--k", "1", "--m", "2", "--delta", "1/2", "--rule", "lrp", "--allocation", "1,1,1"], "rule"),
            (["an", "--k", "1", "--m", "2", "--delta", "1/2", "--digits", "0"], "digits"),
        ],
    )
    def test_invalid_combinations(self, argv, field):
        """
        Given an option combination that cannot run
        When the configuration is built
        Then an input error names the offending field
        """
        with pytest.raises(InvalidInputError) as exc:
            _config(argv)
        assert exc.value.field == field
        assert exc.value.exit_code == 2
