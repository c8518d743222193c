"""Command implementations behind the CLI.

Each command turns a RunConfig into a CommandResult; rendering and exit
codes are handled by ``attnet.cli.main``.
"""

import logging
from collections.abc import Callable
from fractions import Fraction

from attnet.allocations.models import Allocation
from attnet.allocations.rules import (
    difference_distribution,
    lrp,
    lrp_series_oracle,
    productivity_allocation,
    shapley_closed,
)
from attnet.allocations.shapley import shapley_oracle
from attnet.cli.args import Command, GameChoice, Rule, RunConfig
from attnet.exceptions import DivergentAttenuationError, InvalidInputError
from attnet.games.fan import (
    difference_table,
    difference_value,
    fan_table,
    fan_value,
    fan_value_oracle,
    individual_productivity,
    productivity_matrix_oracle,
)
from attnet.games.limit import an_table, an_value, convergence_check, limit_gap_horizon
from attnet.games.models import AttenuationParams, GameTable
from attnet.network.loader import load_network
from attnet.network.models import BipartiteNetwork, Coalition, label_list
from attnet.network.topology import grand_coalition, induce, representative, spectral_radius
from attnet.services.reference_tables import build_reference_tables, check_printed_decimals, compare_with_goldens
from attnet.services.renderers import Cell, CommandResult, Table
from attnet.verify.axioms import axiom_check, independence_suite, uniqueness_reconstruction
from attnet.verify.convexity import convexity_check, monotonicity_check, superadditivity_check
from attnet.verify.core import core_check

logger = logging.getLogger(__name__)


# ===========================
# Shared helpers
# ===========================


def resolve_network(config: RunConfig) -> BipartiteNetwork:
    if config.network_path is not None:
        return load_network(config.network_path)
    return BipartiteNetwork.from_sizes(config.k, config.m)


def resolve_coalition(network: BipartiteNetwork, tokens: tuple[str, ...]) -> Coalition:
    """Map typed labels to network nodes; a lone ``N`` means the grand coalition.

    Raises:
        UnknownNodeError: For a label matching no node
    """
    by_text = {str(node): node for node in network.nodes}
    if tokens == ("N",) and "N" not in by_text:
        return grand_coalition(network)
    return induce(network, [by_text.get(token, token) for token in tokens])


def require_global_convergence(network: BipartiteNetwork, delta: Fraction) -> None:
    """Gate on the grand coalition: every subgame converges when N does."""
    if not convergence_check(network, delta).converges:
        logger.warning("delta=%s diverges for %s", delta, network.signature)
        raise DivergentAttenuationError(network.signature, delta)


def allocation_table(network: BipartiteNetwork, allocation: Allocation, title: str, column: str) -> Table:
    return Table(
        title=title,
        headers=("node", "side", column),
        rows=tuple((node, network.side_of(node).value, allocation.payoff(node)) for node in network.nodes),
        key=column,
    )


def allocation_document(network: BipartiteNetwork, allocation: Allocation) -> dict:
    return {
        "rule": allocation.tag,
        "payoffs": [{"node": node, "value": allocation.payoff(node)} for node in network.nodes],
        "total": allocation.total(),
    }


def _game_result(config: RunConfig, network: BipartiteNetwork, name: str, value_of: Callable[[Coalition], Fraction]) -> CommandResult:
    if config.coalition:
        coalition = resolve_coalition(network, config.coalition)
        value = value_of(coalition)
        table = Table(
            title=f"{name} value for {label_list(coalition.ordered_members)}",
            headers=("coalition", "k", "m", "value"),
            rows=((label_list(coalition.ordered_members), *coalition.signature, value),),
            key=name,
        )
        result = {"coalition": list(coalition.ordered_members), "signature": list(coalition.signature), "value": value}
    else:
        rows = []
        for signature in network.signatures():
            rows.append((*signature, value_of(representative(network, signature))))
        table = Table(title=f"{name} values by signature", headers=("k", "m", "value"), rows=tuple(rows), key=name)
        result = {"values": [{"k": k, "m": m, "value": v} for k, m, v in rows]}
    return CommandResult(
        command=config.command.value,
        network=network,
        delta=config.delta,
        horizon=config.horizon,
        result=result,
        tables=(table,),
    )


# ===========================
# Commands
# ===========================


def run_fan(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    params = AttenuationParams(config.delta, config.horizon)
    evaluate = fan_value_oracle if config.oracle else fan_value
    return _game_result(config, network, "fan", lambda coalition: evaluate(coalition, params))


def run_an(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    require_global_convergence(network, config.delta)
    return _game_result(config, network, "an", lambda coalition: an_value(coalition, config.delta))


def run_diff(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    return _game_result(config, network, "diff", lambda coalition: difference_value(coalition, config.delta, config.horizon))


def _allocation_result(
    config: RunConfig, network: BipartiteNetwork, allocation: Allocation, column: str, rule: str | None = None
) -> CommandResult:
    document = allocation_document(network, allocation)
    if rule is not None:
        document["rule"] = rule
    return CommandResult(
        command=config.command.value,
        network=network,
        delta=config.delta,
        horizon=allocation.horizon,
        result=document,
        tables=(allocation_table(network, allocation, f"{column} for {network.signature}, delta={config.delta}", column),),
    )


def run_shapley(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    require_global_convergence(network, config.delta)
    if config.oracle:
        allocation = shapley_oracle(an_table(network, config.delta))
    else:
        allocation = shapley_closed(network, config.delta)
    return _allocation_result(config, network, allocation, "shapley")


def run_lrp(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    require_global_convergence(network, config.delta)
    if config.oracle:
        if config.horizon is None or config.horizon < 1:
            raise InvalidInputError("lrp --oracle needs -t >= 1", field="t")
        allocation = lrp_series_oracle(network, config.delta, config.horizon)
    else:
        allocation = lrp(network, config.delta)
    return _allocation_result(config, network, allocation, "lrp")


def run_productivity(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    if config.horizon is None:
        if config.oracle:
            raise InvalidInputError("productivity --oracle needs -t", field="t")
        require_global_convergence(network, config.delta)
        return _allocation_result(config, network, productivity_allocation(network, config.delta), "productivity")

    grand = grand_coalition(network)
    params = AttenuationParams(config.delta, config.horizon)
    if config.oracle:
        values = productivity_matrix_oracle(grand, params).row_sums()
        payoffs = dict(zip(grand.ordered_members, values))
    else:
        payoffs = {node: individual_productivity(grand, node, params) for node in network.nodes}
    allocation = Allocation(payoffs=payoffs, delta=config.delta, horizon=config.horizon)
    return _allocation_result(config, network, allocation, "productivity", rule="productivity_t")


def _rule_allocation(config: RunConfig, network: BipartiteNetwork) -> Allocation:
    if config.allocation is not None:
        return Allocation.from_sequence(network, config.allocation)
    delta = config.delta
    if config.rule is Rule.DIFFERENCE:
        if config.horizon is None:
            raise InvalidInputError("--rule difference needs -t >= 1", field="t")
        return difference_distribution(network, delta, config.horizon)
    require_global_convergence(network, delta)
    if config.rule is Rule.PRODUCTIVITY:
        return productivity_allocation(network, delta)
    if config.rule is Rule.SHAPLEY:
        return shapley_closed(network, delta)
    if config.rule is Rule.SHAPLEY_ORACLE:
        return shapley_oracle(an_table(network, delta))
    if config.rule is Rule.LRP:
        return lrp(network, delta)
    return uniqueness_reconstruction(network, delta)


def _game_table(config: RunConfig, network: BipartiteNetwork) -> GameTable:
    if config.game is GameChoice.FAN:
        if config.horizon is None:
            raise InvalidInputError("--game fan needs -t", field="t")
        return fan_table(network, AttenuationParams(config.delta, config.horizon))
    if config.game is GameChoice.DIFF:
        if config.horizon is None:
            raise InvalidInputError("--game diff needs -t >= 1", field="t")
        return difference_table(network, config.delta, config.horizon)
    require_global_convergence(network, config.delta)
    return an_table(network, config.delta)


def run_core_check(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    game = _game_table(config, network)
    allocation = _rule_allocation(config, network)
    report = core_check(game, allocation)
    rows = tuple(
        (label_list(v.members) if v.members is not None else "", *v.signature, v.value, v.payoff, v.shortfall)
        for v in report.violations
    )
    return CommandResult(
        command=config.command.value,
        network=network,
        delta=config.delta,
        horizon=config.horizon,
        result={
            "game": config.game.value,
            "allocation": allocation_document(network, allocation),
            "in_core": report.in_core,
            "efficient": report.efficient,
            "grand_value": report.grand_value,
            "total": report.total,
            "method": report.method,
            "violations": [
                {"signature": list(v.signature), "members": list(v.members) if v.members is not None else None, "value": v.value, "payoff": v.payoff, "shortfall": v.shortfall}
                for v in report.violations
            ],
        },
        tables=(
            Table(
                title=f"Core violations ({report.method.value} check, {len(report.violations)} found)",
                headers=("coalition", "k", "m", "value", "payoff", "shortfall"),
                rows=rows,
                key="violations",
            ),
        ),
        notes=(
            f"in_core: {str(report.in_core).lower()}",
            f"efficient: {str(report.efficient).lower()} (total {report.total}, v(N) {report.grand_value})",
        ),
    )


def run_convexity(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    game = _game_table(config, network)
    reports = [convexity_check(game), superadditivity_check(game), monotonicity_check(game)]
    rows = tuple(
        (report.name, str(report.holds).lower(), report.checked, report.violation.describe() if report.violation else "")
        for report in reports
    )
    return CommandResult(
        command=config.command.value,
        network=network,
        delta=config.delta,
        horizon=config.horizon,
        result={
            "game": config.game.value,
            **{
                report.name: {
                    "holds": report.holds,
                    "checked": report.checked,
                    "violation": report.violation.describe() if report.violation else None,
                }
                for report in reports
            },
        },
        tables=(Table(title=f"{config.game.value} game properties", headers=("property", "holds", "checked", "violation"), rows=rows, key="properties"),),
    )


def _axiom_rows(report) -> tuple[tuple, ...]:
    return tuple(
        (axiom.value, str(w.holds).lower(), w.left, w.right, w.detail) for axiom, w in report.witnesses.items()
    )


def run_axioms(config: RunConfig) -> CommandResult:
    if config.independence:
        suite = independence_suite()
        tables = []
        cases = []
        for case in suite.cases:
            tables.append(
                Table(
                    title=f"{case.name}: network {case.network.signature}, delta={case.delta}"
                    + (f" [{case.note}]" if case.note else ""),
                    headers=("axiom", "holds", "left", "right", "detail"),
                    rows=_axiom_rows(case.report),
                    key=case.name,
                )
            )
            cases.append(
                {
                    "name": case.name,
                    "delta": case.delta,
                    "expected_failure": case.expected_failure,
                    "confirmed": case.confirmed,
                    "note": case.note,
                    "axioms": {a.value: {"holds": w.holds, "left": w.left, "right": w.right} for a, w in case.report.witnesses.items()},
                }
            )
        return CommandResult(
            command=config.command.value,
            network=None,
            delta=None,
            horizon=None,
            result={"confirmed": suite.confirmed, "cases": cases},
            tables=tuple(tables),
            notes=(f"independence confirmed: {str(suite.confirmed).lower()}",),
            ok=suite.confirmed,
        )

    network = resolve_network(config)
    allocation = _rule_allocation(config, network)
    game = difference_table(network, config.delta, config.horizon) if config.rule is Rule.DIFFERENCE else None
    report = axiom_check(network, config.delta, allocation, game=game)
    return CommandResult(
        command=config.command.value,
        network=network,
        delta=config.delta,
        horizon=config.horizon,
        result={
            "allocation": allocation_document(network, allocation),
            "ef": report.ef,
            "eb": report.eb,
            "lbp": report.lbp,
            "witnesses": {a.value: {"left": w.left, "right": w.right, "detail": w.detail} for a, w in report.witnesses.items()},
        },
        tables=(Table(title=f"Axioms for {allocation.tag}", headers=("axiom", "holds", "left", "right", "detail"), rows=_axiom_rows(report), key="axioms"),),
    )


def run_converge(config: RunConfig) -> CommandResult:
    network = resolve_network(config)
    verdict = convergence_check(network, config.delta)
    radius = spectral_radius(grand_coalition(network))
    result = {
        "converges": verdict.converges,
        "threshold_radicand": verdict.threshold_radicand,
        "lambda_max": str(radius),
        "margin": verdict.margin,
    }
    rows: list[tuple[str, Cell]] = [
        ("converges", str(verdict.converges).lower()),
        ("threshold_radicand", verdict.threshold_radicand),
        ("lambda_max", str(radius)),
        ("margin", verdict.margin),
    ]
    notes = (
        f"verdict: {'converges' if verdict.converges else 'diverges'}",
        f"threshold: delta < 1/{radius} (radicand {verdict.threshold_radicand})",
    )
    if verdict.converges:
        grand = grand_coalition(network)
        horizon = limit_gap_horizon(network.signature, config.delta)
        limit = an_value(grand, config.delta)
        gap = limit - fan_value(grand, AttenuationParams(config.delta, horizon))
        result.update({"an_value": limit, "gap_horizon": horizon, "gap": gap})
        rows += [("an_value", limit), ("gap_horizon", horizon), ("gap", gap)]
    return CommandResult(
        command=config.command.value,
        network=network,
        delta=config.delta,
        horizon=None,
        result=result,
        tables=(Table(title=f"Convergence at delta={config.delta}", headers=("property", "value"), rows=tuple(rows), key="convergence"),),
        notes=notes,
    )


def run_reference_tables(config: RunConfig) -> CommandResult:
    tables = build_reference_tables()
    golden_mismatches = compare_with_goldens(tables)
    decimal_mismatches = check_printed_decimals(tables)
    notes = [m.diff for m in golden_mismatches]
    notes += [
        f"{m.key} {m.row}/{m.column}: exact {m.exact} differs from printed {m.printed} by more than the tolerance"
        for m in decimal_mismatches
    ]
    ok = not golden_mismatches and not decimal_mismatches
    notes.append(f"reference tables: {'all match' if ok else 'MISMATCH'}")
    return CommandResult(
        command=config.command.value,
        network=None,
        delta=None,
        horizon=None,
        result={
            "tables": {
                table.key: {"title": table.title, "headers": list(table.headers), "rows": [list(row) for row in table.rows]}
                for table in tables
            },
            "golden_mismatches": [m.key for m in golden_mismatches],
            "decimal_mismatches": [f"{m.key}:{m.row}:{m.column}" for m in decimal_mismatches],
            "ok": ok,
        },
        tables=tuple(tables),
        notes=tuple(notes),
        ok=ok,
    )


COMMANDS: dict[Command, Callable[[RunConfig], CommandResult]] = {
    Command.FAN: run_fan,
    Command.AN: run_an,
    Command.DIFF: run_diff,
    Command.SHAPLEY: run_shapley,
    Command.LRP: run_lrp,
    Command.PRODUCTIVITY: run_productivity,
    Command.CORE_CHECK: run_core_check,
    Command.CONVEXITY: run_convexity,
    Command.AXIOMS: run_axioms,
    Command.CONVERGE: run_converge,
    Command.REFERENCE_TABLES: run_reference_tables,
}
