"""Reference tables for the worked examples, checked against golden files.

Goldens hold the exact rendering of each table. Some published values are
rounded decimals; those are checked separately against the exact values
with a tolerance of PRINTED_DECIMAL_TOLERANCE.
"""

import difflib
import logging
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from attnet.allocations.rules import (
    difference_distribution,
    lrp,
    productivity_allocation,
    shapley_closed,
)
from attnet.constants import PRINTED_DECIMAL_TOLERANCE
from attnet.games.fan import difference_signature_value, fan_signature_value, individual_productivity
from attnet.games.limit import an_signature_value
from attnet.games.models import AttenuationParams
from attnet.network.models import BipartiteNetwork, Signature
from attnet.network.topology import grand_coalition
from attnet.services.renderers import Table, render_table_text

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
FAN_HORIZONS = (0, 1, 2, 3, 10)
DIFFERENCE_HORIZONS = (1, 2, 3, 4, 5)

STAR_TWO = BipartiteNetwork(k_labels=(1,), m_labels=(2, 3))
STAR_THREE = BipartiteNetwork(k_labels=(1,), m_labels=(2, 3, 4))

# Row label -> representative signature
STAR_TWO_ROWS: tuple[tuple[str, Signature], ...] = (
    ("{i}", (1, 0)),
    ("{2,3}", (0, 2)),
    ("{1,i}", (1, 1)),
    ("N", (1, 2)),
)
STAR_THREE_ROWS: tuple[tuple[str, Signature], ...] = (
    ("{i}", (1, 0)),
    ("{2,3}", (0, 2)),
    ("{1,i}", (1, 1)),
    ("{2,3,4}", (0, 3)),
    ("{1,2,3}", (1, 2)),
    ("N", (1, 3)),
)

# (table key, row label, column) -> decimal as published
PRINTED_DECIMALS: dict[tuple[str, str, str], str] = {
    ("fan_values", "{1,i}", "t=10"): "3.998",
    ("shapley_third", "1", "phi"): "3.14",
    ("shapley_third", "2", "phi"): "1.95",
    ("allocation_comparison", "1", "phi(1/3)"): "3.14",
    ("allocation_comparison", "2", "phi(1/3)"): "1.95",
    ("allocation_comparison", "1", "omega(1/3)"): "4.75",
    ("allocation_comparison", "2", "omega(1/3)"): "1.41",
}


def _node_rows(network: BipartiteNetwork, columns) -> tuple[tuple, ...]:
    """One row per node; each column is an Allocation."""
    return tuple((node, *(column.payoff(node) for column in columns)) for node in network.nodes)


def fan_values_table() -> Table:
    rows = []
    for label, signature in STAR_TWO_ROWS:
        rows.append((label, *(fan_signature_value(signature, AttenuationParams(HALF, t)) for t in FAN_HORIZONS)))
    return Table(
        title="FAN values v^t(S) for K={1}, M={2,3}, delta=1/2",
        headers=("S", *(f"t={t}" for t in FAN_HORIZONS)),
        rows=tuple(rows),
        key="fan_values",
    )


def fan_productivity_table() -> Table:
    grand = grand_coalition(STAR_TWO)
    rows = tuple(
        (node, *(individual_productivity(grand, node, AttenuationParams(HALF, t)) for t in FAN_HORIZONS))
        for node in STAR_TWO.nodes
    )
    return Table(
        title="Productivity p_i^N(delta,t) for K={1}, M={2,3}, delta=1/2",
        headers=("i", *(f"t={t}" for t in FAN_HORIZONS)),
        rows=rows,
        key="fan_productivity",
    )


def fan_convergence_table() -> Table:
    rows = [
        (f"v^{t}", *(fan_signature_value(sig, AttenuationParams(HALF, t)) for _, sig in STAR_TWO_ROWS))
        for t in FAN_HORIZONS
    ]
    rows.append(("v", *(an_signature_value(sig, HALF) for _, sig in STAR_TWO_ROWS)))
    return Table(
        title="FAN values approaching the AN limit for K={1}, M={2,3}, delta=1/2",
        headers=("game", *(label for label, _ in STAR_TWO_ROWS)),
        rows=tuple(rows),
        key="fan_convergence",
    )


def _shapley_table(network: BipartiteNetwork, delta: Fraction, key: str, title: str) -> Table:
    return Table(
        title=title,
        headers=("i", "p^N", "phi"),
        rows=_node_rows(network, (productivity_allocation(network, delta), shapley_closed(network, delta))),
        key=key,
    )


def difference_games_table() -> Table:
    rows = tuple(
        (f"d^{t}", *(difference_signature_value(sig, HALF, t) for _, sig in STAR_TWO_ROWS))
        for t in DIFFERENCE_HORIZONS
    )
    return Table(
        title="Difference games d^t(S) for K={1}, M={2,3}, delta=1/2",
        headers=("game", *(label for label, _ in STAR_TWO_ROWS)),
        rows=rows,
        key="difference_games",
    )


def difference_distribution_table() -> Table:
    columns = [difference_distribution(STAR_TWO, HALF, t) for t in DIFFERENCE_HORIZONS]
    return Table(
        title="Distribution x^t(delta) for K={1}, M={2,3}, delta=1/2",
        headers=("i", *(f"t={t}" for t in DIFFERENCE_HORIZONS)),
        rows=_node_rows(STAR_TWO, columns),
        key="difference_distribution",
    )


def lrp_comparison_table() -> Table:
    columns = (productivity_allocation(STAR_TWO, HALF), shapley_closed(STAR_TWO, HALF), lrp(STAR_TWO, HALF))
    return Table(
        title="Productivity, Shapley value and LRP for K={1}, M={2,3}, delta=1/2",
        headers=("i", "p^N", "phi", "omega"),
        rows=_node_rows(STAR_TWO, columns),
        key="lrp_comparison",
    )


def an_values_table() -> Table:
    rows = tuple((label, an_signature_value(sig, HALF), an_signature_value(sig, THIRD)) for label, sig in STAR_THREE_ROWS)
    return Table(
        title="AN values v(S) for K={1}, M={2,3,4}",
        headers=("S", "delta=1/2", "delta=1/3"),
        rows=rows,
        key="an_values",
    )


def allocation_comparison_table() -> Table:
    columns = []
    for delta in (HALF, THIRD):
        columns += [
            productivity_allocation(STAR_THREE, delta),
            shapley_closed(STAR_THREE, delta),
            lrp(STAR_THREE, delta),
        ]
    return Table(
        title="Productivity, Shapley value and LRP for K={1}, M={2,3,4}",
        headers=("i", "p^N(1/2)", "phi(1/2)", "omega(1/2)", "p^N(1/3)", "phi(1/3)", "omega(1/3)"),
        rows=_node_rows(STAR_THREE, columns),
        key="allocation_comparison",
    )


def build_reference_tables() -> list[Table]:
    """Every reference table, fan games first."""
    return [
        fan_values_table(),
        fan_productivity_table(),
        fan_convergence_table(),
        _shapley_table(STAR_TWO, HALF, "shapley_half", "Productivity vs Shapley value for K={1}, M={2,3}, delta=1/2"),
        _shapley_table(STAR_THREE, THIRD, "shapley_third", "Productivity vs Shapley value for K={1}, M={2,3,4}, delta=1/3"),
        difference_games_table(),
        difference_distribution_table(),
        lrp_comparison_table(),
        an_values_table(),
        allocation_comparison_table(),
    ]


@dataclass(frozen=True)
class GoldenMismatch:
    key: str
    diff: str


@dataclass(frozen=True)
class DecimalMismatch:
    key: str
    row: str
    column: str
    printed: str
    exact: Fraction


def load_golden(key: str) -> str:
    """Golden text for ``key`` from the packaged goldens directory."""
    return resources.files("attnet.goldens").joinpath(f"{key}.txt").read_text(encoding="utf-8")


def compare_with_goldens(tables: list[Table]) -> list[GoldenMismatch]:
    """Diff each table's exact rendering against its golden file."""
    mismatches = []
    for table in tables:
        produced = render_table_text(table, exact=True)
        try:
            golden = load_golden(table.key)
        except FileNotFoundError:
            golden = ""
        if produced != golden:
            diff = "".join(
                difflib.unified_diff(
                    golden.splitlines(keepends=True),
                    produced.splitlines(keepends=True),
                    fromfile=f"goldens/{table.key}.txt",
                    tofile="computed",
                )
            )
            logger.warning("Golden mismatch for %s", table.key)
            mismatches.append(GoldenMismatch(key=table.key, diff=diff))
    return mismatches


def _lookup(table: Table, row_label: str, column: str) -> Fraction:
    index = table.headers.index(column)
    for row in table.rows:
        if str(row[0]) == row_label:
            return Fraction(row[index])
    raise KeyError(f"{table.key} has no row {row_label!r}")


def check_printed_decimals(tables: list[Table]) -> list[DecimalMismatch]:
    """Compare exact values with the rounded decimals as published."""
    by_key = {table.key: table for table in tables}
    mismatches = []
    for (key, row, column), printed in PRINTED_DECIMALS.items():
        exact = _lookup(by_key[key], row, column)
        if abs(exact - Fraction(printed)) > PRINTED_DECIMAL_TOLERANCE:
            mismatches.append(DecimalMismatch(key=key, row=row, column=column, printed=printed, exact=exact))
    return mismatches

