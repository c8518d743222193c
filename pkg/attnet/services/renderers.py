"""Text, JSON and CSV rendering of command results.

Rationals stay exact until this layer: every Fraction is rendered either as
``p/q`` (exact mode) or as a decimal with a fixed number of significant
digits.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from attnet.constants import DEFAULT_SIGNIFICANT_DIGITS
from attnet.network.models import BipartiteNetwork
from attnet.rationals import format_exact, format_value

Cell = str | int | Fraction | None


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class Table:
    """A titled grid of cells.

    Attributes:
        title: Heading line
        headers: Column names
        rows: Cell rows, each as long as ``headers``
        key: Stable identifier (used for golden files and CSV output)
    """

    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]
    key: str = ""

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.headers):
                raise ValueError(f"Row {row!r} does not match headers {self.headers!r}")

    def column(self, name: str) -> tuple[Cell, ...]:
        index = self.headers.index(name)
        return tuple(row[index] for row in self.rows)


@dataclass(frozen=True)
class CommandResult:
    """Everything a command produced, before rendering.

    Attributes:
        command: Subcommand name
        network: Network the command ran on (None for multi-network reports)
        delta: δ, when the command takes one
        horizon: t, when the command takes one
        result: JSON payload; Fractions inside are rendered on output
        tables: Tables for text and CSV output
        notes: Extra lines for text output
        ok: False when the command found a mismatch (exit status 1)
    """

    command: str
    network: BipartiteNetwork | None
    delta: Fraction | None
    horizon: int | None
    result: dict[str, Any]
    tables: tuple[Table, ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)
    ok: bool = True


def format_cell(cell: Cell, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    if cell is None:
        return ""
    if isinstance(cell, Fraction):
        return format_value(cell, exact, digits)
    return str(cell)


def _jsonable(value: Any, exact: bool, digits: int) -> Any:
    if isinstance(value, Fraction):
        return format_value(value, exact, digits)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _jsonable(v, exact, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, exact, digits) for v in value]
    return value


def network_document(network: BipartiteNetwork) -> dict[str, Any]:
    return {
        "k": network.k_size,
        "m": network.m_size,
        "labels": {"K": list(network.k_labels), "M": list(network.m_labels)},
    }


def render_table_text(table: Table, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    """Title line, header line, then one `` | ``-separated line per row."""
    lines = [table.title, " | ".join(table.headers)]
    for row in table.rows:
        lines.append(" | ".join(format_cell(cell, exact, digits) for cell in row))
    return "\n".join(lines) + "\n"


def render_text(result: CommandResult, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    blocks = [render_table_text(table, exact, digits) for table in result.tables]
    if result.notes:
        blocks.append("\n".join(result.notes) + "\n")
    return "\n".join(blocks)


def render_json(result: CommandResult, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    """Canonical JSON document; field order is fixed."""
    document = {
        "command": result.command,
        "network": network_document(result.network) if result.network is not None else None,
        "params": {
            "delta": format_exact(result.delta) if result.delta is not None else None,
            "t": result.horizon,
        },
        "result": _jsonable(result.result, exact, digits),
        "exact": exact,
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render_csv(result: CommandResult, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    """One header row then data rows.

    A leading ``table`` column is added when several tables are emitted; a
    result without tables falls back to one row per note.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    tables = result.tables
    if not tables:
        writer.writerow(["note"])
        for note in result.notes:
            writer.writerow([note])
        return buffer.getvalue()
    if len(tables) == 1:
        writer.writerow(tables[0].headers)
        for row in tables[0].rows:
            writer.writerow([format_cell(cell, exact, digits) for cell in row])
        return buffer.getvalue()

    width = max((len(t.headers) for t in tables), default=0)
    writer.writerow(["table"] + [f"c{i}" for i in range(width)])
    for table in tables:
        name = table.key or table.title
        writer.writerow([name, *table.headers] + [""] * (width - len(table.headers)))
        for row in table.rows:
            cells = [format_cell(cell, exact, digits) for cell in row]
            writer.writerow([name, *cells] + [""] * (width - len(cells)))
    return buffer.getvalue()


def render(result: CommandResult, output: OutputFormat, exact: bool, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    if output is OutputFormat.JSON:
        return render_json(result, exact, digits)
    if output is OutputFormat.CSV:
        return render_csv(result, exact, digits)
    return render_text(result, exact, digits)


def render_error(command: str, kind: str, message: str, exit_code: int) -> str:
    """Machine-readable error object for json mode."""
    document = {"command": command, "error": {"kind": kind, "message": message, "exit_code": exit_code}}
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
