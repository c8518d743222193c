"""Network document loading.

Accepted documents (JSON):

    {"K": ["a", "b"], "M": ["x", "y", "z"]}   explicit labels
    {"k": 2, "m": 3}                          sizes, labels K1..Kk / M1..Mm

Side membership is always explicit; it is never inferred from labels.
"""

import json
from pathlib import Path
from typing import Any

from attnet.exceptions import InvalidInputError
from attnet.network.models import BipartiteNetwork


def _check_labels(name: str, labels: Any) -> tuple:
    if not isinstance(labels, list):
        raise InvalidInputError(f"'{name}' must be a list of labels", field=name, value=labels)
    for label in labels:
        # bool is an int subclass but never a sensible node label
        if isinstance(label, bool) or not isinstance(label, (str, int)):
            raise InvalidInputError(
                f"Labels in '{name}' must be strings or integers, got {label!r}",
                field=name,
                value=label,
            )
    return tuple(labels)


def _check_size(name: str, size: Any) -> int:
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise InvalidInputError(f"'{name}' must be a positive integer, got {size!r}", field=name, value=size)
    return size


def network_from_document(document: Any) -> BipartiteNetwork:
    """Build a network from a parsed document.

    Raises:
        InvalidInputError: If the document matches neither accepted shape
    """
    if not isinstance(document, dict):
        raise InvalidInputError("Network document must be a JSON object", field="network")

    if "K" in document or "M" in document:
        extra = set(document) - {"K", "M"}
        if extra:
            raise InvalidInputError(f"Unexpected keys in network document: {sorted(extra)}", field="network")
        return BipartiteNetwork(
            k_labels=_check_labels("K", document.get("K")),
            m_labels=_check_labels("M", document.get("M")),
        )

    if "k" in document or "m" in document:
        extra = set(document) - {"k", "m"}
        if extra:
            raise InvalidInputError(f"Unexpected keys in network document: {sorted(extra)}", field="network")
        return BipartiteNetwork.from_sizes(
            _check_size("k", document.get("k")),
            _check_size("m", document.get("m")),
        )

    raise InvalidInputError("Network document needs either 'K'/'M' label lists or 'k'/'m' sizes", field="network")


def load_network(path: str | Path) -> BipartiteNetwork:
    """Read and parse a network document from ``path``.

    Raises:
        InvalidInputError: On unreadable files, invalid JSON or invalid shape
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"Cannot read network file {path}: {e.strerror}", field="network", value=str(path)) from e
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Network file {path} is not valid JSON: {e.msg}", field="network", value=str(path)) from e
    return network_from_document(document)
