"""Client-side renderers for tables, correlation matrices, rank listings,
and validation reports.

All renderers are deterministic: identical inputs yield byte-identical
text.  Tables default to 4 significant digits with ranks in brackets
(``3.472 [4]``); ``full_precision`` switches to shortest round-trip
decimals.  Correlation matrices print to 4 decimal places.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping, Sequence

from .analysis.table import format_sig

ABSENT = "—"  # em dash for absent cells

#: Fixed rendering/comparison parameters, printed by ``--echo-tolerances``.
TOLERANCES_TEXT = """\
# tolerances
# table values: 4 significant digits (full precision via --full-precision)
# correlation coefficients: 4 decimal places
# reference-table value comparisons: +/-0.005 (ranks: exact)
# round-trip through CSV tables: exact with --full-precision, else 4 digits
"""


def _json_text(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _cell_text(value: float | None, rank: int | None, full_precision: bool) -> str:
    if value is None:
        return ABSENT
    rendered = repr(value) if full_precision else format_sig(value)
    if rank is not None:
        rendered += f" [{rank}]"
    return rendered


# --------------------------------------------------------------------------- #
# indicator tables (from the service's table-response dict)
# --------------------------------------------------------------------------- #


def table_markdown(doc: Mapping[str, Any], *, full_precision: bool = False) -> str:
    """Markdown table: one row per journal, ``value [rank]`` cells."""
    indicators: Sequence[str] = doc["indicators"]
    journals: Sequence[str] = doc["journals"]
    values: Sequence[Sequence[float | None]] = doc["values"]
    ranks: Sequence[Sequence[int | None]] | None = doc.get("ranks")
    header = ["journal", *indicators]
    lines = ["| " + " | ".join(header) + " |",
             "| " + " | ".join("---" for _ in header) + " |"]
    for row_index, journal in enumerate(journals):
        cells = [journal]
        for column_index in range(len(indicators)):
            value = values[row_index][column_index]
            rank = ranks[row_index][column_index] if ranks is not None else None
            cells.append(_cell_text(value, rank, full_precision))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def table_csv(doc: Mapping[str, Any], *, full_precision: bool = False) -> str:
    """Values-only CSV projection (header ``journal,<indicator>,...``)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["journal", *doc["indicators"]])
    for journal, row in zip(doc["journals"], doc["values"]):
        writer.writerow([
            journal,
            *(
                "" if value is None
                else (repr(value) if full_precision else format_sig(value))
                for value in row
            ),
        ])
    return buffer.getvalue()


def table_json(doc: Mapping[str, Any]) -> str:
    return _json_text(doc)


# --------------------------------------------------------------------------- #
# correlation matrices
# --------------------------------------------------------------------------- #


def matrix_markdown(doc: Mapping[str, Any]) -> str:
    indicators: Sequence[str] = doc["indicators"]
    matrix: Sequence[Sequence[float]] = doc["matrix"]
    header = ["indicator", *indicators]
    lines = ["| " + " | ".join(header) + " |",
             "| " + " | ".join("---" for _ in header) + " |"]
    for name, row in zip(indicators, matrix):
        lines.append(
            "| " + " | ".join([name, *(f"{value:.4f}" for value in row)]) + " |"
        )
    return "\n".join(lines) + "\n"


def matrix_csv(doc: Mapping[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["indicator", *doc["indicators"]])
    for name, row in zip(doc["indicators"], doc["matrix"]):
        writer.writerow([name, *(f"{value:.4f}" for value in row)])
    return buffer.getvalue()


def matrix_json(doc: Mapping[str, Any]) -> str:
    return _json_text(doc)


# --------------------------------------------------------------------------- #
# rank listings
# --------------------------------------------------------------------------- #


def ranks_markdown(doc: Mapping[str, Any], *, full_precision: bool = False) -> str:
    lines: list[str] = []
    for indicator in doc["indicators"]:
        lines.append(f"## {indicator}")
        lines.append("")
        lines.append("| rank | journal | value |")
        lines.append("| --- | --- | --- |")
        for entry in doc["columns"][indicator]:
            value = entry["value"]
            rendered = repr(value) if full_precision else format_sig(value)
            lines.append(f"| {entry['rank']} | {entry['journal']} | {rendered} |")
        for group in doc["ties"].get(indicator, []):
            lines.append(f"tied group (order broken by id): {', '.join(group)}")
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def ranks_csv(doc: Mapping[str, Any], *, full_precision: bool = False) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["indicator", "rank", "journal", "value"])
    for indicator in doc["indicators"]:
        for entry in doc["columns"][indicator]:
            value = entry["value"]
            writer.writerow([
                indicator, entry["rank"], entry["journal"],
                repr(value) if full_precision else format_sig(value),
            ])
    return buffer.getvalue()


def ranks_json(doc: Mapping[str, Any]) -> str:
    return _json_text(doc)


# --------------------------------------------------------------------------- #
# validation reports
# --------------------------------------------------------------------------- #


def report_text(doc: Mapping[str, Any]) -> str:
    lines = [f"severity: {doc['severity']}"]
    for check in doc["journals"]:
        declared = check["declared_total"]
        declared_text = "-" if declared is None else str(declared)
        lines.append(
            f"{check['journal']}: declared {declared_text}, "
            f"itemized {check['batch_total']}, "
            f"window articles {check['window_articles']}"
        )
        for warning in check["warnings"]:
            lines.append(f"  warning: {warning}")
        for error in check["errors"]:
            lines.append(f"  error: {error}")
    return "\n".join(lines) + "\n"


def report_csv(doc: Mapping[str, Any]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["journal", "declared_total", "batch_total", "surplus",
                     "window_articles", "warnings", "errors"])
    for check in doc["journals"]:
        declared = check["declared_total"]
        writer.writerow([
            check["journal"],
            "" if declared is None else declared,
            check["batch_total"],
            check["surplus"],
            check["window_articles"],
            "; ".join(check["warnings"]),
            "; ".join(check["errors"]),
        ])
    return buffer.getvalue()


def report_json(doc: Mapping[str, Any]) -> str:
    return _json_text(doc)


# --------------------------------------------------------------------------- #
# scatter
# --------------------------------------------------------------------------- #


def scatter_points_json(doc: Mapping[str, Any]) -> str:
    return _json_text(doc)
