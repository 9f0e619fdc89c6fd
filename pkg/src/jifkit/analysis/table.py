"""Journal-by-indicator value tables with absent-cell markers.

An :class:`IndicatorTable` is an immutable matrix: rows are journals,
columns are indicators, cells are floats or ``None`` (absent).  Absent
cells carry a human-readable reason.  A table may additionally store a
rank matrix; per column, ranks must be a permutation of ``1..k`` over the
non-absent cells.

Serialization: the CSV projection is values-only with header
``journal,<indicator>,...`` (absent cells are empty); the JSON form also
carries ranks and absence reasons.
"""

from __future__ import annotations

import csv
import io as _io
import json
from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Sequence

from ..errors import AnalysisError, ParseError, SchemaError, UnknownIndicatorError


@dataclass(frozen=True)
class IndicatorTable:
    journals: tuple[str, ...]
    indicators: tuple[str, ...]
    values: tuple[tuple[float | None, ...], ...]
    ranks: tuple[tuple[int | None, ...], ...] | None = None
    reasons: Mapping[tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "journals", tuple(self.journals))
        object.__setattr__(self, "indicators", tuple(self.indicators))
        object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))
        if len(set(self.journals)) != len(self.journals):
            raise AnalysisError("table journal ids must be unique")
        if len(set(self.indicators)) != len(self.indicators):
            raise AnalysisError("table indicator names must be unique")
        if len(self.values) != len(self.journals):
            raise AnalysisError(
                f"value matrix has {len(self.values)} rows for {len(self.journals)} journals"
            )
        for row in self.values:
            if len(row) != len(self.indicators):
                raise AnalysisError(
                    f"value row width {len(row)} != {len(self.indicators)} indicators"
                )
        if self.ranks is not None:
            ranks = tuple(tuple(row) for row in self.ranks)
            object.__setattr__(self, "ranks", ranks)
            if len(ranks) != len(self.journals) or any(
                len(row) != len(self.indicators) for row in ranks
            ):
                raise AnalysisError("rank matrix dimensions do not match the table")
            for column_index in range(len(self.indicators)):
                cells = [
                    (self.values[row_index][column_index],
                     ranks[row_index][column_index])
                    for row_index in range(len(self.journals))
                ]
                present = [rank for value, rank in cells if value is not None]
                if any(rank is not None for value, rank in cells if value is None):
                    raise AnalysisError("rank present for an absent cell")
                if any(rank is None for rank in present):
                    raise AnalysisError("non-absent cell is missing its rank")
                if sorted(present) != list(range(1, len(present) + 1)):
                    raise AnalysisError(
                        f"ranks of column {self.indicators[column_index]!r} are not "
                        f"a permutation of 1..{len(present)}"
                    )
        object.__setattr__(self, "reasons", dict(self.reasons))

    # -- lookups ----------------------------------------------------------- #

    def row_index(self, journal: str) -> int:
        try:
            return self.journals.index(journal)
        except ValueError:
            raise AnalysisError(f"journal {journal!r} not in table") from None

    def column_index(self, indicator: str) -> int:
        try:
            return self.indicators.index(indicator)
        except ValueError:
            raise UnknownIndicatorError(f"indicator {indicator!r} not in table") from None

    def value(self, journal: str, indicator: str) -> float | None:
        return self.values[self.row_index(journal)][self.column_index(indicator)]

    def rank(self, journal: str, indicator: str) -> int | None:
        if self.ranks is None:
            return None
        return self.ranks[self.row_index(journal)][self.column_index(indicator)]

    def reason(self, journal: str, indicator: str) -> str | None:
        return self.reasons.get((journal, indicator))

    def column(self, indicator: str) -> tuple[tuple[str, float], ...]:
        """Non-absent (journal, value) pairs of one column, in row order."""
        column_index = self.column_index(indicator)
        return tuple(
            (journal, row[column_index])
            for journal, row in zip(self.journals, self.values)
            if row[column_index] is not None
        )

    def rank_pairs(self, indicator: str) -> tuple[tuple[str, int], ...]:
        """Non-absent (journal, stored rank) pairs of one column."""
        if self.ranks is None:
            raise AnalysisError("table carries no ranks")
        column_index = self.column_index(indicator)
        return tuple(
            (journal, row[column_index])
            for journal, row in zip(self.journals, self.ranks)
            if row[column_index] is not None
        )

    # -- reshaping --------------------------------------------------------- #

    def subset(self, indicators: Sequence[str]) -> "IndicatorTable":
        """Table restricted to ``indicators``, in the given order."""
        column_indices = [self.column_index(name) for name in indicators]
        values = tuple(
            tuple(row[i] for i in column_indices) for row in self.values
        )
        ranks = None
        if self.ranks is not None:
            ranks = tuple(
                tuple(row[i] for i in column_indices) for row in self.ranks
            )
        reasons = {
            (journal, indicator): reason
            for (journal, indicator), reason in self.reasons.items()
            if indicator in set(indicators)
        }
        return IndicatorTable(journals=self.journals, indicators=tuple(indicators),
                              values=values, ranks=ranks, reasons=reasons)

    def present_indicators(self) -> tuple[str, ...]:
        """Indicators that have at least one non-absent cell."""
        out = []
        for column_index, name in enumerate(self.indicators):
            if any(row[column_index] is not None for row in self.values):
                out.append(name)
        return tuple(out)

    def with_ranks(self, ranks: Sequence[Sequence[int | None]]) -> "IndicatorTable":
        return replace(self, ranks=tuple(tuple(row) for row in ranks))


# --------------------------------------------------------------------------- #
# CSV projection
# --------------------------------------------------------------------------- #


def table_to_csv(table: IndicatorTable, *, full_precision: bool = False) -> str:
    """Values-only CSV with header ``journal,<indicator>,...``; absent
    cells are empty.  Default rendering is 4 significant digits;
    ``full_precision`` emits shortest round-trip decimals."""
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["journal", *table.indicators])
    for journal, row in zip(table.journals, table.values):
        rendered = [
            "" if value is None
            else (repr(value) if full_precision else format_sig(value))
            for value in row
        ]
        writer.writerow([journal, *rendered])
    return buffer.getvalue()


def table_from_csv(text: str) -> IndicatorTable:
    """Parse the CSV projection back into a (rank-free) table."""
    reader = csv.reader(_io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("table CSV is empty") from None
    except csv.Error as exc:
        raise ParseError(f"table CSV: {exc}") from exc
    if not header or header[0].strip() != "journal":
        raise SchemaError("table CSV header must start with 'journal'")
    indicators = tuple(name.strip() for name in header[1:])
    if not indicators or any(not name for name in indicators):
        raise SchemaError("table CSV header must name at least one indicator")
    journals: list[str] = []
    values: list[tuple[float | None, ...]] = []
    try:
        rows = list(reader)
    except csv.Error as exc:
        raise ParseError(f"table CSV: {exc}") from exc
    for line_number, row in enumerate(rows, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(indicators) + 1:
            raise SchemaError(
                f"table CSV line {line_number}: expected {len(indicators) + 1} columns"
            )
        journals.append(row[0])
        parsed: list[float | None] = []
        for cell in row[1:]:
            cell = cell.strip()
            if not cell:
                parsed.append(None)
                continue
            try:
                parsed.append(float(cell))
            except ValueError:
                raise SchemaError(
                    f"table CSV line {line_number}: {cell!r} is not a number"
                ) from None
        values.append(tuple(parsed))
    return IndicatorTable(journals=tuple(journals), indicators=indicators,
                          values=tuple(values))


# --------------------------------------------------------------------------- #
# JSON form
# --------------------------------------------------------------------------- #


def table_to_json_dict(table: IndicatorTable) -> dict[str, Any]:
    """Self-describing JSON form: values, optional ranks, absence reasons."""
    doc: dict[str, Any] = {
        "journals": list(table.journals),
        "indicators": list(table.indicators),
        "values": [list(row) for row in table.values],
    }
    if table.ranks is not None:
        doc["ranks"] = [list(row) for row in table.ranks]
    if table.reasons:
        nested: dict[str, dict[str, str]] = {}
        for journal in table.journals:
            for indicator in table.indicators:
                reason = table.reasons.get((journal, indicator))
                if reason is not None:
                    nested.setdefault(journal, {})[indicator] = reason
        doc["reasons"] = nested
    return doc


def table_from_json_dict(doc: Mapping[str, Any]) -> IndicatorTable:
    if not isinstance(doc, Mapping):
        raise SchemaError("table JSON must be an object")
    try:
        journals = tuple(doc["journals"])
        indicators = tuple(doc["indicators"])
        raw_values = doc["values"]
    except KeyError as exc:
        raise SchemaError(f"table JSON is missing {exc.args[0]!r}") from None
    values = tuple(
        tuple(None if cell is None else float(cell) for cell in row)
        for row in raw_values
    )
    ranks = None
    if doc.get("ranks") is not None:
        ranks = tuple(
            tuple(None if cell is None else int(cell) for cell in row)
            for row in doc["ranks"]
        )
    reasons: dict[tuple[str, str], str] = {}
    for journal, per_indicator in (doc.get("reasons") or {}).items():
        for indicator, reason in per_indicator.items():
            reasons[(journal, indicator)] = str(reason)
    try:
        return IndicatorTable(journals=journals, indicators=indicators,
                              values=values, ranks=ranks, reasons=reasons)
    except AnalysisError as exc:
        raise SchemaError(f"table JSON is inconsistent: {exc}") from exc


def table_from_json(text: str) -> IndicatorTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed table JSON: {exc}") from exc
    return table_from_json_dict(doc)


# --------------------------------------------------------------------------- #
# numeric rendering
# --------------------------------------------------------------------------- #


def format_sig(value: float, digits: int = 4) -> str:
    """Format to ``digits`` significant digits (table default)."""
    return f"{value:.{digits}g}"
