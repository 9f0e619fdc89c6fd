"""Deterministic ranking of indicator columns.

Rank 1 is the largest value.  Ties receive consecutive ranks broken by
ascending journal id, and each tied group is reported so callers can
surface the arbitrary part of the order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import AnalysisError, EmptyColumnError
from .table import IndicatorTable


@dataclass(frozen=True)
class RankedColumn:
    """Ranks for one column plus the tied groups encountered."""

    entries: tuple[tuple[str, int], ...]
    ties: tuple[tuple[str, ...], ...] = ()

    def rank_of(self, journal: str) -> int:
        for jid, rank in self.entries:
            if jid == journal:
                return rank
        raise AnalysisError(f"journal {journal!r} not in ranked column")


def rank_column(values: Sequence[tuple[str, float]]) -> RankedColumn:
    """Rank (journal, value) pairs descending; ties break by ascending id."""
    if not values:
        raise EmptyColumnError("cannot rank an empty column")
    for jid, value in values:
        if not math.isfinite(value):
            raise AnalysisError(f"non-finite value {value!r} for {jid!r}")
    if len({jid for jid, _ in values}) != len(values):
        raise AnalysisError("duplicate journal id in column")
    ordered = sorted(values, key=lambda pair: (-pair[1], pair[0]))
    entries = tuple((jid, rank) for rank, (jid, _) in enumerate(ordered, start=1))
    ties: list[tuple[str, ...]] = []
    group: list[str] = [ordered[0][0]]
    for (prev_id, prev_value), (jid, value) in zip(ordered, ordered[1:]):
        if value == prev_value:
            group.append(jid)
        else:
            if len(group) > 1:
                ties.append(tuple(group))
            group = [jid]
    if len(group) > 1:
        ties.append(tuple(group))
    return RankedColumn(entries=entries, ties=tuple(ties))


def recompute_table_ranks(table: IndicatorTable) -> IndicatorTable:
    """Return ``table`` with ranks recomputed from its values (absent
    cells stay unranked)."""
    rank_lookup: dict[tuple[str, str], int] = {}
    for indicator in table.indicators:
        column = table.column(indicator)
        if not column:
            continue
        for jid, rank in rank_column(list(column)).entries:
            rank_lookup[(jid, indicator)] = rank
    ranks = tuple(
        tuple(
            rank_lookup.get((journal, indicator))
            for indicator in table.indicators
        )
        for journal in table.journals
    )
    return table.with_ranks(ranks)
