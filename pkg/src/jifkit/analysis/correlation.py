"""Pearson correlation of indicator columns.

``pearson`` is the textbook product-moment coefficient in two-pass
sum-of-products form (population/sample normalization cancels in the
ratio).  ``pearson_matrix`` correlates table columns pairwise-complete:
each pair uses the journals where both cells are present.

``use="ranks"`` correlates rank vectors instead of raw values: stored
ranks when the table carries them, otherwise ranks recomputed from each
column.  Rank vectors use the table's convention (rank 1 = largest), so
positive associations keep positive coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import AnalysisError, DegenerateColumnError, LengthMismatchError
from .ranking import rank_column
from .table import IndicatorTable

USE_VALUES = "values"
USE_RANKS = "ranks"


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Product-moment correlation of two equal-length series."""
    if len(x) != len(y):
        raise LengthMismatchError(f"series lengths differ: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise DegenerateColumnError(f"need at least 2 points, got {n}")
    mean_x = sum(x) / n
    mean_y = sum(y) / n
    sxx = syy = sxy = 0.0
    for xi, yi in zip(x, y):
        dx = xi - mean_x
        dy = yi - mean_y
        sxx += dx * dx
        syy += dy * dy
        sxy += dx * dy
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateColumnError("zero-variance input series")
    return sxy / math.sqrt(sxx * syy)


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric indicator-by-indicator correlation coefficients with the
    per-pair effective sample sizes."""

    indicators: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]
    sample_sizes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.indicators)
        if len(self.matrix) != k or any(len(row) != k for row in self.matrix):
            raise AnalysisError("correlation matrix dimensions do not match indicators")
        if len(self.sample_sizes) != k or any(len(row) != k for row in self.sample_sizes):
            raise AnalysisError("sample-size matrix dimensions do not match indicators")
        for i in range(k):
            if self.matrix[i][i] != 1.0:
                raise AnalysisError("correlation matrix diagonal must be exactly 1")
            for j in range(k):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise AnalysisError("correlation matrix must be symmetric")
                if abs(self.matrix[i][j]) > 1.0 + 1e-12:
                    raise AnalysisError("correlation coefficient out of [-1, 1]")

    def coefficient(self, a: str, b: str) -> float:
        indicators = list(self.indicators)
        return self.matrix[indicators.index(a)][indicators.index(b)]


def _column_vectors(table: IndicatorTable, use: str) -> dict[str, dict[str, float]]:
    """Per indicator: journal -> value (or rank) over non-absent cells."""
    vectors: dict[str, dict[str, float]] = {}
    for indicator in table.indicators:
        if use == USE_VALUES:
            vectors[indicator] = {jid: value for jid, value in table.column(indicator)}
        elif use == USE_RANKS:
            if table.ranks is not None:
                vectors[indicator] = {
                    jid: float(rank) for jid, rank in table.rank_pairs(indicator)
                }
            else:
                column = table.column(indicator)
                if not column:
                    vectors[indicator] = {}
                    continue
                vectors[indicator] = {
                    jid: float(rank) for jid, rank in rank_column(list(column)).entries
                }
        else:
            raise AnalysisError(f"unknown correlation basis {use!r}; "
                                f"expected {USE_VALUES!r} or {USE_RANKS!r}")
    return vectors


def pearson_matrix(table: IndicatorTable, use: str = USE_VALUES) -> CorrelationMatrix:
    """Pairwise-complete Pearson matrix over the table's columns."""
    indicators = table.indicators
    if len(indicators) < 2:
        raise AnalysisError("correlation needs at least 2 indicators")
    vectors = _column_vectors(table, use)
    k = len(indicators)
    matrix = [[0.0] * k for _ in range(k)]
    sizes = [[0] * k for _ in range(k)]
    for i in range(k):
        matrix[i][i] = 1.0
        sizes[i][i] = len(vectors[indicators[i]])
        for j in range(i + 1, k):
            a, b = indicators[i], indicators[j]
            shared = [
                jid for jid in table.journals
                if jid in vectors[a] and jid in vectors[b]
            ]
            xs = [vectors[a][jid] for jid in shared]
            ys = [vectors[b][jid] for jid in shared]
            try:
                r = pearson(xs, ys)
            except DegenerateColumnError as exc:
                raise DegenerateColumnError(
                    f"pair ({a}, {b}): {exc}", pair=(a, b)
                ) from exc
            matrix[i][j] = matrix[j][i] = r
            sizes[i][j] = sizes[j][i] = len(shared)
    return CorrelationMatrix(
        indicators=indicators,
        matrix=tuple(tuple(row) for row in matrix),
        sample_sizes=tuple(tuple(row) for row in sizes),
    )
