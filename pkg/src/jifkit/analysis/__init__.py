"""Ranking, correlation, scatter export, and the published reference table."""

from .correlation import (
    USE_RANKS,
    USE_VALUES,
    CorrelationMatrix,
    pearson,
    pearson_matrix,
)
from .published import (
    BUILTIN_TABLES,
    PUBLISHED_COLUMNS,
    PUBLISHED_CORRELATION_ORDER,
    PUBLISHED_ROWS,
    builtin_table,
    published_correlations,
    published_table,
)
from .ranking import RankedColumn, rank_column, recompute_table_ranks
from .scatter import ScatterPoint, points_to_csv, points_to_svg, scatter_export
from .table import (
    IndicatorTable,
    format_sig,
    table_from_csv,
    table_from_json,
    table_from_json_dict,
    table_to_csv,
    table_to_json_dict,
)

__all__ = [
    "BUILTIN_TABLES",
    "CorrelationMatrix",
    "IndicatorTable",
    "PUBLISHED_COLUMNS",
    "PUBLISHED_CORRELATION_ORDER",
    "PUBLISHED_ROWS",
    "RankedColumn",
    "ScatterPoint",
    "USE_RANKS",
    "USE_VALUES",
    "builtin_table",
    "format_sig",
    "pearson",
    "pearson_matrix",
    "points_to_csv",
    "points_to_svg",
    "published_correlations",
    "published_table",
    "rank_column",
    "recompute_table_ranks",
    "scatter_export",
    "table_from_csv",
    "table_from_json",
    "table_from_json_dict",
    "table_to_csv",
    "table_to_json_dict",
]
