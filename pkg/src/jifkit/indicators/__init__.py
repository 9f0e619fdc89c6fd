"""Pure indicator computations and the indicator registry."""

from .ops import (
    FieldAggregates,
    IndicatorValue,
    SkippedBatch,
    WindowSpec,
    buela_casal_wif,
    citing_if_mean,
    citing_if_median,
    classic_if,
    field_aggregates,
    hy_quotient,
    hy_weight,
    hy_wif,
    mif_reference_point,
    mifcj,
    nif,
    proposed_wif,
)
from .table import (
    INDICATORS,
    IndicatorSpec,
    compute_table,
    indicator_names,
    resolve_indicators,
)

__all__ = [
    "FieldAggregates",
    "INDICATORS",
    "IndicatorSpec",
    "IndicatorValue",
    "SkippedBatch",
    "WindowSpec",
    "buela_casal_wif",
    "citing_if_mean",
    "citing_if_median",
    "classic_if",
    "compute_table",
    "field_aggregates",
    "hy_quotient",
    "hy_weight",
    "hy_wif",
    "indicator_names",
    "mif_reference_point",
    "mifcj",
    "nif",
    "proposed_wif",
    "resolve_indicators",
]
