"""jifkit — journal impact indicators.

A toolkit for computing a family of journal impact indicators (the
classic two-year citation ratio plus several citing-side weighted
variants), ranking journals by them, measuring Pearson correlation
between indicator columns, validating datasets, and exporting scatter
data.  Ships an embedded 20-journal evaluation dataset
(``paper2013``) and the matching published indicator table
(``published2013``).
"""

from .analysis import (
    CorrelationMatrix,
    IndicatorTable,
    RankedColumn,
    builtin_table,
    pearson,
    pearson_matrix,
    rank_column,
    scatter_export,
)
from .corpus import (
    CitationBatch,
    Dataset,
    Journal,
    UNINDEXED,
    builtin_dataset,
    load_dataset,
    serialize_dataset,
    validate,
)
from .errors import (
    AnalysisError,
    ComputationError,
    DatasetError,
    DegenerateColumnError,
    DomainError,
    DuplicateBatchError,
    EmptyColumnError,
    IntegrityError,
    JifkitError,
    LengthMismatchError,
    NoEligibleCitationsError,
    ParseError,
    SchemaError,
    UnknownIndicatorError,
    UnknownJournalError,
    ZeroDenominatorError,
)
from .indicators import (
    INDICATORS,
    IndicatorValue,
    buela_casal_wif,
    citing_if_mean,
    citing_if_median,
    classic_if,
    compute_table,
    hy_weight,
    hy_wif,
    indicator_names,
    mif_reference_point,
    mifcj,
    nif,
    proposed_wif,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "CitationBatch",
    "ComputationError",
    "CorrelationMatrix",
    "Dataset",
    "DatasetError",
    "DegenerateColumnError",
    "DomainError",
    "DuplicateBatchError",
    "EmptyColumnError",
    "INDICATORS",
    "IndicatorTable",
    "IndicatorValue",
    "IntegrityError",
    "JifkitError",
    "Journal",
    "LengthMismatchError",
    "NoEligibleCitationsError",
    "ParseError",
    "RankedColumn",
    "SchemaError",
    "UNINDEXED",
    "UnknownIndicatorError",
    "UnknownJournalError",
    "ZeroDenominatorError",
    "__version__",
    "buela_casal_wif",
    "builtin_dataset",
    "builtin_table",
    "citing_if_mean",
    "citing_if_median",
    "classic_if",
    "compute_table",
    "hy_weight",
    "hy_wif",
    "indicator_names",
    "load_dataset",
    "mif_reference_point",
    "mifcj",
    "nif",
    "pearson",
    "pearson_matrix",
    "proposed_wif",
    "rank_column",
    "scatter_export",
    "serialize_dataset",
    "validate",
]
