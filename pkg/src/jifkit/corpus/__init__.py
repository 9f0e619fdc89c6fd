"""Citation data model, ingestion, bundled dataset, and validation."""

from .builtin import BUILTIN_DATASETS, builtin_dataset, paper2013, paper_fixture
from .io import (
    dataset_to_csv_texts,
    dataset_to_dict,
    load_dataset,
    serialize_dataset,
    write_dataset_csv,
)
from .model import IF_FIELDS, UNINDEXED, CitationBatch, Dataset, Journal
from .validate import (
    SEVERITY_CLEAN,
    SEVERITY_ERRORS,
    SEVERITY_WARNINGS,
    ConsistencyReport,
    JournalCheck,
    validate,
)

__all__ = [
    "BUILTIN_DATASETS",
    "CitationBatch",
    "ConsistencyReport",
    "Dataset",
    "IF_FIELDS",
    "Journal",
    "JournalCheck",
    "SEVERITY_CLEAN",
    "SEVERITY_ERRORS",
    "SEVERITY_WARNINGS",
    "UNINDEXED",
    "builtin_dataset",
    "dataset_to_csv_texts",
    "dataset_to_dict",
    "load_dataset",
    "paper2013",
    "paper_fixture",
    "serialize_dataset",
    "validate",
    "write_dataset_csv",
]
