"""Service layer: request/response schemas, core operations, HTTP app."""

from . import schemas
from .core import (
    EXIT_ANALYSIS,
    EXIT_OK,
    EXIT_USAGE,
    ServiceError,
    compute,
    correlate,
    list_builtins,
    rank,
    resolve_dataset,
    resolve_table,
    scatter,
    validate,
)

__all__ = [
    "EXIT_ANALYSIS",
    "EXIT_OK",
    "EXIT_USAGE",
    "ServiceError",
    "compute",
    "correlate",
    "list_builtins",
    "rank",
    "resolve_dataset",
    "resolve_table",
    "scatter",
    "schemas",
    "validate",
]
