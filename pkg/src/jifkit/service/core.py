"""Service core: every user-facing operation as a pure function from a
request model to a response model.

Both frontends go through these functions — the FastAPI app wraps them in
HTTP endpoints, and the CLI calls them in-process by default.  Failures
raise :class:`ServiceError`, which carries an error code, an HTTP status
for the service, and the CLI exit code (2 for usage/load problems, 1 for
analysis failures on valid input).
"""

from __future__ import annotations

from ..analysis.correlation import pearson_matrix
from ..analysis.published import BUILTIN_TABLES, builtin_table
from ..analysis.ranking import rank_column, recompute_table_ranks
from ..analysis.scatter import scatter_export
from ..analysis.table import (
    IndicatorTable,
    table_from_csv,
    table_from_json_dict,
    table_to_json_dict,
)
from ..corpus.builtin import BUILTIN_DATASETS, builtin_dataset
from ..corpus.io import load_dataset
from ..corpus.model import Dataset
from ..corpus.validate import validate as validate_dataset
from ..errors import (
    AnalysisError,
    ComputationError,
    DatasetError,
    JifkitError,
    UnknownIndicatorError,
)
from ..indicators.table import compute_table, indicator_names, resolve_indicators
from . import schemas

EXIT_OK = 0
EXIT_ANALYSIS = 1
EXIT_USAGE = 2


class ServiceError(Exception):
    """Operation failure with HTTP and CLI mappings attached."""

    def __init__(self, code: str, message: str, *, http_status: int, exit_code: int):
        super().__init__(message)
        self.code = code
        self.message = message
        self.http_status = http_status
        self.exit_code = exit_code

    def to_body(self) -> dict:
        return {"error": {"code": self.code, "message": self.message,
                          "exit_code": self.exit_code}}


def _wrap(exc: JifkitError) -> ServiceError:
    """Map a package error onto its service/CLI classification."""
    if isinstance(exc, UnknownIndicatorError):
        return ServiceError("unknown-indicator", str(exc), http_status=400,
                            exit_code=EXIT_USAGE)
    if isinstance(exc, DatasetError):
        return ServiceError("dataset-error", str(exc), http_status=400,
                            exit_code=EXIT_USAGE)
    if isinstance(exc, (AnalysisError, ComputationError)):
        return ServiceError("analysis-error", str(exc), http_status=422,
                            exit_code=EXIT_ANALYSIS)
    return ServiceError("internal-error", str(exc), http_status=500,
                        exit_code=EXIT_ANALYSIS)


# --------------------------------------------------------------------------- #
# source resolution
# --------------------------------------------------------------------------- #


def resolve_dataset(source: schemas.DatasetSource, *, evaluation_year: int | None,
                    strict: bool) -> Dataset:
    try:
        if source.builtin is not None:
            try:
                return builtin_dataset(source.builtin)
            except KeyError as exc:
                raise ServiceError("unknown-builtin", str(exc.args[0]),
                                   http_status=404, exit_code=EXIT_USAGE) from None
        if source.json_text is not None:
            return load_dataset(source.json_text, "json", strict=strict,
                                evaluation_year=evaluation_year)
        if source.document is not None:
            import json as _json

            return load_dataset(_json.dumps(source.document), "json", strict=strict,
                                evaluation_year=evaluation_year)
        return load_dataset((source.csv_journals or "", source.csv_citations or ""),
                            "csv", strict=strict, evaluation_year=evaluation_year)
    except JifkitError as exc:
        raise _wrap(exc) from exc


def resolve_table(source: schemas.TableSource) -> IndicatorTable:
    try:
        if source.builtin is not None:
            try:
                return builtin_table(source.builtin)
            except KeyError as exc:
                raise ServiceError("unknown-builtin", str(exc.args[0]),
                                   http_status=404, exit_code=EXIT_USAGE) from None
        if source.document is not None:
            return table_from_json_dict(source.document)
        return table_from_csv(source.csv_text or "")
    except JifkitError as exc:
        raise _wrap(exc) from exc


def _table_for(req: schemas._TableOrDatasetRequest) -> IndicatorTable:
    """Common correlate/rank/scatter input: a table, either given
    directly or computed from a dataset."""
    if req.table is not None:
        table = resolve_table(req.table)
        if req.indicators:
            try:
                table = table.subset(req.indicators)
            except JifkitError as exc:
                raise _wrap(exc) from exc
        return table
    ds = resolve_dataset(req.dataset, evaluation_year=req.evaluation_year,
                         strict=req.strict)
    try:
        return compute_table(ds, req.indicators)
    except JifkitError as exc:
        raise _wrap(exc) from exc


# --------------------------------------------------------------------------- #
# operations
# --------------------------------------------------------------------------- #


def compute(req: schemas.ComputeRequest) -> schemas.TableResponse:
    ds = resolve_dataset(req.dataset, evaluation_year=req.evaluation_year,
                         strict=req.strict)
    try:
        resolve_indicators(req.indicators)
        table = compute_table(ds, req.indicators)
        if req.with_ranks:
            table = recompute_table_ranks(table)
    except JifkitError as exc:
        raise _wrap(exc) from exc
    doc = table_to_json_dict(table)
    return schemas.TableResponse(
        evaluation_year=ds.evaluation_year,
        journals=doc["journals"],
        indicators=doc["indicators"],
        values=doc["values"],
        ranks=doc.get("ranks"),
        reasons=doc.get("reasons", {}),
    )


def correlate(req: schemas.CorrelateRequest) -> schemas.CorrelationResponse:
    table = _table_for(req)
    try:
        # Columns that are absent everywhere cannot enter any pair.
        present = table.present_indicators()
        if len(present) < len(table.indicators):
            table = table.subset(present)
        if len(table.indicators) < 2:
            raise AnalysisError(
                "correlation needs at least 2 computable indicator columns"
            )
        matrix = pearson_matrix(table, use=req.use)
    except JifkitError as exc:
        raise _wrap(exc) from exc
    return schemas.CorrelationResponse(
        indicators=list(matrix.indicators),
        matrix=[list(row) for row in matrix.matrix],
        sample_sizes=[list(row) for row in matrix.sample_sizes],
    )


def rank(req: schemas.RankRequest) -> schemas.RankResponse:
    table = _table_for(req)
    try:
        present = table.present_indicators()
        if not present:
            raise AnalysisError("no computable indicator columns to rank")
        columns: dict[str, list[schemas.RankEntry]] = {}
        ties: dict[str, list[list[str]]] = {}
        for indicator in present:
            column = dict(table.column(indicator))
            ranked = rank_column(list(table.column(indicator)))
            columns[indicator] = [
                schemas.RankEntry(rank=rank_value, journal=jid, value=column[jid])
                for jid, rank_value in sorted(ranked.entries, key=lambda e: e[1])
            ]
            if ranked.ties:
                ties[indicator] = [list(group) for group in ranked.ties]
    except JifkitError as exc:
        raise _wrap(exc) from exc
    return schemas.RankResponse(indicators=list(present), columns=columns, ties=ties)


def validate(req: schemas.ValidateRequest) -> schemas.ValidateResponse:
    ds = resolve_dataset(req.dataset, evaluation_year=req.evaluation_year,
                         strict=req.strict)
    try:
        report = validate_dataset(ds, req.required)
    except JifkitError as exc:
        raise _wrap(exc) from exc
    return schemas.ValidateResponse(
        evaluation_year=report.evaluation_year,
        severity=report.severity,
        journals=[
            schemas.JournalCheckModel(
                journal=check.journal,
                declared_total=check.declared_total,
                batch_total=check.batch_total,
                surplus=check.surplus,
                window_articles=check.window_articles,
                missing_if={k: list(v) for k, v in check.missing_if.items()},
                warnings=list(check.warnings),
                errors=list(check.errors),
            )
            for check in report.journals
        ],
        warnings=list(report.warnings),
        errors=list(report.errors),
    )


def scatter(req: schemas.ScatterRequest) -> schemas.ScatterResponse:
    table = _table_for(req)
    try:
        points = scatter_export(table, req.x, req.y)
    except JifkitError as exc:
        raise _wrap(exc) from exc
    return schemas.ScatterResponse(
        x=req.x, y=req.y,
        points=[
            schemas.ScatterPointModel(journal=jid, x=x_value, y=y_value)
            for jid, x_value, y_value in points
        ],
    )


def list_builtins() -> schemas.DatasetListResponse:
    return schemas.DatasetListResponse(
        datasets=sorted(BUILTIN_DATASETS),
        tables=sorted(BUILTIN_TABLES),
    )


def registered_indicators() -> list[str]:
    return list(indicator_names())
