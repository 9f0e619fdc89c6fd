"""Request/response models for the HTTP service (and the in-process
client path, which uses the same models)."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator


class DatasetSource(BaseModel):
    """Exactly one of: a builtin dataset id, a parsed JSON document, the
    raw JSON text, or the two CSV projection texts."""

    builtin: str | None = None
    document: dict[str, Any] | None = None
    json_text: str | None = None
    csv_journals: str | None = None
    csv_citations: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "DatasetSource":
        has_csv = self.csv_journals is not None or self.csv_citations is not None
        if has_csv and (self.csv_journals is None or self.csv_citations is None):
            raise ValueError("csv_journals and csv_citations must be given together")
        chosen = [
            self.builtin is not None,
            self.document is not None,
            self.json_text is not None,
            has_csv,
        ]
        if sum(chosen) != 1:
            raise ValueError(
                "exactly one dataset source is required: "
                "builtin | document | json_text | csv_journals+csv_citations"
            )
        return self


class TableSource(BaseModel):
    """Exactly one of: a builtin table id, a table JSON document, or the
    CSV projection text."""

    builtin: str | None = None
    document: dict[str, Any] | None = None
    csv_text: str | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "TableSource":
        chosen = [
            self.builtin is not None,
            self.document is not None,
            self.csv_text is not None,
        ]
        if sum(chosen) != 1:
            raise ValueError(
                "exactly one table source is required: builtin | document | csv_text"
            )
        return self


class _TableOrDatasetRequest(BaseModel):
    dataset: DatasetSource | None = None
    table: TableSource | None = None
    indicators: list[str] | None = None
    evaluation_year: int | None = None
    strict: bool = False

    @model_validator(mode="after")
    def _one_input(self) -> "_TableOrDatasetRequest":
        if (self.dataset is None) == (self.table is None):
            raise ValueError("exactly one of 'dataset' or 'table' is required")
        return self


class ComputeRequest(BaseModel):
    dataset: DatasetSource
    indicators: list[str] | None = None
    evaluation_year: int | None = None
    strict: bool = False
    with_ranks: bool = True


class CorrelateRequest(_TableOrDatasetRequest):
    use: Literal["values", "ranks"] = "values"


class RankRequest(_TableOrDatasetRequest):
    pass


class ValidateRequest(BaseModel):
    dataset: DatasetSource
    required: list[str] = Field(default_factory=list)
    evaluation_year: int | None = None
    strict: bool = False


class ScatterRequest(_TableOrDatasetRequest):
    x: str = ""
    y: str = ""

    @model_validator(mode="after")
    def _axes(self) -> "ScatterRequest":
        if not self.x or not self.y:
            raise ValueError("both 'x' and 'y' indicator names are required")
        return self


class TableResponse(BaseModel):
    evaluation_year: int | None = None
    journals: list[str]
    indicators: list[str]
    values: list[list[float | None]]
    ranks: list[list[int | None]] | None = None
    reasons: dict[str, dict[str, str]] = Field(default_factory=dict)


class CorrelationResponse(BaseModel):
    indicators: list[str]
    matrix: list[list[float]]
    sample_sizes: list[list[int]]


class RankEntry(BaseModel):
    rank: int
    journal: str
    value: float


class RankResponse(BaseModel):
    indicators: list[str]
    columns: dict[str, list[RankEntry]]
    ties: dict[str, list[list[str]]] = Field(default_factory=dict)


class JournalCheckModel(BaseModel):
    journal: str
    declared_total: int | None
    batch_total: int
    surplus: int
    window_articles: int
    missing_if: dict[str, list[str]] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)


class ValidateResponse(BaseModel):
    evaluation_year: int
    severity: Literal["clean", "warnings", "errors"]
    journals: list[JournalCheckModel]
    warnings: list[str]
    errors: list[str]


class ScatterPointModel(BaseModel):
    journal: str
    x: float
    y: float


class ScatterResponse(BaseModel):
    x: str
    y: str
    points: list[ScatterPointModel]


class ErrorBody(BaseModel):
    code: str
    message: str
    exit_code: int


class ErrorResponse(BaseModel):
    error: ErrorBody


class DatasetListResponse(BaseModel):
    datasets: list[str]
    tables: list[str]
