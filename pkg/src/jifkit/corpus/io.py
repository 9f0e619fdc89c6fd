"""Dataset ingestion and serialization.

Canonical format is a single self-describing JSON document::

    {
      "evaluation_year": 2013,
      "journals": [
        {"id": "...", "name": "...", "discipline": "...",
         "articles_by_year": {"2012": 226},
         "two_year_if": {"2012": 1.76},
         "five_year_if": {"2012": 2.895}}
      ],
      "citations": [
        {"citing": "<id or UNINDEXED>", "cited": "<id>", "year": 2013, "count": 3}
      ],
      "declared_totals": {"<id>": 383}
    }

The CSV projection is a flat convenience format: a directory (or a pair of
texts) holding ``journals.csv`` — one row per journal-year with columns
``id,name,discipline,year,articles,two_year_if,five_year_if,declared_total``
(blank cells mean "absent"; a row with a blank year carries identity only;
``declared_total`` is per-journal and may appear on any of its rows) — and
``citations.csv`` with columns ``citing,cited,year,count``.  CSV carries no
evaluation year, so one must be supplied when loading.

Duplicate (citing, cited, year) triples are summed in lenient mode and
rejected in strict mode.  :func:`serialize_dataset` emits a canonical
ordering (journals sorted by id, batches sorted by their triple) so equal
datasets serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io as _io
import json
import os
from pathlib import Path
from typing import Any, Mapping, Sequence

from ..errors import DuplicateBatchError, ParseError, SchemaError
from .model import UNINDEXED, CitationBatch, Dataset, Journal

JOURNALS_CSV = "journals.csv"
CITATIONS_CSV = "citations.csv"

_JOURNAL_HEADER = ["id", "name", "discipline", "year", "articles",
                   "two_year_if", "five_year_if", "declared_total"]
_CITATION_HEADER = ["citing", "cited", "year", "count"]


# --------------------------------------------------------------------------- #
# loading
# --------------------------------------------------------------------------- #


def load_dataset(
    source: str | os.PathLike[str] | tuple[str, str],
    format: str = "json",
    *,
    strict: bool = False,
    evaluation_year: int | None = None,
) -> Dataset:
    """Load a :class:`Dataset` from ``source``.

    ``format="json"``: ``source`` is a path to a JSON document, or the
    document text itself (recognized by a leading ``{``).

    ``format="csv"``: ``source`` is a directory containing ``journals.csv``
    and ``citations.csv``, or a ``(journals_text, citations_text)`` pair;
    ``evaluation_year`` is then required.

    ``strict=True`` rejects duplicate (citing, cited, year) triples instead
    of merging them; ``evaluation_year`` overrides the document's year.
    """
    if format == "json":
        text = _read_json_source(source)
        return _load_json(text, strict=strict, evaluation_year=evaluation_year)
    if format == "csv":
        journals_text, citations_text = _read_csv_source(source)
        if evaluation_year is None:
            raise SchemaError("CSV datasets carry no evaluation year; pass evaluation_year")
        return _load_csv(journals_text, citations_text, strict=strict, evaluation_year=evaluation_year)
    raise SchemaError(f"unknown dataset format {format!r}; expected 'json' or 'csv'")


def _read_json_source(source: str | os.PathLike[str] | tuple[str, str]) -> str:
    if isinstance(source, tuple):
        raise SchemaError("a (journals, citations) pair is only valid with format='csv'")
    if isinstance(source, os.PathLike):
        path = Path(source)
    elif source.lstrip().startswith("{"):
        return source
    else:
        path = Path(source)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read dataset file {str(path)!r}: {exc}") from exc


def _read_csv_source(source: str | os.PathLike[str] | tuple[str, str]) -> tuple[str, str]:
    if isinstance(source, tuple):
        return source
    directory = Path(source)
    if not directory.is_dir():
        raise ParseError(f"CSV dataset source {str(directory)!r} is not a directory")
    try:
        journals_text = (directory / JOURNALS_CSV).read_text(encoding="utf-8")
        citations_text = (directory / CITATIONS_CSV).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read CSV dataset in {str(directory)!r}: {exc}") from exc
    return journals_text, citations_text


# -- JSON ------------------------------------------------------------------- #


def _load_json(text: str, *, strict: bool, evaluation_year: int | None) -> Dataset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")

    year = evaluation_year if evaluation_year is not None else doc.get("evaluation_year")
    if not isinstance(year, int) or isinstance(year, bool):
        raise SchemaError("evaluation_year must be an integer")

    journals_doc = doc.get("journals", [])
    citations_doc = doc.get("citations", [])
    totals_doc = doc.get("declared_totals", {})
    if not isinstance(journals_doc, list):
        raise SchemaError("'journals' must be an array")
    if not isinstance(citations_doc, list):
        raise SchemaError("'citations' must be an array")
    if not isinstance(totals_doc, dict):
        raise SchemaError("'declared_totals' must be an object")

    journals = [_journal_from_obj(obj, index) for index, obj in enumerate(journals_doc)]
    batches = _merge_batches(
        (_batch_from_obj(obj, index) for index, obj in enumerate(citations_doc)),
        strict=strict,
    )
    totals = {}
    for jid, value in totals_doc.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise SchemaError(f"declared_totals[{jid!r}] must be an integer")
        totals[jid] = value
    return Dataset(evaluation_year=year, journals=tuple(journals),
                   citations=batches, declared_totals=totals)


def _journal_from_obj(obj: Any, index: int) -> Journal:
    where = f"journals[{index}]"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object")
    jid = obj.get("id")
    if not isinstance(jid, str) or not jid:
        raise SchemaError(f"{where}.id must be a non-empty string")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise SchemaError(f"{where}.name must be a string")
    discipline = obj.get("discipline")
    if discipline is not None and not isinstance(discipline, str):
        raise SchemaError(f"{where}.discipline must be a string")
    return Journal(
        id=jid,
        name=name,
        articles_by_year=_int_year_map(obj.get("articles_by_year", {}), f"{where}.articles_by_year"),
        two_year_if_by_year=_float_year_map(obj.get("two_year_if", {}), f"{where}.two_year_if"),
        five_year_if_by_year=_float_year_map(obj.get("five_year_if", {}), f"{where}.five_year_if"),
        discipline=discipline,
    )


def _batch_from_obj(obj: Any, index: int) -> CitationBatch:
    where = f"citations[{index}]"
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object")
    missing = [key for key in ("citing", "cited", "year", "count") if key not in obj]
    if missing:
        raise SchemaError(f"{where} is missing required field(s) {missing}")
    citing, cited, year, count = obj["citing"], obj["cited"], obj["year"], obj["count"]
    if not isinstance(citing, str) or not citing:
        raise SchemaError(f"{where}.citing must be a journal id or {UNINDEXED!r}")
    if not isinstance(cited, str) or not cited:
        raise SchemaError(f"{where}.cited must be a non-empty journal id")
    if not isinstance(year, int) or isinstance(year, bool):
        raise SchemaError(f"{where}.year must be an integer")
    if not isinstance(count, int) or isinstance(count, bool):
        raise SchemaError(f"{where}.count must be an integer")
    return CitationBatch(citing=citing, cited=cited, year=year, count=count)


def _int_year_map(obj: Any, where: str) -> dict[int, int]:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object of year -> count")
    out: dict[int, int] = {}
    for key, value in obj.items():
        year = _year_key(key, where)
        if not isinstance(value, int) or isinstance(value, bool):
            raise SchemaError(f"{where}[{key!r}] must be an integer")
        out[year] = value
    return out


def _float_year_map(obj: Any, where: str) -> dict[int, float]:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object of year -> value")
    out: dict[int, float] = {}
    for key, value in obj.items():
        year = _year_key(key, where)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"{where}[{key!r}] must be a number")
        out[year] = float(value)
    return out


def _year_key(key: Any, where: str) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise SchemaError(f"{where} has non-integer year key {key!r}") from None


# -- CSV -------------------------------------------------------------------- #


def _load_csv(journals_text: str, citations_text: str, *, strict: bool,
              evaluation_year: int) -> Dataset:
    journal_rows = _read_csv_rows(journals_text, _JOURNAL_HEADER, JOURNALS_CSV)
    citation_rows = _read_csv_rows(citations_text, _CITATION_HEADER, CITATIONS_CSV)

    order: list[str] = []
    meta: dict[str, dict[str, Any]] = {}
    totals: dict[str, int] = {}
    for line, row in journal_rows:
        jid = row["id"]
        if not jid:
            raise SchemaError(f"{JOURNALS_CSV} line {line}: empty id")
        if jid not in meta:
            order.append(jid)
            meta[jid] = {"name": "", "discipline": None,
                         "articles": {}, "two_year": {}, "five_year": {}}
        entry = meta[jid]
        for key, column in (("name", "name"), ("discipline", "discipline")):
            value = row[column]
            if value:
                if entry[key] not in (None, "", value):
                    raise SchemaError(
                        f"{JOURNALS_CSV} line {line}: conflicting {column} for journal {jid!r}"
                    )
                entry[key] = value
        if row["declared_total"]:
            total = _csv_int(row["declared_total"],
                             f"{JOURNALS_CSV} line {line}: declared_total")
            if totals.setdefault(jid, total) != total:
                raise SchemaError(
                    f"{JOURNALS_CSV} line {line}: conflicting declared_total for journal {jid!r}"
                )
        if not row["year"]:
            if row["articles"] or row["two_year_if"] or row["five_year_if"]:
                raise SchemaError(
                    f"{JOURNALS_CSV} line {line}: values present but year is blank"
                )
            continue
        year = _csv_int(row["year"], f"{JOURNALS_CSV} line {line}: year")
        if row["articles"]:
            entry["articles"][year] = _csv_int(row["articles"], f"{JOURNALS_CSV} line {line}: articles")
        if row["two_year_if"]:
            entry["two_year"][year] = _csv_float(row["two_year_if"], f"{JOURNALS_CSV} line {line}: two_year_if")
        if row["five_year_if"]:
            entry["five_year"][year] = _csv_float(row["five_year_if"], f"{JOURNALS_CSV} line {line}: five_year_if")

    journals = tuple(
        Journal(
            id=jid,
            name=meta[jid]["name"],
            articles_by_year=meta[jid]["articles"],
            two_year_if_by_year=meta[jid]["two_year"],
            five_year_if_by_year=meta[jid]["five_year"],
            discipline=meta[jid]["discipline"],
        )
        for jid in order
    )

    def batches():
        for line, row in citation_rows:
            if not row["citing"] or not row["cited"]:
                raise SchemaError(f"{CITATIONS_CSV} line {line}: citing and cited are required")
            yield CitationBatch(
                citing=row["citing"],
                cited=row["cited"],
                year=_csv_int(row["year"], f"{CITATIONS_CSV} line {line}: year"),
                count=_csv_int(row["count"], f"{CITATIONS_CSV} line {line}: count"),
            )

    return Dataset(
        evaluation_year=evaluation_year,
        journals=journals,
        citations=_merge_batches(batches(), strict=strict),
        declared_totals=totals,
    )


def _read_csv_rows(text: str, expected_header: Sequence[str], label: str):
    reader = csv.reader(_io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(f"{label}: empty file") from None
    except csv.Error as exc:
        raise ParseError(f"{label}: {exc}") from exc
    if [h.strip() for h in header] != list(expected_header):
        raise SchemaError(f"{label}: header must be {','.join(expected_header)!r}")
    rows = []
    try:
        for line_number, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(expected_header):
                raise SchemaError(f"{label} line {line_number}: expected {len(expected_header)} columns")
            rows.append((line_number, dict(zip(expected_header, (cell.strip() for cell in row)))))
    except csv.Error as exc:
        raise ParseError(f"{label}: {exc}") from exc
    return rows


def _csv_int(text: str, where: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SchemaError(f"{where}: {text!r} is not an integer") from None


def _csv_float(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise SchemaError(f"{where}: {text!r} is not a number") from None


# -- duplicate handling ----------------------------------------------------- #


def _merge_batches(batches, *, strict: bool) -> tuple[CitationBatch, ...]:
    merged: dict[tuple[str, str, int], CitationBatch] = {}
    for batch in batches:
        triple = (batch.citing, batch.cited, batch.year)
        existing = merged.get(triple)
        if existing is None:
            merged[triple] = batch
        elif strict:
            raise DuplicateBatchError(f"duplicate citation triple {triple!r} in strict mode")
        else:
            merged[triple] = CitationBatch(
                citing=batch.citing, cited=batch.cited, year=batch.year,
                count=existing.count + batch.count,
            )
    return tuple(merged.values())


# --------------------------------------------------------------------------- #
# serialization
# --------------------------------------------------------------------------- #


def dataset_to_dict(ds: Dataset) -> dict[str, Any]:
    """Canonically ordered plain-dict form of ``ds`` (JSON-ready)."""
    journals = []
    for journal in sorted(ds.journals, key=lambda j: j.id):
        obj: dict[str, Any] = {"id": journal.id, "name": journal.name}
        if journal.discipline is not None:
            obj["discipline"] = journal.discipline
        if journal.articles_by_year:
            obj["articles_by_year"] = {
                str(year): journal.articles_by_year[year]
                for year in sorted(journal.articles_by_year)
            }
        if journal.two_year_if_by_year:
            obj["two_year_if"] = {
                str(year): journal.two_year_if_by_year[year]
                for year in sorted(journal.two_year_if_by_year)
            }
        if journal.five_year_if_by_year:
            obj["five_year_if"] = {
                str(year): journal.five_year_if_by_year[year]
                for year in sorted(journal.five_year_if_by_year)
            }
        journals.append(obj)
    citations = [
        {"citing": b.citing, "cited": b.cited, "year": b.year, "count": b.count}
        for b in sorted(ds.citations, key=lambda b: (b.citing, b.cited, b.year))
    ]
    doc: dict[str, Any] = {
        "evaluation_year": ds.evaluation_year,
        "journals": journals,
        "citations": citations,
    }
    if ds.declared_totals:
        doc["declared_totals"] = {
            jid: ds.declared_totals[jid] for jid in sorted(ds.declared_totals)
        }
    return doc


def serialize_dataset(ds: Dataset) -> str:
    """Canonical JSON text for ``ds``; equal datasets yield identical bytes."""
    return json.dumps(dataset_to_dict(ds), indent=2, ensure_ascii=False) + "\n"


def dataset_to_csv_texts(ds: Dataset) -> tuple[str, str]:
    """CSV projection of ``ds`` as ``(journals_text, citations_text)``."""
    journals_buffer = _io.StringIO()
    writer = csv.writer(journals_buffer, lineterminator="\n")
    writer.writerow(_JOURNAL_HEADER)
    for journal in sorted(ds.journals, key=lambda j: j.id):
        years = sorted(
            set(journal.articles_by_year)
            | set(journal.two_year_if_by_year)
            | set(journal.five_year_if_by_year)
        )
        discipline = journal.discipline or ""
        declared = ds.declared_totals.get(journal.id)
        declared_text = "" if declared is None else declared
        if not years:
            writer.writerow([journal.id, journal.name, discipline,
                             "", "", "", "", declared_text])
            continue
        for index, year in enumerate(years):
            articles = journal.articles_by_year.get(year)
            two_year = journal.two_year_if_by_year.get(year)
            five_year = journal.five_year_if_by_year.get(year)
            writer.writerow([
                journal.id,
                journal.name if index == 0 else "",
                discipline if index == 0 else "",
                year,
                "" if articles is None else articles,
                "" if two_year is None else repr(two_year),
                "" if five_year is None else repr(five_year),
                declared_text if index == 0 else "",
            ])
    citations_buffer = _io.StringIO()
    writer = csv.writer(citations_buffer, lineterminator="\n")
    writer.writerow(_CITATION_HEADER)
    for batch in sorted(ds.citations, key=lambda b: (b.citing, b.cited, b.year)):
        writer.writerow([batch.citing, batch.cited, batch.year, batch.count])
    return journals_buffer.getvalue(), citations_buffer.getvalue()


def write_dataset_csv(ds: Dataset, directory: str | os.PathLike[str]) -> tuple[Path, Path]:
    """Write the CSV projection into ``directory``; returns the two paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    journals_text, citations_text = dataset_to_csv_texts(ds)
    journals_path = directory / JOURNALS_CSV
    citations_path = directory / CITATIONS_CSV
    journals_path.write_text(journals_text, encoding="utf-8")
    citations_path.write_text(citations_text, encoding="utf-8")
    return journals_path, citations_path
