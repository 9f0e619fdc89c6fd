"""Internal-consistency validation of datasets.

Validation never throws and never mutates: it reports, per subject
journal, declared-vs-itemized citation totals, zero-article windows, and
citing sources lacking the impact-factor field a requested indicator
consumes.  The overall severity is ``"errors"`` when any journal has a
zero two-year article window, ``"warnings"`` when itemized citation counts
exceed a declared total or required IF fields are missing, and
``"clean"`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..errors import UnknownIndicatorError
from .model import IF_FIELDS, Dataset

SEVERITY_CLEAN = "clean"
SEVERITY_WARNINGS = "warnings"
SEVERITY_ERRORS = "errors"


@dataclass(frozen=True)
class JournalCheck:
    """Validation findings for one subject journal."""

    journal: str
    declared_total: int | None
    batch_total: int
    surplus: int
    window_articles: int
    missing_if: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()
    errors: tuple[str, ...] = ()


@dataclass(frozen=True)
class ConsistencyReport:
    """Deterministic validation report for one dataset."""

    evaluation_year: int
    severity: str
    journals: tuple[JournalCheck, ...]

    @property
    def warnings(self) -> tuple[str, ...]:
        return tuple(w for check in self.journals for w in check.warnings)

    @property
    def errors(self) -> tuple[str, ...]:
        return tuple(e for check in self.journals for e in check.errors)


def _normalize_required_fields(required: Iterable[str]) -> tuple[str, ...]:
    """Accept impact-factor field names directly, or registered indicator
    names (mapped to the citing-journal field they consume)."""
    fields: list[str] = []
    unresolved: list[str] = []
    for item in required:
        if item in IF_FIELDS:
            if item not in fields:
                fields.append(item)
        else:
            unresolved.append(item)
    if unresolved:
        from ..indicators.table import INDICATORS  # deferred: avoids an import cycle

        for name in unresolved:
            spec = INDICATORS.get(name)
            if spec is None:
                raise UnknownIndicatorError(
                    f"unknown indicator or impact-factor field {name!r}"
                )
            if spec.citing_field and spec.citing_field not in fields:
                fields.append(spec.citing_field)
    return tuple(sorted(fields))


def validate(ds: Dataset, required_fields: Iterable[str] = ()) -> ConsistencyReport:
    """Check ``ds`` for internal consistency.

    ``required_fields`` may name impact-factor fields (``two_year``,
    ``five_year``) or registered indicators; each adds a check that every
    named citing source of every subject journal carries that field for
    the year before the evaluation year.
    """
    fields = _normalize_required_fields(required_fields)
    year = ds.evaluation_year
    prev = year - 1
    checks: list[JournalCheck] = []

    for jid in ds.subject_ids():
        journal = ds.require_journal(jid)
        warnings: list[str] = []
        errors: list[str] = []

        declared = ds.declared_total(jid)
        batch_total = ds.batch_total(jid, year)
        surplus = max(0, batch_total - declared) if declared is not None else 0
        if surplus > 0:
            warnings.append(
                f"{jid}: itemized citation counts sum to {batch_total}, "
                f"exceeding the declared total {declared} (surplus {surplus})"
            )

        window_articles = journal.articles_in((year - 1, year - 2))
        if window_articles == 0:
            errors.append(
                f"{jid}: zero denominator — no articles in the two-year window "
                f"{year - 2}-{year - 1}"
            )

        missing: dict[str, tuple[str, ...]] = {}
        for field_name in fields:
            lacking = []
            for batch in ds.citations_to(jid, year):
                if batch.is_unindexed:
                    continue
                record = ds.journal(batch.citing)
                if record is None or record.impact_factor(field_name, prev) is None:
                    lacking.append(batch.citing)
            if lacking:
                missing[field_name] = tuple(lacking)
                warnings.append(
                    f"{jid}: {len(lacking)} citing source(s) lack the "
                    f"{field_name} impact factor for {prev}"
                )

        checks.append(JournalCheck(
            journal=jid,
            declared_total=declared,
            batch_total=batch_total,
            surplus=surplus,
            window_articles=window_articles,
            missing_if=missing,
            warnings=tuple(warnings),
            errors=tuple(errors),
        ))

    if any(check.errors for check in checks):
        severity = SEVERITY_ERRORS
    elif any(check.warnings for check in checks):
        severity = SEVERITY_WARNINGS
    else:
        severity = SEVERITY_CLEAN
    return ConsistencyReport(evaluation_year=year, severity=severity, journals=tuple(checks))
