"""Citation data model: journals, citation batches, and immutable datasets.

A :class:`Dataset` aggregates journal records and journal-to-journal
citation batches for one evaluation year.  Citations whose source has no
indexed record of its own are represented with the distinguished citing
marker :data:`UNINDEXED`; weighting formulas treat such sources as having
impact factor 0 on every field.

Journals may carry a declared total citation count that disagrees with the
sum of itemized batches (real-world extraction artifacts).  Indicators that
need a journal's total citation count use the declared figure when present
and the batch sum otherwise; :meth:`Dataset.effective_total` implements
that rule in one place.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..errors import IntegrityError, UnknownJournalError

#: Distinguished citing-journal marker for citations whose source is not
#: indexed; carries implicit two-year and five-year impact factors of 0.
UNINDEXED = "UNINDEXED"

#: Field keys accepted wherever an impact-factor kind must be named.
IF_FIELDS = ("two_year", "five_year")


def _check_year_count_map(label: str, mapping: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for year, count in mapping.items():
        if not isinstance(year, int) or isinstance(year, bool):
            raise IntegrityError(f"{label}: year {year!r} is not an integer")
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise IntegrityError(f"{label}: count {count!r} for year {year} must be an integer >= 0")
        out[year] = count
    return out


def _check_year_if_map(label: str, mapping: Mapping[int, float]) -> dict[int, float]:
    out: dict[int, float] = {}
    for year, value in mapping.items():
        if not isinstance(year, int) or isinstance(year, bool):
            raise IntegrityError(f"{label}: year {year!r} is not an integer")
        value = float(value)
        if not math.isfinite(value) or value < 0:
            raise IntegrityError(f"{label}: impact factor {value!r} for year {year} must be finite and >= 0")
        out[year] = value
    return out


@dataclass(frozen=True)
class Journal:
    """One journal: identity plus per-year article counts and IF history.

    ``articles_by_year`` holds published-article counts; the two IF maps
    hold the journal's own two-year and five-year impact factors keyed by
    year.  ``discipline`` is an optional grouping tag used by the
    normalization indicators.  Records used only as citation sources may
    carry nothing but the IF field a weighting formula consumes.
    """

    id: str
    name: str = ""
    articles_by_year: Mapping[int, int] = field(default_factory=dict)
    two_year_if_by_year: Mapping[int, float] = field(default_factory=dict)
    five_year_if_by_year: Mapping[int, float] = field(default_factory=dict)
    discipline: str | None = None

    def __post_init__(self) -> None:
        if not self.id or not isinstance(self.id, str):
            raise IntegrityError(f"journal id must be a non-empty string, got {self.id!r}")
        if self.id == UNINDEXED:
            raise IntegrityError(f"journal id may not be the reserved marker {UNINDEXED!r}")
        object.__setattr__(self, "name", self.name or self.id)
        object.__setattr__(
            self, "articles_by_year",
            _check_year_count_map(f"journal {self.id!r} articles", self.articles_by_year),
        )
        object.__setattr__(
            self, "two_year_if_by_year",
            _check_year_if_map(f"journal {self.id!r} two-year IF", self.two_year_if_by_year),
        )
        object.__setattr__(
            self, "five_year_if_by_year",
            _check_year_if_map(f"journal {self.id!r} five-year IF", self.five_year_if_by_year),
        )

    def impact_factor(self, field_name: str, year: int) -> float | None:
        """Return the journal's ``two_year``/``five_year`` IF for ``year``,
        or ``None`` when the record does not carry it."""
        if field_name == "two_year":
            return self.two_year_if_by_year.get(year)
        if field_name == "five_year":
            return self.five_year_if_by_year.get(year)
        raise ValueError(f"unknown impact-factor field {field_name!r}; expected one of {IF_FIELDS}")

    def articles_in(self, years: Iterable[int]) -> int:
        """Total articles published over ``years`` (missing years count 0)."""
        return sum(self.articles_by_year.get(y, 0) for y in years)


@dataclass(frozen=True)
class CitationBatch:
    """Aggregated citation edge: ``count`` citations in ``year`` from
    ``citing`` (a journal id or :data:`UNINDEXED`) to ``cited``."""

    citing: str
    cited: str
    year: int
    count: int

    def __post_init__(self) -> None:
        if not self.citing or not isinstance(self.citing, str):
            raise IntegrityError(f"citing must be a journal id or {UNINDEXED!r}, got {self.citing!r}")
        if not self.cited or not isinstance(self.cited, str):
            raise IntegrityError(f"cited must be a non-empty journal id, got {self.cited!r}")
        if self.cited == UNINDEXED:
            raise IntegrityError(f"cited may not be the reserved marker {UNINDEXED!r}")
        if not isinstance(self.year, int) or isinstance(self.year, bool):
            raise IntegrityError(f"batch year {self.year!r} must be an integer")
        if not isinstance(self.count, int) or isinstance(self.count, bool) or self.count < 1:
            raise IntegrityError(f"batch count {self.count!r} must be an integer >= 1")

    @property
    def is_unindexed(self) -> bool:
        return self.citing == UNINDEXED


@dataclass(frozen=True)
class Dataset:
    """Immutable, validated collection of journals and citation batches.

    Invariants enforced at construction:

    * journal ids are unique;
    * every ``cited`` id resolves to a journal record;
    * at most one batch per (citing, cited, year) triple — loaders merge
      or reject duplicates before construction, per load mode.

    ``citing`` ids need not resolve: a dangling citing id behaves like a
    journal that carries no impact-factor fields (missing-data semantics,
    surfaced by the consistency validator).
    """

    evaluation_year: int
    journals: tuple[Journal, ...] = ()
    citations: tuple[CitationBatch, ...] = ()
    declared_totals: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "journals", tuple(self.journals))
        object.__setattr__(self, "citations", tuple(self.citations))
        if not isinstance(self.evaluation_year, int) or isinstance(self.evaluation_year, bool):
            raise IntegrityError(f"evaluation_year {self.evaluation_year!r} must be an integer")

        by_id: dict[str, Journal] = {}
        for journal in self.journals:
            if journal.id in by_id:
                raise IntegrityError(f"duplicate journal id {journal.id!r}")
            by_id[journal.id] = journal

        totals: dict[str, int] = {}
        for jid, total in self.declared_totals.items():
            if jid not in by_id:
                raise IntegrityError(f"declared total for unknown journal {jid!r}")
            if not isinstance(total, int) or isinstance(total, bool) or total < 0:
                raise IntegrityError(f"declared total {total!r} for {jid!r} must be an integer >= 0")
            totals[jid] = total

        incoming: dict[str, list[CitationBatch]] = {}
        seen_triples: set[tuple[str, str, int]] = set()
        for batch in self.citations:
            if batch.cited not in by_id:
                raise IntegrityError(
                    f"citation references unknown cited journal {batch.cited!r}"
                )
            triple = (batch.citing, batch.cited, batch.year)
            if triple in seen_triples:
                raise IntegrityError(f"duplicate citation triple {triple!r}")
            seen_triples.add(triple)
            incoming.setdefault(batch.cited, []).append(batch)

        object.__setattr__(self, "declared_totals", totals)
        object.__setattr__(self, "_by_id", by_id)
        # Canonical per-journal batch order makes every indicator's
        # accumulation independent of input order (bitwise, not just
        # mathematically).
        object.__setattr__(
            self,
            "_incoming",
            {k: tuple(sorted(v, key=lambda b: (b.year, b.citing)))
             for k, v in incoming.items()},
        )

    # -- lookups ----------------------------------------------------------- #

    def journal(self, jid: str) -> Journal | None:
        """Journal record for ``jid``, or ``None`` (also for dangling ids)."""
        return self._by_id.get(jid)  # type: ignore[attr-defined]

    def require_journal(self, jid: str) -> Journal:
        journal = self.journal(jid)
        if journal is None:
            raise UnknownJournalError(f"no journal with id {jid!r} in dataset")
        return journal

    def citations_to(self, jid: str, year: int | None = None) -> tuple[CitationBatch, ...]:
        """Batches citing ``jid``, optionally restricted to one year, in
        canonical (year, citing id) order."""
        batches: tuple[CitationBatch, ...] = self._incoming.get(jid, ())  # type: ignore[attr-defined]
        if year is None:
            return batches
        return tuple(b for b in batches if b.year == year)

    # -- totals ------------------------------------------------------------ #

    def batch_total(self, jid: str, year: int | None = None) -> int:
        """Sum of itemized citation counts to ``jid`` (all sources,
        including :data:`UNINDEXED`)."""
        return sum(b.count for b in self.citations_to(jid, year))

    def listed_total(self, jid: str, year: int | None = None) -> int:
        """Sum of citation counts to ``jid`` from named (non-UNINDEXED)
        sources."""
        return sum(b.count for b in self.citations_to(jid, year) if not b.is_unindexed)

    def declared_total(self, jid: str) -> int | None:
        return self.declared_totals.get(jid)

    def effective_total(self, jid: str, year: int | None = None) -> int:
        """Total citation count C used by indicators: the declared total
        when present, otherwise the itemized batch sum."""
        declared = self.declared_total(jid)
        if declared is not None:
            return declared
        return self.batch_total(jid, year)

    # -- row selection ----------------------------------------------------- #

    def subject_ids(self) -> tuple[str, ...]:
        """Ids of journals that are evaluation subjects: they published
        articles in some recorded year or received citations in the
        evaluation year.  Thin records serving only as citation sources are
        excluded.  Order follows the dataset's journal order."""
        out = []
        for journal in self.journals:
            if journal.articles_by_year or self.citations_to(journal.id, self.evaluation_year):
                out.append(journal.id)
        return tuple(out)
