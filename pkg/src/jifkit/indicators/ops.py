"""Impact-factor indicator operations, one pure function per formula.

All dataset-based operations evaluate a journal ``j`` at the dataset's
evaluation year ``t`` using the citation batches of year ``t`` and the
two-year article window ``t-1``/``t-2`` as denominator ``A``:

* ``classic_if``       — C / A, where C is the journal's effective total
  citation count (declared total when present, batch sum otherwise).
* ``mifcj``            — sum of citing journals' two-year IFs at t-1,
  citation-count-weighted, over A.
* ``buela_casal_wif``  — mean of MIFCJ and the journal's own t-1 IF.
* ``hy_wif``           — citation counts weighted by a logistic function
  of the citing-to-cited IF quotient, over A.
* ``proposed_wif``     — citations weighted by (citing five-year IF + 1),
  over A; equals (sum FIF_i * c_i + C) / A.
* ``citing_if_mean``/``citing_if_median`` — mean/median of citing-source
  IFs (count-expanded for the median), scaled by C / A.
* ``nif`` / ``mif_reference_point`` — discipline-level normalizations.

Citing sources with no usable IF contribute per-indicator defaults (0 for
``mifcj`` and ``hy_wif`` weights computed at IF 0, +1-only weight for
``proposed_wif``) and are excluded from the mean/median; every such batch
is recorded in the result's ``skipped`` list.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from ..corpus.model import Dataset
from ..errors import (
    DomainError,
    NoEligibleCitationsError,
    ZeroDenominatorError,
)

#: Logistic-weight calibration constants.
_LOGISTIC_NUM = 0.828
_LOGISTIC_DEN = 16.183


@dataclass(frozen=True)
class WindowSpec:
    """Article window for the denominator: years t-1 .. t-span."""

    evaluation_year: int
    span: int = 2

    def __post_init__(self) -> None:
        if self.span < 1:
            raise DomainError(f"window span must be >= 1, got {self.span}")

    def years(self) -> tuple[int, ...]:
        t = self.evaluation_year
        return tuple(range(t - 1, t - self.span - 1, -1))


@dataclass(frozen=True)
class FieldAggregates:
    """Field/discipline aggregates consumed by :func:`nif`.

    ``field_citations`` (C) and ``field_articles`` (A) describe the whole
    scientific field in the evaluation year; ``discipline_citations``
    (C-hat) and ``discipline_journal_count`` (J) describe one discipline
    within it.
    """

    field_citations: float
    field_articles: int
    discipline_citations: float
    discipline_journal_count: int

    def __post_init__(self) -> None:
        for label, value in (
            ("field_citations", self.field_citations),
            ("field_articles", self.field_articles),
            ("discipline_citations", self.discipline_citations),
            ("discipline_journal_count", self.discipline_journal_count),
        ):
            if not math.isfinite(value) or value < 0:
                raise DomainError(f"{label} must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class SkippedBatch:
    """A citation batch that contributed only a default to an indicator."""

    citing: str
    count: int
    reason: str


@dataclass(frozen=True)
class IndicatorValue:
    """One computed indicator cell with provenance notes."""

    journal: str
    indicator: str
    value: float
    skipped: tuple[SkippedBatch, ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise DomainError(
                f"{self.indicator}({self.journal!r}) produced a non-finite value"
            )


# --------------------------------------------------------------------------- #
# shared helpers
# --------------------------------------------------------------------------- #


def _window_articles(ds: Dataset, jid: str, w: WindowSpec) -> int:
    journal = ds.require_journal(jid)
    articles = journal.articles_in(w.years())
    if articles == 0:
        raise ZeroDenominatorError(
            f"{jid!r}: no articles in window years {list(w.years())}"
        )
    return articles


def _citing_if(ds: Dataset, citing_id: str, field_name: str, year: int) -> float | None:
    """IF of a citing source for ``year``; None when the source has no
    record or the record lacks the field."""
    record = ds.journal(citing_id)
    if record is None:
        return None
    return record.impact_factor(field_name, year)


def _own_prev_if(ds: Dataset, jid: str) -> float:
    journal = ds.require_journal(jid)
    value = journal.impact_factor("two_year", ds.evaluation_year - 1)
    if value is None:
        raise DomainError(
            f"{jid!r} has no two-year impact factor for {ds.evaluation_year - 1}"
        )
    return value


# --------------------------------------------------------------------------- #
# classic impact factor
# --------------------------------------------------------------------------- #


def classic_if(ds: Dataset, jid: str, w: WindowSpec | None = None) -> IndicatorValue:
    """Citations in the evaluation year over articles in the window.

    The default two-year window is the classic impact factor; ``span=5``
    doubles as a five-year-IF calculator (noted in provenance).
    """
    w = w or WindowSpec(ds.evaluation_year, 2)
    articles = _window_articles(ds, jid, w)
    citations = ds.effective_total(jid, ds.evaluation_year)
    notes = () if w.span == 2 else (f"generalized window span {w.span}",)
    name = "jcr_if" if w.span == 2 else f"classic_if_span{w.span}"
    return IndicatorValue(journal=jid, indicator=name,
                          value=citations / articles, notes=notes)


# --------------------------------------------------------------------------- #
# discipline normalizations
# --------------------------------------------------------------------------- #


def nif(f: FieldAggregates) -> float:
    """Normalized impact factor: (C * J) / (A * C-hat)."""
    if f.field_articles == 0:
        raise DomainError("field_articles is zero")
    if f.discipline_citations == 0:
        raise DomainError("discipline_citations is zero")
    return (f.field_citations * f.discipline_journal_count) / (
        f.field_articles * f.discipline_citations
    )


def field_aggregates(ds: Dataset, discipline: str | None) -> FieldAggregates:
    """Build :class:`FieldAggregates` for one discipline group.

    The field is the dataset's full subject set; the discipline group is
    the subset sharing ``discipline`` (journals without a tag form the
    implicit ``None`` group).  Citation totals use each journal's
    effective total for the evaluation year; article counts use the
    evaluation year itself; the group journal count includes members that
    published articles in the evaluation year.
    """
    year = ds.evaluation_year
    field_citations = 0.0
    field_articles = 0
    discipline_citations = 0.0
    discipline_journal_count = 0
    for jid in ds.subject_ids():
        journal = ds.require_journal(jid)
        citations = ds.effective_total(jid, year)
        articles = journal.articles_by_year.get(year, 0)
        field_citations += citations
        field_articles += articles
        if journal.discipline == discipline:
            discipline_citations += citations
            if articles > 0:
                discipline_journal_count += 1
    return FieldAggregates(
        field_citations=field_citations,
        field_articles=field_articles,
        discipline_citations=discipline_citations,
        discipline_journal_count=discipline_journal_count,
    )


def mif_reference_point(group_ifs: list[tuple[str, float]]) -> list[tuple[str, float]]:
    """Scale a discipline group so its highest impact factor maps to 100."""
    if not group_ifs:
        raise DomainError("empty discipline group")
    top = max(value for _, value in group_ifs)
    if any(value < 0 or not math.isfinite(value) for _, value in group_ifs):
        raise DomainError("impact factors must be finite and >= 0")
    if top == 0:
        raise DomainError("all impact factors in the group are zero")
    return [(jid, 100.0 * value / top) for jid, value in group_ifs]


# --------------------------------------------------------------------------- #
# citing-prestige weightings
# --------------------------------------------------------------------------- #


def mifcj(ds: Dataset, jid: str) -> IndicatorValue:
    """Citation-count-weighted sum of citing journals' two-year IFs at
    t-1, over the two-year article window."""
    year = ds.evaluation_year
    articles = _window_articles(ds, jid, WindowSpec(year, 2))
    total = 0.0
    skipped: list[SkippedBatch] = []
    for batch in ds.citations_to(jid, year):
        if batch.is_unindexed:
            skipped.append(SkippedBatch(batch.citing, batch.count, "unindexed"))
            continue
        citing_if = _citing_if(ds, batch.citing, "two_year", year - 1)
        if citing_if is None:
            skipped.append(SkippedBatch(batch.citing, batch.count,
                                        "missing two_year impact factor"))
            continue
        total += citing_if * batch.count
    return IndicatorValue(journal=jid, indicator="mifcj",
                          value=total / articles, skipped=tuple(skipped))


def buela_casal_wif(mifcj_value: float, own_prev_if: float) -> float:
    """Arithmetic mean of MIFCJ and the journal's own previous-year IF."""
    for label, value in (("mifcj_value", mifcj_value), ("own_prev_if", own_prev_if)):
        if not math.isfinite(value) or value < 0:
            raise DomainError(f"{label} must be finite and >= 0, got {value!r}")
    return (mifcj_value + own_prev_if) / 2.0


def hy_quotient(citing_prev_if: float, cited_prev_if: float) -> float:
    """Quotient q of citing over cited previous-year impact factors."""
    if not math.isfinite(citing_prev_if) or citing_prev_if < 0:
        raise DomainError(f"citing_prev_if must be finite and >= 0, got {citing_prev_if!r}")
    if not math.isfinite(cited_prev_if) or cited_prev_if <= 0:
        raise DomainError(
            f"cited journal's previous-year impact factor must be > 0, got {cited_prev_if!r}"
        )
    return citing_prev_if / cited_prev_if


def hy_weight(q: float) -> float:
    """Logistic citation weight 10*(1 - 0.828*e^-q) / (1 + 16.183*e^-q).

    Strictly increasing in q, with range (0.100099..., 10).
    """
    if not math.isfinite(q) or q < 0:
        raise DomainError(f"quotient must be finite and >= 0, got {q!r}")
    decay = math.exp(-q)
    return 10.0 * (1.0 - _LOGISTIC_NUM * decay) / (1.0 + _LOGISTIC_DEN * decay)


def hy_wif(ds: Dataset, jid: str) -> IndicatorValue:
    """Citation counts weighted by the logistic quotient weight, over the
    two-year article window.  Citing sources without a usable two-year IF
    enter at IF 0 (the minimal weight) and are recorded as skipped."""
    year = ds.evaluation_year
    articles = _window_articles(ds, jid, WindowSpec(year, 2))
    own_prev = _own_prev_if(ds, jid)
    if own_prev == 0:
        raise DomainError(
            f"{jid!r} has a zero two-year impact factor for {year - 1}; "
            "the quotient weight is undefined"
        )
    total = 0.0
    skipped: list[SkippedBatch] = []
    for batch in ds.citations_to(jid, year):
        if batch.is_unindexed:
            citing_if = 0.0
            skipped.append(SkippedBatch(batch.citing, batch.count, "unindexed"))
        else:
            maybe = _citing_if(ds, batch.citing, "two_year", year - 1)
            if maybe is None:
                citing_if = 0.0
                skipped.append(SkippedBatch(batch.citing, batch.count,
                                            "missing two_year impact factor"))
            else:
                citing_if = maybe
        total += hy_weight(hy_quotient(citing_if, own_prev)) * batch.count
    return IndicatorValue(journal=jid, indicator="hy_wif",
                          value=total / articles, skipped=tuple(skipped))


def proposed_wif(ds: Dataset, jid: str) -> IndicatorValue:
    """Citations weighted by (citing five-year IF + 1) over the two-year
    article window: (sum_i FIF_i * c_i + C) / A with C the effective
    total.  Sources without a five-year IF carry FIF 0 (weight 1)."""
    year = ds.evaluation_year
    articles = _window_articles(ds, jid, WindowSpec(year, 2))
    weighted = 0.0
    skipped: list[SkippedBatch] = []
    for batch in ds.citations_to(jid, year):
        if batch.is_unindexed:
            skipped.append(SkippedBatch(batch.citing, batch.count, "unindexed"))
            continue
        fif = _citing_if(ds, batch.citing, "five_year", year - 1)
        if fif is None:
            skipped.append(SkippedBatch(batch.citing, batch.count,
                                        "missing five_year impact factor"))
            continue
        weighted += fif * batch.count
    citations = ds.effective_total(jid, year)
    return IndicatorValue(journal=jid, indicator="proposed_wif",
                          value=(weighted + citations) / articles,
                          skipped=tuple(skipped))


# --------------------------------------------------------------------------- #
# citing-IF mean / median
# --------------------------------------------------------------------------- #


def _eligible_citing(ds: Dataset, jid: str, field_name: str):
    """(IF, count) pairs for named citing sources carrying ``field_name``
    at t-1, plus the skipped-batch records for everything else."""
    year = ds.evaluation_year
    eligible: list[tuple[float, int]] = []
    skipped: list[SkippedBatch] = []
    for batch in ds.citations_to(jid, year):
        if batch.is_unindexed:
            skipped.append(SkippedBatch(batch.citing, batch.count, "unindexed"))
            continue
        value = _citing_if(ds, batch.citing, field_name, year - 1)
        if value is None:
            skipped.append(SkippedBatch(batch.citing, batch.count,
                                        f"missing {field_name} impact factor"))
            continue
        eligible.append((value, batch.count))
    return eligible, skipped


def _mean_median_name(kind: str, field_name: str) -> str:
    suffix = "2y" if field_name == "two_year" else "5y"
    return f"citing_{kind}_{suffix}"


def citing_if_mean(ds: Dataset, jid: str, field: str = "five_year") -> IndicatorValue:
    """Count-weighted mean of citing-source IFs, scaled by C / A."""
    articles = _window_articles(ds, jid, WindowSpec(ds.evaluation_year, 2))
    eligible, skipped = _eligible_citing(ds, jid, field)
    if not eligible:
        raise NoEligibleCitationsError(
            f"{jid!r}: no citing source carries the {field} impact factor"
        )
    weighted = sum(value * count for value, count in eligible)
    counts = sum(count for _, count in eligible)
    citations = ds.effective_total(jid, ds.evaluation_year)
    value = (weighted / counts) * (citations / articles)
    return IndicatorValue(journal=jid, indicator=_mean_median_name("mean", field),
                          value=value, skipped=tuple(skipped))


def citing_if_median(ds: Dataset, jid: str, field: str = "five_year") -> IndicatorValue:
    """Median of the citation-expanded citing-IF list (each source
    repeated by its citation count; even length takes the midpoint),
    scaled by C / A."""
    articles = _window_articles(ds, jid, WindowSpec(ds.evaluation_year, 2))
    eligible, skipped = _eligible_citing(ds, jid, field)
    if not eligible:
        raise NoEligibleCitationsError(
            f"{jid!r}: no citing source carries the {field} impact factor"
        )
    expanded = sorted(value for value, count in eligible for _ in range(count))
    citations = ds.effective_total(jid, ds.evaluation_year)
    value = statistics.median(expanded) * (citations / articles)
    return IndicatorValue(journal=jid, indicator=_mean_median_name("median", field),
                          value=value, skipped=tuple(skipped))
