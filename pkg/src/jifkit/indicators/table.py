"""Indicator registry and journal-by-indicator table computation.

Every indicator is registered under a stable snake_case name.  A table
cell is absent (with a reason) when the operation raises a
:class:`~jifkit.errors.ComputationError`, or when the journal has named
citing batches but none of them carries the impact-factor field the
indicator consumes — a value would then rest entirely on missing-data
defaults.  Journals cited only by UNINDEXED sources still get values for
the weighting indicators, since the UNINDEXED marker semantically carries
impact factor 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..analysis.table import IndicatorTable
from ..corpus.model import Dataset
from ..errors import ComputationError, DomainError, UnknownIndicatorError
from . import ops


@dataclass(frozen=True)
class IndicatorSpec:
    """Registry entry: display label, computing function, and the
    citing-journal IF field the indicator consumes (if any)."""

    name: str
    label: str
    fn: Callable[[Dataset, str], ops.IndicatorValue]
    citing_field: str | None = None


def _jcr_if(ds: Dataset, jid: str) -> ops.IndicatorValue:
    return ops.classic_if(ds, jid)


def _nif(ds: Dataset, jid: str) -> ops.IndicatorValue:
    journal = ds.require_journal(jid)
    value = ops.nif(ops.field_aggregates(ds, journal.discipline))
    return ops.IndicatorValue(journal=jid, indicator="nif", value=value)


def _group_prev_ifs(ds: Dataset, discipline: str | None) -> list[tuple[str, float]]:
    prev = ds.evaluation_year - 1
    pairs: list[tuple[str, float]] = []
    for member_id in ds.subject_ids():
        member = ds.require_journal(member_id)
        if member.discipline != discipline:
            continue
        member_if = member.impact_factor("two_year", prev)
        if member_if is not None:
            pairs.append((member_id, member_if))
    return pairs


def _mif(ds: Dataset, jid: str) -> ops.IndicatorValue:
    journal = ds.require_journal(jid)
    prev = ds.evaluation_year - 1
    if journal.impact_factor("two_year", prev) is None:
        raise DomainError(f"{jid!r} has no two-year impact factor for {prev}")
    scaled = dict(ops.mif_reference_point(_group_prev_ifs(ds, journal.discipline)))
    return ops.IndicatorValue(journal=jid, indicator="mif", value=scaled[jid])


def _mifcj(ds: Dataset, jid: str) -> ops.IndicatorValue:
    return ops.mifcj(ds, jid)


def _buela_casal(ds: Dataset, jid: str) -> ops.IndicatorValue:
    mifcj_value = ops.mifcj(ds, jid)
    prev = ds.evaluation_year - 1
    own = ds.require_journal(jid).impact_factor("two_year", prev)
    if own is None:
        raise DomainError(f"{jid!r} has no two-year impact factor for {prev}")
    return ops.IndicatorValue(
        journal=jid, indicator="buela_casal_wif",
        value=ops.buela_casal_wif(mifcj_value.value, own),
        skipped=mifcj_value.skipped,
    )


def _hy(ds: Dataset, jid: str) -> ops.IndicatorValue:
    return ops.hy_wif(ds, jid)


def _proposed(ds: Dataset, jid: str) -> ops.IndicatorValue:
    return ops.proposed_wif(ds, jid)


def _mean(field: str):
    def fn(ds: Dataset, jid: str) -> ops.IndicatorValue:
        return ops.citing_if_mean(ds, jid, field)
    return fn


def _median(field: str):
    def fn(ds: Dataset, jid: str) -> ops.IndicatorValue:
        return ops.citing_if_median(ds, jid, field)
    return fn


#: All registered indicators, in canonical column order.
INDICATORS: dict[str, IndicatorSpec] = {
    spec.name: spec
    for spec in (
        IndicatorSpec("jcr_if", "JCR IF", _jcr_if),
        IndicatorSpec("nif", "NIF", _nif),
        IndicatorSpec("mif", "MIF", _mif),
        IndicatorSpec("mifcj", "MIFCJ", _mifcj, citing_field="two_year"),
        IndicatorSpec("buela_casal_wif", "WIF (Buela-Casal)", _buela_casal,
                      citing_field="two_year"),
        IndicatorSpec("hy_wif", "WIF (H&Y)", _hy, citing_field="two_year"),
        IndicatorSpec("proposed_wif", "Proposed WIF", _proposed,
                      citing_field="five_year"),
        IndicatorSpec("citing_mean_2y", "Average WIF", _mean("two_year"),
                      citing_field="two_year"),
        IndicatorSpec("citing_median_2y", "Median WIF", _median("two_year"),
                      citing_field="two_year"),
        IndicatorSpec("citing_mean_5y", "Average 5WIF", _mean("five_year"),
                      citing_field="five_year"),
        IndicatorSpec("citing_median_5y", "Median 5WIF", _median("five_year"),
                      citing_field="five_year"),
    )
}


def indicator_names() -> tuple[str, ...]:
    return tuple(INDICATORS)


def resolve_indicators(names: Sequence[str] | None) -> tuple[IndicatorSpec, ...]:
    """Map names to registry entries; ``None`` means all, in canonical
    order."""
    if names is None:
        return tuple(INDICATORS.values())
    specs = []
    for name in names:
        spec = INDICATORS.get(name)
        if spec is None:
            raise UnknownIndicatorError(
                f"unknown indicator {name!r}; registered: {', '.join(INDICATORS)}"
            )
        specs.append(spec)
    return tuple(specs)


def _field_carrier_stats(ds: Dataset, jid: str, field: str) -> tuple[int, int]:
    """(named batches, named batches whose source carries ``field`` at
    t-1) for the journal's evaluation-year citations."""
    prev = ds.evaluation_year - 1
    named = carriers = 0
    for batch in ds.citations_to(jid, ds.evaluation_year):
        if batch.is_unindexed:
            continue
        named += 1
        record = ds.journal(batch.citing)
        if record is not None and record.impact_factor(field, prev) is not None:
            carriers += 1
    return named, carriers


def compute_table(ds: Dataset, indicators: Sequence[str] | None = None) -> IndicatorTable:
    """Compute the journal-by-indicator table over the dataset's subject
    journals.  Per-cell failures degrade to absent markers with reasons;
    row order follows the dataset, column order the request."""
    specs = resolve_indicators(indicators)
    journals = ds.subject_ids()
    reasons: dict[tuple[str, str], str] = {}
    rows: list[tuple[float | None, ...]] = []
    for jid in journals:
        row: list[float | None] = []
        for spec in specs:
            if spec.citing_field is not None:
                named, carriers = _field_carrier_stats(ds, jid, spec.citing_field)
                if named > 0 and carriers == 0:
                    row.append(None)
                    reasons[(jid, spec.name)] = (
                        f"no citing source carries the {spec.citing_field} "
                        f"impact factor for {ds.evaluation_year - 1}"
                    )
                    continue
            try:
                row.append(spec.fn(ds, jid).value)
            except ComputationError as exc:
                row.append(None)
                reasons[(jid, spec.name)] = str(exc)
        rows.append(tuple(row))
    return IndicatorTable(
        journals=journals,
        indicators=tuple(spec.name for spec in specs),
        values=tuple(rows),
        reasons=reasons,
    )
