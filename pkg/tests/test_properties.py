"""Algebraic invariants (property-based) and randomized equivalence
against independently coded naive oracles."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jifkit.analysis.correlation import pearson
from jifkit.analysis.ranking import rank_column
from jifkit.corpus.model import UNINDEXED, CitationBatch, Dataset, Journal
from jifkit.errors import ComputationError
from jifkit.indicators.ops import (
    citing_if_mean,
    citing_if_median,
    classic_if,
    hy_weight,
    hy_wif,
    mifcj,
    proposed_wif,
)

YEAR = 2013


# --------------------------------------------------------------------------- #
# random dataset construction
# --------------------------------------------------------------------------- #


def random_dataset(rng: random.Random, *, max_journals: int = 5,
                   max_batches: int = 10, declared: bool = False) -> Dataset:
    count = rng.randint(1, max_journals)
    ids = [f"j{i}" for i in range(count)]
    journals = []
    for jid in ids:
        articles = {}
        if rng.random() < 0.85:
            articles[YEAR - 1] = rng.randint(0, 6)
        if rng.random() < 0.6:
            articles[YEAR - 2] = rng.randint(0, 6)
        two = {YEAR - 1: round(rng.uniform(0.001, 5), 3)} if rng.random() < 0.75 else {}
        five = {YEAR - 1: round(rng.uniform(0, 8), 3)} if rng.random() < 0.75 else {}
        journals.append(Journal(id=jid, articles_by_year=articles,
                                two_year_if_by_year=two,
                                five_year_if_by_year=five))
    batches = []
    seen = set()
    sources = ids + [UNINDEXED, "dangling"]
    for _ in range(rng.randint(0, max_batches)):
        citing = rng.choice(sources)
        cited = rng.choice(ids)
        if (citing, cited) in seen:
            continue
        seen.add((citing, cited))
        batches.append(CitationBatch(citing=citing, cited=cited, year=YEAR,
                                     count=rng.randint(1, 9)))
    totals = {}
    if declared:
        for jid in ids:
            if rng.random() < 0.5:
                listed = sum(b.count for b in batches if b.cited == jid)
                totals[jid] = max(0, listed + rng.randint(-2, 4))
    return Dataset(evaluation_year=YEAR, journals=tuple(journals),
                   citations=tuple(batches), declared_totals=totals)


def scale_counts(ds: Dataset, k: int) -> Dataset:
    return Dataset(
        evaluation_year=ds.evaluation_year,
        journals=ds.journals,
        citations=tuple(
            CitationBatch(citing=b.citing, cited=b.cited, year=b.year,
                          count=b.count * k)
            for b in ds.citations
        ),
        declared_totals=ds.declared_totals,
    )


def window_articles(ds: Dataset, jid: str) -> int:
    journal = ds.journal(jid)
    return sum(journal.articles_by_year.get(y, 0) for y in (YEAR - 1, YEAR - 2))


# --------------------------------------------------------------------------- #
# scaling and dominance
# --------------------------------------------------------------------------- #


class TestScaling:
    def test_count_scaling_is_homogeneous(self):
        rng = random.Random(101)
        checked = 0
        for _ in range(120):
            ds = random_dataset(rng)
            k = rng.randint(2, 5)
            scaled = scale_counts(ds, k)
            for jid in ds.subject_ids():
                if window_articles(ds, jid) == 0:
                    continue
                for op in (classic_if, mifcj, proposed_wif):
                    base = op(ds, jid).value
                    assert op(scaled, jid).value == pytest.approx(
                        k * base, rel=1e-12, abs=1e-12)
                    checked += 1
                if ds.journal(jid).impact_factor("two_year", YEAR - 1):
                    base = hy_wif(ds, jid).value
                    assert hy_wif(scaled, jid).value == pytest.approx(
                        k * base, rel=1e-12, abs=1e-12)
                    checked += 1
        assert checked > 200

    def test_mean_median_normalized_form_is_scale_invariant(self):
        # With C the listed batch sum, value * A / C (the bare citing-IF
        # mean or median) does not change when counts are scaled.
        rng = random.Random(202)
        checked = 0
        for _ in range(120):
            ds = random_dataset(rng)
            k = rng.randint(2, 5)
            scaled = scale_counts(ds, k)
            for jid in ds.subject_ids():
                articles = window_articles(ds, jid)
                total = ds.effective_total(jid, YEAR)
                if articles == 0 or total == 0:
                    continue
                for op in (citing_if_mean, citing_if_median):
                    try:
                        base = op(ds, jid)
                    except ComputationError:
                        continue
                    normalized = base.value * articles / total
                    scaled_value = op(scaled, jid).value
                    scaled_normalized = scaled_value * articles / (k * total)
                    assert scaled_normalized == pytest.approx(
                        normalized, rel=1e-12, abs=1e-12)
                    checked += 1
        assert checked > 100

    def test_proposed_dominates_classic(self):
        rng = random.Random(303)
        checked = 0
        for _ in range(150):
            ds = random_dataset(rng)
            for jid in ds.subject_ids():
                if window_articles(ds, jid) == 0:
                    continue
                proposed = proposed_wif(ds, jid)
                classic = classic_if(ds, jid)
                assert proposed.value >= classic.value - 1e-12
                fifs = [
                    ds.journal(b.citing).impact_factor("five_year", YEAR - 1)
                    for b in ds.citations_to(jid, YEAR)
                    if not b.is_unindexed and ds.journal(b.citing) is not None
                ]
                if all(not f for f in fifs):
                    assert proposed.value == pytest.approx(classic.value, rel=1e-12)
                checked += 1
        assert checked > 100


# --------------------------------------------------------------------------- #
# weight function shape
# --------------------------------------------------------------------------- #


class TestWeightShape:
    @given(st.tuples(
        st.floats(min_value=0, max_value=20, allow_nan=False),
        st.floats(min_value=1e-3, max_value=30, allow_nan=False),
    ))
    @settings(max_examples=60, deadline=None)
    def test_strictly_increasing(self, pair):
        low, delta = pair
        assert hy_weight(low) < hy_weight(low + delta)

    def test_bounds(self):
        # The ceiling of 10 is approached asymptotically; in floating point
        # it is reached exactly once exp(-q) falls below machine epsilon.
        for q in (0, 1e-9, 1, 8, 700):
            assert 0.1 < hy_weight(q) <= 10
        for q in (0, 1e-9, 1, 8, 30):
            assert hy_weight(q) < 10


# --------------------------------------------------------------------------- #
# order invariances
# --------------------------------------------------------------------------- #


class TestOrderInvariance:
    def test_batch_order_does_not_matter(self):
        # Construction canonicalizes per-journal batch order, so every
        # indicator is bitwise identical across input permutations.
        rng = random.Random(404)
        checked = 0
        for _ in range(60):
            ds = random_dataset(rng)
            shuffled_batches = list(ds.citations)
            rng.shuffle(shuffled_batches)
            shuffled = Dataset(
                evaluation_year=ds.evaluation_year,
                journals=ds.journals,
                citations=tuple(shuffled_batches),
                declared_totals=ds.declared_totals,
            )
            for jid in ds.subject_ids():
                for op in (classic_if, mifcj, hy_wif, proposed_wif,
                           citing_if_mean, citing_if_median):
                    try:
                        base = op(ds, jid).value
                    except ComputationError as exc:
                        with pytest.raises(type(exc)):
                            op(shuffled, jid)
                        continue
                    assert op(shuffled, jid).value == base
                    checked += 1
        assert checked > 100

    @given(st.lists(
        st.tuples(st.integers(-10000, 10000).map(lambda i: i / 100.0),
                  st.integers(-10000, 10000).map(lambda i: i / 100.0)),
        min_size=3, max_size=12,
    ))
    @settings(max_examples=60, deadline=None)
    def test_pearson_symmetry(self, pairs):
        x = [a for a, _ in pairs]
        y = [b for _, b in pairs]
        if len(set(x)) < 2 or len(set(y)) < 2:
            return
        assert pearson(x, y) == pytest.approx(pearson(y, x), rel=1e-9, abs=1e-9)

    @given(st.lists(st.integers(-1000, 1000), min_size=2, max_size=10,
                    unique=True),
           st.sampled_from([0.25, 0.5, 1.0, 2.0, 4.0]),
           st.integers(-100, 100))
    @settings(max_examples=60, deadline=None)
    def test_rank_affine_invariance(self, values, scale, shift):
        # Power-of-two scales and integer shifts keep the transform exact,
        # so the ordering cannot be disturbed by rounding.
        pairs = [(f"j{i}", float(v)) for i, v in enumerate(values)]
        transformed = [(jid, scale * v + shift) for jid, v in pairs]
        assert rank_column(pairs).entries == rank_column(transformed).entries


# --------------------------------------------------------------------------- #
# sandwich bound
# --------------------------------------------------------------------------- #


class TestSandwich:
    def test_mean_median_lie_between_extreme_citing_ifs(self):
        rng = random.Random(505)
        checked = 0
        for _ in range(150):
            ds = random_dataset(rng)
            for jid in ds.subject_ids():
                articles = window_articles(ds, jid)
                total = ds.effective_total(jid, YEAR)
                if articles == 0 or total == 0:
                    continue
                eligible = [
                    ds.journal(b.citing).impact_factor("five_year", YEAR - 1)
                    for b in ds.citations_to(jid, YEAR)
                    if not b.is_unindexed and ds.journal(b.citing) is not None
                ]
                eligible = [v for v in eligible if v is not None]
                if not eligible:
                    continue
                for op in (citing_if_mean, citing_if_median):
                    normalized = op(ds, jid).value * articles / total
                    assert min(eligible) - 1e-12 <= normalized <= max(eligible) + 1e-12
                checked += 1
        assert checked > 80


# --------------------------------------------------------------------------- #
# reduction to the classic ratio
# --------------------------------------------------------------------------- #


class TestReduction:
    def test_zeroing_fifs_reduces_proposed_to_classic(self):
        # 200 random datasets; forcing every citing five-year IF to zero
        # collapses the weighting to the plain citation ratio.
        rng = random.Random(606)
        checked = 0
        for _ in range(200):
            ds = random_dataset(rng, declared=False)
            zeroed = Dataset(
                evaluation_year=ds.evaluation_year,
                journals=tuple(
                    Journal(id=j.id, name=j.name,
                            articles_by_year=j.articles_by_year,
                            two_year_if_by_year=j.two_year_if_by_year,
                            five_year_if_by_year={
                                y: 0.0 for y in j.five_year_if_by_year},
                            discipline=j.discipline)
                    for j in ds.journals
                ),
                citations=ds.citations,
                declared_totals=ds.declared_totals,
            )
            for jid in ds.subject_ids():
                if window_articles(ds, jid) == 0:
                    continue
                assert proposed_wif(zeroed, jid).value == pytest.approx(
                    classic_if(zeroed, jid).value, rel=1e-12, abs=0)
                checked += 1
        assert checked >= 200


# --------------------------------------------------------------------------- #
# naive-oracle equivalence
# --------------------------------------------------------------------------- #


def oracle_batches(ds: Dataset, jid: str):
    return [b for b in ds.citations if b.cited == jid and b.year == YEAR]


def oracle_articles(ds: Dataset, jid: str) -> int:
    journal = ds.journal(jid)
    total = 0
    for year in (YEAR - 1, YEAR - 2):
        total += journal.articles_by_year.get(year, 0)
    return total


def oracle_total(ds: Dataset, jid: str) -> int:
    if jid in ds.declared_totals:
        return ds.declared_totals[jid]
    return sum(b.count for b in oracle_batches(ds, jid))


def oracle_citing_if(ds: Dataset, citing: str, field: str):
    if citing == UNINDEXED:
        return None
    journal = ds.journal(citing)
    if journal is None:
        return None
    mapping = (journal.two_year_if_by_year if field == "two_year"
               else journal.five_year_if_by_year)
    return mapping.get(YEAR - 1)


def oracle_classic(ds, jid):
    return oracle_total(ds, jid) / oracle_articles(ds, jid)


def oracle_mifcj(ds, jid):
    total = 0.0
    for b in oracle_batches(ds, jid):
        value = oracle_citing_if(ds, b.citing, "two_year")
        if value is not None:
            total += value * b.count
    return total / oracle_articles(ds, jid)


def oracle_hy(ds, jid):
    import math

    own = (ds.journal(jid).two_year_if_by_year or {}).get(YEAR - 1)
    if not own:
        return None
    total = 0.0
    for b in oracle_batches(ds, jid):
        citing = oracle_citing_if(ds, b.citing, "two_year") or 0.0
        q = citing / own
        e = math.exp(-q)
        total += (10 * (1 - 0.828 * e) / (1 + 16.183 * e)) * b.count
    return total / oracle_articles(ds, jid)


def oracle_proposed(ds, jid):
    weighted = 0.0
    for b in oracle_batches(ds, jid):
        value = oracle_citing_if(ds, b.citing, "five_year")
        if value is not None:
            weighted += value * b.count
    return (weighted + oracle_total(ds, jid)) / oracle_articles(ds, jid)


def oracle_mean(ds, jid, field):
    values = []
    for b in oracle_batches(ds, jid):
        value = oracle_citing_if(ds, b.citing, field)
        if value is not None:
            values.extend([value] * b.count)
    if not values:
        return None
    mean = sum(values) / len(values)
    return mean * oracle_total(ds, jid) / oracle_articles(ds, jid)


def oracle_median(ds, jid, field):
    values = []
    for b in oracle_batches(ds, jid):
        value = oracle_citing_if(ds, b.citing, field)
        if value is not None:
            values.extend([value] * b.count)
    if not values:
        return None
    values.sort()
    middle = len(values) // 2
    if len(values) % 2:
        median = values[middle]
    else:
        median = (values[middle - 1] + values[middle]) / 2
    return median * oracle_total(ds, jid) / oracle_articles(ds, jid)


class TestOracleEquivalence:
    def test_all_indicators_match_naive_oracles(self):
        rng = random.Random(707)
        pairs = [
            (classic_if, oracle_classic),
            (mifcj, oracle_mifcj),
            (hy_wif, oracle_hy),
            (proposed_wif, oracle_proposed),
            (lambda d, j: citing_if_mean(d, j, "two_year"),
             lambda d, j: oracle_mean(d, j, "two_year")),
            (lambda d, j: citing_if_mean(d, j, "five_year"),
             lambda d, j: oracle_mean(d, j, "five_year")),
            (lambda d, j: citing_if_median(d, j, "two_year"),
             lambda d, j: oracle_median(d, j, "two_year")),
            (lambda d, j: citing_if_median(d, j, "five_year"),
             lambda d, j: oracle_median(d, j, "five_year")),
        ]
        compared = 0
        for _ in range(500):
            ds = random_dataset(rng, declared=True)
            for jid in ds.subject_ids():
                articles = oracle_articles(ds, jid)
                for op, oracle in pairs:
                    try:
                        ours = op(ds, jid).value
                    except ComputationError:
                        # The oracle must agree the cell is incomputable.
                        assert articles == 0 or oracle(ds, jid) is None
                        continue
                    assert articles > 0
                    expected = oracle(ds, jid)
                    assert expected is not None
                    assert ours == pytest.approx(expected, rel=1e-12, abs=1e-12)
                    compared += 1
        assert compared > 2000
