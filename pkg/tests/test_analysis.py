"""Ranking, Pearson correlation, scatter export, table round-trips, and
the reference-table self-consistency checks."""

from __future__ import annotations

import numpy

import pytest

from conftest import FODM, NC, SI
from jifkit.analysis.correlation import CorrelationMatrix, pearson, pearson_matrix
from jifkit.analysis.published import (
    PUBLISHED_COLUMNS,
    builtin_table,
    published_correlations,
    published_table,
)
from jifkit.analysis.ranking import rank_column, recompute_table_ranks
from jifkit.analysis.scatter import points_to_csv, points_to_svg, scatter_export
from jifkit.analysis.table import (
    IndicatorTable,
    format_sig,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json_dict,
)
from jifkit.errors import (
    AnalysisError,
    DegenerateColumnError,
    EmptyColumnError,
    LengthMismatchError,
    SchemaError,
    UnknownIndicatorError,
)

JAISE = "Journal of Ambient Intelligence and Smart Environments"
IJAMCS = "International Journal of Applied Mathematics and Computer Science"
TOSN = "ACM Transactions on Sensor Networks"
TDSC = "IEEE Transactions on Dependable and Secure Computing"


def simple_table():
    return IndicatorTable(
        journals=("a", "b", "c"),
        indicators=("p", "q"),
        values=((3.0, None), (1.0, 2.0), (2.0, 4.0)),
    )


# --------------------------------------------------------------------------- #
# ranking
# --------------------------------------------------------------------------- #


class TestRankColumn:
    def test_reference_proposed_column(self, printed_table):
        ranked = rank_column(list(printed_table.column("proposed_wif")))
        assert ranked.rank_of(NC) == 1
        assert ranked.rank_of(JAISE) == 20

    def test_ties_break_by_id_and_are_reported(self):
        ranked = rank_column([("b", 1.0), ("a", 1.0)])
        assert ranked.rank_of("a") == 1 and ranked.rank_of("b") == 2
        assert ranked.ties == (("a", "b"),)

    def test_singleton(self):
        ranked = rank_column([("only", 7.7)])
        assert ranked.rank_of("only") == 1 and ranked.ties == ()

    def test_empty_input(self):
        with pytest.raises(EmptyColumnError):
            rank_column([])

    def test_non_finite_value(self):
        with pytest.raises(AnalysisError):
            rank_column([("a", float("nan"))])

    def test_duplicate_journal(self):
        with pytest.raises(AnalysisError):
            rank_column([("a", 1.0), ("a", 2.0)])

    def test_affine_invariance(self):
        values = [("a", 0.4), ("b", 3.1), ("c", 1.7), ("d", 2.2)]
        scaled = [(j, 2.5 * v + 11) for j, v in values]
        assert rank_column(values).entries == rank_column(scaled).entries

    def test_recompute_table_ranks(self):
        table = recompute_table_ranks(simple_table())
        assert table.rank("a", "p") == 1
        assert table.rank("c", "p") == 2
        assert table.rank("b", "p") == 3
        assert table.rank("a", "q") is None  # absent cell carries no rank
        assert table.rank("c", "q") == 1


# --------------------------------------------------------------------------- #
# pearson
# --------------------------------------------------------------------------- #


class TestPearson:
    def test_perfect_positive(self):
        assert pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)

    def test_perfect_negative(self):
        assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            pearson([1, 2], [1, 2, 3])

    def test_too_short(self):
        with pytest.raises(DegenerateColumnError):
            pearson([1], [2])

    def test_zero_variance(self):
        with pytest.raises(DegenerateColumnError):
            pearson([1, 1, 1], [1, 2, 3])

    def test_symmetry_and_affine(self):
        x = [0.3, 1.9, 4.2, 2.8, 0.1]
        y = [2.0, 0.7, 3.3, 1.1, 0.9]
        assert pearson(x, y) == pytest.approx(pearson(y, x))
        assert pearson(x, [2 * v + 1 for v in x]) == pytest.approx(1.0)
        assert pearson(x, [-0.5 * v + 3 for v in x]) == pytest.approx(-1.0)

    def test_against_numpy(self):
        x = [0.31, 1.94, 4.27, 2.83, 0.12, 9.4, 3.3]
        y = [2.05, 0.78, 3.31, 1.19, 0.93, 4.1, 0.2]
        expected = numpy.corrcoef(x, y)[0, 1]
        assert pearson(x, y) == pytest.approx(expected, rel=1e-12)


class TestPearsonMatrix:
    def test_duplicated_column_gives_unit_off_diagonal(self):
        table = IndicatorTable(journals=("a", "b", "c"), indicators=("p", "q"),
                               values=((1.0, 1.0), (2.0, 2.0), (5.0, 5.0)))
        matrix = pearson_matrix(table)
        assert matrix.coefficient("p", "q") == pytest.approx(1.0)

    def test_constant_column_names_the_pair(self):
        table = IndicatorTable(journals=("a", "b", "c"), indicators=("p", "q"),
                               values=((1.0, 7.0), (2.0, 7.0), (5.0, 7.0)))
        with pytest.raises(DegenerateColumnError) as excinfo:
            pearson_matrix(table)
        assert excinfo.value.pair == ("p", "q")

    def test_matches_pairwise_calls(self, printed_table):
        matrix = pearson_matrix(printed_table)
        for a in ("jcr_if", "hy_wif", "citing_median_5y"):
            for b in ("proposed_wif", "buela_casal_wif"):
                x, y = [], []
                for jid in printed_table.journals:
                    x.append(printed_table.value(jid, a))
                    y.append(printed_table.value(jid, b))
                assert matrix.coefficient(a, b) == pytest.approx(pearson(x, y))

    def test_pairwise_complete_over_shared_journals(self):
        table = IndicatorTable(
            journals=("a", "b", "c", "d"),
            indicators=("p", "q"),
            values=((1.0, 2.0), (2.0, 1.5), (3.0, 0.5), (9.0, None)),
        )
        matrix = pearson_matrix(table)
        assert matrix.sample_sizes[0][1] == 3
        assert matrix.coefficient("p", "q") == pytest.approx(
            pearson([1, 2, 3], [2, 1.5, 0.5]))

    def test_rank_based_matrix_without_stored_ranks(self):
        table = simple_table()
        matrix = pearson_matrix(table, use="ranks")
        # Shared journals b,c: ranks in p are (3,2), in q (2,1).
        assert matrix.coefficient("p", "q") == pytest.approx(1.0)

    def test_invariants_enforced(self):
        with pytest.raises(AnalysisError):
            CorrelationMatrix(indicators=("p", "q"),
                              matrix=((1.0, 0.5), (0.4, 1.0)),
                              sample_sizes=((3, 3), (3, 3)))
        with pytest.raises(AnalysisError):
            CorrelationMatrix(indicators=("p", "q"),
                              matrix=((0.9, 0.5), (0.5, 1.0)),
                              sample_sizes=((3, 3), (3, 3)))


# --------------------------------------------------------------------------- #
# scatter export
# --------------------------------------------------------------------------- #


class TestScatter:
    def test_reference_pair(self, printed_table):
        points = scatter_export(printed_table, "jcr_if", "proposed_wif")
        assert len(points) == 20
        by_journal = {jid: (x, y) for jid, x, y in points}
        assert by_journal[SI] == (1.833, 3.472)

    def test_identity_diagonal(self, printed_table):
        points = scatter_export(printed_table, "jcr_if", "jcr_if")
        assert all(x == y for _, x, y in points)

    def test_absent_cells_are_excluded(self):
        points = scatter_export(simple_table(), "p", "q")
        assert [jid for jid, _, _ in points] == ["b", "c"]

    def test_unknown_indicator(self, printed_table):
        with pytest.raises(UnknownIndicatorError):
            scatter_export(printed_table, "jcr_if", "nope")

    def test_csv_serialization(self):
        text = points_to_csv((("a", 1.0, 2.0), ("b", 3.25, 4.5)))
        lines = text.splitlines()
        assert lines[0] == "journal,x,y"
        assert lines[1] == "a,1,2"

    def test_svg_has_one_marker_per_point(self, printed_table):
        points = scatter_export(printed_table, "jcr_if", "proposed_wif")
        svg = points_to_svg(points, "jcr_if", "proposed_wif")
        assert svg.count("<circle") == 20
        assert "jcr_if" in svg and "proposed_wif" in svg
        assert svg.startswith("<svg")

    def test_svg_handles_degenerate_span_and_escaping(self):
        svg = points_to_svg((("a&b", 1.0, 1.0),), "x<1", "y")
        assert "a&amp;b" in svg and "x&lt;1" in svg
        assert svg.count("<circle") == 1


# --------------------------------------------------------------------------- #
# table container and round-trips
# --------------------------------------------------------------------------- #


class TestIndicatorTable:
    def test_dimension_validation(self):
        with pytest.raises(AnalysisError):
            IndicatorTable(journals=("a",), indicators=("p",), values=())

    def test_rank_permutation_validation(self):
        with pytest.raises(AnalysisError):
            IndicatorTable(journals=("a", "b"), indicators=("p",),
                           values=((1.0,), (2.0,)), ranks=((1,), (3,)))

    def test_lookup_errors(self):
        table = simple_table()
        with pytest.raises(AnalysisError):
            table.row_index("ghost")
        with pytest.raises(UnknownIndicatorError):
            table.column_index("ghost")

    def test_subset_preserves_order_and_ranks(self, printed_table):
        sub = printed_table.subset(["proposed_wif", "jcr_if"])
        assert sub.indicators == ("proposed_wif", "jcr_if")
        assert sub.rank(NC, "proposed_wif") == printed_table.rank(NC, "proposed_wif")

    def test_csv_round_trip_full_precision(self, computed_table):
        text = table_to_csv(computed_table, full_precision=True)
        again = table_from_csv(text)
        assert again.journals == computed_table.journals
        assert again.indicators == computed_table.indicators
        assert again.values == computed_table.values

    def test_csv_header_names_the_journal_column(self, computed_table):
        header = table_to_csv(computed_table).splitlines()[0]
        assert header.startswith("journal,")
        assert header == "journal," + ",".join(computed_table.indicators)

    def test_csv_rejects_foreign_header(self):
        with pytest.raises(SchemaError):
            table_from_csv("name,p\nx,1\n")

    def test_json_round_trip_preserves_ranks_and_reasons(self, computed_table):
        import json as json_module

        doc = table_to_json_dict(computed_table)
        again = table_from_json(json_module.dumps(doc))
        assert again == computed_table

    def test_format_sig(self):
        assert format_sig(3.472384615384615) == "3.472"
        assert format_sig(7.602938053097346) == "7.603"
        assert format_sig(0.0001234567) == "0.0001235"
        assert format_sig(100.0) == "100"


# --------------------------------------------------------------------------- #
# reference table
# --------------------------------------------------------------------------- #


class TestPublishedTable:
    def test_shape(self, printed_table):
        assert len(printed_table.journals) == 20
        assert printed_table.indicators == PUBLISHED_COLUMNS
        assert printed_table.ranks is not None

    def test_builtin_lookup(self):
        assert builtin_table("published2013").journals == published_table().journals
        with pytest.raises(KeyError):
            builtin_table("nope")

    def test_reference_correlations_are_symmetric(self):
        corr = published_correlations()
        assert corr[("jcr_if", "proposed_wif")] == 0.7398
        assert corr[("proposed_wif", "jcr_if")] == 0.7398
        assert corr[("hy_wif", "buela_casal_wif")] == 0.2797
        assert len(corr) == 56  # 28 pairs, both orientations

    def test_most_columns_are_rank_self_consistent(self, printed_table):
        # Recomputing ranks from the printed values reproduces the printed
        # brackets exactly for six of the eight columns.
        for indicator in ("jcr_if", "proposed_wif", "citing_mean_2y",
                          "citing_median_2y", "citing_mean_5y",
                          "citing_median_5y"):
            ranked = rank_column(list(printed_table.column(indicator)))
            for jid, rank_value in ranked.entries:
                assert rank_value == printed_table.rank(jid, indicator), indicator

    def test_hy_column_has_two_bracket_divergences(self, printed_table):
        ranked = rank_column(list(printed_table.column("hy_wif")))
        diverging = {jid: (ranked.rank_of(jid), printed_table.rank(jid, "hy_wif"))
                     for jid in printed_table.journals
                     if ranked.rank_of(jid) != printed_table.rank(jid, "hy_wif")}
        assert diverging == {IJAMCS: (10, 11), TOSN: (11, 10)}

    def test_bc_column_has_seventeen_bracket_divergences(self, printed_table):
        indicator = "buela_casal_wif"
        ranked = rank_column(list(printed_table.column(indicator)))
        diverging = {jid: (ranked.rank_of(jid), printed_table.rank(jid, indicator))
                     for jid in printed_table.journals
                     if ranked.rank_of(jid) != printed_table.rank(jid, indicator)}
        assert len(diverging) == 17
        # The largest contradiction: bracket [4] printed against the
        # column's smallest value.
        assert diverging[TDSC] == (20, 4)
