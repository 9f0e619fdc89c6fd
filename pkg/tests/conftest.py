"""Shared fixtures: the embedded dataset, computed and reference tables,
small toy-dataset builders, and a CLI process-less invoker."""

from __future__ import annotations

import contextlib
import io

import pytest

from jifkit.analysis.published import published_table
from jifkit.analysis.ranking import recompute_table_ranks
from jifkit.cli import main as cli_main
from jifkit.corpus.builtin import paper2013
from jifkit.corpus.model import CitationBatch, Dataset, Journal
from jifkit.indicators.table import compute_table

# The embedded dataset's subject ids, in fixture order.
FIXTURE_IDS = (
    "Neural Computation",
    "Swarm Intelligence",
    "Neural Processing Letters",
    "Artificial Life",
    "Cognitive Computation",
    "Computer Speech and Language",
    "Fuzzy Optimization and Decision Making",
    "Genetic Programming and Evolvable Machines",
    "International Journal of Applied Mathematics and Computer Science",
    "Journal of Ambient Intelligence and Smart Environments",
    "ACM Transactions on Applied Perception",
    "ACM Transactions on Knowledge Discovery from Data",
    "ACM Transactions on Information Systems",
    "ACM Transactions on the Web",
    "ACM Transactions on Sensor Networks",
    "ACM Transactions on Software Engineering and Methodology",
    "IEEE Transactions on Computational Intelligence and AI in Games",
    "IEEE Transactions on Dependable and Secure Computing",
    "IEEE Transactions on Autonomous Mental Development",
    "World Wide Web",
)

NC = FIXTURE_IDS[0]
SI = FIXTURE_IDS[1]
FODM = FIXTURE_IDS[6]
TOSEM = FIXTURE_IDS[15]
TAMD = FIXTURE_IDS[18]


def journal(jid: str, *, name: str = "", articles: dict | None = None,
            two: dict | None = None, five: dict | None = None,
            discipline: str | None = None) -> Journal:
    return Journal(
        id=jid,
        name=name or jid,
        articles_by_year=articles or {},
        two_year_if_by_year=two or {},
        five_year_if_by_year=five or {},
        discipline=discipline,
    )


def dataset(journals, citations=(), *, year: int = 2013,
            declared: dict | None = None) -> Dataset:
    return Dataset(
        evaluation_year=year,
        journals=tuple(journals),
        citations=tuple(citations),
        declared_totals=declared or {},
    )


def batch(citing: str, cited: str, count: int, *, year: int = 2013) -> CitationBatch:
    return CitationBatch(citing=citing, cited=cited, year=year, count=count)


def cited_with_citers(*citer_ifs: tuple[str, float, int], articles: int = 10,
                      own_two: float | None = None, field: str = "five_year",
                      declared: int | None = None) -> Dataset:
    """One cited journal ``j`` (articles split over 2011/2012) plus one thin
    citing record per (id, impact factor, count) triple."""
    two = {} if own_two is None else {2012: own_two}
    journals = [journal("j", articles={2012: articles}, two=two)]
    citations = []
    for cid, if_value, count in citer_ifs:
        per_year = {2012: if_value}
        journals.append(journal(
            cid,
            two=per_year if field == "two_year" else {},
            five=per_year if field == "five_year" else {},
        ))
        citations.append(batch(cid, "j", count))
    declared_map = {} if declared is None else {"j": declared}
    return dataset(journals, citations, declared=declared_map)


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Invoke the CLI in-process, capturing stdout/stderr."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="session")
def fixture_dataset():
    return paper2013()


@pytest.fixture(scope="session")
def computed_table(fixture_dataset):
    return recompute_table_ranks(compute_table(fixture_dataset))


@pytest.fixture(scope="session")
def printed_table():
    return published_table()
