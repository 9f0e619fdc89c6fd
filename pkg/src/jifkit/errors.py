"""Exception taxonomy shared across the package.

Three families mirror the three failure surfaces:

* :class:`DatasetError` — a dataset could not be loaded or is internally
  inconsistent; the job cannot start (CLI exit code 2).
* :class:`ComputationError` — an indicator is undefined for a particular
  journal (zero denominator, empty eligible set, out-of-domain input);
  table builders degrade these to absent cells, direct calls raise.
* :class:`AnalysisError` — ranking/correlation/scatter failed on otherwise
  valid input (CLI exit code 1).
"""

from __future__ import annotations


class JifkitError(Exception):
    """Base class for all package-specific errors."""


# --------------------------------------------------------------------------- #
# dataset loading / integrity
# --------------------------------------------------------------------------- #


class DatasetError(JifkitError):
    """A dataset could not be produced from the given source."""


class ParseError(DatasetError):
    """The source text is not well-formed (bad JSON, bad CSV row)."""


class SchemaError(DatasetError):
    """The source parsed but required fields are missing or mistyped."""


class IntegrityError(DatasetError):
    """Cross-record invariants are violated (unknown cited journal,
    duplicate journal id, duplicate citation triple)."""


class DuplicateBatchError(IntegrityError):
    """Strict load mode: the same (citing, cited, year) triple appears twice."""


class UnknownJournalError(DatasetError):
    """A requested journal id is not present in the dataset."""


# --------------------------------------------------------------------------- #
# indicator computation
# --------------------------------------------------------------------------- #


class ComputationError(JifkitError):
    """An indicator value is undefined for the given journal/inputs."""


class ZeroDenominatorError(ComputationError):
    """The article-count denominator over the requested window is zero."""


class DomainError(ComputationError):
    """An input lies outside the formula's domain (e.g. cited journal with
    a zero previous-year impact factor)."""


class NoEligibleCitationsError(ComputationError):
    """No citing batch carries the impact-factor field the indicator needs."""


# --------------------------------------------------------------------------- #
# analysis
# --------------------------------------------------------------------------- #


class AnalysisError(JifkitError):
    """Ranking, correlation, or scatter export failed."""


class EmptyColumnError(AnalysisError):
    """An operation requiring a non-empty value column received none."""


class LengthMismatchError(AnalysisError):
    """Paired series have different lengths."""


class DegenerateColumnError(AnalysisError):
    """A column has zero variance (or a pair shares fewer than two rows),
    making a correlation coefficient undefined."""

    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.pair = pair


class UnknownIndicatorError(AnalysisError):
    """A requested indicator name is not registered / not in the table."""
