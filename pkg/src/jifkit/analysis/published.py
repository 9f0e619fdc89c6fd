"""Published 2013 comparison table and its correlation matrix, as printed.

Companion reference data for the bundled ``paper2013`` dataset: the eight
indicator columns as published for the same twenty journals, each cell a
(value, rank) pair, plus the published correlation coefficients between
the columns (lower triangle).

The printed data is preserved verbatim, including its internal
inconsistencies — a few bracketed ranks contradict the printed values
(documented by tests; recomputed ranks are authoritative), and the
published correlations derive from the printed rank columns rather than
the printed values.  Builtin table id: ``published2013``.
"""

from __future__ import annotations

from .table import IndicatorTable

#: Column order of the published table.
PUBLISHED_COLUMNS = (
    "jcr_if", "hy_wif", "buela_casal_wif", "proposed_wif",
    "citing_mean_2y", "citing_median_2y", "citing_mean_5y", "citing_median_5y",
)

#: Per journal: name, then a (value, printed rank) pair per column.
PUBLISHED_ROWS = (
    ("Neural Computation",
     (1.694, 4), (4.200, 2), (3.603, 1), (7.544, 1), (6.533, 1), (4.200, 2), (7.725, 1), (4.9, 3)),
    ("Swarm Intelligence",
     (1.833, 2), (4.457, 1), (1.577, 9), (3.472, 4), (3.238, 3), (2.055, 8), (5.204, 3), (5.071, 2)),
    ("Neural Processing Letters",
     (1.237, 12), (1.631, 12), (1.455, 13), (2.763, 8), (1.765, 14), (1.534, 15), (2.02, 13), (1.523, 17)),
    ("Artificial Life",
     (1.93, 1), (3.028, 3), (2.688, 2), (4.762, 2), (6.474, 2), (4.518, 1), (7.724, 2), (8.223, 1)),
    ("Cognitive Computation",
     (1.1, 16), (2.649, 4), (1.317, 17), (2.594, 11), (2.253, 9), (1.955, 10), (2.631, 11), (1.996, 12)),
    ("Computer Speech and Language",
     (1.812, 3), (1.915, 8), (1.778, 7), (2.875, 6), (2.137, 11), (2.317, 4), (3.091, 6), (2.57, 8)),
    ("Fuzzy Optimization and Decision Making",
     (1.0, 20), (0.855, 20), (1.330, 16), (2.158, 15), (1.172, 20), (1.124, 20), (1.33, 20), (1.48, 20)),
    ("Genetic Programming and Evolvable Machines",
     (1.065, 18), (1.193, 18), (1.363, 15), (1.919, 18), (1.729, 15), (1.453, 16), (1.88, 17), (1.508, 18)),
    ("International Journal of Applied Mathematics and Computer Science",
     (1.39, 9), (1.698, 11), (1.266, 19), (2.443, 12), (1.643, 18), (1.401, 18), (1.815, 18), (1.593, 16)),
    ("Journal of Ambient Intelligence and Smart Environments",
     (1.082, 17), (1.198, 17), (1.294, 18), (1.758, 20), (1.658, 17), (1.403, 17), (2.006, 14), (1.773, 14)),
    ("ACM Transactions on Applied Perception",
     (1.051, 19), (2.021, 7), (1.264, 20), (2.426, 13), (1.821, 12), (1.700, 12), (2.223, 12), (2.05, 11)),
    ("ACM Transactions on Knowledge Discovery from Data",
     (1.147, 14), (1.573, 13), (1.806, 6), (2.61, 9), (2.480, 6), (2.105, 7), (3.099, 5), (3.118, 5)),
    ("ACM Transactions on Information Systems",
     (1.3, 11), (2.059, 6), (1.389, 14), (2.3, 14), (2.406, 7), (2.132, 6), (2.897, 9), (3.063, 6)),
    ("ACM Transactions on the Web",
     (1.595, 6), (2.076, 5), (1.829, 5), (3.828, 3), (2.670, 4), (2.234, 5), (3.855, 4), (3.718, 4)),
    ("ACM Transactions on Sensor Networks",
     (1.463, 8), (1.697, 10), (1.615, 8), (2.607, 10), (2.285, 8), (1.612, 14), (3.013, 7), (2.184, 10)),
    ("ACM Transactions on Software Engineering and Methodology",
     (1.472, 7), (1.369, 16), (1.487, 12), (2.098, 16), (1.674, 16), (1.660, 13), (1.912, 15), (1.707, 15)),
    ("IEEE Transactions on Computational Intelligence and AI in Games",
     (1.167, 13), (1.139, 19), (1.549, 10), (1.88, 19), (1.804, 13), (1.965, 9), (1.899, 16), (1.885, 13)),
    ("IEEE Transactions on Dependable and Secure Computing",
     (1.137, 15), (1.533, 14), (1.195, 4), (1.985, 17), (1.534, 19), (1.230, 19), (1.812, 19), (1.507, 19)),
    ("IEEE Transactions on Autonomous Mental Development",
     (1.348, 10), (1.450, 15), (2.209, 3), (3.222, 5), (2.531, 5), (2.864, 3), (2.929, 8), (3.053, 7)),
    ("World Wide Web",
     (1.623, 5), (1.862, 9), (1.547, 11), (2.832, 7), (2.200, 10), (1.938, 11), (2.71, 10), (2.353, 9)),
)

#: Published correlation coefficients (lower triangle, no diagonal), in
#: the published row/column order.
PUBLISHED_CORRELATION_ORDER = (
    "jcr_if", "proposed_wif", "hy_wif", "buela_casal_wif",
    "citing_mean_2y", "citing_median_2y", "citing_mean_5y", "citing_median_5y",
)

_PUBLISHED_CORRELATION_ROWS = {
    "proposed_wif": (0.7398,),
    "hy_wif": (0.6120, 0.7384),
    "buela_casal_wif": (0.6105, 0.6226, 0.2797),
    "citing_mean_2y": (0.6256, 0.8060, 0.7414, 0.6210),
    "citing_median_2y": (0.6361, 0.7233, 0.6045, 0.6421, 0.8887),
    "citing_mean_5y": (0.7218, 0.8135, 0.8075, 0.5774, 0.9428, 0.8647),
    "citing_median_5y": (0.6932, 0.7699, 0.7473, 0.5790, 0.9489, 0.8948, 0.9474),
}


def published_table() -> IndicatorTable:
    """The published table as an :class:`IndicatorTable` carrying both
    the printed values and the printed bracketed ranks."""
    journals = tuple(row[0] for row in PUBLISHED_ROWS)
    values = tuple(
        tuple(cell[0] for cell in row[1:]) for row in PUBLISHED_ROWS
    )
    ranks = tuple(
        tuple(cell[1] for cell in row[1:]) for row in PUBLISHED_ROWS
    )
    return IndicatorTable(journals=journals, indicators=PUBLISHED_COLUMNS,
                          values=values, ranks=ranks)


def published_correlations() -> dict[tuple[str, str], float]:
    """Published pairwise coefficients keyed by (row, column) indicator
    names; both orientations are present."""
    out: dict[tuple[str, str], float] = {}
    order = PUBLISHED_CORRELATION_ORDER
    for row_name, coefficients in _PUBLISHED_CORRELATION_ROWS.items():
        for column_index, coefficient in enumerate(coefficients):
            column_name = order[column_index]
            out[(row_name, column_name)] = coefficient
            out[(column_name, row_name)] = coefficient
    return out


#: Registered builtin tables, keyed by their public ids.
BUILTIN_TABLES = {"published2013": published_table}


def builtin_table(name: str) -> IndicatorTable:
    """Return the builtin table registered under ``name``."""
    try:
        factory = BUILTIN_TABLES[name]
    except KeyError:
        raise KeyError(
            f"unknown builtin table {name!r}; available: {sorted(BUILTIN_TABLES)}"
        ) from None
    return factory()
