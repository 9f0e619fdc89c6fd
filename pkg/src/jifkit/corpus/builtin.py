"""Bundled example dataset: twenty computer-science journals, evaluation
year 2013.

``_SUBJECTS`` holds, per journal: display name, articles published over
2011-2012 combined, declared total citations received in 2013, and the
journal's own two-year impact factor for 2012.  The combined article count
is stored under year 2012, so the two-year window 2011+2012 sums to the
published figure.

``_CITING`` holds, per journal, the itemized 2013 citation sources as
(five-year impact factor for 2012, citation count) pairs.  The sources are
anonymous in the underlying records, so each becomes a thin journal record
``<subject id>::citing-NNN`` carrying only that five-year impact factor.
Citations beyond the itemized ones are attributed to a single UNINDEXED
batch of size max(0, declared - itemized); for one journal ("Fuzzy
Optimization and Decision Making") the itemized counts exceed the declared
total, which the consistency validator reports as a surplus.
"""

from __future__ import annotations

from .model import UNINDEXED, CitationBatch, Dataset, Journal

EVALUATION_YEAR = 2013
_PREV_YEAR = EVALUATION_YEAR - 1

# (name, articles 2011+2012, declared citations in 2013, two-year IF 2012)
_SUBJECTS = [
    ("Neural Computation", 226, 383, 1.76),
    ("Swarm Intelligence", 26, 48, 0.64),
    ("Neural Processing Letters", 76, 94, 1.24),
    ("Artificial Life", 48, 93, 1.585),
    ("Cognitive Computation", 88, 97, 0.867),
    ("Computer Speech and Language", 67, 121, 1.463),
    ("Fuzzy Optimization and Decision Making", 45, 45, 1.488),
    ("Genetic Programming and Evolvable Machines", 42, 45, 1.333),
    ("International Journal of Applied Mathematics and Computer Science", 136, 189, 1.008),
    ("Journal of Ambient Intelligence and Smart Environments", 74, 80, 1.298),
    ("ACM Transactions on Applied Perception", 40, 42, 1.0),
    ("ACM Transactions on Knowledge Discovery from Data", 37, 42, 1.676),
    ("ACM Transactions on Information Systems", 42, 55, 1.07),
    ("ACM Transactions on the Web", 39, 62, 1.405),
    ("ACM Transactions on Sensor Networks", 54, 79, 1.444),
    ("ACM Transactions on Software Engineering and Methodology", 37, 54, 1.548),
    ("IEEE Transactions on Computational Intelligence and AI in Games", 50, 58, 1.694),
    ("IEEE Transactions on Dependable and Secure Computing", 143, 163, 1.059),
    ("IEEE Transactions on Autonomous Mental Development", 54, 73, 2.17),
    ("World Wide Web", 58, 94, 1.196),
]

# name -> ((five-year IF 2012 of citing source, citation count), ...)
_CITING = {
    "Neural Computation": (
        (35.89, 1), (34.37, 1), (31.03, 3), (23.17, 1), (16.41, 1), (16.40, 4),
        (13.58, 1), (14.57, 1), (14.47, 1),
        (13.45, 1), (11.34, 3), (10.58, 9), (10.45, 1), (9.924, 2), (7.87, 10),
        (7.463, 2), (7.063, 4), (6.895, 3),
        (6.144, 5), (6.0, 1), (5.94, 14), (5.484, 1), (4.885, 1), (4.544, 1),
        (4.479, 4), (4.422, 1), (4.284, 5),
        (4.25, 1), (4.24, 11), (4.049, 7), (4.017, 1), (3.879, 2), (3.844, 1),
        (3.71, 1), (3.707, 1), (3.676, 1),
        (3.668, 2), (3.646, 1), (3.632, 9), (3.612, 2), (3.607, 8), (3.568, 1),
        (3.291, 1), (3.219, 1), (3.146, 1),
        (3.108, 1), (3.069, 1), (3.068, 3), (3.05, 1), (2.998, 3), (2.927, 2),
        (2.895, 1), (2.892, 4), (2.743, 1),
        (2.733, 1), (2.653, 2), (2.61, 20), (2.567, 1), (2.526, 1), (2.525, 1),
        (2.5, 10), (2.496, 1), (2.484, 2),
        (2.38, 31), (2.339, 1), (2.307, 3), (2.287, 3), (2.27, 1), (2.158, 1),
        (2.143, 2), (2.0, 1), (1.947, 1),
        (1.938, 3), (1.922, 3), (1.871, 1), (1.811, 8), (1.767, 1), (1.745, 1),
        (1.732, 1), (1.724, 1), (1.643, 1),
        (1.6, 1), (1.596, 1), (1.595, 1), (1.572, 1), (1.55, 1), (1.529, 2),
        (1.402, 2), (1.386, 2), (1.338, 1),
        (1.336, 1), (1.319, 1), (1.314, 1), (1.305, 1), (1.231, 1), (1.216, 1),
        (1.192, 1), (1.183, 1), (1.182, 1),
        (1.14, 3), (1.074, 1), (1.032, 1), (0.97, 1), (0.84, 1), (0.816, 1),
        (0.697, 1), (0.672, 2), (0.6, 1),
        (0.548, 1), (0.297, 1), (0.187, 2),
    ),
    "Swarm Intelligence": (
        (6.226, 1), (5.165, 2), (3.448, 1), (3.405, 1), (3.097, 2), (2.747, 1),
        (1.957, 1), (1.615, 1), (1.545, 2),
        (1.364, 1), (0.953, 2),
    ),
    "Neural Processing Letters": (
        (7.854, 1), (4.268, 1), (3.676, 1), (3.632, 2), (3.513, 1), (3.219, 1),
        (2.501, 2), (2.457, 3), (2.384, 2),
        (2.339, 1), (2.143, 1), (1.831, 1), (1.811, 8), (1.71, 1), (1.529, 1),
        (1.454, 2), (1.42, 1), (1.36, 1),
        (1.329, 1), (1.23, 10), (1.216, 1), (1.183, 2), (1.074, 6), (1.04, 3),
        (0.898, 1), (0.866, 1), (0.84, 2),
        (0.774, 5), (0.755, 1), (0.753, 1), (0.716, 1), (0.682, 5), (0.64, 1),
        (0.622, 1), (0.561, 1), (0.497, 2),
    ),
    "Artificial Life": (
        (17.72, 1), (13.56, 1), (7.51, 1), (7.435, 1), (6.69, 1), (6.226, 1),
        (5.165, 2), (4.728, 1), (4.446, 1),
        (4.406, 1), (4.244, 7), (2.496, 1), (2.333, 1), (2.307, 1), (2.0, 1),
        (1.945, 1), (1.777, 1), (1.545, 2),
        (1.454, 1), (1.364, 1), (1.336, 1), (0.953, 2), (0.816, 1), (0.617, 1),
        (0.48, 1), (0.417, 1),
    ),
    "Cognitive Computation": (
        (9.924, 1), (7.869, 1), (7.298, 1), (4.479, 1), (4.372, 1), (4.244, 3),
        (4.017, 1), (3.674, 1), (3.598, 1),
        (3.262, 1), (2.998, 2), (2.847, 1), (2.538, 1), (2.525, 1), (2.501, 3),
        (2.445, 1), (2.339, 1), (2.194, 1),
        (2.158, 1), (1.938, 2), (1.936, 1), (1.811, 2), (1.745, 1), (1.596, 1),
        (1.529, 2), (1.52, 1), (1.423, 1),
        (1.157, 2), (1.14, 14), (0.846, 1), (0.735, 1), (0.592, 1), (0.326, 1),
    ),
    "Computer Speech and Language": (
        (7.694, 2), (2.643, 1), (2.395, 2), (2.339, 2), (1.952, 2), (1.936, 1),
        (1.915, 2), (1.708, 1), (1.52, 8),
        (1.423, 5), (1.41, 1), (1.146, 1), (1.137, 4), (1.074, 2), (0.977, 1),
        (0.959, 1), (0.932, 1), (0.767, 1),
        (0.664, 1), (0.617, 1), (0.505, 1), (0.466, 1), (0.305, 1),
    ),
    "Fuzzy Optimization and Decision Making": (
        (3.676, 3), (2.218, 2), (2.167, 1), (2.165, 1), (1.81, 15), (1.721, 1),
        (1.674, 2), (1.579, 2), (1.386, 1),
        (1.364, 4), (1.183, 2), (0.846, 2), (0.746, 1), (0.612, 1), (0.27, 16),
    ),
    "Genetic Programming and Evolvable Machines": (
        (3.676, 1), (3.027, 1), (2.526, 1), (2.501, 1), (1.938, 1), (1.811, 1),
        (1.795, 1), (1.726, 2), (1.625, 1),
        (1.39, 1), (1.349, 1), (1.282, 8), (1.231, 1),
    ),
    "International Journal of Applied Mathematics and Computer Science": (
        (4.244, 1), (3.676, 1), (3.601, 1), (3.212, 1), (2.64, 2), (2.62, 1),
        (2.457, 1), (2.382, 1), (2.255, 1),
        (2.151, 1), (2.04, 4), (1.758, 1), (1.674, 1), (1.651, 1), (1.625, 1),
        (1.529, 2), (1.504, 1), (1.454, 1),
        (1.368, 2), (1.364, 2), (1.359, 1), (1.289, 2), (1.216, 3), (1.201, 2),
        (1.183, 2), (1.182, 1), (1.158, 1),
        (1.15, 52), (1.024, 1), (0.932, 1), (0.898, 2), (0.829, 1), (0.8, 4),
        (0.671, 1), (0.61, 1), (0.594, 3),
        (0.548, 1), (0.483, 1), (0.436, 1), (0.41, 1), (0.395, 1), (0.37, 1),
        (0.269, 1),
    ),
    "Journal of Ambient Intelligence and Smart Environments": (
        (3.382, 1), (2.7, 1), (2.632, 1), (2.525, 1), (2.339, 1), (2.003, 1),
        (1.947, 1), (1.811, 2), (1.64, 16),
        (1.529, 1), (1.169, 1),
    ),
    "ACM Transactions on Applied Perception": (
        (6.144, 1), (4.283, 2), (4.017, 1), (2.62, 1), (2.61, 1), (2.566, 1),
        (2.445, 2), (2.395, 1), (2.292, 1),
        (2.007, 1), (2.0, 1), (1.905, 1), (1.36, 2), (1.269, 5), (1.216, 1),
        (1.112, 1), (0.675, 1), (0.5, 1),
        (0.453, 1),
    ),
    "ACM Transactions on Knowledge Discovery from Data": (
        (4.395, 1), (4.244, 1), (4.017, 1), (3.959, 1), (3.676, 3), (3.371, 1),
        (3.263, 1), (3.068, 1), (2.426, 1),
        (2.339, 3), (1.838, 1), (1.811, 1), (1.359, 2), (0.739, 1), (0.707, 1),
    ),
    "ACM Transactions on Information Systems": (
        (3.676, 1), (3.371, 3), (3.037, 2), (2.566, 1), (2.446, 1), (2.339, 2),
        (1.745, 1), (1.716, 3), (1.586, 1),
        (1.318, 1), (1.109, 2), (0.466, 1),
    ),
    "ACM Transactions on the Web": (
        (7.854, 2), (4.395, 1), (3.676, 2), (3.371, 1), (3.037, 2), (2.927, 1),
        (2.446, 5), (2.424, 2), (2.339, 3),
        (2.158, 3), (2.033, 1), (1.469, 1), (1.452, 1), (1.388, 2), (1.384, 1),
        (1.322, 2), (1.109, 1), (0.943, 2),
        (0.785, 1), (0.765, 1), (0.605, 1),
    ),
    "ACM Transactions on Sensor Networks": (
        (6.348, 2), (6.146, 1), (3.587, 2), (3.371, 1), (2.747, 1), (2.485, 1),
        (2.395, 1), (2.203, 1), (1.957, 1),
        (1.859, 1), (1.758, 2), (1.227, 1), (1.183, 4), (1.169, 1), (1.092, 1),
        (1.002, 1), (0.765, 1), (0.605, 1),
        (0.43, 5),
    ),
    "ACM Transactions on Software Engineering and Methodology": (
        (3.612, 1), (3.371, 1), (2.063, 3), (2.031, 2), (1.756, 1), (1.692, 2),
        (1.322, 1), (1.167, 4), (1.867, 1),
        (0.819, 1), (0.785, 1), (0.727, 1), (0.721, 1), (0.682, 2), (0.43, 1),
        (0.336, 2), (0.269, 1), (0.268, 1),
    ),
    "IEEE Transactions on Computational Intelligence and AI in Games": (
        (3.212, 1), (3.071, 1), (2.339, 2), (1.936, 1), (1.63, 11), (1.282, 1),
        (0.954, 1), (0.832, 1), (0.723, 3),
    ),
    "IEEE Transactions on Dependable and Secure Computing": (
        (6.895, 1), (3.676, 4), (3.371, 2), (3.191, 1), (3.071, 3), (2.744, 1),
        (2.426, 1), (2.339, 2), (2.259, 4),
        (2.067, 1), (2.021, 1), (1.894, 1), (1.726, 10), (1.576, 2), (1.42, 1),
        (1.39, 1), (1.341, 1), (1.322, 2),
        (1.317, 1), (1.291, 1), (1.234, 1), (1.227, 1), (1.106, 1), (1.093, 3),
        (1.019, 1), (0.954, 2), (0.945, 1),
        (0.874, 1), (0.867, 2), (0.819, 1), (0.793, 1), (0.712, 1), (0.701, 1),
        (0.697, 3), (0.625, 2), (0.606, 1),
        (0.605, 1), (0.497, 2), (0.463, 2), (0.43, 3), (0.395, 2), (0.297, 1),
        (0.187, 1),
    ),
    "IEEE Transactions on Autonomous Mental Development": (
        (4.244, 4), (3.587, 1), (2.501, 4), (2.26, 17), (2.202, 1), (1.947, 1),
        (1.859, 1), (1.615, 3), (1.545, 2),
        (1.529, 1), (1.423, 1), (1.137, 1), (1.043, 1), (0.898, 1), (0.817, 1),
        (0.675, 1), (0.567, 1),
    ),
    "World Wide Web": (
        (3.676, 1), (3.219, 2), (3.191, 1), (2.446, 1), (2.426, 1), (2.403, 1),
        (2.339, 2), (2.031, 1), (1.955, 1),
        (1.838, 1), (1.586, 1), (1.45, 23), (1.251, 1), (1.169, 1), (0.94, 1),
        (0.332, 1), (0.302, 1), (0.174, 1),
    ),
}


def paper2013() -> Dataset:
    """Build the bundled 2013 dataset (builtin id ``paper2013``)."""
    journals: list[Journal] = []
    batches: list[CitationBatch] = []
    declared_totals: dict[str, int] = {}

    for name, articles, declared, own_if in _SUBJECTS:
        journals.append(Journal(
            id=name,
            name=name,
            articles_by_year={_PREV_YEAR: articles},
            two_year_if_by_year={_PREV_YEAR: own_if},
        ))
        declared_totals[name] = declared

    for name, articles, declared, own_if in _SUBJECTS:
        listed = 0
        for position, (fif, count) in enumerate(_CITING[name], start=1):
            citing_id = f"{name}::citing-{position:03d}"
            journals.append(Journal(
                id=citing_id,
                five_year_if_by_year={_PREV_YEAR: fif},
            ))
            batches.append(CitationBatch(
                citing=citing_id, cited=name, year=EVALUATION_YEAR, count=count,
            ))
            listed += count
        unattributed = max(0, declared - listed)
        if unattributed > 0:
            batches.append(CitationBatch(
                citing=UNINDEXED, cited=name, year=EVALUATION_YEAR, count=unattributed,
            ))

    return Dataset(
        evaluation_year=EVALUATION_YEAR,
        journals=tuple(journals),
        citations=tuple(batches),
        declared_totals=declared_totals,
    )


#: Registered builtin datasets, keyed by their public ids.
#: The embedded dataset under its public id.
paper_fixture = paper2013

BUILTIN_DATASETS = {"paper2013": paper2013}


def builtin_dataset(name: str) -> Dataset:
    """Return the builtin dataset registered under ``name``."""
    try:
        factory = BUILTIN_DATASETS[name]
    except KeyError:
        raise KeyError(
            f"unknown builtin dataset {name!r}; available: {sorted(BUILTIN_DATASETS)}"
        ) from None
    return factory()
