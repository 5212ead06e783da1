"""Population diversity plus the nonparametric comparison toolkit.

The comparison protocol: Mann-Whitney U tests between a reference
algorithm and every competitor, Holm step-down correction per problem,
+/~/- significance marks, and average ranks of per-problem means.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

__all__ = [
    "population_diversity",
    "mann_whitney_u",
    "holm_adjust",
    "ComparisonMatrix",
    "significance_marks",
    "average_rank",
]

# Below this product of sample sizes the exact permutation null is enumerated.
EXACT_ENUMERATION_LIMIT = 64


def population_diversity(pop, bounds) -> float:
    """Normalized mean absolute deviation from the population centroid.

    PD = (1 / (N D)) sum_i sum_j |X_ij - mean_j| / (UB_j - LB_j),
    which lies in [0, 1] for any in-bounds population and is 0 when all
    members coincide. ``pop`` may be a list of individuals or an (N, D)
    position array.
    """
    if isinstance(pop, np.ndarray):
        positions = pop
    else:
        positions = np.array([ind.position for ind in pop])
    centroid = positions.mean(axis=0)
    normalized = np.abs(positions - centroid) / bounds.span
    return float(normalized.mean())


def _midranks(values: np.ndarray) -> np.ndarray:
    return rankdata(values, method="average")


def _tie_sizes(values: np.ndarray) -> np.ndarray:
    _, counts = np.unique(values, return_counts=True)
    return counts


def mann_whitney_u(a, b, alternative: str = "two-sided") -> tuple[float, float]:
    """Rank-sum U statistic of the first sample and its p-value.

    Ties get midranks. For n_a * n_b <= 64 the p-value comes from exact
    enumeration of all labelings of the combined sample; larger inputs use
    the normal approximation with tie-corrected variance and a 0.5
    continuity correction. ``alternative`` is "two-sided", "less" (first
    sample tends smaller), or "greater".
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be non-empty")
    if alternative not in ("two-sided", "less", "greater"):
        raise ValueError(f"unknown alternative {alternative!r}")
    na, nb = a.size, b.size
    combined = np.concatenate([a, b])
    ranks = _midranks(combined)
    u = float(ranks[:na].sum() - na * (na + 1) / 2.0)

    if na * nb <= EXACT_ENUMERATION_LIMIT:
        p = _exact_p(ranks, na, u, alternative)
    else:
        p = _normal_approx_p(combined, na, nb, u, alternative)
    return u, min(1.0, p)


def _exact_p(ranks: np.ndarray, na: int, u_obs: float, alternative: str) -> float:
    """Exact null distribution of U over all C(n, na) labelings."""
    n = ranks.size
    offset = na * (na + 1) / 2.0
    mu = na * (n - na) / 2.0
    total = 0
    hits = 0
    for subset in itertools.combinations(range(n), na):
        u = ranks[list(subset)].sum() - offset
        total += 1
        if alternative == "two-sided":
            hits += abs(u - mu) >= abs(u_obs - mu)
        elif alternative == "less":
            hits += u <= u_obs
        else:
            hits += u >= u_obs
    return hits / total


def _normal_approx_p(
    combined: np.ndarray, na: int, nb: int, u_obs: float, alternative: str
) -> float:
    """Tie-corrected normal approximation with continuity correction."""
    n = na + nb
    mu = na * nb / 2.0
    ties = _tie_sizes(combined)
    tie_term = float(((ties**3 - ties).sum())) / (n * (n - 1))
    var = na * nb / 12.0 * ((n + 1) - tie_term)
    if var <= 0:
        return 1.0
    sd = math.sqrt(var)
    if alternative == "two-sided":
        z = max(0.0, abs(u_obs - mu) - 0.5) / sd
        return math.erfc(z / math.sqrt(2.0))
    if alternative == "greater":
        z = (u_obs - mu - 0.5) / sd
    else:
        z = (mu - u_obs - 0.5) / sd
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def holm_adjust(p_values) -> list[float]:
    """Step-down Holm adjustment, returned in the input order."""
    ps = [float(p) for p in p_values]
    if any(p < 0.0 or p > 1.0 for p in ps):
        raise ValueError("p-values must lie in [0, 1]")
    m = len(ps)
    order = sorted(range(m), key=ps.__getitem__)
    adjusted = [0.0] * m
    running_max = 0.0
    for i, idx in enumerate(order):
        value = min(1.0, (m - i) * ps[idx])
        running_max = max(running_max, value)
        adjusted[idx] = running_max
    return adjusted


@dataclass
class ComparisonMatrix:
    """Per-trial final fitness for every (problem, algorithm) cell."""

    problems: list
    algorithms: list
    samples: dict  # (problem, algorithm) -> 1-D array of trial finals

    def __post_init__(self):
        if len(self.algorithms) < 2:
            raise ValueError("a comparison needs at least two algorithms")
        for prob in self.problems:
            for alg in self.algorithms:
                if (prob, alg) not in self.samples:
                    raise ValueError(f"missing samples for ({prob!r}, {alg!r})")
        self.samples = {
            key: np.asarray(value, dtype=float)
            for key, value in self.samples.items()
        }

    def mean(self, problem, algorithm) -> float:
        return float(self.samples[(problem, algorithm)].mean())

    def std(self, problem, algorithm) -> float:
        return float(self.samples[(problem, algorithm)].std())


def significance_marks(
    matrix: ComparisonMatrix, reference, alpha: float = 0.05
) -> dict:
    """Per-cell mark versus the reference algorithm.

    '+' means the reference is significantly better (lower median) after
    a per-problem Holm correction of the two-sided Mann-Whitney p-values,
    '-' significantly worse, '~' no significant difference.
    """
    if reference not in matrix.algorithms:
        raise ValueError(f"reference {reference!r} is not an algorithm column")
    others = [alg for alg in matrix.algorithms if alg != reference]
    marks = {}
    for prob in matrix.problems:
        ref_sample = matrix.samples[(prob, reference)]
        raw = [
            mann_whitney_u(ref_sample, matrix.samples[(prob, alg)])[1]
            for alg in others
        ]
        adjusted = holm_adjust(raw)
        for alg, p in zip(others, adjusted):
            if p < alpha:
                ref_med = float(np.median(ref_sample))
                other_med = float(np.median(matrix.samples[(prob, alg)]))
                if ref_med < other_med:
                    marks[(prob, alg)] = "+"
                elif ref_med > other_med:
                    marks[(prob, alg)] = "-"
                else:
                    marks[(prob, alg)] = "~"
            else:
                marks[(prob, alg)] = "~"
    return marks


def average_rank(matrix: ComparisonMatrix) -> dict:
    """Mean across problems of the per-problem rank of mean finals.

    Rank 1 is the lowest mean; tied means share midranks.
    """
    totals = {alg: 0.0 for alg in matrix.algorithms}
    for prob in matrix.problems:
        means = [matrix.mean(prob, alg) for alg in matrix.algorithms]
        for alg, rank in zip(matrix.algorithms, rankdata(means)):
            totals[alg] += float(rank)
    return {alg: total / len(matrix.problems) for alg, total in totals.items()}
