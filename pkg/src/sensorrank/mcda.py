"""SAW, TOPSIS and VIKOR rankings over a decision matrix.

Each algorithm maps a (DecisionMatrix, WeightVector) pair to a
:class:`~sensorrank.core.RankedList`. Score polarity differs: SAW and
TOPSIS order by non-increasing score, VIKOR by non-decreasing Q. Ties
always break by ascending original row index, so identical inputs give
identical outputs everywhere.

Degenerate denominators (zero-range columns, coincident ideal points,
S or R ranges of zero) resolve to constant contributions, which cannot
reorder alternatives.

The ``*_scores`` functions are the array-level cores; the experiment
harness calls them directly on shared matrices to skip per-replication
object construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    DecisionMatrix,
    RankedList,
    WeightVector,
    benefit_mask,
    evaluate_objectives,
)

ALGORITHMS = ("SAW", "TOPSIS", "VIKOR")


class NormScheme(Enum):
    MINMAX = "minmax"
    VECTOR = "vector"


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    """A normalized value grid tagged with the scheme that produced it."""

    values: np.ndarray
    scheme: NormScheme


@dataclass(frozen=True)
class VikorParams:
    """VIKOR group-utility weight v in [0, 1]; 0.5 balances S and R."""

    v: float = 0.5

    def __post_init__(self) -> None:
        if not np.isfinite(self.v) or not 0.0 <= self.v <= 1.0:
            raise ValueError(f"v must be in [0, 1], got {self.v}")


def _minmax_normalize(minimized: np.ndarray) -> np.ndarray:
    """Min-max normalization of a minimization-space grid.

    Maps the best value in each column to 1 and the worst to 0;
    zero-range columns map to all zeros.
    """
    lo = minimized.min(axis=0)
    hi = minimized.max(axis=0)
    span = hi - lo
    safe = np.where(span > 0.0, span, 1.0)
    out = (hi - minimized) / safe
    out[:, span == 0.0] = 0.0
    return out


def _vector_normalize(values: np.ndarray) -> np.ndarray:
    """Divide each column by its Euclidean norm; all-zero columns stay zero."""
    norms = np.sqrt((values**2).sum(axis=0))
    safe = np.where(norms > 0.0, norms, 1.0)
    return values / safe


def normalize_minmax(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Direction-aware min-max normalization onto [0, 1], higher is better."""
    return NormalizedMatrix(
        values=_minmax_normalize(evaluate_objectives(matrix)),
        scheme=NormScheme.MINMAX,
    )


def normalize_vector(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Column-wise Euclidean normalization of the raw values (TOPSIS step)."""
    return NormalizedMatrix(
        values=_vector_normalize(matrix.values),
        scheme=NormScheme.VECTOR,
    )


def saw_scores(values: np.ndarray, benefit: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Simple additive weighting: weighted sum of min-max normalized values.

    Parameters
    ----------
    values:
        Raw M x N value grid.
    benefit:
        Boolean mask, True where the column is maximized.
    weights:
        Nonnegative weights, one per column.

    Returns scores in [0, 1] when weights sum to one; greater is better.
    """
    minimized = np.where(benefit, -values, values)
    return _minmax_normalize(minimized) @ weights


def topsis_scores(values: np.ndarray, benefit: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Relative closeness to the ideal point, greater is better.

    Weighted vector-normalized values are compared against the per-column
    best (ideal) and worst (anti-ideal) points by Euclidean distance;
    closeness is D-/(D+ + D-), or 0.5 when both distances vanish.
    """
    weighted = _vector_normalize(values) * weights
    ideal = np.where(benefit, weighted.max(axis=0), weighted.min(axis=0))
    anti = np.where(benefit, weighted.min(axis=0), weighted.max(axis=0))
    d_pos = np.sqrt(((weighted - ideal) ** 2).sum(axis=1))
    d_neg = np.sqrt(((weighted - anti) ** 2).sum(axis=1))
    total = d_pos + d_neg
    safe = np.where(total > 0.0, total, 1.0)
    return np.where(total > 0.0, d_neg / safe, 0.5)


def vikor_sr(
    values: np.ndarray, benefit: np.ndarray, weights: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Group utility S and individual regret R per alternative.

    Per column, regret is the weighted distance from the best raw value,
    scaled by the column range (zero-range columns contribute nothing).
    S sums regrets, R takes the worst one.
    """
    minimized = np.where(benefit, -values, values)
    best = minimized.min(axis=0)
    worst = minimized.max(axis=0)
    span = worst - best
    safe = np.where(span > 0.0, span, 1.0)
    regret = weights * (minimized - best) / safe
    regret[:, span == 0.0] = 0.0
    return regret.sum(axis=1), regret.max(axis=1)


def vikor_scores(
    values: np.ndarray, benefit: np.ndarray, weights: np.ndarray, v: float = 0.5
) -> np.ndarray:
    """Compromise index Q blending the normalized positions of S and R,
    with weight v on S. Smaller Q is better.
    """
    s, r = vikor_sr(values, benefit, weights)
    s_span = s.max() - s.min()
    r_span = r.max() - r.min()
    s_term = (s - s.min()) / s_span if s_span > 0.0 else np.zeros_like(s)
    r_term = (r - r.min()) / r_span if r_span > 0.0 else np.zeros_like(r)
    return v * s_term + (1.0 - v) * r_term


def _order_indices(scores: np.ndarray, *, ascending: bool) -> np.ndarray:
    """Row order by score with stable ties (ascending original index)."""
    key = scores if ascending else -scores
    return np.argsort(key, kind="stable")


def _ranked(matrix: DecisionMatrix, scores: np.ndarray, *, ascending: bool) -> RankedList:
    order = _order_indices(scores, ascending=ascending)
    return RankedList(
        order=tuple(matrix.alternatives[i] for i in order),
        scores={a: float(s) for a, s in zip(matrix.alternatives, scores)},
    )


def _check_weights(matrix: DecisionMatrix, weights: WeightVector) -> np.ndarray:
    if len(weights) != matrix.n:
        raise ValueError(
            f"{len(weights)} weights for {matrix.n} criteria"
        )
    return weights.as_array()


def rank_saw(matrix: DecisionMatrix, weights: WeightVector) -> RankedList:
    """Rank by simple additive weighting; greater score preferred."""
    w = _check_weights(matrix, weights)
    return _ranked(
        matrix, saw_scores(matrix.values, benefit_mask(matrix), w), ascending=False
    )


def rank_topsis(matrix: DecisionMatrix, weights: WeightVector) -> RankedList:
    """Rank by closeness to the ideal solution; greater score preferred."""
    w = _check_weights(matrix, weights)
    return _ranked(
        matrix, topsis_scores(matrix.values, benefit_mask(matrix), w), ascending=False
    )


def rank_vikor(
    matrix: DecisionMatrix, weights: WeightVector, params: VikorParams | None = None
) -> RankedList:
    """Rank by the VIKOR compromise index Q; smaller Q preferred."""
    w = _check_weights(matrix, weights)
    v = (params or VikorParams()).v
    return _ranked(
        matrix, vikor_scores(matrix.values, benefit_mask(matrix), w, v), ascending=True
    )
