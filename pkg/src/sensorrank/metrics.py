"""Selection-quality metrics against a Pareto stratification.

The per-front ratio reports, for every front, what share of the front the
selected set captured; the closer to one, the better the selection covers
that front. ``summarize`` condenses a sample of such ratios into the
five-number boxplot statistics used by the benchmark's summary tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .pareto import ParetoStratification


@dataclass(frozen=True)
class FrontCoverage:
    front_index: int
    front_size: int
    selected_in_front: int
    onvgr: float


@dataclass(frozen=True)
class OnvgrReport:
    """Per-front non-dominated vector generation ratios for one selection."""

    per_front: tuple[FrontCoverage, ...]
    num_fronts: int


def onvgr_per_front(
    selected: Iterable[str], strat: ParetoStratification
) -> OnvgrReport:
    """Share of each front captured by the selected identifiers.

    Every front is reported, including those the selection misses
    (ratio 0). Raises ValueError if a selected identifier is not part of
    the stratification.
    """
    counts = [0] * strat.num_fronts
    for ident in set(selected):
        idx = strat.front_index.get(ident)
        if idx is None:
            raise ValueError(f"unknown identifier {ident!r} in selection")
        counts[idx - 1] += 1
    per_front = tuple(
        FrontCoverage(
            front_index=i + 1,
            front_size=len(front),
            selected_in_front=counts[i],
            onvgr=counts[i] / len(front),
        )
        for i, front in enumerate(strat.fronts)
    )
    return OnvgrReport(per_front=per_front, num_fronts=strat.num_fronts)


def onvgr_counts(
    selected_front_indices: np.ndarray, front_sizes: np.ndarray
) -> np.ndarray:
    """Array-level core of :func:`onvgr_per_front`.

    Takes the 1-based front index of each selected row plus the full
    front-size vector, returns the per-front ratio vector.
    """
    counts = np.bincount(selected_front_indices, minlength=len(front_sizes) + 1)[1:]
    return counts / front_sizes


@dataclass(frozen=True)
class BoxplotSummary:
    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    outlier_count: int
    n: int


def _quantile(sorted_values: Sequence[float], p: float) -> float:
    """Linear interpolation between the closest ranks of pre-sorted data."""
    pos = (len(sorted_values) - 1) * p
    lo = math.floor(pos)
    hi = math.ceil(pos)
    if lo == hi:
        return sorted_values[lo]
    frac = pos - lo
    return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac


def summarize(samples: Iterable[float]) -> BoxplotSummary:
    """Boxplot statistics: quartiles, 1.5*IQR whiskers, outlier count.

    Whiskers sit on the most extreme samples still inside
    [q1 - 1.5*IQR, q3 + 1.5*IQR]; everything outside the whiskers counts
    as an outlier. Raises ValueError on an empty sample set.
    """
    data = sorted(float(x) for x in samples)
    if not data:
        raise ValueError("cannot summarize an empty sample set")
    q1 = _quantile(data, 0.25)
    median = _quantile(data, 0.5)
    q3 = _quantile(data, 0.75)
    reach = 1.5 * (q3 - q1)
    inside = [x for x in data if q1 - reach <= x <= q3 + reach]
    whisker_low = min(inside) if inside else q1
    whisker_high = max(inside) if inside else q3
    outliers = sum(1 for x in data if x < whisker_low or x > whisker_high)
    return BoxplotSummary(
        median=median,
        q1=q1,
        q3=q3,
        whisker_low=whisker_low,
        whisker_high=whisker_high,
        outlier_count=outliers,
        n=len(data),
    )
