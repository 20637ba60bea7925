"""Decision-matrix data model shared by the ranking and Pareto machinery.

A :class:`DecisionMatrix` holds the raw performance values of M alternatives
on N criteria, each criterion tagged with an optimization direction. All
types here are immutable after construction; every operation is a pure
function, so matrices can be shared freely across concurrent work.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

WEIGHT_SUM_TOL = 1e-9


class Direction(Enum):
    """Optimization direction of a criterion."""

    MAXIMIZE = "max"
    MINIMIZE = "min"


@dataclass(frozen=True)
class CriterionSpec:
    """A named criterion with its direction and default weight.

    The weight stored here is a default only; rankings take an explicit
    :class:`WeightVector` so one matrix can serve many weight draws.
    """

    name: str
    direction: Direction
    weight: float = 0.0

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("criterion name must be non-empty")
        if not isinstance(self.direction, Direction):
            raise ValueError(f"criterion {self.name!r}: direction must be a Direction")
        if not np.isfinite(self.weight) or not 0.0 <= self.weight <= 1.0:
            raise ValueError(f"criterion {self.name!r}: weight must be in [0, 1]")


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative criterion weights summing to one."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        ws = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if not ws:
            raise ValueError("weight vector must be non-empty")
        if any(not np.isfinite(w) or w < 0.0 for w in ws):
            raise ValueError("weights must be finite and nonnegative")
        if abs(sum(ws) - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1 (got {sum(ws)!r})")

    def __len__(self) -> int:
        return len(self.weights)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """M alternatives x N criteria of raw performance values.

    Construct via :func:`build_matrix`, which validates shape, finiteness
    and identifier uniqueness, and freezes the value grid.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    values: np.ndarray

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return len(self.criteria)


def _first_duplicate(items: Iterable[str]) -> str | None:
    seen: set[str] = set()
    for item in items:
        if item in seen:
            return item
        seen.add(item)
    return None


def build_matrix(
    alternatives: Sequence[str],
    criteria: Sequence[CriterionSpec],
    values: Iterable[Iterable[float]] | np.ndarray,
) -> DecisionMatrix:
    """Validate and assemble an immutable decision matrix.

    Raises ValueError on empty input, dimension mismatches, duplicate
    alternative identifiers or criterion names, and non-finite values
    (naming the offending row and column).
    """
    ids = tuple(str(a) for a in alternatives)
    crits = tuple(criteria)
    if not ids:
        raise ValueError("matrix needs at least one alternative")
    if not crits:
        raise ValueError("matrix needs at least one criterion")
    dup = _first_duplicate(ids)
    if dup is not None:
        raise ValueError(f"duplicate alternative identifier {dup!r}")
    dup = _first_duplicate(c.name for c in crits)
    if dup is not None:
        raise ValueError(f"duplicate criterion name {dup!r}")

    vals = np.array(values, dtype=np.float64)
    if vals.ndim != 2:
        raise ValueError(f"values must be a 2-D grid, got {vals.ndim} dimension(s)")
    if vals.shape[0] != len(ids):
        raise ValueError(
            f"value grid has {vals.shape[0]} rows for {len(ids)} alternatives"
        )
    if vals.shape[1] != len(crits):
        raise ValueError(
            f"value grid has {vals.shape[1]} columns for {len(crits)} criteria"
        )
    finite = np.isfinite(vals)
    if not finite.all():
        i, j = np.argwhere(~finite)[0]
        raise ValueError(f"non-finite value at row {i}, column {j}")
    vals.flags.writeable = False
    return DecisionMatrix(alternatives=ids, criteria=crits, values=vals)


def evaluate_objectives(matrix: DecisionMatrix) -> np.ndarray:
    """Map raw values into minimization space.

    Minimize columns pass through unchanged; Maximize columns are negated,
    so all downstream dominance logic can treat every column as minimize.
    """
    signs = np.array(
        [1.0 if c.direction is Direction.MINIMIZE else -1.0 for c in matrix.criteria]
    )
    return matrix.values * signs


def benefit_mask(matrix: DecisionMatrix) -> np.ndarray:
    """Boolean column mask, True where the criterion is maximized."""
    return np.array([c.direction is Direction.MAXIMIZE for c in matrix.criteria])


@dataclass(frozen=True)
class RankedList:
    """Alternatives in preference order (best first) with their scores."""

    order: tuple[str, ...]
    scores: Mapping[str, float]


def select_top_k(ranked: RankedList, k: int) -> list[str]:
    """Return the first k identifiers of a ranked list, order preserved."""
    m = len(ranked.order)
    if not 1 <= k <= m:
        raise ValueError(f"k must be in [1, {m}], got {k}")
    return list(ranked.order[:k])
