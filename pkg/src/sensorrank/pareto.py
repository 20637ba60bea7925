"""Pareto dominance and non-dominated front stratification.

The main entry point is :func:`pareto_fronts`, which peels a decision
matrix into successive non-dominated fronts: front 1 is the set of
non-dominated alternatives, front i+1 is the set that becomes
non-dominated once fronts 1..i are removed. Stratification depends only
on values and criterion directions, never on weights.

The front-assignment kernel has two interchangeable implementations: a
compiled extension (``_fronts_fast``) and a numpy fallback
(``_fronts_py``). The compiled one is picked at import when available;
``KERNEL_BACKEND`` records which is active.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DecisionMatrix, evaluate_objectives
from ._fronts_py import assign_fronts as _assign_fronts_py

try:
    from ._fronts_fast import assign_fronts as _assign_fronts
    KERNEL_BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    _assign_fronts = _assign_fronts_py
    KERNEL_BACKEND = "python"

ORACLE_CAP = 2000


@dataclass(frozen=True)
class ParetoStratification:
    """Ordered disjoint fronts covering all alternatives.

    ``fronts[i]`` holds the identifiers of 1-based front i+1;
    ``front_index`` maps each identifier to its 1-based front number.
    """

    fronts: tuple[frozenset[str], ...]
    front_index: dict[str, int]

    @property
    def num_fronts(self) -> int:
        return len(self.fronts)

    def front_sizes(self) -> list[int]:
        return [len(f) for f in self.fronts]

    def to_table(self) -> str:
        """Two-column debug table: identifier, front index."""
        lines = ["id\tfront_index"]
        lines += [f"{ident}\t{idx}" for ident, idx in self.front_index.items()]
        return "\n".join(lines) + "\n"


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """Pareto dominance of objective vectors in minimization space.

    True iff a is no worse than b in every coordinate and strictly better
    in at least one. Irreflexive and asymmetric by construction.
    """
    if len(a) != len(b):
        raise ValueError(f"objective vectors differ in length: {len(a)} vs {len(b)}")
    strict = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            strict = True
    return strict


def assign_front_indices(objectives: np.ndarray) -> np.ndarray:
    """Per-row 1-based front indices for points in minimization space.

    Array-level core of :func:`pareto_fronts`, used directly by the
    experiment harness where identifiers are not needed.
    """
    return _assign_fronts(objectives)


def _stratification_from_indices(
    ids: Sequence[str], front_of: np.ndarray
) -> ParetoStratification:
    num = int(front_of.max()) if len(front_of) else 0
    members: list[list[str]] = [[] for _ in range(num)]
    for ident, idx in zip(ids, front_of):
        members[idx - 1].append(ident)
    return ParetoStratification(
        fronts=tuple(frozenset(m) for m in members),
        front_index={ident: int(idx) for ident, idx in zip(ids, front_of)},
    )


def pareto_fronts(matrix: DecisionMatrix) -> ParetoStratification:
    """Stratify a decision matrix into successive non-dominated fronts."""
    front_of = assign_front_indices(evaluate_objectives(matrix))
    return _stratification_from_indices(matrix.alternatives, front_of)


def brute_force_fronts(
    matrix: DecisionMatrix, cap: int = ORACLE_CAP
) -> ParetoStratification:
    """Verification oracle: repeated full-pairwise non-dominated sweeps.

    Same result contract as :func:`pareto_fronts`, computed by O(M^2 * N)
    peeling. Intended for tests and the ``verify`` CLI path; refuses
    matrices larger than ``cap`` rows.
    """
    if matrix.m > cap:
        raise ValueError(f"matrix has {matrix.m} rows, oracle cap is {cap}")
    vals = evaluate_objectives(matrix)
    front_of = np.zeros(matrix.m, dtype=np.int32)
    remaining = np.arange(matrix.m)
    front = 0
    while remaining.size:
        front += 1
        sub = vals[remaining]
        le = (sub[:, None, :] <= sub[None, :, :]).all(axis=2)
        lt = (sub[:, None, :] < sub[None, :, :]).any(axis=2)
        dominated = (le & lt).any(axis=0)
        front_of[remaining[~dominated]] = front
        remaining = remaining[dominated]
    return _stratification_from_indices(matrix.alternatives, front_of)
