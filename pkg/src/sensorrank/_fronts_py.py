"""Pure-Python (numpy) front-assignment kernel.

Fallback used when the compiled extension is unavailable. Both kernels
implement the same algorithm and must return identical arrays: rows are
visited in lexicographic order, so every dominator of a row is placed
before the row itself; the fronts that contain a dominator of the current
row then form a prefix of the front list, which makes the target front
binary-searchable.
"""

from __future__ import annotations

import numpy as np


def assign_fronts(objectives: np.ndarray) -> np.ndarray:
    """Assign 1-based non-dominated front indices in minimization space.

    Parameters
    ----------
    objectives:
        M x N float array with every column already oriented so that
        smaller is better (see ``core.evaluate_objectives``).

    Returns
    -------
    int32 array of length M; entry i is the front index of row i.
    """
    vals = np.ascontiguousarray(objectives, dtype=np.float64)
    if vals.ndim != 2:
        raise ValueError(f"objectives must be 2-D, got {vals.ndim} dimension(s)")
    m = vals.shape[0]
    order = np.lexsort(vals.T[::-1])

    front_of = np.empty(m, dtype=np.int32)
    buffers: list[np.ndarray] = []
    counts: list[int] = []

    def dominated_by_front(k: int, p: np.ndarray) -> bool:
        members = buffers[k][: counts[k]]
        le = (members <= p).all(axis=1)
        lt = (members < p).any(axis=1)
        return bool(np.any(le & lt))

    for row in order:
        p = vals[row]
        lo, hi = 0, len(buffers)
        while lo < hi:
            mid = (lo + hi) // 2
            if dominated_by_front(mid, p):
                lo = mid + 1
            else:
                hi = mid
        if lo == len(buffers):
            buffers.append(np.empty((4, vals.shape[1])))
            counts.append(0)
        buf, used = buffers[lo], counts[lo]
        if used == len(buf):
            grown = np.empty((2 * used, vals.shape[1]))
            grown[:used] = buf
            buffers[lo] = buf = grown
        buf[used] = p
        counts[lo] = used + 1
        front_of[row] = lo + 1
    return front_of
