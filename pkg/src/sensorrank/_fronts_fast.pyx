# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled front-assignment kernel.

Same algorithm as ``_fronts_py``: lexicographic insertion with a binary
search over fronts. Front membership is tracked with an intrusive linked
list (``head``/``prev``) so insertion is O(1) and memory stays O(M).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline bint _front_dominates(
    const double[:, ::1] vals,
    const cnp.intp_t[::1] head,
    const cnp.intp_t[::1] prev,
    Py_ssize_t k,
    Py_ssize_t row,
    Py_ssize_t n,
) noexcept:
    cdef Py_ssize_t q = head[k]
    cdef Py_ssize_t j
    cdef bint le, lt
    while q != -1:
        le = True
        lt = False
        for j in range(n):
            if vals[q, j] > vals[row, j]:
                le = False
                break
            if vals[q, j] < vals[row, j]:
                lt = True
        if le and lt:
            return True
        q = prev[q]
    return False


def assign_fronts(objectives):
    """Assign 1-based non-dominated front indices in minimization space.

    Accepts an M x N float array with every column oriented so smaller is
    better; returns an int32 array of per-row front indices. Output is
    identical to ``_fronts_py.assign_fronts``.
    """
    vals_arr = np.ascontiguousarray(objectives, dtype=np.float64)
    if vals_arr.ndim != 2:
        raise ValueError(f"objectives must be 2-D, got {vals_arr.ndim} dimension(s)")
    order_arr = np.lexsort(vals_arr.T[::-1]).astype(np.intp, copy=False)
    front_arr = np.empty(vals_arr.shape[0], dtype=np.int32)
    head_arr = np.full(vals_arr.shape[0] + 1, -1, dtype=np.intp)
    prev_arr = np.empty(vals_arr.shape[0], dtype=np.intp)

    cdef const double[:, ::1] vals = vals_arr
    cdef const cnp.intp_t[::1] order = order_arr
    cdef cnp.int32_t[::1] front_of = front_arr
    cdef cnp.intp_t[::1] head = head_arr
    cdef cnp.intp_t[::1] prev = prev_arr
    cdef Py_ssize_t m = vals.shape[0]
    cdef Py_ssize_t n = vals.shape[1]
    cdef Py_ssize_t nfronts = 0
    cdef Py_ssize_t t, row, lo, hi, mid

    for t in range(m):
        row = order[t]
        lo = 0
        hi = nfronts
        while lo < hi:
            mid = (lo + hi) >> 1
            if _front_dominates(vals, head, prev, mid, row, n):
                lo = mid + 1
            else:
                hi = mid
        if lo == nfronts:
            nfronts += 1
        front_of[row] = lo + 1
        prev[row] = head[lo]
        head[lo] = row
    return front_arr
