"""Timing comparison of the two front-assignment kernels.

Runs the compiled extension and the numpy fallback over the same random
point sets, checks they agree exactly, and prints a timing table. The
small sizes are also cross-checked against the pairwise brute-force
oracle.

Usage: python3 benchmarks/bench_fronts.py [--sizes 1000,10000] [--seed 0]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from sensorrank._fronts_py import assign_fronts as python_kernel
from sensorrank.core import CriterionSpec, Direction, build_matrix
from sensorrank.pareto import ORACLE_CAP, brute_force_fronts

try:
    from sensorrank._fronts_fast import assign_fronts as compiled_kernel
except ImportError:
    compiled_kernel = None


def _time(kernel, values: np.ndarray, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        kernel(values)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,10000", help="comma-separated row counts")
    parser.add_argument("--cols", default="2,6", help="comma-separated column counts")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    cols = [int(c) for c in args.cols.split(",")]
    rng = np.random.default_rng(args.seed)

    if compiled_kernel is None:
        print("compiled kernel not available; timing the fallback only")

    print(f"{'rows':>8} {'cols':>4} {'fronts':>7} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for rows in sizes:
        for n in cols:
            values = rng.uniform(0.0, 1.0, size=(rows, n))
            fronts_py = python_kernel(values)

            if rows <= ORACLE_CAP:
                matrix = build_matrix(
                    [f"r{i}" for i in range(rows)],
                    [CriterionSpec(f"c{j}", Direction.MINIMIZE) for j in range(n)],
                    values,
                )
                oracle = brute_force_fronts(matrix)
                expected = np.array([oracle.front_index[f"r{i}"] for i in range(rows)])
                assert np.array_equal(fronts_py, expected), "fallback disagrees with oracle"

            t_py = _time(python_kernel, values, args.repeats)
            if compiled_kernel is not None:
                assert np.array_equal(compiled_kernel(values), fronts_py), (
                    "kernels disagree"
                )
                t_fast = _time(compiled_kernel, values, args.repeats)
                print(
                    f"{rows:>8} {n:>4} {fronts_py.max():>7} {t_py:>9.4f}s {t_fast:>9.4f}s "
                    f"{t_py / t_fast:>7.1f}x"
                )
            else:
                print(f"{rows:>8} {n:>4} {fronts_py.max():>7} {t_py:>9.4f}s {'-':>10} {'-':>8}")
    print("kernels agree on every case above")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
