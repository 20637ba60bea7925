"""Factorial ranking benchmark over synthetic sensor catalogs.

The harness walks a full factorial plan: algorithm x selection fraction x
criteria set, replicated with fresh random weight vectors. For every cell
and replication it ranks the whole catalog, keeps the top k sensors, and
scores that selection front by front against the catalog's Pareto
stratification. One :class:`ResultRecord` is produced per
(cell, replication, front).

Determinism is end to end. The catalog comes from a seeded
:class:`~sensorrank.catalog.CatalogSpec`; weight vectors come from child
generators derived by hashing (master_seed, criteria_set_index,
replication), so a plan always yields byte-identical output files, and
the three algorithms inside a cell replication see the same weights,
which pairs their comparisons. Stratifications are computed once per
criteria set and shared by every cell that uses it.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import struct
import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .catalog import (
    CRITERION_DIRECTIONS,
    RANKING_FIELDS,
    CatalogSpec,
    SensorDescription,
    catalog_to_matrix,
    generate_catalog,
    load_catalog,
)
from .core import WeightVector, benefit_mask, evaluate_objectives
from .mcda import ALGORITHMS, _order_indices, saw_scores, topsis_scores, vikor_scores
from .pareto import assign_front_indices

log = logging.getLogger(__name__)

DEFAULT_CATALOG_SIZE = 10_000
DEFAULT_FRACTIONS = (0.01, 0.10)
DEFAULT_CRITERIA_SETS = (("battery", "price"), RANKING_FIELDS)

RESULTS_FIELDS = (
    "algorithm",
    "n_criteria",
    "k_selected",
    "replication",
    "weight_vector",
    "front_index",
    "front_size",
    "selected_in_front",
    "onvgr",
)
SUMMARY_KEY_FIELDS = ("algorithm", "n_criteria", "k_selected", "front_index")
SUMMARY_STAT_FIELDS = (
    "median",
    "q1",
    "q3",
    "whisker_low",
    "whisker_high",
    "outlier_count",
    "n",
)


@dataclass(frozen=True)
class ExperimentPlan:
    """Everything a run needs: data source, factors, seeds.

    ``catalog`` is either a :class:`CatalogSpec` to generate from or the
    path of a previously saved catalog file. ``selection_fractions`` are
    stored sorted ascending; each fraction f selects k = round(f * M)
    sensors, at least 1.
    """

    catalog: CatalogSpec | str
    criteria_sets: tuple[tuple[str, ...], ...] = DEFAULT_CRITERIA_SETS
    selection_fractions: tuple[float, ...] = DEFAULT_FRACTIONS
    algorithms: tuple[str, ...] = ALGORITHMS
    replications: int = 100
    master_seed: int = 0
    vikor_v: float = 0.5

    def __post_init__(self) -> None:
        if not isinstance(self.catalog, (CatalogSpec, str)):
            raise ValueError("catalog must be a CatalogSpec or a file path")

        sets = tuple(tuple(str(name) for name in cs) for cs in self.criteria_sets)
        object.__setattr__(self, "criteria_sets", sets)
        if not sets:
            raise ValueError("plan needs at least one criteria set")
        for cs in sets:
            if not 2 <= len(cs) <= 6:
                raise ValueError(f"criteria set {cs!r} must name 2 to 6 criteria")
            if len(set(cs)) != len(cs):
                raise ValueError(f"criteria set {cs!r} repeats a criterion")
            for name in cs:
                if name not in CRITERION_DIRECTIONS:
                    raise ValueError(f"unknown criterion {name!r}")

        fractions = tuple(sorted(float(f) for f in self.selection_fractions))
        object.__setattr__(self, "selection_fractions", fractions)
        if not fractions:
            raise ValueError("plan needs at least one selection fraction")
        if len(set(fractions)) != len(fractions):
            raise ValueError("selection fractions must be distinct")
        for f in fractions:
            if not 0.0 < f <= 1.0:
                raise ValueError(f"selection fraction {f} outside (0, 1]")

        algorithms = tuple(str(a) for a in self.algorithms)
        object.__setattr__(self, "algorithms", algorithms)
        if not algorithms:
            raise ValueError("plan needs at least one algorithm")
        if len(set(algorithms)) != len(algorithms):
            raise ValueError("algorithms must be distinct")
        for a in algorithms:
            if a not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {a!r}")

        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        if not np.isfinite(self.vikor_v) or not 0.0 <= self.vikor_v <= 1.0:
            raise ValueError("vikor_v must lie in [0, 1]")


def default_plan(
    master_seed: int, *, count: int = DEFAULT_CATALOG_SIZE, replications: int = 100
) -> ExperimentPlan:
    """The desk-scale factorial: 3 algorithms x {1%, 10%} x {2, 6} criteria."""
    return ExperimentPlan(
        catalog=CatalogSpec(count=count, seed=master_seed),
        criteria_sets=DEFAULT_CRITERIA_SETS,
        selection_fractions=DEFAULT_FRACTIONS,
        algorithms=ALGORITHMS,
        replications=replications,
        master_seed=master_seed,
    )


@dataclass(frozen=True)
class ResultRecord:
    """One per-front score of one replication of one cell."""

    algorithm: str
    n_criteria: int
    k_selected: int
    replication: int
    weight_vector: tuple[float, ...]
    front_index: int
    front_size: int
    selected_in_front: int
    onvgr: float


def weight_seed(master_seed: int, criteria_set_index: int, replication: int) -> int:
    """Derive the child seed for one (criteria set, replication) pair.

    The three indices are packed as little-endian unsigned 64-bit values,
    hashed with SHA-256, and the first 8 digest bytes are read back as a
    little-endian integer. Bit-exact across platforms.
    """
    packed = struct.pack("<QQQ", master_seed, criteria_set_index, replication)
    return int.from_bytes(hashlib.sha256(packed).digest()[:8], "little")


def weight_rng(
    master_seed: int, criteria_set_index: int, replication: int
) -> np.random.Generator:
    return np.random.default_rng(
        weight_seed(master_seed, criteria_set_index, replication)
    )


def sample_weights(n_criteria: int, rng: np.random.Generator) -> WeightVector:
    """Draw a weight vector uniformly from the standard simplex.

    Normalizing independent standard-exponential draws is the classic
    simplex-uniform construction; it keeps every weight strictly positive
    almost surely.
    """
    if n_criteria < 1:
        raise ValueError("need at least one criterion")
    draws = rng.standard_exponential(n_criteria)
    return WeightVector(tuple(draws / draws.sum()))


def _scores_for(
    algorithm: str,
    values: np.ndarray,
    benefit: np.ndarray,
    weights: np.ndarray,
    vikor_v: float,
) -> tuple[np.ndarray, bool]:
    """Score vector plus the sort direction that puts the best row first."""
    if algorithm == "SAW":
        return saw_scores(values, benefit, weights), False
    if algorithm == "TOPSIS":
        return topsis_scores(values, benefit, weights), False
    if algorithm == "VIKOR":
        return vikor_scores(values, benefit, weights, vikor_v), True
    raise ValueError(f"unknown algorithm {algorithm!r}")


def selection_size(fraction: float, catalog_size: int) -> int:
    """k = round(fraction * M), never below one (half rounds up)."""
    return max(1, math.floor(fraction * catalog_size + 0.5))


def _load_sensors(plan: ExperimentPlan) -> list[SensorDescription]:
    if isinstance(plan.catalog, str):
        return load_catalog(plan.catalog)
    return generate_catalog(plan.catalog)


def run_experiment(plan: ExperimentPlan) -> list[ResultRecord]:
    """Execute a plan and return its records in canonical order.

    Canonical order is cell-major: algorithms in plan order, then criteria
    sets in plan order, then fractions ascending; within a cell,
    replications ascending; within a replication, fronts ascending. The
    returned sequence is what :func:`emit_results` writes.
    """
    started = time.perf_counter()
    sensors = _load_sensors(plan)
    m = len(sensors)
    ks = [selection_size(f, m) for f in plan.selection_fractions]
    log.info("catalog ready: %d sensors, top-k sizes %s", m, ks)

    buckets: dict[tuple[int, int, int], list[ResultRecord]] = {
        (a, c, f): []
        for a in range(len(plan.algorithms))
        for c in range(len(plan.criteria_sets))
        for f in range(len(ks))
    }
    fronts_per_set: list[int] = []

    for cs_idx, criteria in enumerate(plan.criteria_sets):
        t0 = time.perf_counter()
        matrix = catalog_to_matrix(sensors, criteria)
        minimized = evaluate_objectives(matrix)
        benefit = benefit_mask(matrix)
        front_of = assign_front_indices(minimized)
        front_sizes = np.bincount(front_of)[1:]
        num_fronts = len(front_sizes)
        fronts_per_set.append(num_fronts)
        log.info(
            "criteria set %d (%d criteria): %d fronts stratified in %.2fs",
            cs_idx,
            len(criteria),
            num_fronts,
            time.perf_counter() - t0,
        )

        alg_seconds = [0.0] * len(plan.algorithms)
        for rep in range(plan.replications):
            weights = sample_weights(
                len(criteria), weight_rng(plan.master_seed, cs_idx, rep)
            )
            w_arr = weights.as_array()
            for alg_idx, algorithm in enumerate(plan.algorithms):
                t1 = time.perf_counter()
                scores, ascending = _scores_for(
                    algorithm, matrix.values, benefit, w_arr, plan.vikor_v
                )
                order = _order_indices(scores, ascending=ascending)
                alg_seconds[alg_idx] += time.perf_counter() - t1
                for frac_idx, k in enumerate(ks):
                    counts = np.bincount(front_of[order[:k]], minlength=num_fronts + 1)[1:]
                    rows = buckets[alg_idx, cs_idx, frac_idx]
                    for fi in range(num_fronts):
                        rows.append(
                            ResultRecord(
                                algorithm=algorithm,
                                n_criteria=len(criteria),
                                k_selected=k,
                                replication=rep,
                                weight_vector=weights.weights,
                                front_index=fi + 1,
                                front_size=int(front_sizes[fi]),
                                selected_in_front=int(counts[fi]),
                                onvgr=float(counts[fi] / front_sizes[fi]),
                            )
                        )
        for alg_idx, algorithm in enumerate(plan.algorithms):
            log.info(
                "criteria set %d, %s: %d replications ranked in %.2fs",
                cs_idx,
                algorithm,
                plan.replications,
                alg_seconds[alg_idx],
            )

    records: list[ResultRecord] = []
    for alg_idx in range(len(plan.algorithms)):
        for cs_idx in range(len(plan.criteria_sets)):
            for frac_idx in range(len(ks)):
                records.extend(buckets[alg_idx, cs_idx, frac_idx])

    expected = (
        plan.replications
        * len(plan.algorithms)
        * len(plan.selection_fractions)
        * sum(fronts_per_set)
    )
    if len(records) != expected:
        raise RuntimeError(
            f"record count {len(records)} does not match plan arithmetic {expected}"
        )
    log.info(
        "experiment done: %d records in %.2fs", len(records), time.perf_counter() - started
    )
    return records


def format_weight_vector(weights: Sequence[float]) -> str:
    return ";".join(f"{w:.12g}" for w in weights)


def parse_weight_vector(text: str) -> tuple[float, ...]:
    return tuple(float(part) for part in text.split(";"))


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def emit_results(
    records: Iterable[ResultRecord],
    path: str,
    *,
    summary_path: str | None = None,
    front_cap: int | None = None,
    suppress_outliers: bool = False,
) -> None:
    """Write records as CSV; optionally also a boxplot summary table.

    The raw table always carries every record. ``front_cap`` and
    ``suppress_outliers`` shape only the summary: the cap drops summary
    rows for deeper fronts, and suppression omits the outlier_count
    column. Identical records produce byte-identical files.

    Weight vectors are written with 12 significant digits (the documented
    interchange precision); onvgr uses the shortest exact representation,
    so it survives a read back unchanged.
    """
    records = list(records)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(RESULTS_FIELDS) + "\n")
        for r in records:
            fh.write(
                ",".join(
                    (
                        r.algorithm,
                        str(r.n_criteria),
                        str(r.k_selected),
                        str(r.replication),
                        format_weight_vector(r.weight_vector),
                        str(r.front_index),
                        str(r.front_size),
                        str(r.selected_in_front),
                        repr(r.onvgr),
                    )
                )
                + "\n"
            )
    if summary_path is not None:
        emit_summary(
            records,
            summary_path,
            front_cap=front_cap,
            suppress_outliers=suppress_outliers,
        )


def emit_summary(
    records: Iterable[ResultRecord],
    path: str,
    *,
    front_cap: int | None = None,
    suppress_outliers: bool = False,
) -> None:
    """Write per-group boxplot statistics of the onvgr column.

    Groups are (algorithm, n_criteria, k_selected, front_index), in the
    order they first appear in the record stream.
    """
    from .metrics import summarize

    groups: dict[tuple[str, int, int, int], list[float]] = {}
    for r in records:
        if front_cap is not None and r.front_index > front_cap:
            continue
        key = (r.algorithm, r.n_criteria, r.k_selected, r.front_index)
        groups.setdefault(key, []).append(r.onvgr)

    stat_fields = [
        f
        for f in SUMMARY_STAT_FIELDS
        if not (suppress_outliers and f == "outlier_count")
    ]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(SUMMARY_KEY_FIELDS + tuple(stat_fields)) + "\n")
        for (algorithm, n_criteria, k_selected, front_index), samples in groups.items():
            box = summarize(samples)
            cells = [algorithm, str(n_criteria), str(k_selected), str(front_index)]
            for field in stat_fields:
                stat = getattr(box, field)
                cells.append(str(stat) if isinstance(stat, int) else _fmt(stat))
            fh.write(",".join(cells) + "\n")


def read_results(path: str) -> list[ResultRecord]:
    """Load a results CSV written by :func:`emit_results`."""
    expected_header = ",".join(RESULTS_FIELDS)
    records: list[ResultRecord] = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        if header != expected_header:
            raise ValueError(f"unrecognized results header {header!r}")
        for lineno, line in enumerate(fh, start=2):
            parts = line.rstrip("\n").split(",")
            if len(parts) != len(RESULTS_FIELDS):
                raise ValueError(
                    f"line {lineno}: expected {len(RESULTS_FIELDS)} fields, got {len(parts)}"
                )
            records.append(
                ResultRecord(
                    algorithm=parts[0],
                    n_criteria=int(parts[1]),
                    k_selected=int(parts[2]),
                    replication=int(parts[3]),
                    weight_vector=parse_weight_vector(parts[4]),
                    front_index=int(parts[5]),
                    front_size=int(parts[6]),
                    selected_in_front=int(parts[7]),
                    onvgr=float(parts[8]),
                )
            )
    return records


_PLAN_KEYS = frozenset(
    {
        "catalog",
        "algorithms",
        "selection_fractions",
        "criteria_sets",
        "replications",
        "master_seed",
        "vikor_v",
    }
)
_CATALOG_KEYS = frozenset({"count", "seed", "ranges"})


def plan_from_dict(data: Mapping) -> ExperimentPlan:
    """Build a plan from parsed JSON, filling documented defaults.

    Omitted keys fall back to the desk-scale defaults; an omitted catalog
    is generated with the master seed. Unknown keys are rejected rather
    than ignored so plan files fail loudly on typos.
    """
    unknown = set(data) - _PLAN_KEYS
    if unknown:
        raise ValueError(f"unknown plan key(s): {', '.join(sorted(unknown))}")
    master_seed = int(data.get("master_seed", 0))

    raw_catalog = data.get("catalog")
    catalog: CatalogSpec | str
    if raw_catalog is None:
        catalog = CatalogSpec(count=DEFAULT_CATALOG_SIZE, seed=master_seed)
    elif isinstance(raw_catalog, str):
        catalog = raw_catalog
    elif isinstance(raw_catalog, Mapping):
        unknown = set(raw_catalog) - _CATALOG_KEYS
        if unknown:
            raise ValueError(f"unknown catalog key(s): {', '.join(sorted(unknown))}")
        raw_ranges = raw_catalog.get("ranges")
        ranges = (
            {name: (low, high) for name, (low, high) in raw_ranges.items()}
            if raw_ranges
            else None
        )
        catalog = CatalogSpec(
            count=int(raw_catalog.get("count", DEFAULT_CATALOG_SIZE)),
            seed=int(raw_catalog.get("seed", master_seed)),
            ranges=ranges,
        )
    else:
        raise ValueError("catalog must be an object or a file path string")

    return ExperimentPlan(
        catalog=catalog,
        criteria_sets=tuple(
            tuple(cs) for cs in data.get("criteria_sets", DEFAULT_CRITERIA_SETS)
        ),
        selection_fractions=tuple(data.get("selection_fractions", DEFAULT_FRACTIONS)),
        algorithms=tuple(data.get("algorithms", ALGORITHMS)),
        replications=int(data.get("replications", 100)),
        master_seed=master_seed,
        vikor_v=float(data.get("vikor_v", 0.5)),
    )


def plan_to_dict(plan: ExperimentPlan) -> dict:
    """Serialize a plan to the JSON shape :func:`plan_from_dict` reads."""
    if isinstance(plan.catalog, str):
        catalog: str | dict = plan.catalog
    else:
        catalog = {
            "count": plan.catalog.count,
            "seed": plan.catalog.seed,
            "ranges": {name: list(span) for name, span in plan.catalog.ranges.items()},
        }
    return {
        "catalog": catalog,
        "algorithms": list(plan.algorithms),
        "selection_fractions": list(plan.selection_fractions),
        "criteria_sets": [list(cs) for cs in plan.criteria_sets],
        "replications": plan.replications,
        "master_seed": plan.master_seed,
        "vikor_v": plan.vikor_v,
    }


def load_plan(path: str) -> ExperimentPlan:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: plan file must hold a JSON object")
    return plan_from_dict(data)


def save_plan(plan: ExperimentPlan, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(plan_to_dict(plan), fh, indent=2, sort_keys=True)
        fh.write("\n")
