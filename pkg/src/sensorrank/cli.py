"""Command-line front end.

Six subcommands cover the workflow end to end: ``generate`` a synthetic
catalog, ``rank`` it under explicit weights, ``fronts`` for the Pareto
stratification, ``verify`` the fast stratification kernel against the
pairwise oracle, ``experiment`` for a full factorial run, and
``summarize`` to turn a results table into boxplot statistics.

Results go to files (or stdout where noted); progress and timing go to
standard error. Every ``experiment`` run writes its fully resolved plan
next to its outputs so the run can be repeated exactly.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

import numpy as np

from .catalog import (
    CatalogSpec,
    RANKING_FIELDS,
    catalog_to_matrix,
    generate_catalog,
    load_catalog,
    save_catalog,
)
from .core import CriterionSpec, Direction, WeightVector, build_matrix
from .mcda import ALGORITHMS, VikorParams, rank_saw, rank_topsis, rank_vikor
from .pareto import KERNEL_BACKEND, brute_force_fronts, pareto_fronts
from .experiment import (
    emit_results,
    emit_summary,
    plan_from_dict,
    read_results,
    run_experiment,
    save_plan,
)

RESOLVED_PLAN_NAME = "plan.resolved.json"
RESULTS_NAME = "results.csv"
SUMMARY_NAME = "summary.csv"


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _parse_ranges(items: list[str]) -> dict[str, tuple[float, float]] | None:
    ranges: dict[str, tuple[float, float]] = {}
    for item in items:
        field, sep, span = item.partition("=")
        low, colon, high = span.partition(":")
        if not sep or not colon:
            raise ValueError(f"bad --range {item!r}, expected FIELD=LOW:HIGH")
        try:
            ranges[field] = (float(low), float(high))
        except ValueError:
            raise ValueError(f"bad --range {item!r}, bounds must be numbers") from None
    return ranges or None


def _parse_criteria(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def cmd_generate(args: argparse.Namespace) -> int:
    spec = CatalogSpec(count=args.count, seed=args.seed, ranges=_parse_ranges(args.range))
    sensors = generate_catalog(spec)
    save_catalog(sensors, args.out)
    print(f"wrote {len(sensors)} sensors to {args.out}", file=sys.stderr)
    return 0


def cmd_rank(args: argparse.Namespace) -> int:
    sensors = load_catalog(args.catalog)
    criteria = _parse_criteria(args.criteria)
    matrix = catalog_to_matrix(sensors, criteria)
    if args.weights:
        weights = WeightVector(tuple(float(w) for w in args.weights.split(",")))
    else:
        weights = WeightVector((1.0 / matrix.n,) * matrix.n)
    if len(weights) != matrix.n:
        raise ValueError(f"{len(weights)} weights for {matrix.n} criteria")

    if args.algorithm == "SAW":
        ranked = rank_saw(matrix, weights)
    elif args.algorithm == "TOPSIS":
        ranked = rank_topsis(matrix, weights)
    else:
        ranked = rank_vikor(matrix, weights, VikorParams(v=args.vikor_v))

    top = args.top if args.top is not None else matrix.m
    if not 1 <= top <= matrix.m:
        raise ValueError(f"--top must be in [1, {matrix.m}], got {top}")
    lines = ["rank,id,score"]
    lines += [
        f"{pos},{ident},{ranked.scores[ident]:.12g}"
        for pos, ident in enumerate(ranked.order[:top], start=1)
    ]
    _write_text("\n".join(lines) + "\n", args.out)
    return 0


def cmd_fronts(args: argparse.Namespace) -> int:
    sensors = load_catalog(args.catalog)
    matrix = catalog_to_matrix(sensors, _parse_criteria(args.criteria))
    strat = pareto_fronts(matrix)
    _write_text(strat.to_table(), args.out)
    print(
        f"{matrix.m} sensors fall into {strat.num_fronts} fronts", file=sys.stderr
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    rng = np.random.default_rng(args.seed)
    for trial in range(args.trials):
        m = int(rng.integers(2, args.max_rows + 1))
        n = int(rng.integers(2, 7))
        vals = rng.uniform(-10.0, 10.0, size=(m, n))
        if trial % 2:
            vals = np.round(vals, 1)
        matrix = build_matrix(
            [f"r{i}" for i in range(m)],
            [CriterionSpec(f"c{j}", Direction.MINIMIZE) for j in range(n)],
            vals,
        )
        if pareto_fronts(matrix).front_index != brute_force_fronts(matrix).front_index:
            print(f"MISMATCH on trial {trial} (m={m}, n={n})", file=sys.stderr)
            return 1
    print(
        f"verified {args.trials} random stratifications against the pairwise "
        f"oracle ({KERNEL_BACKEND} kernel)",
        file=sys.stderr,
    )
    return 0


def cmd_experiment(args: argparse.Namespace) -> int:
    if args.plan:
        with open(args.plan, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{args.plan}: not valid JSON ({exc.msg})") from exc
        if not isinstance(data, dict):
            raise ValueError(f"{args.plan}: plan file must hold a JSON object")
    else:
        data = {}

    if args.master_seed is not None:
        data["master_seed"] = args.master_seed
    if args.catalog is not None:
        data["catalog"] = args.catalog
    if args.count is not None:
        if isinstance(data.get("catalog"), str):
            raise ValueError("--count does not apply when the catalog is a file")
        data.setdefault("catalog", {})["count"] = args.count
    if args.replications is not None:
        data["replications"] = args.replications
    if args.fractions is not None:
        data["selection_fractions"] = [float(f) for f in args.fractions.split(",")]
    if args.vikor_v is not None:
        data["vikor_v"] = args.vikor_v

    plan = plan_from_dict(data)
    os.makedirs(args.out_dir, exist_ok=True)
    save_plan(plan, os.path.join(args.out_dir, RESOLVED_PLAN_NAME))

    records = run_experiment(plan)

    want_summary = args.summary or args.front_cap is not None or args.suppress_outliers
    results_path = os.path.join(args.out_dir, RESULTS_NAME)
    summary_path = os.path.join(args.out_dir, SUMMARY_NAME) if want_summary else None
    emit_results(
        records,
        results_path,
        summary_path=summary_path,
        front_cap=args.front_cap,
        suppress_outliers=args.suppress_outliers,
    )
    print(f"wrote {len(records)} records to {results_path}", file=sys.stderr)
    if summary_path:
        print(f"wrote summary to {summary_path}", file=sys.stderr)
    return 0


def cmd_summarize(args: argparse.Namespace) -> int:
    records = read_results(args.results)
    emit_summary(
        records,
        args.out,
        front_cap=args.front_cap,
        suppress_outliers=args.suppress_outliers,
    )
    print(f"summarized {len(records)} records into {args.out}", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sensorrank",
        description="Rank synthetic sensor catalogs and score selections "
        "against Pareto fronts.",
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress progress logging on stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a synthetic sensor catalog")
    p.add_argument("--count", type=int, required=True, help="number of sensors")
    p.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p.add_argument(
        "--range",
        action="append",
        default=[],
        metavar="FIELD=LOW:HIGH",
        help="override a field's uniform range; repeatable",
    )
    p.add_argument("--out", required=True, help="catalog file to write")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("rank", help="rank a catalog under explicit weights")
    p.add_argument("--catalog", required=True, help="catalog file")
    p.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    p.add_argument(
        "--criteria",
        required=True,
        help=f"comma-separated subset of: {', '.join(RANKING_FIELDS)}",
    )
    p.add_argument(
        "--weights",
        help="comma-separated weights summing to 1 (default: equal weights)",
    )
    p.add_argument("--vikor-v", type=float, default=0.5, help="VIKOR v (default 0.5)")
    p.add_argument("--top", type=int, help="only print the top K rows")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("fronts", help="export the Pareto stratification")
    p.add_argument("--catalog", required=True, help="catalog file")
    p.add_argument("--criteria", required=True, help="comma-separated criteria")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_fronts)

    p = sub.add_parser(
        "verify", help="check the stratification kernel against the pairwise oracle"
    )
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-rows", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="run a factorial benchmark plan")
    p.add_argument("--plan", help="JSON plan file (defaults apply when omitted)")
    p.add_argument("--out-dir", required=True, help="directory for outputs")
    p.add_argument("--master-seed", type=int, help="override the plan's master seed")
    p.add_argument("--catalog", help="use a saved catalog file instead of generating")
    p.add_argument("--count", type=int, help="override the generated catalog size")
    p.add_argument("--replications", type=int, help="override the replication count")
    p.add_argument("--fractions", help="override selection fractions, e.g. 0.01,0.1")
    p.add_argument("--vikor-v", type=float, help="override VIKOR v")
    p.add_argument(
        "--summary", action="store_true", help="also write boxplot summary CSV"
    )
    p.add_argument(
        "--front-cap", type=int, help="drop summary rows beyond this front (implies --summary)"
    )
    p.add_argument(
        "--suppress-outliers",
        action="store_true",
        help="omit the outlier_count summary column (implies --summary)",
    )
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("summarize", help="boxplot statistics from a results CSV")
    p.add_argument("--results", required=True, help="results CSV to read")
    p.add_argument("--out", default=SUMMARY_NAME, help="summary CSV to write")
    p.add_argument("--front-cap", type=int, help="drop rows beyond this front")
    p.add_argument(
        "--suppress-outliers",
        action="store_true",
        help="omit the outlier_count column",
    )
    p.set_defaults(func=cmd_summarize)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
