"""Multi-criteria sensor selection benchmark.

Ranks synthetic smart-object catalogs with SAW, TOPSIS, and VIKOR under
weighted criteria, stratifies the catalog into Pareto fronts, and scores
how much of each front a top-k selection captures.
"""

from .core import (
    CriterionSpec,
    DecisionMatrix,
    Direction,
    RankedList,
    WeightVector,
    build_matrix,
    evaluate_objectives,
    select_top_k,
)
from .mcda import ALGORITHMS, VikorParams, rank_saw, rank_topsis, rank_vikor
from .pareto import (
    KERNEL_BACKEND,
    ParetoStratification,
    brute_force_fronts,
    dominates,
    pareto_fronts,
)
from .metrics import BoxplotSummary, FrontCoverage, OnvgrReport, onvgr_per_front, summarize
from .catalog import (
    CatalogSpec,
    SensorDescription,
    catalog_to_matrix,
    generate_catalog,
    load_catalog,
    save_catalog,
)
from .experiment import (
    ExperimentPlan,
    ResultRecord,
    default_plan,
    emit_results,
    load_plan,
    read_results,
    run_experiment,
    sample_weights,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BoxplotSummary",
    "CatalogSpec",
    "CriterionSpec",
    "DecisionMatrix",
    "Direction",
    "ExperimentPlan",
    "FrontCoverage",
    "KERNEL_BACKEND",
    "OnvgrReport",
    "ParetoStratification",
    "RankedList",
    "ResultRecord",
    "SensorDescription",
    "VikorParams",
    "WeightVector",
    "brute_force_fronts",
    "build_matrix",
    "catalog_to_matrix",
    "default_plan",
    "dominates",
    "emit_results",
    "evaluate_objectives",
    "generate_catalog",
    "load_catalog",
    "load_plan",
    "onvgr_per_front",
    "pareto_fronts",
    "rank_saw",
    "rank_topsis",
    "rank_vikor",
    "read_results",
    "run_experiment",
    "sample_weights",
    "save_catalog",
    "select_top_k",
    "summarize",
    "__version__",
]
