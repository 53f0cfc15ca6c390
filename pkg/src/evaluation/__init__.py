"""
Evaluation: gold-standard scoring, the intrinsic protocols and the synthetic
corpora they run on.
"""
from src.evaluation.gold import GoldStandard, load_gold
from src.evaluation.metrics import EvalReport, report_frame, score, write_frame, write_reports
from src.evaluation.perturb import PerturbationKind, PerturbationSpec, perturb
from src.evaluation.protocols import (
    MC_MISS_PREFIX,
    RunOptions,
    half_split,
    monte_carlo,
    run_method,
    run_protocol,
)
from src.evaluation.synthetic import synthesize_corpus, synthesize_pair

__all__ = [
    "GoldStandard",
    "load_gold",
    "EvalReport",
    "report_frame",
    "score",
    "write_frame",
    "write_reports",
    "PerturbationKind",
    "PerturbationSpec",
    "perturb",
    "MC_MISS_PREFIX",
    "RunOptions",
    "half_split",
    "monte_carlo",
    "run_method",
    "run_protocol",
    "synthesize_corpus",
    "synthesize_pair",
]
