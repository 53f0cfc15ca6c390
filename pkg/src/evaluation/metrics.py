"""
Gold-standard scoring and the per-method comparison table.

A report row has the seven comparison columns: gold duplicates, predicted,
TP, FP, FN, precision, recall. Precision and recall of an empty denominator
are 1.0.
"""
from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, List, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.config import OutputFormat
from src.core.exceptions import GoldStandardError
from src.engine.pairs import DuplicatePair
from src.evaluation.gold import GoldStandard
from src.monitoring.logger import logger

REPORT_COLUMNS = [
    "method",
    "gold_duplicates",
    "predicted",
    "true_positives",
    "false_positives",
    "false_negatives",
    "precision",
    "recall",
]


def _ratio(num: int, den: int) -> float:
    return num / den if den else 1.0


class EvalReport(BaseModel):
    """Confusion counts and the two derived ratios for one method."""
    model_config = ConfigDict(frozen=True)

    method: Optional[str] = None
    gold_duplicates: int = Field(..., ge=0)
    predicted: int = Field(..., ge=0)
    true_positives: int = Field(..., ge=0)
    false_positives: int = Field(..., ge=0)
    false_negatives: int = Field(..., ge=0)
    precision: float = Field(..., ge=0.0, le=1.0)
    recall: float = Field(..., ge=0.0, le=1.0)

    @model_validator(mode="after")
    def counts_are_consistent(self):
        if self.predicted != self.true_positives + self.false_positives:
            raise ValueError("predicted must equal TP + FP")
        if self.gold_duplicates != self.true_positives + self.false_negatives:
            raise ValueError("gold duplicates must equal TP + FN")
        if self.precision != _ratio(self.true_positives, self.predicted):
            raise ValueError("precision does not match the counts")
        if self.recall != _ratio(self.true_positives, self.gold_duplicates):
            raise ValueError("recall does not match the counts")
        return self

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int, method: Optional[str] = None) -> "EvalReport":
        return cls(
            method=method,
            gold_duplicates=tp + fn,
            predicted=tp + fp,
            true_positives=tp,
            false_positives=fp,
            false_negatives=fn,
            precision=_ratio(tp, tp + fp),
            recall=_ratio(tp, tp + fn),
        )


def score(pairs: Iterable[DuplicatePair], gold: GoldStandard, method: Optional[str] = None) -> EvalReport:
    """
    Confusion counts of ``pairs`` against ``gold``.

    A pair is a true positive when its target is the gold target of its test
    record; every other pair is a false positive. A gold duplicate with no
    correct pair is a false negative. Repeated pairs count once.

    Raises:
        GoldStandardError: a pair's test record is not in the gold standard.
    """
    tp = fp = 0
    found = set()
    seen = set()
    for p in pairs:
        if p.test_id not in gold:
            logger.error(f"Pair test record {p.test_id} is not in the gold standard")
            raise GoldStandardError(
                f"Test record {p.test_id} is not covered by the gold standard",
                details={"test_id": p.test_id, "target_id": p.target_id},
            )
        if (p.test_id, p.target_id) in seen:
            continue
        seen.add((p.test_id, p.target_id))
        if gold.target(p.test_id) == p.target_id:
            tp += 1
            found.add(p.test_id)
        else:
            fp += 1
        if method is None:
            method = p.method.label

    fn = gold.positives - len(found)
    report = EvalReport.from_counts(tp, fp, fn, method)
    logger.debug(f"TP={tp} FP={fp} FN={fn} P={report.precision:.3f} R={report.recall:.3f}", extra={"method": method})
    return report


def report_frame(reports: Sequence[EvalReport]) -> pd.DataFrame:
    """One row per method, comparison-table columns."""
    return pd.DataFrame([r.model_dump() for r in reports], columns=REPORT_COLUMNS)


def write_frame(df: pd.DataFrame, out: Union[str, Path, IO[str]], fmt: OutputFormat = OutputFormat.TSV) -> None:
    if fmt is OutputFormat.JSON:
        df.to_json(out, orient="records", indent=2, double_precision=6)
    else:
        df.to_csv(out, sep="\t", index=False, float_format="%.3f", lineterminator="\n")


def write_reports(reports: List[EvalReport], out: Union[str, Path, IO[str]], fmt: OutputFormat = OutputFormat.TSV) -> None:
    write_frame(report_frame(reports), out, fmt)
