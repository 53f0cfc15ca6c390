"""Merge/purge: the union of two corpora without the test records found as duplicates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.core.exceptions import UnknownRecordError
from src.corpus.models import Corpus, Record, Source
from src.engine.pairs import DuplicatePair
from src.monitoring.logger import logger


@dataclass(frozen=True)
class MergeResult:
    merged: Corpus
    removed: Tuple[DuplicatePair, ...]
    kept_from_test: int
    kept_from_target: int


def merge_corpora(test: Corpus, target: Corpus, pairs: Sequence[DuplicatePair]) -> MergeResult:
    """
    Keep every target record, then every test record not named as ``test_id``
    in any pair. Target-side records survive a match.
    """
    for p in pairs:
        if p.test_id not in test:
            logger.error(f"Pair references unknown test record {p.test_id}")
            raise UnknownRecordError(p.test_id, "test")
        if p.target_id not in target:
            logger.error(f"Pair references unknown target record {p.target_id}")
            raise UnknownRecordError(p.target_id, "target")

    purged = {p.test_id for p in pairs}
    kept_test: List[Record] = [r for r in test if r.id not in purged]
    records = list(target.records) + kept_test

    source = target.source if test.source is target.source else Source.OTHER
    merged = Corpus(source=source, records=records)
    logger.success(
        f"Merged {len(target)} target + {len(kept_test)} test records "
        f"({len(purged)} duplicates purged)"
    )
    return MergeResult(
        merged=merged,
        removed=tuple(pairs),
        kept_from_test=len(kept_test),
        kept_from_target=len(target),
    )
