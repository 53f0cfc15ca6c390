"""
Evaluation protocols.

GOLD  test against target, scored with a caller-supplied gold standard.
FPM   a corpus against itself: every record must be found as its own duplicate.
HPM   one half of a corpus against the other: nothing should be found.

``run_method`` is the single entry point that turns (method, test, target)
into duplicate pairs for any of the eleven methods.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from src.core.config import DEFAULT_SEED, DEFAULT_STOPLIST, DEFAULT_THRESHOLD, Method, Protocol
from src.core.exceptions import ConfigError, CorpusTooSmallError, GoldStandardError
from src.corpus.models import Corpus
from src.engine.index import build_index, dedup_by_key
from src.engine.pairs import DuplicatePair
from src.engine.similarity import dedup_by_similarity, pinned_dictionary
from src.evaluation.gold import GoldStandard
from src.evaluation.metrics import EvalReport, score
from src.keys.anchors import build_anchor_dict
from src.keys.fingerprints import KeyParams
from src.monitoring.logger import logger

MC_MISS_PREFIX = "mc-miss:"


@dataclass(frozen=True)
class RunOptions:
    """Method settings shared by every protocol run."""
    params: KeyParams = KeyParams()
    threshold: float = DEFAULT_THRESHOLD
    unique: bool = True
    seed: int = DEFAULT_SEED
    n_jobs: int = 1
    stoplist: FrozenSet[str] = DEFAULT_STOPLIST
    dictionary_dir: Optional[Path] = None


def monte_carlo(gold: GoldStandard, seed: int = DEFAULT_SEED) -> List[DuplicatePair]:
    """
    Random baseline: each gold test record is tagged duplicate with
    probability 0.5. Tagged positives point at their gold target, tagged
    negatives at a synthetic id that can never be right.
    """
    rng = np.random.default_rng(seed)
    draws = rng.random(len(gold))
    pairs = []
    for test_id, draw in zip(gold, draws):
        if draw < 0.5:
            target = gold.target(test_id) or f"{MC_MISS_PREFIX}{test_id}"
            pairs.append(DuplicatePair(test_id, target, Method.MC, 1.0))
    return pairs


def half_split(c: Corpus, seed: int = DEFAULT_SEED) -> Tuple[Corpus, Corpus]:
    """
    Random partition into two halves; the first gets the extra record when
    the size is odd. File order is kept inside each half.
    """
    if len(c) < 2:
        logger.error(f"Cannot split a corpus of {len(c)} records")
        raise CorpusTooSmallError(2, len(c))
    order = np.random.default_rng(seed).permutation(len(c))
    cut = math.ceil(len(c) / 2)
    first = sorted(int(p) for p in order[:cut])
    second = sorted(int(p) for p in order[cut:])
    return c.subset(first), c.subset(second)


def restrict_to_gold(test: Corpus, gold: GoldStandard) -> Corpus:
    """
    The evaluation set is closed: only test records listed in the gold
    standard are deduplicated, and every listed record must exist.
    """
    missing = [t for t in gold if t not in test]
    if missing:
        logger.error(f"{len(missing)} gold test ids are not in the test corpus")
        raise GoldStandardError(
            "Gold standard lists records absent from the test corpus",
            details={"missing": missing[:10], "count": len(missing)},
        )
    if len(gold) == len(test):
        return test
    logger.info(f"Evaluating {len(gold)} of {len(test)} test records listed in the gold standard")
    return test.subset([i for i, r in enumerate(test) if r.id in gold])


def resolve_params(
    method: Method,
    params: KeyParams,
    corpora: Sequence[Corpus],
    stoplist: FrozenSet[str] = DEFAULT_STOPLIST,
) -> KeyParams:
    """BGF without an anchor dictionary gets one built from ``corpora`` minus ``stoplist``."""
    if method is Method.BGF and params.anchor is None:
        return replace(params, anchor=build_anchor_dict(corpora, stoplist=stoplist))
    return params


def run_method(
    method: Method,
    test: Corpus,
    target: Corpus,
    options: RunOptions = RunOptions(),
    gold: Optional[GoldStandard] = None,
) -> List[DuplicatePair]:
    """Duplicate pairs of ``test`` against ``target`` under ``method``."""
    if method is Method.MC:
        if gold is None:
            raise ConfigError("The mc baseline needs a gold standard")
        return monte_carlo(gold, options.seed)

    if method.is_similarity:
        dictionary = pinned_dictionary(method, [test, target], options.dictionary_dir)
        return dedup_by_similarity(
            test, target, method, options.threshold,
            unique=options.unique, dictionary=dictionary, n_jobs=options.n_jobs,
        )

    params = resolve_params(method, options.params, [test, target], options.stoplist)
    index = build_index(target, method, params, n_jobs=options.n_jobs)
    return dedup_by_key(test, index, method, params, unique=options.unique, n_jobs=options.n_jobs)


def run_protocol(
    protocol: Protocol,
    method: Method,
    corpora: Sequence[Corpus],
    options: RunOptions = RunOptions(),
    gold: Optional[GoldStandard] = None,
) -> EvalReport:
    """
    Score one method under ``protocol``.

    corpora: FPM takes one corpus; HPM takes one corpus (split here with
    ``options.seed``) or two halves; GOLD takes (test, target).
    """
    if not corpora:
        raise ConfigError("At least one corpus is required")

    if protocol is Protocol.FPM:
        corpus = corpora[0]
        test, target = corpus, corpus
        gold = GoldStandard.identity(corpus)
    elif protocol is Protocol.HPM:
        if len(corpora) >= 2:
            test, target = corpora[0], corpora[1]
        else:
            test, target = half_split(corpora[0], options.seed)
        gold = GoldStandard.all_negative(test)
    else:
        if gold is None:
            logger.error("GOLD protocol run without a gold standard")
            raise ConfigError("The gold protocol needs a gold file", details={"missing": "gold"})
        if len(corpora) < 2:
            raise ConfigError("The gold protocol needs a test and a target corpus")
        test, target = restrict_to_gold(corpora[0], gold), corpora[1]

    logger.info(
        f"{protocol.value} run: {len(test)} test vs {len(target)} target records",
        extra={"method": method.value},
    )
    pairs = run_method(method, test, target, options, gold)
    report = score(pairs, gold, method.label)
    logger.success(
        f"{protocol.value}: P={report.precision:.3f} R={report.recall:.3f} "
        f"(TP={report.true_positives} FP={report.false_positives} FN={report.false_negatives})",
        extra={"method": method.value},
    )
    return report
