"""
Similarity-based deduplication (SVS cosine, CSB Jaccard).

Every test record is scored against every target record, so the work is
O(N*M) scorings. Scoring is batched: test rows are stacked into CSR chunks and
multiplied against the whole target matrix.
"""
from __future__ import annotations

from functools import partial
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from src.core.config import DEFAULT_MIN_COUNT, DEFAULT_THRESHOLD, QUADRATIC_WARN_CELLS, Method
from src.core.exceptions import DictionaryError, UnknownMethodError
from src.corpus.models import Corpus
from src.engine.pairs import DuplicatePair
from src.engine.workers import DEFAULT_CHUNK_SIZE, ordered_map
from src.monitoring.logger import logger
from src.simvec.dictionary import AttributeDictionary, AttributeKind, build_colloc_dictionary, build_word_dictionary
from src.simvec.vectors import SparseVector, Weighting, cosine_block, doc_vector, jaccard_block, to_csr

# (test position, target position, score)
Hit = Tuple[int, int, float]


def build_dictionary(scorer: Method, corpora: Sequence[Corpus], min_count: int = DEFAULT_MIN_COUNT) -> AttributeDictionary:
    if scorer is Method.SVS:
        return build_word_dictionary(corpora, min_count=min_count)
    if scorer is Method.CSB:
        return build_colloc_dictionary(corpora)
    raise UnknownMethodError(scorer.value)


def _kind(scorer: Method) -> AttributeKind:
    return AttributeKind.WORDS if scorer is Method.SVS else AttributeKind.COLLOCATIONS


def shared_dictionary(scorer: Method, corpora: Sequence[Corpus], min_count: int = DEFAULT_MIN_COUNT) -> AttributeDictionary:
    """
    Dictionary over non-empty ``corpora`` for a scan. When nothing survives
    the frequency cut the dictionary is empty and every vector is zero.
    """
    try:
        return build_dictionary(scorer, corpora, min_count)
    except DictionaryError as exc:
        if not any(len(c) for c in corpora):
            raise
        logger.warning(f"{exc.message}; scanning with empty vectors", extra={"method": scorer.value})
        return AttributeDictionary(kind=_kind(scorer), rank={}, min_count=min_count)


def pinned_dictionary(
    scorer: Method,
    corpora: Sequence[Corpus],
    directory: Optional[Path],
    min_count: int = DEFAULT_MIN_COUNT,
) -> Optional[AttributeDictionary]:
    """
    ``directory/<method>.tsv`` when it exists; otherwise the shared dictionary
    of ``corpora``, dumped there so later runs reuse it. None without a
    directory or when a corpus is empty (the scan builds its own or finds nothing).
    """
    if directory is None or not all(len(c) for c in corpora):
        return None
    path = Path(directory) / f"{scorer.value}.tsv"
    if path.exists():
        logger.info(f"Using pinned dictionary {path}", extra={"method": scorer.value})
        return AttributeDictionary.load(path, _kind(scorer), min_count=min_count)

    dictionary = shared_dictionary(scorer, corpora, min_count)
    path.parent.mkdir(parents=True, exist_ok=True)
    dictionary.dump(path)
    return dictionary


def _vectors(
    corpus: Corpus,
    dictionary: AttributeDictionary,
    weighting: Weighting,
    keep_empty: bool,
) -> Tuple[List[int], List[SparseVector]]:
    """Vectors with their corpus positions. Zero vectors are dropped unless ``keep_empty``."""
    positions, vectors = [], []
    for position, record in enumerate(corpus.records):
        v = doc_vector(record, dictionary, weighting)
        if keep_empty or not v.is_zero:
            positions.append(position)
            vectors.append(v)
    return positions, vectors


def _scan_chunk(
    rows: Sequence[Tuple[int, SparseVector]],
    y: sparse.csr_matrix,
    target_positions: np.ndarray,
    scorer: Method,
    threshold: float,
) -> List[Hit]:
    x = to_csr([v for _, v in rows], y.shape[1])
    block = cosine_block(x, y) if scorer is Method.SVS else jaccard_block(x, y)
    keep = block.data > threshold
    test_positions = np.asarray([p for p, _ in rows], dtype=np.int64)
    return [
        (int(test_positions[i]), int(target_positions[j]), float(s))
        for i, j, s in zip(block.row[keep], block.col[keep], block.data[keep])
    ]


def dedup_by_similarity(
    test: Corpus,
    target: Corpus,
    scorer: Method,
    threshold: float = DEFAULT_THRESHOLD,
    unique: bool = False,
    weighting: Weighting = Weighting.BINARY,
    dictionary: Optional[AttributeDictionary] = None,
    min_count: int = DEFAULT_MIN_COUNT,
    n_jobs: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> List[DuplicatePair]:
    """
    Pairs whose score is strictly above ``threshold``.

    Pairs come out in test-corpus order, then target order. With ``unique``
    only the best-scoring target of each test record is kept (ties go to the
    earlier target). The dictionary is built over both corpora unless given.

    SVS never matches a record with a zero vector. CSB always scores binary
    collocation sets, and two records that both have none score 1.0.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    if not scorer.is_similarity:
        raise UnknownMethodError(scorer.value)
    if not len(test) or not len(target):
        return []

    cells = len(test) * len(target)
    if cells > QUADRATIC_WARN_CELLS:
        logger.warning(
            f"Quadratic scan of {len(test)} x {len(target)} = {cells:.2e} pairs",
            extra={"method": scorer.value},
        )

    if dictionary is None:
        dictionary = shared_dictionary(scorer, [test, target], min_count)
    keep_empty = scorer is Method.CSB
    if keep_empty:
        weighting = Weighting.BINARY

    test_positions, test_vectors = _vectors(test, dictionary, weighting, keep_empty)
    target_positions, target_vectors = _vectors(target, dictionary, weighting, keep_empty)
    skipped = (len(test) - len(test_positions), len(target) - len(target_positions))
    if skipped != (0, 0):
        logger.info(
            f"No attributes for {skipped[0]} test and {skipped[1]} target records, never matched",
            extra={"method": scorer.value},
        )
    if not test_vectors or not target_vectors:
        return []

    y = to_csr(target_vectors, len(dictionary))
    scan = partial(
        _scan_chunk,
        y=y,
        target_positions=np.asarray(target_positions, dtype=np.int64),
        scorer=scorer,
        threshold=threshold,
    )
    chunks = ordered_map(scan, list(zip(test_positions, test_vectors)), n_jobs=n_jobs, chunk_size=chunk_size, prefer="threads")
    hits = sorted(hit for chunk in chunks for hit in chunk)

    if unique:
        best = {}
        for t, d, s in hits:
            if t not in best or s > best[t][2]:
                best[t] = (t, d, s)
        hits = [best[t] for t in sorted(best)]

    pairs = [DuplicatePair(test.records[t].id, target.records[d].id, scorer, s) for t, d, s in hits]
    logger.info(
        f"{len(pairs)} pairs above {threshold} from {len(test)} x {len(target)} records",
        extra={"method": scorer.value},
    )
    return pairs
