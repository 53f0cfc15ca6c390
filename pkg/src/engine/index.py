"""
Key-based deduplication: hash index over the target, lookup per test record.

Phase one keys every target record once (O(M)); phase two keys every test
record and looks it up (O(N) hash probes). Records without a usable key are
counted and left out of both phases.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.config import Method
from src.core.exceptions import IndexMismatchError
from src.corpus.models import Corpus, Record
from src.engine.pairs import DuplicatePair
from src.engine.workers import ordered_map
from src.keys.fingerprints import KeyParams, build_key, check_params
from src.monitoring.logger import logger


@dataclass(frozen=True)
class KeyIndex:
    method: Method
    params: KeyParams
    entries: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    missing: Tuple[str, ...] = ()    # target ids that yielded no key

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, key: str) -> Tuple[str, ...]:
        return self.entries.get(key, ())

    @property
    def collisions(self) -> int:
        """Number of keys shared by more than one target record."""
        return sum(1 for ids in self.entries.values() if len(ids) > 1)


def _key_values(records: Sequence[Record], method: Method, params: KeyParams) -> List[Optional[str]]:
    values = []
    for r in records:
        key = build_key(r, method, params)
        values.append(key.value if key is not None else None)
    return values


def key_values(
    corpus: Corpus,
    method: Method,
    params: KeyParams = KeyParams(),
    n_jobs: int = 1,
) -> List[Optional[str]]:
    """Key value of every record in file order (None = no key)."""
    check_params(method, params)
    chunks = ordered_map(partial(_key_values, method=method, params=params), corpus.records, n_jobs=n_jobs)
    return [value for chunk in chunks for value in chunk]


def build_index(
    target: Corpus,
    method: Method,
    params: KeyParams = KeyParams(),
    n_jobs: int = 1,
) -> KeyIndex:
    """
    Index every target record that yields a key.

    Colliding records share one entry; ids stay in file order.
    """
    values = key_values(target, method, params, n_jobs)

    entries: Dict[str, List[str]] = {}
    missing: List[str] = []
    for record, value in zip(target.records, values):
        if value is None:
            missing.append(record.id)
            continue
        entries.setdefault(value, []).append(record.id)

    index = KeyIndex(
        method=method,
        params=params,
        entries={k: tuple(ids) for k, ids in entries.items()},
        missing=tuple(missing),
    )
    logger.info(
        f"Indexed {len(target) - len(missing)} of {len(target)} target records: "
        f"{len(index)} keys, {index.collisions} collisions, {len(missing)} without key",
        extra={"method": method.value},
    )
    return index


def dedup_by_key(
    test: Corpus,
    index: KeyIndex,
    method: Method,
    params: KeyParams = KeyParams(),
    unique: bool = False,
    n_jobs: int = 1,
) -> List[DuplicatePair]:
    """
    Look every test record up in ``index``.

    Emits one pair per matching target id, or only the first target in file
    order when ``unique`` is set. Output follows test-corpus order.
    """
    if index.method is not method or index.params != params:
        logger.error(f"Index built for {index.method.value} cannot serve a {method.value} lookup")
        raise IndexMismatchError(
            "Index was built with a different method or parameters",
            details={"index_method": index.method.value, "method": method.value},
        )

    values = key_values(test, method, params, n_jobs)

    pairs: List[DuplicatePair] = []
    no_key = 0
    collided = 0
    for record, value in zip(test.records, values):
        if value is None:
            no_key += 1
            continue
        targets = index.lookup(value)
        if not targets:
            continue
        if unique:
            if len(targets) > 1:
                collided += 1
                logger.debug(f"{record.id}: key shared by {len(targets)} targets, keeping {targets[0]}")
            targets = targets[:1]
        pairs.extend(DuplicatePair(record.id, t, method, 1.0) for t in targets)

    if collided:
        logger.warning(
            f"{collided} test records matched several targets; first target kept",
            extra={"method": method.value},
        )
    logger.info(
        f"{len(pairs)} pairs from {len(test)} test records ({no_key} without key)",
        extra={"method": method.value},
    )
    return pairs
