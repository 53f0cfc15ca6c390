"""
Seeded synthetic bibliographic corpora.

Titles and abstracts are drawn from a pseudo-word vocabulary with a skewed
frequency profile, so word and collocation dictionaries behave like real
ones. Records are resampled until their keys are unique for the requested
methods, which makes the corpus duplicate-free by construction.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from src.core.config import DEFAULT_SEED, KEY_METHODS, Method
from src.corpus.models import Corpus, Record, Source
from src.evaluation.gold import GoldStandard
from src.keys.anchors import AnchorDict
from src.keys.fingerprints import KeyParams, build_key
from src.monitoring.logger import logger

_ONSETS = ("b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p", "qu", "r", "s", "t", "v", "w", "z",
           "bl", "br", "ch", "cr", "dr", "fl", "gr", "kl", "ph", "pr", "sk", "sp", "st", "th", "tr")
_VOWELS = ("a", "e", "i", "o", "u", "y", "ai", "ea", "io", "ou")
_CODAS = ("", "", "", "n", "r", "s", "l", "m", "x", "t", "ng")
_INITIALS = "ABCDEFGHJKLMNPRSTVW"

VOCABULARY_SIZE = 4000
JOURNAL_COUNT = 60
YEARS = (1990, 2010)
MAX_ATTEMPTS = 1000

# Methods whose keys a synthetic corpus keeps unique by default.
UNIQUE_METHODS: Tuple[Method, ...] = KEY_METHODS


def _syllable(rng: np.random.Generator) -> str:
    return (
        _ONSETS[rng.integers(len(_ONSETS))]
        + _VOWELS[rng.integers(len(_VOWELS))]
        + _CODAS[rng.integers(len(_CODAS))]
    )


def _word(rng: np.random.Generator, low: int = 1, high: int = 3) -> str:
    return "".join(_syllable(rng) for _ in range(int(rng.integers(low, high + 1))))


class _Generator:
    """Vocabulary, journals and the record sampler for one seed."""

    def __init__(self, seed: int):
        self.rng = np.random.default_rng(seed)
        vocabulary = sorted({_word(self.rng) for _ in range(VOCABULARY_SIZE)})
        self.vocabulary = np.asarray(vocabulary)
        ranks = np.arange(1, len(vocabulary) + 1, dtype=np.float64)
        weights = 1.0 / ranks
        self.rng.shuffle(weights)
        self.cdf = np.cumsum(weights / weights.sum())
        self.journals = [
            f"Journal of {_word(self.rng, 2, 3).capitalize()} {_word(self.rng, 2, 3).capitalize()}"
            for _ in range(JOURNAL_COUNT)
        ]

    def words(self, count: int) -> List[str]:
        picks = np.minimum(np.searchsorted(self.cdf, self.rng.random(count)), len(self.vocabulary) - 1)
        words = [str(self.vocabulary[i]) for i in picks]
        for i in range(count):
            if self.rng.random() < 0.05:
                words[i] = f"{words[i][:3]}{int(self.rng.integers(1, 10))}"
        return words

    def author(self) -> str:
        return f"{_word(self.rng, 2, 3).capitalize()}, {_INITIALS[self.rng.integers(len(_INITIALS))]}"

    def record(self, record_id: str, source: Source) -> Record:
        title_words = self.words(int(self.rng.integers(4, 11)))
        title = " ".join(title_words).capitalize() + "."
        abstract = " ".join(self.words(int(self.rng.integers(40, 121)))).capitalize() + "."
        authors = tuple(self.author() for _ in range(int(self.rng.integers(1, 6))))
        return Record(
            id=record_id,
            source=source,
            authors=authors,
            title=title,
            journal=self.journals[self.rng.integers(len(self.journals))],
            year=int(self.rng.integers(YEARS[0], YEARS[1] + 1)),
            abstract=abstract,
        )


def record_id(source: Source, n: int) -> str:
    if source is Source.WOS:
        return f"WOS:{270000000000 + n:015d}"
    return str(20000000 + n)


def _keys(r: Record, methods: Sequence[Method], params: KeyParams) -> Optional[List[Tuple[Method, str]]]:
    keys = []
    for method in methods:
        key = build_key(r, method, params)
        if key is None:
            return None
        keys.append((method, key.value))
    return keys


def _unique_records(
    gen: _Generator,
    size: int,
    ids: Sequence[str],
    source: Source,
    methods: Sequence[Method],
    params: KeyParams,
    seen: Dict[Method, Set[str]],
) -> List[Record]:
    records = []
    for n in range(size):
        for _ in range(MAX_ATTEMPTS):
            candidate = gen.record(ids[n], source)
            keys = _keys(candidate, methods, params)
            if keys is not None and all(value not in seen[m] for m, value in keys):
                break
        else:
            raise RuntimeError(f"no unique record after {MAX_ATTEMPTS} attempts at position {n}")
        for m, value in keys:
            seen[m].add(value)
        records.append(candidate)
    return records


def synthesize_corpus(
    size: int,
    seed: int = DEFAULT_SEED,
    source: Source = Source.PM,
    unique_methods: Sequence[Method] = UNIQUE_METHODS,
    anchor: Optional[AnchorDict] = None,
    id_offset: int = 0,
) -> Corpus:
    """
    ``size`` title-complete records whose keys are pairwise distinct for every
    method in ``unique_methods``. BGF uniqueness is relative to ``anchor``
    (the pinned dictionary when not given).
    """
    if size < 0:
        raise ValueError("size must be >= 0")
    gen = _Generator(seed)
    params = KeyParams(anchor=anchor or AnchorDict.pinned())
    ids = [record_id(source, id_offset + n) for n in range(size)]
    seen: Dict[Method, Set[str]] = {m: set() for m in unique_methods}
    records = _unique_records(gen, size, ids, source, unique_methods, params, seen)
    logger.info(f"Synthesized {size} {source.value} records (seed {seed})")
    return Corpus(source=source, records=records)


def synthesize_pair(
    test_size: int,
    target_size: int,
    seed: int = DEFAULT_SEED,
    overlap: float = 0.0,
    unique_methods: Sequence[Method] = UNIQUE_METHODS,
    anchor: Optional[AnchorDict] = None,
) -> Tuple[Corpus, Corpus, GoldStandard]:
    """
    A PM test corpus and a WOS target corpus sharing ``overlap`` of the
    smaller one as exact duplicates (same content, each feed's own id).

    Keys are unique over the union, so the only true matches are the shared
    records; the gold standard lists them and marks all other test records
    as non-duplicates.
    """
    if not 0.0 <= overlap <= 1.0:
        raise ValueError("overlap must be in [0, 1]")
    shared = int(round(overlap * min(test_size, target_size)))
    gen = _Generator(seed)
    params = KeyParams(anchor=anchor or AnchorDict.pinned())
    seen: Dict[Method, Set[str]] = {m: set() for m in unique_methods}

    test_ids = [record_id(Source.PM, n) for n in range(test_size)]
    test_records = _unique_records(gen, test_size, test_ids, Source.PM, unique_methods, params, seen)

    target_ids = [record_id(Source.WOS, n) for n in range(target_size)]
    copies = [
        Record(
            id=target_ids[n],
            source=Source.WOS,
            authors=r.authors,
            title=r.title,
            journal=r.journal,
            year=r.year,
            abstract=r.abstract,
        )
        for n, r in enumerate(test_records[:shared])
    ]
    fresh = _unique_records(
        gen, target_size - shared, target_ids[shared:], Source.WOS, unique_methods, params, seen
    )

    test = Corpus(source=Source.PM, records=test_records)
    target = Corpus(source=Source.WOS, records=copies + fresh)
    gold = GoldStandard({
        r.id: (target_ids[n] if n < shared else None) for n, r in enumerate(test_records)
    })
    logger.info(f"Synthesized {test_size} test / {target_size} target records, {shared} shared (seed {seed})")
    return test, target, gold
