"""
Attribute dictionaries for the similarity methods.

WORDS: single words of title + abstract, kept when they occur at least
``min_count`` times over all corpora (Salton vector space).
COLLOCATIONS: every 2- and 3-word collocation of title + abstract, no cut
(collocation similarity).

Attributes are ranked in sorted order; the rank is the vector index.
Dump format: "attribute<TAB>index<TAB>count" per line.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from functools import cached_property
from typing import Dict, List, Sequence, Tuple, Union

from src.core.config import DEFAULT_MIN_COUNT
from src.core.exceptions import DictionaryError
from src.core.textkit import DEFAULT_TEXT_CONFIG, TextConfig, TokenizeMode, collocations, tokenize_words
from src.corpus.models import Corpus, Record
from src.monitoring.logger import logger

COLLOCATION_SIZES = (2, 3)


class AttributeKind(str, Enum):
    WORDS = "words"
    COLLOCATIONS = "collocations"


def record_attributes(r: Record, kind: AttributeKind, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> List[str]:
    """Words (with repeats) or collocations (distinct) of a record's title and abstract."""
    text = r.text
    if kind is AttributeKind.WORDS:
        return tokenize_words(text, cfg, TokenizeMode.DELIMITERS)
    return sorted(collocations(text, COLLOCATION_SIZES, cfg))


@dataclass(frozen=True)
class AttributeDictionary:
    kind: AttributeKind
    rank: Dict[str, int]
    counts: Dict[str, int] = field(default_factory=dict, compare=False)
    doc_freq: Dict[str, int] = field(default_factory=dict, compare=False)
    n_docs: int = field(default=0, compare=False)
    min_count: int = DEFAULT_MIN_COUNT

    def __len__(self) -> int:
        return len(self.rank)

    @cached_property
    def attributes(self) -> Tuple[str, ...]:
        """Attributes by index."""
        return tuple(sorted(self.rank, key=self.rank.__getitem__))

    def __contains__(self, attribute: object) -> bool:
        return attribute in self.rank

    def dump(self, path: Union[str, Path]) -> None:
        lines = [f"{a}\t{i}\t{self.counts.get(a, 0)}" for a, i in sorted(self.rank.items(), key=lambda kv: kv[1])]
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
        logger.info(f"Dumped {len(lines)} {self.kind.value} to {path}")

    @classmethod
    def load(cls, path: Union[str, Path], kind: AttributeKind, min_count: int = DEFAULT_MIN_COUNT) -> "AttributeDictionary":
        path = Path(path)
        if not path.exists():
            raise DictionaryError(f"Dictionary not found: {path}")
        rank: Dict[str, int] = {}
        counts: Dict[str, int] = {}
        for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
            if not line:
                continue
            try:
                attribute, index, count = line.split("\t")
                rank[attribute] = int(index)
                counts[attribute] = int(count)
            except ValueError:
                raise DictionaryError(
                    f"Dictionary {path} line {line_no} is not attribute<TAB>index<TAB>count",
                    details={"line": line_no},
                ) from None
        if sorted(rank.values()) != list(range(len(rank))):
            raise DictionaryError(f"Dictionary {path} has gaps in its indices")
        return cls(kind=kind, rank=rank, counts=counts, min_count=min_count)


def _build(
    corpora: Sequence[Corpus],
    kind: AttributeKind,
    min_count: int,
    cfg: TextConfig,
) -> AttributeDictionary:
    if not corpora or not any(len(c) for c in corpora):
        logger.error(f"Cannot build a {kind.value} dictionary from empty corpora")
        raise DictionaryError(f"Cannot build a {kind.value} dictionary from empty corpora")

    counts: Counter = Counter()
    doc_freq: Counter = Counter()
    n_docs = 0
    for corpus in corpora:
        for record in corpus:
            attributes = record_attributes(record, kind, cfg)
            counts.update(attributes)
            doc_freq.update(set(attributes))
            n_docs += 1

    kept = sorted(a for a, c in counts.items() if c >= min_count)
    if not kept:
        logger.error(f"{kind.value} dictionary is empty after the frequency cut (min_count={min_count})")
        raise DictionaryError(
            f"{kind.value} dictionary is empty after the frequency cut",
            details={"min_count": min_count, "candidates": len(counts)},
        )

    logger.info(f"Built {kind.value} dictionary: {len(kept)} of {len(counts)} attributes over {n_docs} documents")
    return AttributeDictionary(
        kind=kind,
        rank={a: i for i, a in enumerate(kept)},
        counts={a: counts[a] for a in kept},
        doc_freq={a: doc_freq[a] for a in kept},
        n_docs=n_docs,
        min_count=min_count,
    )


def build_word_dictionary(
    corpora: Sequence[Corpus],
    min_count: int = DEFAULT_MIN_COUNT,
    cfg: TextConfig = DEFAULT_TEXT_CONFIG,
) -> AttributeDictionary:
    return _build(corpora, AttributeKind.WORDS, min_count, cfg)


def build_colloc_dictionary(
    corpora: Sequence[Corpus],
    cfg: TextConfig = DEFAULT_TEXT_CONFIG,
) -> AttributeDictionary:
    return _build(corpora, AttributeKind.COLLOCATIONS, 1, cfg)
