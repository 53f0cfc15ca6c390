"""
Anchor bigram dictionary for the bigram fingerprint.

The dictionary holds the most frequent alphabet bigrams of the title words of
the input corpora, after removing a stoplist of ambiguous bigrams.

File format: UTF-8 text, one bigram per line, most frequent first; an optional
"<TAB>count" suffix is ignored on load.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple, Union

from src.core.config import DEFAULT_ANCHOR_SIZE, DEFAULT_STOPLIST
from src.core.exceptions import AnchorDictError
from src.core.textkit import DEFAULT_TEXT_CONFIG, TextConfig, char_ngrams, tokenize_words
from src.corpus.models import Corpus
from src.monitoring.logger import logger

# Pinned 50-entry dictionary of frequent English title bigrams, headed by the
# published "th an re en si er al ce es pa di". Used when a run asks for
# reproducible BGF keys independent of its corpora.
DEFAULT_ANCHOR_BIGRAMS: Tuple[str, ...] = (
    "th", "an", "re", "en", "si", "er", "al", "ce", "es", "pa",
    "di", "in", "on", "ti", "he", "nt", "ra", "ar", "st", "ro",
    "te", "le", "ne", "co", "ic", "or", "ed", "ou", "io", "de",
    "to", "ma", "nd", "ve", "ri", "li", "ea", "ng", "ac", "se",
    "ch", "ol", "pr", "el", "ta", "me", "no", "ni", "id", "hi",
)


@dataclass(frozen=True)
class AnchorDict:
    bigrams: Tuple[str, ...]
    stoplist: FrozenSet[str] = DEFAULT_STOPLIST
    counts: Tuple[int, ...] = ()
    members: FrozenSet[str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bigrams", tuple(self.bigrams))
        object.__setattr__(self, "stoplist", frozenset(self.stoplist))
        bad = [b for b in self.bigrams if len(b) != 2]
        if bad:
            raise AnchorDictError(f"Anchor entries must be bigrams: {bad[:5]}")
        clash = set(self.bigrams) & self.stoplist
        if clash:
            raise AnchorDictError(f"Anchor entries are stoplisted: {sorted(clash)}")
        object.__setattr__(self, "members", frozenset(self.bigrams))

    @property
    def size(self) -> int:
        return len(self.bigrams)

    def __contains__(self, bigram: object) -> bool:
        return bigram in self.members

    def save(self, path: Union[str, Path]) -> None:
        lines = []
        for i, bigram in enumerate(self.bigrams):
            lines.append(f"{bigram}\t{self.counts[i]}" if i < len(self.counts) else bigram)
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info(f"Anchor dictionary ({self.size} bigrams) saved to {path}")

    @classmethod
    def load(cls, path: Union[str, Path], stoplist: Iterable[str] = DEFAULT_STOPLIST) -> "AnchorDict":
        path = Path(path)
        if not path.exists():
            logger.error(f"Anchor dictionary not found: {path}")
            raise AnchorDictError(f"Anchor dictionary not found: {path}")
        bigrams = []
        for line in path.read_text(encoding="utf-8").splitlines():
            entry = line.split("\t", 1)[0].strip()
            if entry:
                bigrams.append(entry)
        logger.info(f"Loaded {len(bigrams)} anchor bigrams from {path}")
        return cls(bigrams=tuple(bigrams), stoplist=frozenset(stoplist))

    @classmethod
    def pinned(cls, stoplist: Iterable[str] = DEFAULT_STOPLIST) -> "AnchorDict":
        return cls(bigrams=DEFAULT_ANCHOR_BIGRAMS, stoplist=frozenset(stoplist))


def load_stoplist(path: Union[str, Path]) -> FrozenSet[str]:
    """One bigram per line; blank lines ignored."""
    path = Path(path)
    if not path.exists():
        logger.error(f"Stoplist not found: {path}")
        raise AnchorDictError(f"Stoplist not found: {path}")
    stop = frozenset(line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip())
    bad = sorted(b for b in stop if len(b) != 2)
    if bad:
        raise AnchorDictError(f"Stoplist entries must be bigrams: {bad[:5]}", details={"path": str(path)})
    logger.info(f"Loaded {len(stop)} stoplisted bigrams from {path}")
    return stop


def title_bigrams(title: Optional[str], cfg: TextConfig = DEFAULT_TEXT_CONFIG):
    """Alphabet bigrams of each title word, word by word, in order."""
    if not title:
        return
    alphabet = cfg.alphabet
    for word in tokenize_words(title, cfg):
        for bigram in char_ngrams(word, 2):
            if bigram[0] in alphabet and bigram[1] in alphabet:
                yield bigram


def build_anchor_dict(
    corpora: Sequence[Corpus],
    size: int = DEFAULT_ANCHOR_SIZE,
    stoplist: Iterable[str] = DEFAULT_STOPLIST,
    cfg: TextConfig = DEFAULT_TEXT_CONFIG,
) -> AnchorDict:
    """
    Count the bigrams of every title word of every corpus and keep the
    ``size`` most frequent ones outside the stoplist.

    Ties are broken lexicographically ascending.

    Raises:
        AnchorDictError: no corpora, or fewer than ``size`` distinct bigrams.
    """
    if not corpora:
        raise AnchorDictError("At least one corpus is required to build an anchor dictionary")
    stop = frozenset(stoplist)
    counts: Counter = Counter()
    for corpus in corpora:
        for record in corpus:
            counts.update(title_bigrams(record.title, cfg))
    for bigram in stop:
        counts.pop(bigram, None)

    if len(counts) < size:
        logger.error(f"Only {len(counts)} distinct bigrams available, {size} requested")
        raise AnchorDictError(
            f"Anchor dictionary needs {size} bigrams but only {len(counts)} are available "
            f"(short by {size - len(counts)})",
            details={"requested": size, "available": len(counts)},
        )

    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))[:size]
    logger.info(f"Built anchor dictionary of {size} bigrams; head: {' '.join(b for b, _ in ranked[:11])}")
    return AnchorDict(
        bigrams=tuple(b for b, _ in ranked),
        stoplist=stop,
        counts=tuple(c for _, c in ranked),
    )
