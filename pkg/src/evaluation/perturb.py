"""
Title perturbations that mimic the variants seen between the two feeds:
case changes, "1"/"l" confusions, hyphen handling, punctuation edits and
blanks left by a line break inside a word.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Tuple

import numpy as np

from src.core.textkit import DELIMITERS
from src.corpus.models import Corpus, Record
from src.evaluation.gold import GoldStandard
from src.monitoring.logger import logger

PUNCTUATION = tuple(sorted(DELIMITERS - {" "}))


class PerturbationKind(str, Enum):
    CASE_FLIP = "case_flip"
    L_DIGIT1_SWAP = "l_digit1_swap"
    HYPHEN_SPLIT = "hyphen_split"
    PUNCTUATION_EDIT = "punctuation_edit"
    WHITESPACE_INSERT = "whitespace_insert"


@dataclass(frozen=True)
class PerturbationSpec:
    kind: PerturbationKind
    rate: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.kind, PerturbationKind):
            raise ValueError(f"unsupported perturbation kind: {self.kind!r}")
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"rate must be in [0, 1], got {self.rate}")


def _pick(rng: np.random.Generator, positions: List[int]) -> int:
    return positions[int(rng.integers(len(positions)))]


def _word_spans(title: str, min_len: int) -> List[Tuple[int, int]]:
    spans, start = [], None
    for i, c in enumerate(title + " "):
        if c.isspace():
            if start is not None and i - start >= min_len:
                spans.append((start, i))
            start = None
        elif start is None:
            start = i
    return spans


def case_flip(title: str, rng: np.random.Generator) -> str:
    return title.swapcase()


def l_digit1_swap(title: str, rng: np.random.Generator) -> str:
    """One "1" becomes "l"; without a "1", one "l" becomes "1"."""
    ones = [i for i, c in enumerate(title) if c == "1"]
    if ones:
        i = _pick(rng, ones)
        return title[:i] + "l" + title[i + 1:]
    ells = [i for i, c in enumerate(title) if c == "l"]
    if ells:
        i = _pick(rng, ells)
        return title[:i] + "1" + title[i + 1:]
    return title


def hyphen_split(title: str, rng: np.random.Generator) -> str:
    """One hyphen becomes a blank; without a hyphen, one is put inside a long word."""
    hyphens = [i for i, c in enumerate(title) if c == "-"]
    if hyphens:
        i = _pick(rng, hyphens)
        return title[:i] + " " + title[i + 1:]
    spans = _word_spans(title, 4)
    if not spans:
        return title
    start, end = spans[int(rng.integers(len(spans)))]
    i = int(rng.integers(start + 1, end))
    return title[:i] + "-" + title[i:]


def punctuation_edit(title: str, rng: np.random.Generator) -> str:
    """Drop one punctuation mark, or add one after a word when there is none."""
    marks = [i for i, c in enumerate(title) if c in PUNCTUATION]
    if marks:
        i = _pick(rng, marks)
        return title[:i] + title[i + 1:]
    spans = _word_spans(title, 1)
    if not spans:
        return title
    _, end = spans[int(rng.integers(len(spans)))]
    mark = PUNCTUATION[int(rng.integers(len(PUNCTUATION)))]
    return title[:end] + mark + title[end:]


def whitespace_insert(title: str, rng: np.random.Generator) -> str:
    """A blank inside one word, as left by a line break: "5'-Triphosphate" -> "5 '-Triphosphate"."""
    spans = _word_spans(title, 2)
    if not spans:
        return title
    start, end = spans[int(rng.integers(len(spans)))]
    i = int(rng.integers(start + 1, end))
    return title[:i] + " " + title[i:]


EDITS: Dict[PerturbationKind, Callable[[str, np.random.Generator], str]] = {
    PerturbationKind.CASE_FLIP: case_flip,
    PerturbationKind.L_DIGIT1_SWAP: l_digit1_swap,
    PerturbationKind.HYPHEN_SPLIT: hyphen_split,
    PerturbationKind.PUNCTUATION_EDIT: punctuation_edit,
    PerturbationKind.WHITESPACE_INSERT: whitespace_insert,
}


def perturb(c: Corpus, spec: PerturbationSpec) -> Tuple[Corpus, GoldStandard]:
    """
    Copy ``c`` with each title edited with probability ``spec.rate``.

    Copies keep their ids, so the gold standard maps every copy to the
    original record of the same id. Records without a title are copied as is.
    """
    edit = EDITS[spec.kind]
    rng = np.random.default_rng(spec.seed)
    records: List[Record] = []
    changed = 0
    for record in c:
        if record.title and rng.random() < spec.rate:
            title = edit(record.title, rng)
            if title != record.title:
                changed += 1
                record = record.with_title(title)
        records.append(record)

    perturbed = Corpus(source=c.source, records=records)
    logger.info(f"Perturbed {changed} of {len(c)} titles", extra={"kind": spec.kind.value})
    return perturbed, GoldStandard.identity(c)
