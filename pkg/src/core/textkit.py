"""
Text primitives shared by every key and similarity method.

A word is a run of characters between delimiters. Alphabet characters
(a-z, 0-9) make words; a few extra characters (hyphen, apostrophe) may sit
inside a word but are never alphabet characters.

Case folding is plain ASCII: accented characters pass through unchanged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Set

ASCII_ALPHABET = frozenset("abcdefghijklmnopqrstuvwxyz0123456789")
WORD_EXTRAS = frozenset("-'")
DELIMITERS = frozenset(' _.;:{}()*+,?!%[]"')

_ASCII_LOWER = str.maketrans(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ",
    "abcdefghijklmnopqrstuvwxyz",
)

# A list of tokens, in order, none of them empty.
TokenList = List[str]


class TokenizeMode(str, Enum):
    """How a string is cut into words."""
    DELIMITERS = "delimiters"
    WHITESPACE_ONLY = "whitespace"


@dataclass(frozen=True)
class TextConfig:
    alphabet: FrozenSet[str] = ASCII_ALPHABET
    word_extras: FrozenSet[str] = WORD_EXTRAS
    delimiters: FrozenSet[str] = DELIMITERS

    def __post_init__(self):
        if self.alphabet & self.word_extras or self.alphabet & self.delimiters or self.word_extras & self.delimiters:
            raise ValueError("alphabet, word_extras and delimiters must be pairwise disjoint")
        if " " not in self.delimiters:
            raise ValueError("space must be a delimiter")


DEFAULT_TEXT_CONFIG = TextConfig()


def ascii_lower(s: str) -> str:
    return s.translate(_ASCII_LOWER)


@lru_cache(maxsize=16)
def _delimiter_pattern(delimiters: FrozenSet[str]) -> re.Pattern:
    # whitespace other than the space itself (tabs, newlines) also splits
    chars = "".join(re.escape(c) for c in sorted(delimiters))
    return re.compile(f"[{chars}\\s]+")


def tokenize_words(
    s: str,
    cfg: TextConfig = DEFAULT_TEXT_CONFIG,
    mode: TokenizeMode = TokenizeMode.DELIMITERS,
) -> TokenList:
    """
    Lowercase ``s`` and cut it into words.

    DELIMITERS splits on every delimiter character; WHITESPACE_ONLY splits on
    runs of whitespace and leaves punctuation attached to its word.
    """
    if not s:
        return []
    lowered = ascii_lower(s)
    if mode is TokenizeMode.WHITESPACE_ONLY:
        return lowered.split()
    return [tok for tok in _delimiter_pattern(cfg.delimiters).split(lowered) if tok]


def char_ngrams(s: str, n: int) -> List[str]:
    """All contiguous length-n substrings of ``s``, in order."""
    if n < 1:
        raise ValueError(f"n-gram size must be positive, got {n}")
    return [s[i:i + n] for i in range(len(s) - n + 1)]


def collocations(
    s: str,
    sizes: Iterable[int] = (2, 3),
    cfg: TextConfig = DEFAULT_TEXT_CONFIG,
) -> Set[str]:
    """Every run of ``size`` consecutive words, for each requested size."""
    words = tokenize_words(s, cfg, TokenizeMode.DELIMITERS)
    found: Set[str] = set()
    for size in sizes:
        if size < 1:
            raise ValueError(f"collocation size must be positive, got {size}")
        for i in range(len(words) - size + 1):
            found.add(" ".join(words[i:i + size]))
    return found


def unique_scan(s: str, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> str:
    """
    First occurrence of each alphabet character, in order of first appearance.

    Example:
        "Tor tor" -> "tor"
    """
    alphabet = cfg.alphabet
    return "".join(dict.fromkeys(c for c in ascii_lower(s) if c in alphabet))
