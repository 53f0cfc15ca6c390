"""
Fingerprint keys.

Each builder turns a Record into a short lowercase Key, or returns None when
the record lacks the field the method needs (a no-key outcome: the record is
left out of that method's candidate set).

Methods:
    AF    surname of the first author
    TF    title, lowercased, whitespace collapsed
    MTF   TF without spaces
    ARDF  surname-journal-year
    SSF   first bigram of each of the first N title words + author bigram
    MGF   first occurrence of each alphabet character of the title
    SMGF  MGF sorted (digits before letters)
    BGF   title bigrams that belong to the anchor dictionary
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from src.core.config import DEFAULT_SSF_N, KEY_METHODS, Method
from src.core.exceptions import ConfigError, UnknownMethodError
from src.core.textkit import (
    DEFAULT_TEXT_CONFIG,
    TextConfig,
    TokenizeMode,
    ascii_lower,
    tokenize_words,
    unique_scan,
)
from src.corpus.models import Record, first_author_surname
from src.keys.anchors import AnchorDict, title_bigrams


@dataclass(frozen=True)
class Key:
    method: Method
    value: str

    def usable(self, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> bool:
        """False for keys made only of separators ("", "--"): they must never match."""
        return any(c in cfg.alphabet for c in self.value)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class KeyParams:
    """Parameters that change key values; an index is only valid for the params it was built with."""
    ssf_n: int = DEFAULT_SSF_N
    anchor: Optional[AnchorDict] = None

    def __post_init__(self):
        if self.ssf_n < 1:
            raise ValueError("ssf_n must be >= 1")


def _normalized_title(r: Record) -> Optional[str]:
    if not r.title:
        return None
    return " ".join(ascii_lower(r.title).split()) or None


def key_af(r: Record) -> Key:
    return Key(Method.AF, first_author_surname(r))


def key_tf(r: Record) -> Optional[Key]:
    title = _normalized_title(r)
    return Key(Method.TF, title) if title else None


def key_mtf(r: Record) -> Optional[Key]:
    title = _normalized_title(r)
    return Key(Method.MTF, title.replace(" ", "")) if title else None


def key_ardf(r: Record) -> Key:
    journal = " ".join(ascii_lower(r.journal or "").split())
    year = str(r.year) if r.year is not None else ""
    return Key(Method.ARDF, f"{first_author_surname(r)}-{journal}-{year}")


def key_ssf(r: Record, n_max: int = DEFAULT_SSF_N, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> Optional[Key]:
    """
    Socio-semantic fingerprint.

    The title is cut on whitespace only, so punctuation stays on its word:
    "(PI3K)" contributes "(p" and "3-Kinase" contributes "3-".
    Words shorter than two characters contribute themselves.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    surname = first_author_surname(r)
    if not r.title or not surname:
        return None
    words = tokenize_words(r.title, cfg, TokenizeMode.WHITESPACE_ONLY)
    if not words:
        return None
    parts = [w[:2] for w in words[:n_max]]
    parts.append(surname[:2])
    return Key(Method.SSF, " ".join(parts))


def key_mgf(r: Record, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> Optional[Key]:
    if not r.title:
        return None
    return Key(Method.MGF, unique_scan(r.title, cfg))


def key_smgf(r: Record, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> Optional[Key]:
    mgf = key_mgf(r, cfg)
    if mgf is None:
        return None
    return Key(Method.SMGF, "".join(sorted(mgf.value)))


def key_bgf(r: Record, anchors: AnchorDict, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> Optional[Key]:
    """Title bigrams present in the anchor dictionary, repeats kept, in order."""
    if not r.title:
        return None
    return Key(Method.BGF, " ".join(b for b in title_bigrams(r.title, cfg) if b in anchors))


_BUILDERS: Dict[Method, Callable[[Record, KeyParams], Optional[Key]]] = {
    Method.AF: lambda r, p: key_af(r),
    Method.TF: lambda r, p: key_tf(r),
    Method.MTF: lambda r, p: key_mtf(r),
    Method.ARDF: lambda r, p: key_ardf(r),
    Method.SSF: lambda r, p: key_ssf(r, p.ssf_n),
    Method.MGF: lambda r, p: key_mgf(r),
    Method.SMGF: lambda r, p: key_smgf(r),
    Method.BGF: lambda r, p: key_bgf(r, p.anchor),
}


def check_params(method: Method, params: KeyParams) -> None:
    if method not in KEY_METHODS:
        raise UnknownMethodError(method.value)
    if method is Method.BGF and params.anchor is None:
        raise ConfigError("BGF keys need an anchor dictionary")


def build_key(r: Record, method: Method, params: KeyParams = KeyParams()) -> Optional[Key]:
    """
    Key of ``r`` under ``method``; None when the record cannot be keyed or the
    key carries no alphabet character.
    """
    key = _BUILDERS[method](r, params)
    if key is None or not key.usable():
        return None
    return key
