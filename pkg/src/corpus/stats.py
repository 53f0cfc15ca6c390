"""
Corpus content statistics: one row per corpus with document, word, year and
field counts.
"""
from __future__ import annotations

from typing import Mapping

import pandas as pd

from src.core.textkit import DEFAULT_TEXT_CONFIG, TextConfig, TokenizeMode, tokenize_words
from src.corpus.models import Corpus

STATS_COLUMNS = [
    "corpus",
    "docs_read",
    "docs",
    "words",
    "year_range",
    "with_author",
    "with_title",
    "with_source",
]


def corpus_stats(name: str, corpus: Corpus, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> dict:
    """
    Statistics of one corpus.

    docs_read counts every record block of the file, docs only the records
    kept after parsing. words counts title and abstract words.
    """
    df = pd.DataFrame(
        {
            "words": [len(tokenize_words(r.text, cfg, TokenizeMode.DELIMITERS)) for r in corpus],
            "year": pd.array([r.year for r in corpus], dtype="Int64"),
            "author": [bool(r.authors) for r in corpus],
            "title": [bool(r.title) for r in corpus],
            "source": [bool(r.journal) for r in corpus],
        }
    )
    if df.empty:
        years = ""
    else:
        known = df["year"].dropna()
        years = f"{known.min()}-{known.max()}" if len(known) else ""

    return {
        "corpus": name,
        "docs_read": len(corpus) + corpus.skipped,
        "docs": len(corpus),
        "words": int(df["words"].sum()),
        "year_range": years,
        "with_author": int(df["author"].sum()),
        "with_title": int(df["title"].sum()),
        "with_source": int(df["source"].sum()),
    }


def stats_frame(corpora: Mapping[str, Corpus]) -> pd.DataFrame:
    """One ``corpus_stats`` row per named corpus, in mapping order."""
    return pd.DataFrame([corpus_stats(name, c) for name, c in corpora.items()], columns=STATS_COLUMNS)
