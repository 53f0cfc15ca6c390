"""
Field helpers shared by the MEDLINE and ISI parsers.

Both formats reduce a record block to an ordered list of (tag, value) pairs
before any mapping onto the Record model happens.
"""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Sequence, Tuple

from src.corpus.models import Record, Source

_YEAR_RE = re.compile(r"\d{4}")

MALFORMED_TAG = "_MALFORMED"

Fields = List[Tuple[str, str]]


def clean(value: Optional[str]) -> Optional[str]:
    """Collapse whitespace, return None for blank."""
    if not value:
        return None
    value = " ".join(value.split())
    return value or None


def extract_year(value: Optional[str]) -> Optional[int]:
    """First 4-digit run, e.g. '2010 Mar' -> 2010."""
    if not value:
        return None
    m = _YEAR_RE.search(value)
    return int(m.group(0)) if m else None


def group(fields: Fields) -> Dict[str, List[str]]:
    grouped: Dict[str, List[str]] = {}
    for tag, value in fields:
        grouped.setdefault(tag, []).append(value)
    return grouped


def build_record(
    record_id: str,
    source: Source,
    fields: Fields,
    *,
    id_tag: str,
    author_tags: Sequence[str],
    title_tag: str,
    abstract_tag: str,
    journal_tags: Sequence[str],
    year_tag: str,
) -> Record:
    """
    Map tagged values onto a Record.

    The first available tag of ``author_tags``/``journal_tags`` wins; every
    value not consumed by the mapping lands in ``raw_fields`` so nothing of the
    source record is lost. Repeated raw tags are joined with newlines.
    """
    grouped = group(fields)
    consumed: Dict[str, int] = {id_tag: 1}

    authors: List[str] = []
    for tag in author_tags:
        if grouped.get(tag):
            authors = [a for a in (clean(v) for v in grouped[tag]) if a]
            consumed[tag] = len(grouped[tag])
            break

    journal = None
    for tag in journal_tags:
        if grouped.get(tag) and clean(grouped[tag][0]):
            journal = clean(grouped[tag][0])
            consumed[tag] = 1
            break

    def first(tag: str) -> Optional[str]:
        if tag not in grouped:
            return None
        consumed[tag] = 1
        return clean(grouped[tag][0])

    title = first(title_tag)
    abstract = first(abstract_tag)
    year_text = first(year_tag)
    year = extract_year(year_text)
    if year_text and year is None:
        consumed.pop(year_tag)

    raw: Dict[str, str] = {}
    seen: Dict[str, int] = {}
    for tag, value in fields:
        seen[tag] = seen.get(tag, 0) + 1
        if seen[tag] <= consumed.get(tag, 0):
            continue
        raw[tag] = f"{raw[tag]}\n{value}" if tag in raw else value

    return Record(
        id=record_id,
        source=source,
        authors=tuple(authors),
        title=title,
        journal=journal,
        year=year,
        abstract=abstract,
        raw_fields=raw,
    )
