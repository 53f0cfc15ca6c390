"""
Uniform record model for both bibliographic feeds.

A Record is immutable once parsed; a Corpus is an ordered, id-indexed
collection of records from one source.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from src.core.exceptions import DuplicateRecordError


class Source(str, Enum):
    PM = "PM"
    WOS = "WOS"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Record:
    id: str
    source: Source
    authors: Tuple[str, ...] = ()
    title: Optional[str] = None
    journal: Optional[str] = None
    year: Optional[int] = None
    abstract: Optional[str] = None
    raw_fields: Mapping[str, str] = field(default_factory=dict)
    first_author: str = field(init=False, default="")

    def __post_init__(self):
        if not self.id:
            raise ValueError("record id must be nonempty")
        object.__setattr__(self, "authors", tuple(self.authors))
        object.__setattr__(self, "raw_fields", dict(self.raw_fields))
        first = self.authors[0] if self.authors else ""
        object.__setattr__(self, "first_author", first.split(",", 1)[0].strip())

    def __hash__(self):
        return hash((self.id, self.source))

    def with_title(self, title: Optional[str]) -> "Record":
        return Record(
            id=self.id,
            source=self.source,
            authors=self.authors,
            title=title,
            journal=self.journal,
            year=self.year,
            abstract=self.abstract,
            raw_fields=self.raw_fields,
        )

    @property
    def text(self) -> str:
        """Title and abstract joined, the content the similarity methods read."""
        return " ".join(part for part in (self.title, self.abstract) if part)


def first_author_surname(r: Record) -> str:
    """
    Lowercase surname of the first author.

    Example:
        "Ayral-Kaloustian, S" -> "ayral-kaloustian"
    """
    return r.first_author.lower()


@dataclass(frozen=True)
class RecordError:
    """A per-record parse failure. Not fatal: other records are still processed."""
    index: int              # 0-based position of the record block in the file
    byte_start: int
    byte_end: int
    reason: str
    raw_snippet: str = ""


@dataclass(frozen=True)
class Corpus:
    source: Source
    records: Tuple[Record, ...] = ()
    errors: Tuple[RecordError, ...] = ()
    by_id: Dict[str, int] = field(init=False, default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        object.__setattr__(self, "errors", tuple(self.errors))
        by_id: Dict[str, int] = {}
        for position, record in enumerate(self.records):
            if record.id in by_id:
                raise DuplicateRecordError(record.id)
            by_id[record.id] = position
        object.__setattr__(self, "by_id", by_id)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[Record]:
        return iter(self.records)

    def __contains__(self, record_id: object) -> bool:
        return record_id in self.by_id

    def get(self, record_id: str) -> Record:
        return self.records[self.by_id[record_id]]

    @property
    def skipped(self) -> int:
        return len(self.errors)

    def subset(self, positions: Sequence[int]) -> "Corpus":
        return Corpus(source=self.source, records=[self.records[p] for p in positions])
