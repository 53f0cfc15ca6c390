"""
MEDLINE/PubMed flat-format parser.

MEDLINE format:
  - Records separated by blank lines; "PMID-" opens a record.
  - Each field: tag left-justified to 4 characters + "- " + value.
  - Multi-line values: continuation lines are indented; they are joined to the
    value with a single blank.
  - Multi-value fields (AU, FAU, MH, ...): one tag line per value.

Tag mapping:
  PMID -> id, AU (else FAU) -> authors, TI -> title, AB -> abstract,
  JT (else SO, else TA) -> journal, DP -> year (first 4 digits).
  Any other tag is kept verbatim in raw_fields.
"""
from __future__ import annotations

import re
from typing import List, Optional, Tuple

from src.corpus.fields import MALFORMED_TAG, Fields, build_record, clean
from src.corpus.models import Corpus, Record, RecordError, Source
from src.corpus.reader import Stream, iter_lines
from src.monitoring.logger import logger

_TAG_LINE_RE = re.compile(r"^([A-Z][A-Z0-9]{1,3})\s*- ?(.*)$")

ID_TAG = "PMID"


class _Block:
    """Lines of one record while it is being read."""

    def __init__(self, index: int, byte_start: int):
        self.index = index
        self.byte_start = byte_start
        self.byte_end = byte_start
        self.fields: Fields = []
        self.lines: List[str] = []
        self._tag: Optional[str] = None
        self._parts: List[str] = []

    def has_id(self) -> bool:
        return self._tag == ID_TAG or any(tag == ID_TAG for tag, _ in self.fields)

    def add(self, line: str, byte_end: int) -> None:
        self.lines.append(line)
        self.byte_end = byte_end
        m = _TAG_LINE_RE.match(line)
        if m:
            self._flush()
            self._tag = m.group(1)
            self._parts = [m.group(2).strip()]
        elif line[:1].isspace() and self._tag is not None:
            self._parts.append(line.strip())
        else:
            # Not a tag line and not a continuation: keep it as-is.
            self._flush()
            self.fields.append((MALFORMED_TAG, line))

    def _flush(self) -> None:
        if self._tag is not None:
            self.fields.append((self._tag, " ".join(p for p in self._parts if p)))
        self._tag = None
        self._parts = []

    def close(self) -> Fields:
        self._flush()
        return self.fields


def _to_record(block: _Block) -> Tuple[Optional[Record], Optional[str]]:
    fields = block.close()
    pmid = next((clean(v) for tag, v in fields if tag == ID_TAG), None)
    if not pmid:
        return None, "record has no PMID"
    record = build_record(
        pmid,
        Source.PM,
        fields,
        id_tag=ID_TAG,
        author_tags=("AU", "FAU"),
        title_tag="TI",
        abstract_tag="AB",
        journal_tags=("JT", "SO", "TA"),
        year_tag="DP",
    )
    return record, None


def parse_medline(stream: Stream) -> Corpus:
    """
    Parse a MEDLINE flat file.

    A record without PMID, or repeating an earlier PMID, is skipped and
    reported as a RecordError carrying its byte range; parsing continues.

    Returns:
        Corpus with source PM, records in file order.
    """
    records: List[Record] = []
    errors: List[RecordError] = []
    seen_ids = set()
    block: Optional[_Block] = None
    count = 0

    def finish(b: _Block) -> None:
        record, reason = _to_record(b)
        if record is not None and record.id in seen_ids:
            record, reason = None, f"duplicate PMID {record.id}"
        if record is None:
            logger.warning(f"Skipping MEDLINE record #{b.index} (bytes {b.byte_start}-{b.byte_end}): {reason}", extra={"source": "PM"})
            errors.append(RecordError(b.index, b.byte_start, b.byte_end, reason, "\n".join(b.lines)[:200]))
            return
        seen_ids.add(record.id)
        records.append(record)

    for line, start, end in iter_lines(stream):
        if not line.strip():
            if block is not None:
                finish(block)
                block = None
            continue
        if block is not None and line.startswith(ID_TAG) and block.has_id() and _TAG_LINE_RE.match(line):
            finish(block)
            block = None
        if block is None:
            block = _Block(count, start)
            count += 1
        block.add(line, end)

    if block is not None:
        finish(block)

    logger.debug(f"Parsed {len(records)} MEDLINE records, {len(errors)} skipped", extra={"source": "PM"})
    return Corpus(source=Source.PM, records=records, errors=errors)
