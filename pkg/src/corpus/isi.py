"""
Web of Science / ISI export parser.

ISI format:
  - Optional file header ("FN ...", "VR ...").
  - Each field: 2-character tag + blank + value; continuation lines are
    indented. For multi-value tags (AU, AF, ...) every continuation line is a
    new value; for the others it continues the text and is joined with a blank.
  - "ER" closes a record, "EF" closes the file.

Tag mapping:
  UT -> id (kept as printed, "WOS:" prefix included), AU (else AF) -> authors,
  TI -> title, AB -> abstract, SO -> journal, PY -> year.
"""
from __future__ import annotations

import re
from typing import List, Optional

from src.core.exceptions import MissingTerminatorError
from src.corpus.fields import MALFORMED_TAG, Fields, build_record, clean
from src.corpus.models import Corpus, Record, RecordError, Source
from src.corpus.reader import Stream, iter_lines
from src.monitoring.logger import logger

_TAG_LINE_RE = re.compile(r"^([A-Z][A-Z0-9])(?: (.*))?$")

ID_TAG = "UT"
HEADER_TAGS = {"FN", "VR"}
MULTI_VALUE_TAGS = {"AU", "AF", "BA", "BF", "BE", "CA", "GP", "CR", "C1", "EM", "RI", "OI"}


def parse_isi(stream: Stream) -> Corpus:
    """
    Parse an ISI export.

    A record without UT, or repeating an earlier UT, is skipped and reported
    as a RecordError; parsing continues.

    Raises:
        MissingTerminatorError: the stream ends inside a record.
    """
    records: List[Record] = []
    errors: List[RecordError] = []
    seen_ids = set()

    fields: Optional[Fields] = None
    lines: List[str] = []
    tag: Optional[str] = None
    parts: List[str] = []
    index = 0
    byte_start = byte_end = 0

    def flush() -> None:
        nonlocal tag, parts
        if tag is not None and fields is not None:
            fields.append((tag, " ".join(p for p in parts if p)))
        tag, parts = None, []

    def dangling_id() -> Optional[str]:
        flush()
        return next((clean(v) for t, v in (fields or []) if t == ID_TAG), None)

    for line, start, end in iter_lines(stream):
        if not line.strip():
            continue
        m = _TAG_LINE_RE.match(line)
        head = m.group(1) if m else None

        if fields is None:
            if head == "EF":
                break
            if head in HEADER_TAGS or head == "ER":
                continue
            fields, lines, byte_start = [], [], start

        byte_end = end
        if head == "ER":
            flush()
            ut = next((clean(v) for t, v in fields if t == ID_TAG), None)
            reason = None
            if not ut:
                reason = "record has no UT"
            elif ut in seen_ids:
                reason = f"duplicate UT {ut}"
            if reason:
                logger.warning(f"Skipping ISI record #{index} (bytes {byte_start}-{byte_end}): {reason}", extra={"source": "WOS"})
                errors.append(RecordError(index, byte_start, byte_end, reason, "\n".join(lines)[:200]))
            else:
                seen_ids.add(ut)
                records.append(build_record(
                    ut,
                    Source.WOS,
                    fields,
                    id_tag=ID_TAG,
                    author_tags=("AU", "AF"),
                    title_tag="TI",
                    abstract_tag="AB",
                    journal_tags=("SO",),
                    year_tag="PY",
                ))
            fields = None
            index += 1
            continue

        if head == "EF":
            logger.error("ISI stream closed (EF) inside an open record", extra={"source": "WOS"})
            raise MissingTerminatorError(dangling_id())

        lines.append(line)
        if m:
            flush()
            tag = head
            parts = [(m.group(2) or "").strip()]
        elif line[:1].isspace() and tag is not None:
            if tag in MULTI_VALUE_TAGS:
                current = tag
                flush()
                tag, parts = current, [line.strip()]
            else:
                parts.append(line.strip())
        else:
            flush()
            fields.append((MALFORMED_TAG, line))

    if fields is not None:
        record_id = dangling_id()
        logger.error(f"ISI stream ended inside record {record_id}", extra={"source": "WOS"})
        raise MissingTerminatorError(record_id)

    logger.debug(f"Parsed {len(records)} ISI records, {len(errors)} skipped", extra={"source": "WOS"})
    return Corpus(source=Source.WOS, records=records, errors=errors)
