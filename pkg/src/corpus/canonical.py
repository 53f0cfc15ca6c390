"""
Canonical line-oriented serialization of a Corpus.

Layout:
    CORPUS<TAB>PM            first line, corpus source
    <blank>
    ID<TAB>20166753          one field per line
    SRC<TAB>PM
    AU<TAB>Ayral-Kaloustian, S     (one line per author)
    TI<TAB>...
    SO<TAB>...               journal
    PY<TAB>2010
    AB<TAB>...
    RAW:<tag><TAB>...        unrecognized source tags
    <blank>                  record separator

Values are escaped so that each fits on one line: backslash, tab, CR and
newline become \\\\, \\t, \\r and \\n.
"""
from __future__ import annotations

from typing import IO, Dict, List, Optional

from src.core.exceptions import CorpusParseError
from src.corpus.models import Corpus, Record, Source
from src.corpus.reader import Stream, iter_lines
from src.monitoring.logger import logger

HEADER_TAG = "CORPUS"
RAW_PREFIX = "RAW:"

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}


def _escape(value: str) -> str:
    return "".join(_ESCAPES.get(c, c) for c in value)


def _unescape(value: str) -> str:
    if "\\" not in value:
        return value
    out: List[str] = []
    chars = iter(value)
    for c in chars:
        if c == "\\":
            nxt = next(chars, "")
            out.append(_UNESCAPES.get(nxt, nxt))
        else:
            out.append(c)
    return "".join(out)


def _record_lines(record: Record) -> List[str]:
    lines = [f"ID\t{_escape(record.id)}", f"SRC\t{record.source.value}"]
    lines.extend(f"AU\t{_escape(a)}" for a in record.authors)
    if record.title is not None:
        lines.append(f"TI\t{_escape(record.title)}")
    if record.journal is not None:
        lines.append(f"SO\t{_escape(record.journal)}")
    if record.year is not None:
        lines.append(f"PY\t{record.year:04d}")
    if record.abstract is not None:
        lines.append(f"AB\t{_escape(record.abstract)}")
    for tag, value in record.raw_fields.items():
        lines.append(f"{RAW_PREFIX}{_escape(tag)}\t{_escape(value)}")
    return lines


def dumps_canonical(corpus: Corpus) -> str:
    chunks = [f"{HEADER_TAG}\t{corpus.source.value}\n"]
    for record in corpus:
        chunks.append("\n" + "\n".join(_record_lines(record)) + "\n")
    return "".join(chunks)


def write_canonical(corpus: Corpus, out: IO[str]) -> None:
    out.write(dumps_canonical(corpus))


def _build(values: Dict[str, List[str]], raw: Dict[str, str], line_no: int) -> Record:
    if not values.get("ID"):
        raise CorpusParseError(f"Canonical record ending at line {line_no} has no ID")
    year = values.get("PY", [None])[0]
    return Record(
        id=values["ID"][0],
        source=Source(values.get("SRC", [Source.OTHER.value])[0]),
        authors=tuple(values.get("AU", ())),
        title=values.get("TI", [None])[0],
        journal=values.get("SO", [None])[0],
        year=int(year) if year else None,
        abstract=values.get("AB", [None])[0],
        raw_fields=raw,
    )


def read_canonical(stream: Stream) -> Corpus:
    """Inverse of ``write_canonical``."""
    source = Source.OTHER
    records: List[Record] = []
    values: Dict[str, List[str]] = {}
    raw: Dict[str, str] = {}
    line_no = 0

    for line_no, (line, _, _) in enumerate(iter_lines(stream), start=1):
        if not line:
            if values or raw:
                records.append(_build(values, raw, line_no))
                values, raw = {}, {}
            continue
        tag, sep, value = line.partition("\t")
        if not sep:
            logger.error(f"Canonical line {line_no} has no tab separator")
            raise CorpusParseError(f"Canonical line {line_no} has no tab separator", details={"line": line[:200]})
        if tag == HEADER_TAG:
            source = Source(value)
        elif tag.startswith(RAW_PREFIX):
            raw[_unescape(tag[len(RAW_PREFIX):])] = _unescape(value)
        else:
            values.setdefault(tag, []).append(_unescape(value))

    if values or raw:
        records.append(_build(values, raw, line_no))

    return Corpus(source=source, records=records)
