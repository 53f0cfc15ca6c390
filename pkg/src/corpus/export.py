"""
Writers for the two flat input formats.

Used to materialize synthetic corpora as files the parsers read back. Values
are written on one line; repeated raw fields (stored joined by newlines) get
one tag line per value.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterator, List, Union

from src.corpus.fields import MALFORMED_TAG
from src.corpus.models import Corpus, Record
from src.corpus.reader import InputFormat

ISI_HEADER = ("FN Clarivate Analytics Web of Science", "VR 1.0")


def _medline_line(tag: str, value: str) -> str:
    return f"{tag:<4}- {value}"


def _medline_record(r: Record) -> Iterator[str]:
    yield _medline_line("PMID", r.id)
    if r.title:
        yield _medline_line("TI", r.title)
    if r.abstract:
        yield _medline_line("AB", r.abstract)
    for author in r.authors:
        yield _medline_line("AU", author)
    if r.journal:
        yield _medline_line("JT", r.journal)
    if r.year is not None:
        yield _medline_line("DP", str(r.year))
    for tag, value in r.raw_fields.items():
        if tag == MALFORMED_TAG:
            continue
        for v in value.split("\n"):
            yield _medline_line(tag, v)


def _isi_record(r: Record) -> Iterator[str]:
    yield "PT J"
    for i, author in enumerate(r.authors):
        yield f"AU {author}" if i == 0 else f"   {author}"
    if r.title:
        yield f"TI {r.title}"
    if r.journal:
        yield f"SO {r.journal}"
    if r.year is not None:
        yield f"PY {r.year}"
    if r.abstract:
        yield f"AB {r.abstract}"
    for tag, value in r.raw_fields.items():
        if tag == MALFORMED_TAG or tag == "PT":
            continue
        for v in value.split("\n"):
            yield f"{tag} {v}"
    yield f"UT {r.id}"
    yield "ER"


def format_medline(corpus: Corpus) -> str:
    blocks = ["\n".join(_medline_record(r)) for r in corpus]
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def format_isi(corpus: Corpus) -> str:
    lines: List[str] = list(ISI_HEADER)
    for r in corpus:
        lines.extend(_isi_record(r))
        lines.append("")
    lines.append("EF")
    return "\n".join(lines) + "\n"


def write_flat(corpus: Corpus, path: Union[str, Path], fmt: InputFormat) -> None:
    """Write ``corpus`` as a MEDLINE or ISI file."""
    if fmt is InputFormat.MEDLINE:
        text = format_medline(corpus)
    elif fmt is InputFormat.ISI:
        text = format_isi(corpus)
    else:
        raise ValueError(f"cannot write flat format {fmt}")
    Path(path).write_text(text, encoding="utf-8")
