from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Iterator, Tuple, Union

from src.core.exceptions import CorpusParseError
from src.monitoring.logger import logger


class InputFormat(str, Enum):
    AUTO = "auto"
    MEDLINE = "medline"
    ISI = "isi"
    CANONICAL = "canonical"


Stream = Union[IO[bytes], IO[str], Iterable[bytes], Iterable[str]]


def decode_line(raw: bytes) -> str:
    """UTF-8 first, Latin-1 when the line is not valid UTF-8."""
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        return raw.decode("latin-1")


def iter_lines(stream: Stream) -> Iterator[Tuple[str, int, int]]:
    """
    Yield ``(line, byte_start, byte_end)`` with the newline stripped.

    Byte offsets are measured on the raw bytes for binary streams and on the
    UTF-8 encoding for text streams.
    """
    offset = 0
    for raw in stream:
        if isinstance(raw, bytes):
            size = len(raw)
            line = decode_line(raw)
        else:
            size = len(raw.encode("utf-8"))
            line = raw
        if offset == 0 and line.startswith("\ufeff"):
            line = line[1:]
        yield line.rstrip("\r\n"), offset, offset + size
        offset += size


def detect_format(path: Path) -> InputFormat:
    """Decide the input format from the first non-blank line of a file."""
    with open(path, "rb") as fh:
        for raw in fh:
            line = decode_line(raw).lstrip("\ufeff").rstrip("\r\n")
            if not line.strip():
                continue
            if line.startswith("PMID-") or line.startswith("PMID "):
                return InputFormat.MEDLINE
            if line[:3] in {"FN ", "UT ", "PT ", "VR "} or line.strip() == "EF":
                return InputFormat.ISI
            if line.startswith("CORPUS\t") or line.startswith("ID\t"):
                return InputFormat.CANONICAL
            break
    logger.error(f"Cannot detect record format of {path}")
    raise CorpusParseError(f"Cannot detect record format of {path}", details={"path": str(path)})


def read_corpus(file_path: Union[str, Path], fmt: InputFormat = InputFormat.AUTO):
    """
    Read a record file into a Corpus.

    Args:
        file_path: MEDLINE, ISI or canonical file.
        fmt: Input format; AUTO detects it from the first tag.

    Raises:
        FileNotFoundError: If the file does not exist.
        CorpusParseError: If the format cannot be detected or the file is broken.
    """
    from src.corpus.canonical import read_canonical
    from src.corpus.isi import parse_isi
    from src.corpus.medline import parse_medline

    path = Path(file_path)
    logger.info(f"Attempting to read records from {path}")

    if not path.exists():
        logger.error(f"File not found: {path}")
        raise FileNotFoundError(f"Record file not found: {path}")

    if path.stat().st_size == 0:
        fmt = InputFormat.MEDLINE if fmt is InputFormat.AUTO else fmt
    elif fmt is InputFormat.AUTO:
        fmt = detect_format(path)

    parsers = {
        InputFormat.MEDLINE: parse_medline,
        InputFormat.ISI: parse_isi,
        InputFormat.CANONICAL: read_canonical,
    }
    with open(path, "rb") as fh:
        corpus = parsers[fmt](fh)

    logger.info(
        f"Loaded {len(corpus)} records from {path} ({fmt.value}), {corpus.skipped} skipped",
        extra={"source": corpus.source.value},
    )
    return corpus
