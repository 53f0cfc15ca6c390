"""Duplicate pairs and their TSV form: test_id<TAB>target_id<TAB>method<TAB>score."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, List, Union

import pandas as pd

from src.core.config import Method
from src.core.exceptions import CorpusParseError
from src.monitoring.logger import logger

PAIR_COLUMNS = ["test_id", "target_id", "method", "score"]


@dataclass(frozen=True)
class DuplicatePair:
    test_id: str
    target_id: str
    method: Method
    score: float = 1.0


def pairs_to_frame(pairs: Iterable[DuplicatePair]) -> pd.DataFrame:
    rows = [(p.test_id, p.target_id, p.method.value, p.score) for p in pairs]
    return pd.DataFrame(rows, columns=PAIR_COLUMNS)


def write_pairs(pairs: Iterable[DuplicatePair], out: Union[str, Path, IO[str]]) -> int:
    df = pairs_to_frame(pairs)
    df.to_csv(out, sep="\t", index=False, header=False, float_format="%.6f", lineterminator="\n")
    return len(df)


def read_pairs(path: Union[str, Path]) -> List[DuplicatePair]:
    """Load a pair TSV written by ``write_pairs``."""
    path = Path(path)
    if path.stat().st_size == 0:
        return []
    try:
        df = pd.read_csv(
            path,
            sep="\t",
            header=None,
            names=PAIR_COLUMNS,
            dtype={"test_id": str, "target_id": str, "method": str},
            keep_default_na=False,
        )
    except (pd.errors.ParserError, ValueError) as exc:
        logger.error(f"Cannot read pair file {path}: {exc}")
        raise CorpusParseError(f"Cannot read pair file {path}: {exc}") from exc
    return [
        DuplicatePair(row.test_id, row.target_id, Method.parse(row.method), float(row.score))
        for row in df.itertuples(index=False)
    ]
