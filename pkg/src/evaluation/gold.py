"""
Gold standard: for each evaluated test record, its true target or none.

File format: TSV "test_id<TAB>target_id", with "-" marking a known
non-duplicate. No header.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, Mapping, Optional, Union

import pandas as pd

from src.core.exceptions import GoldStandardError
from src.corpus.models import Corpus
from src.monitoring.logger import logger

NO_DUPLICATE = "-"


@dataclass(frozen=True)
class GoldStandard:
    entries: Mapping[str, Optional[str]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, test_id: object) -> bool:
        return test_id in self.entries

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def target(self, test_id: str) -> Optional[str]:
        return self.entries[test_id]

    @property
    def positives(self) -> int:
        return sum(1 for t in self.entries.values() if t is not None)

    @classmethod
    def identity(cls, corpus: Corpus) -> "GoldStandard":
        """Every record is its own duplicate (corpus against itself)."""
        return cls({r.id: r.id for r in corpus})

    @classmethod
    def all_negative(cls, corpus: Corpus) -> "GoldStandard":
        return cls({r.id: None for r in corpus})

    def save(self, path: Union[str, Path]) -> None:
        df = pd.DataFrame(
            [(k, v if v is not None else NO_DUPLICATE) for k, v in self.entries.items()],
            columns=["test_id", "target_id"],
        )
        df.to_csv(path, sep="\t", index=False, header=False, lineterminator="\n")


def load_gold(path: Union[str, Path]) -> GoldStandard:
    """
    Read a gold TSV.

    Raises:
        GoldStandardError: unreadable file, wrong column count or a test id
            listed twice.
    """
    path = Path(path)
    if not path.is_file():
        logger.error(f"Gold file not found: {path}")
        raise GoldStandardError(f"Gold file not found: {path}", details={"path": str(path)})
    if path.stat().st_size == 0:
        return GoldStandard()

    try:
        df = pd.read_csv(path, sep="\t", header=None, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, ValueError) as exc:
        logger.error(f"Cannot read gold file {path}: {exc}")
        raise GoldStandardError(f"Cannot read gold file {path}: {exc}") from exc

    if df.shape[1] != 2:
        raise GoldStandardError(
            f"Gold file {path} must have 2 columns, found {df.shape[1]}",
            details={"columns": int(df.shape[1])},
        )
    df.columns = ["test_id", "target_id"]
    df["test_id"] = df["test_id"].str.strip()
    df["target_id"] = df["target_id"].str.strip()

    repeated = df["test_id"][df["test_id"].duplicated()].unique().tolist()
    if repeated:
        logger.error(f"Gold file {path} lists {len(repeated)} test ids more than once")
        raise GoldStandardError("Gold test ids must be unique", details={"repeated": repeated[:10]})

    entries: Dict[str, Optional[str]] = {
        t: (g if g not in ("", NO_DUPLICATE) else None)
        for t, g in zip(df["test_id"], df["target_id"])
    }
    gold = GoldStandard(entries)
    logger.info(f"Loaded gold standard: {len(gold)} test records, {gold.positives} duplicates")
    return gold
