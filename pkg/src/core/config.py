"""
Defaults and run configuration.

Method names are the method acronyms lowercased so every CLI flag and report
row traces back to a row of the comparison table.
"""
from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.exceptions import ConfigError, UnknownMethodError

# ---- Method defaults ----
DEFAULT_THRESHOLD = 0.95
DEFAULT_SSF_N = 8
DEFAULT_ANCHOR_SIZE = 50
DEFAULT_STOPLIST = frozenset({"at", "it", "is"})
DEFAULT_MIN_COUNT = 3           # "more than 2 occurrences"
DEFAULT_SEED = 20100311

# ---- Corpus sizes of the reference benchmark ----
REFERENCE_TEST_SIZE = 7709
REFERENCE_TARGET_SIZE = 12658

# Above this many pairwise scorings the quadratic path warns.
QUADRATIC_WARN_CELLS = 10 ** 8


class Method(str, Enum):
    """The ten compared methods plus the random baseline."""
    SSF = "ssf"
    MGF = "mgf"
    SMGF = "smgf"
    AF = "af"
    TF = "tf"
    MTF = "mtf"
    ARDF = "ardf"
    BGF = "bgf"
    SVS = "svs"
    CSB = "csb"
    MC = "mc"

    @property
    def is_key(self) -> bool:
        return self in KEY_METHODS

    @property
    def is_similarity(self) -> bool:
        return self in (Method.SVS, Method.CSB)

    @property
    def label(self) -> str:
        return self.value.upper()

    @classmethod
    def parse(cls, name: str) -> "Method":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise UnknownMethodError(name) from None


KEY_METHODS = (
    Method.AF, Method.TF, Method.MTF, Method.ARDF,
    Method.SSF, Method.MGF, Method.SMGF, Method.BGF,
)
COMPARED_METHODS = KEY_METHODS + (Method.SVS, Method.CSB)


class Command(str, Enum):
    PARSE = "parse"
    KEYS = "keys"
    DEDUP = "dedup"
    MERGE = "merge"
    EVALUATE = "evaluate"
    BENCHMARK = "benchmark"
    SPLIT = "split"
    STATS = "stats"


class Protocol(str, Enum):
    GOLD = "gold"
    FPM = "fpm"
    HPM = "hpm"


class OutputFormat(str, Enum):
    TSV = "tsv"
    JSON = "json"


# Commands that read a test corpus / a target corpus.
_NEEDS_TEST = {Command.PARSE, Command.KEYS, Command.DEDUP, Command.MERGE, Command.SPLIT, Command.STATS}
_NEEDS_TARGET = {Command.DEDUP, Command.MERGE}


class RunConfig(BaseModel):
    """Validated settings for one CLI run."""
    model_config = ConfigDict(frozen=True)

    command: Command
    test_path: Optional[Path] = None
    target_path: Optional[Path] = None
    methods: List[Method] = Field(default_factory=lambda: [Method.MGF])
    threshold: float = DEFAULT_THRESHOLD
    ssf_n: int = DEFAULT_SSF_N
    anchor_dict_path: Optional[str] = None
    stoplist_path: Optional[Path] = None
    dictionary_dir: Optional[Path] = None
    gold_path: Optional[Path] = None
    pairs_path: Optional[Path] = None
    protocol: Protocol = Protocol.GOLD
    seed: int = DEFAULT_SEED
    output_path: Path
    format: OutputFormat = OutputFormat.TSV
    input_format: str = "auto"
    unique_pairs: bool = False
    jobs: int = 1
    test_size: int = REFERENCE_TEST_SIZE
    target_size: int = REFERENCE_TARGET_SIZE
    scale_check: bool = False

    @field_validator("methods", mode="before")
    @classmethod
    def parse_methods(cls, v):
        if isinstance(v, str):
            v = [v]
        return [m if isinstance(m, Method) else Method.parse(m) for m in v]

    @field_validator("threshold")
    @classmethod
    def threshold_in_unit_interval(cls, v):
        if not 0.0 <= v <= 1.0:
            raise ValueError("threshold must be in [0, 1]")
        return v

    @field_validator("ssf_n", "jobs")
    @classmethod
    def at_least_one(cls, v):
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    @field_validator("test_size", "target_size", "seed")
    @classmethod
    def not_negative(cls, v):
        if v < 0:
            raise ValueError("must be >= 0")
        return v

    @model_validator(mode="after")
    def paths_exist(self):
        if self.command in _NEEDS_TEST:
            _require_file("test", self.test_path)
        if self.command in _NEEDS_TARGET:
            _require_file("target", self.target_path)
        if self.command is Command.EVALUATE:
            if self.protocol is Protocol.GOLD:
                _require_file("gold", self.gold_path)
            if self.pairs_path is None:
                _require_file("test", self.test_path)
                if self.protocol is Protocol.GOLD:
                    _require_file("target", self.target_path)
        for what, path in (("test", self.test_path), ("target", self.target_path), ("pairs", self.pairs_path)):
            if path is not None:
                _require_file(what, path)
        if self.gold_path is not None:
            _require_file("gold", self.gold_path)
        if self.anchor_dict_path not in (None, "pinned"):
            _require_file("anchor dictionary", Path(self.anchor_dict_path))
        if self.stoplist_path is not None:
            _require_file("stoplist", self.stoplist_path)
        return self


def _require_file(what: str, path: Optional[Path]) -> None:
    if path is None:
        raise ConfigError(f"A {what} file is required for this command", details={"missing": what})
    if not Path(path).is_file():
        raise ConfigError(f"{what} file not found: {path}", details={"missing": what, "path": str(path)})
