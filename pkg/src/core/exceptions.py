"""Error hierarchy for bibdedup.

Every error carries a machine-readable code, a human message and optional
details. The CLI maps the two families onto its exit statuses:
``DataError`` -> 2, ``UsageError`` -> 64.
"""
from typing import Any, Dict, Optional


EXIT_OK = 0
EXIT_DATA_ERROR = 2
EXIT_USAGE_ERROR = 64


class BibDedupError(Exception):
    """Base error."""

    exit_code: int = EXIT_DATA_ERROR

    def __init__(
        self,
        error: str,
        message: str,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.error = error
        self.message = message
        self.details = details or {}
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.error,
            "message": self.message,
            "details": self.details,
        }


# ============================================================================
#  DATA ERRORS (exit 2)
# ============================================================================

class DataError(BibDedupError):
    """Input data cannot be used as-is."""
    exit_code = EXIT_DATA_ERROR


class CorpusParseError(DataError):
    """A record file cannot be parsed at all."""
    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(error="PARSE_ERROR", message=message, details=details)


class MissingTerminatorError(CorpusParseError):
    """ISI stream ended inside a record (no ``ER`` line)."""
    def __init__(self, record_id: Optional[str]):
        self.record_id = record_id
        super().__init__(
            message=f"Record {record_id or '<no UT>'} is not terminated by ER",
            details={"record_id": record_id},
        )


class DuplicateRecordError(DataError):
    """Two records of one corpus share an id."""
    def __init__(self, record_id: str):
        super().__init__(
            error="DUPLICATE_RECORD",
            message=f"Record id {record_id} appears more than once",
            details={"record_id": record_id},
        )


class AnchorDictError(DataError):
    """Anchor bigram dictionary cannot be built or loaded."""
    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(error="ANCHOR_DICT_ERROR", message=message, details=details)


class DictionaryError(DataError):
    """Attribute dictionary for similarity scoring is empty or invalid."""
    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(error="DICTIONARY_ERROR", message=message, details=details)


class UnknownRecordError(DataError):
    """A duplicate pair references an id missing from its corpus."""
    def __init__(self, record_id: str, side: str):
        super().__init__(
            error="UNKNOWN_RECORD",
            message=f"{side} record {record_id} does not exist",
            details={"record_id": record_id, "side": side},
        )


class CorpusTooSmallError(DataError):
    """A protocol needs more records than the corpus has."""
    def __init__(self, needed: int, found: int):
        super().__init__(
            error="CORPUS_TOO_SMALL",
            message=f"Corpus has {found} records, at least {needed} needed",
            details={"needed": needed, "found": found},
        )


class GoldStandardError(DataError):
    """Gold file is missing, malformed, or does not cover the pairs."""
    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(error="GOLD_ERROR", message=message, details=details)


# ============================================================================
#  USAGE ERRORS (exit 64)
# ============================================================================

class UsageError(BibDedupError):
    """Caller asked for something that cannot be done."""
    exit_code = EXIT_USAGE_ERROR


class UnknownMethodError(UsageError):
    def __init__(self, name: str):
        super().__init__(
            error="UNKNOWN_METHOD",
            message=f"Unknown method: {name}",
            details={"method": name},
        )


class IndexMismatchError(UsageError):
    """Lookup requested with a method or parameters the index was not built with."""
    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(error="INDEX_MISMATCH", message=message, details=details)


class ConfigError(UsageError):
    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(error="CONFIG_ERROR", message=message, details=details)
