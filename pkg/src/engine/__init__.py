"""Two-phase deduplication pipeline and merge/purge."""
from src.engine.index import KeyIndex, build_index, dedup_by_key, key_values
from src.engine.merge import MergeResult, merge_corpora
from src.engine.pairs import DuplicatePair, pairs_to_frame, read_pairs, write_pairs
from src.engine.similarity import build_dictionary, dedup_by_similarity, pinned_dictionary, shared_dictionary

__all__ = [
    "KeyIndex",
    "build_index",
    "dedup_by_key",
    "key_values",
    "MergeResult",
    "merge_corpora",
    "DuplicatePair",
    "pairs_to_frame",
    "read_pairs",
    "write_pairs",
    "build_dictionary",
    "dedup_by_similarity",
    "pinned_dictionary",
    "shared_dictionary",
]
