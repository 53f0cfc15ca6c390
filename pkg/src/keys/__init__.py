"""
Fingerprint keys.

Contains:
    - fingerprints: Key, KeyParams and the eight key builders
    - anchors: anchor bigram dictionary for the bigram fingerprint
"""

from .anchors import AnchorDict, DEFAULT_ANCHOR_BIGRAMS, build_anchor_dict, load_stoplist
from .fingerprints import (
    Key,
    KeyParams,
    build_key,
    check_params,
    key_af,
    key_ardf,
    key_bgf,
    key_mgf,
    key_mtf,
    key_smgf,
    key_ssf,
    key_tf,
)

__all__ = [
    "AnchorDict",
    "DEFAULT_ANCHOR_BIGRAMS",
    "Key",
    "KeyParams",
    "build_anchor_dict",
    "build_key",
    "check_params",
    "key_af",
    "key_ardf",
    "key_bgf",
    "key_mgf",
    "key_mtf",
    "key_smgf",
    "key_ssf",
    "key_tf",
    "load_stoplist",
]
