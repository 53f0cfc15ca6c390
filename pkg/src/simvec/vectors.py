"""
Document vectors and the two similarity scores.

Vectors are sparse over the dictionary index space. The binary model sets
weight 1 on every attribute present; TF-IDF weighting is optional.
Batched scoring stacks vectors into ``scipy.sparse`` CSR matrices.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from src.core.textkit import DEFAULT_TEXT_CONFIG, TextConfig, collocations
from src.corpus.models import Record
from src.simvec.dictionary import COLLOCATION_SIZES, AttributeDictionary, record_attributes

# Set of 2- and 3-word collocations of one document.
CollocSet = FrozenSet[str]


class Weighting(str, Enum):
    BINARY = "binary"
    TFIDF = "tfidf"


@dataclass(frozen=True)
class SparseVector:
    dict_size: int
    nonzero: Tuple[int, ...] = ()
    weights: Optional[Dict[int, float]] = None

    def __post_init__(self):
        object.__setattr__(self, "nonzero", tuple(sorted(set(self.nonzero))))
        if self.nonzero and self.nonzero[-1] >= self.dict_size:
            raise ValueError(f"index {self.nonzero[-1]} out of range for dictionary of size {self.dict_size}")

    def __hash__(self):
        return hash((self.dict_size, self.nonzero))

    def weight(self, index: int) -> float:
        if self.weights is None:
            return 1.0
        return self.weights.get(index, 0.0)

    @property
    def is_zero(self) -> bool:
        return not self.nonzero

    def norm_sq(self) -> float:
        if self.weights is None:
            return float(len(self.nonzero))
        return sum(self.weight(i) ** 2 for i in self.nonzero)


def doc_vector(
    r: Record,
    dictionary: AttributeDictionary,
    weighting: Weighting = Weighting.BINARY,
    cfg: TextConfig = DEFAULT_TEXT_CONFIG,
) -> SparseVector:
    """Presence vector of the record's attributes that exist in ``dictionary``."""
    rank = dictionary.rank
    present = Counter(rank[a] for a in record_attributes(r, dictionary.kind, cfg) if a in rank)
    if weighting is Weighting.BINARY:
        return SparseVector(len(rank), tuple(present))

    # tf * smoothed idf
    attributes = dictionary.attributes
    n_docs = max(dictionary.n_docs, 1)
    weights = {}
    for index, tf in present.items():
        df = dictionary.doc_freq.get(attributes[index], 0)
        weights[index] = tf * (math.log((1 + n_docs) / (1 + df)) + 1.0)
    return SparseVector(len(rank), tuple(present), weights)


def colloc_set(r: Record, cfg: TextConfig = DEFAULT_TEXT_CONFIG) -> CollocSet:
    return frozenset(collocations(r.text, COLLOCATION_SIZES, cfg))


def cosine(a: SparseVector, b: SparseVector) -> float:
    """Cosine of two vectors over the same dictionary; 0.0 when either is zero."""
    if a.dict_size != b.dict_size:
        raise ValueError(f"dimension mismatch: {a.dict_size} != {b.dict_size}")
    norm_sq_a, norm_sq_b = a.norm_sq(), b.norm_sq()
    if norm_sq_a == 0.0 or norm_sq_b == 0.0:
        return 0.0
    shared = set(a.nonzero).intersection(b.nonzero)
    dot = sum(a.weight(i) * b.weight(i) for i in sorted(shared))
    return min(dot / math.sqrt(norm_sq_a * norm_sq_b), 1.0)


def jaccard(a: CollocSet, b: CollocSet) -> float:
    """|a & b| / |a | b|; 1.0 for two empty sets, 0.0 when only one is empty."""
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    inter = len(a & b)
    return inter / (len(a) + len(b) - inter)


def to_csr(vectors: Sequence[SparseVector], dict_size: int) -> sparse.csr_matrix:
    """Stack vectors as rows of a CSR matrix."""
    indptr = [0]
    indices = []
    data = []
    for v in vectors:
        indices.extend(v.nonzero)
        data.extend(v.weight(i) for i in v.nonzero)
        indptr.append(len(indices))
    return sparse.csr_matrix(
        (np.asarray(data, dtype=np.float64), np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
        shape=(len(vectors), dict_size),
    )


def cosine_block(x: sparse.csr_matrix, y: sparse.csr_matrix) -> sparse.coo_matrix:
    """Cosine of every row of ``x`` against every row of ``y``; zero entries omitted."""
    dots = (x @ y.T).tocoo()
    norm_sq_x = np.asarray(x.multiply(x).sum(axis=1)).ravel()
    norm_sq_y = np.asarray(y.multiply(y).sum(axis=1)).ravel()
    scores = dots.data / np.sqrt(norm_sq_x[dots.row] * norm_sq_y[dots.col])
    return sparse.coo_matrix((np.minimum(scores, 1.0), (dots.row, dots.col)), shape=dots.shape)


def jaccard_block(x: sparse.csr_matrix, y: sparse.csr_matrix) -> sparse.coo_matrix:
    """
    Jaccard of every binary row of ``x`` against every row of ``y``.

    Cells with no overlap are omitted, except where both rows are empty:
    those score 1.0, as in ``jaccard``.
    """
    size_x = np.diff(x.indptr)
    size_y = np.diff(y.indptr)
    if x.shape[1]:
        inter = (x @ y.T).tocoo()
        rows, cols = inter.row, inter.col
        scores = inter.data / (size_x[rows] + size_y[cols] - inter.data)
    else:
        rows = cols = np.empty(0, dtype=np.int64)
        scores = np.empty(0, dtype=np.float64)

    empty_x, empty_y = np.flatnonzero(size_x == 0), np.flatnonzero(size_y == 0)
    if len(empty_x) and len(empty_y):
        both_rows, both_cols = np.meshgrid(empty_x, empty_y, indexing="ij")
        rows = np.concatenate([rows, both_rows.ravel()])
        cols = np.concatenate([cols, both_cols.ravel()])
        scores = np.concatenate([scores, np.ones(both_rows.size)])
    return sparse.coo_matrix((scores, (rows, cols)), shape=(x.shape[0], y.shape[0]))
