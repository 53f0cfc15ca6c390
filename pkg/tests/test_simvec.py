"""
Tests for attribute dictionaries, document vectors and the batched
similarity scores, checked against pairwise computations.
"""
import math

import numpy as np
import pytest

from src.core.exceptions import DictionaryError
from src.corpus.models import Corpus, Source
from src.simvec import (
    AttributeDictionary,
    AttributeKind,
    SparseVector,
    Weighting,
    build_colloc_dictionary,
    build_word_dictionary,
    colloc_set,
    cosine,
    doc_vector,
    jaccard,
)
from src.simvec.vectors import cosine_block, jaccard_block, to_csr
from tests.conftest import make_record

VOCABULARY = [f"w{i}" for i in range(40)]


def random_corpus(n_docs: int, seed: int) -> Corpus:
    rng = np.random.default_rng(seed)
    records = []
    for i in range(n_docs):
        words = rng.choice(VOCABULARY, size=int(rng.integers(1, 15)))
        records.append(make_record(str(i), " ".join(words)))
    return Corpus(source=Source.PM, records=records)


@pytest.fixture(scope="module")
def docs():
    return random_corpus(200, seed=11)


class TestDictionaries:

    def test_word_cut(self):
        corpus = Corpus(source=Source.PM, records=[
            make_record("1", "tor tor kinase"),
            make_record("2", "tor kinase rapamycin"),
        ])
        words = build_word_dictionary([corpus], min_count=2)
        assert words.attributes == ("kinase", "tor")
        assert words.counts["tor"] == 3
        assert words.doc_freq["tor"] == 2
        assert "rapamycin" not in words

    def test_collocations_are_not_cut(self):
        corpus = Corpus(source=Source.PM, records=[make_record("1", "mammalian target of rapamycin")])
        colloc = build_colloc_dictionary([corpus])
        assert len(colloc) == 5
        assert colloc.kind is AttributeKind.COLLOCATIONS

    def test_abstract_contributes(self):
        corpus = Corpus(source=Source.PM, records=[make_record("1", "alpha", abstract="beta")])
        assert build_word_dictionary([corpus], min_count=1).attributes == ("alpha", "beta")

    def test_empty_corpora(self):
        with pytest.raises(DictionaryError):
            build_word_dictionary([Corpus(source=Source.PM, records=[])])

    def test_empty_after_cut(self):
        corpus = Corpus(source=Source.PM, records=[make_record("1", "alpha beta")])
        with pytest.raises(DictionaryError) as exc:
            build_word_dictionary([corpus], min_count=3)
        assert exc.value.details["candidates"] == 2

    def test_dump_and_load(self, docs, tmp_path):
        words = build_word_dictionary([docs])
        path = tmp_path / "words.tsv"
        words.dump(path)
        loaded = AttributeDictionary.load(path, AttributeKind.WORDS)
        assert loaded == words
        assert loaded.counts == words.counts

    def test_load_rejects_gaps(self, tmp_path):
        path = tmp_path / "words.tsv"
        path.write_text("alpha\t0\t3\nbeta\t2\t3\n", encoding="utf-8")
        with pytest.raises(DictionaryError):
            AttributeDictionary.load(path, AttributeKind.WORDS)

    def test_load_rejects_malformed_line(self, tmp_path):
        path = tmp_path / "words.tsv"
        path.write_text("alpha\t0\t3\nbeta 1 3\n", encoding="utf-8")
        with pytest.raises(DictionaryError) as exc:
            AttributeDictionary.load(path, AttributeKind.WORDS)
        assert exc.value.details["line"] == 2

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(DictionaryError):
            AttributeDictionary.load(tmp_path / "absent.tsv", AttributeKind.WORDS)


class TestVectors:

    def test_binary_vector(self):
        corpus = Corpus(source=Source.PM, records=[make_record("1", "tor tor kinase"), make_record("2", "tor kinase")])
        words = build_word_dictionary([corpus], min_count=1)
        vector = doc_vector(corpus.get("1"), words)
        assert vector.nonzero == (0, 1)
        assert vector.norm_sq() == 2.0

    def test_out_of_dictionary_is_zero(self):
        corpus = Corpus(source=Source.PM, records=[make_record("1", "tor kinase")])
        words = build_word_dictionary([corpus], min_count=1)
        assert doc_vector(make_record("2", "rapamycin"), words).is_zero

    def test_tfidf_weights(self):
        corpus = Corpus(source=Source.PM, records=[make_record("1", "tor tor kinase"), make_record("2", "kinase")])
        words = build_word_dictionary([corpus], min_count=1)
        vector = doc_vector(corpus.get("1"), words, Weighting.TFIDF)
        kinase, tor = words.rank["kinase"], words.rank["tor"]
        assert vector.weight(kinase) == pytest.approx(1.0)
        assert vector.weight(tor) == pytest.approx(2 * (math.log(3 / 2) + 1.0))

    def test_index_range_checked(self):
        with pytest.raises(ValueError):
            SparseVector(3, (3,))


class TestScores:

    def test_cosine_bounds(self):
        a = SparseVector(4, (0, 1))
        assert cosine(a, a) == pytest.approx(1.0)
        assert cosine(a, SparseVector(4, (2, 3))) == 0.0
        assert cosine(a, SparseVector(4)) == 0.0

    def test_cosine_dimension_mismatch(self):
        with pytest.raises(ValueError):
            cosine(SparseVector(3, (0,)), SparseVector(4, (0,)))

    def test_jaccard_conventions(self):
        assert jaccard(frozenset(), frozenset()) == 1.0
        assert jaccard(frozenset({"a b"}), frozenset()) == 0.0
        assert jaccard(frozenset({"a b", "b c"}), frozenset({"b c", "c d"})) == pytest.approx(1 / 3)

    @pytest.mark.parametrize("weighting", list(Weighting))
    def test_cosine_matches_dense_oracle(self, docs, weighting):
        words = build_word_dictionary([docs], min_count=1)
        vectors = [doc_vector(r, words, weighting) for r in docs]
        x = to_csr(vectors, len(words))

        dense = x.toarray()
        norms = np.sqrt((dense * dense).sum(axis=1))
        oracle = (dense @ dense.T) / np.outer(norms, norms)

        block = cosine_block(x, x).toarray()
        assert len(docs) == 200
        np.testing.assert_allclose(block, oracle, rtol=0, atol=1e-12)
        for i in range(len(docs)):
            for j in range(len(docs)):
                assert abs(cosine(vectors[i], vectors[j]) - oracle[i, j]) <= 1e-12

    def test_jaccard_matches_nested_loop_oracle(self, docs):
        sets = [colloc_set(r) for r in docs]
        assert any(not s for s in sets)

        def counted(a, b):
            if not a and not b:
                return 1.0
            inter = 0
            for element in a:
                for other in b:
                    if element == other:
                        inter += 1
            return inter / (len(a) + len(b) - inter)

        colloc = build_colloc_dictionary([docs])
        vectors = [doc_vector(r, colloc) for r in docs]
        x = to_csr(vectors, len(colloc))
        block = jaccard_block(x, x).toarray()
        for i in range(len(docs)):
            for j in range(len(docs)):
                expected = counted(sets[i], sets[j])
                assert jaccard(sets[i], sets[j]) == expected
                assert block[i, j] == expected

    def test_jaccard_block_without_any_attribute(self):
        empty = to_csr([SparseVector(0), SparseVector(0)], 0)
        block = jaccard_block(empty, to_csr([SparseVector(0)], 0)).toarray()
        assert block.tolist() == [[1.0], [1.0]]

    def test_scores_are_symmetric(self, docs):
        words = build_word_dictionary([docs], min_count=1)
        a, b = doc_vector(docs.get("0"), words), doc_vector(docs.get("1"), words)
        assert cosine(a, b) == cosine(b, a)
        sa, sb = colloc_set(docs.get("0")), colloc_set(docs.get("1"))
        assert jaccard(sa, sb) == jaccard(sb, sa)
