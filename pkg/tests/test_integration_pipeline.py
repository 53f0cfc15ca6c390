"""
Integration test for the full deduplication pipeline.
- Generates a seeded PubMed/WoS corpus pair with scripts/generate_corpora.py
- Parses both flat files
- Deduplicates with every compared method
- Scores the pairs against the generated gold standard
- Merges the two corpora with the MGF pairs
"""
import subprocess
import sys
from pathlib import Path

import pandas as pd
import pytest

from src.__main__ import main
from src.corpus.canonical import read_canonical
from src.corpus.reader import read_corpus
from src.engine.pairs import read_pairs
from src.evaluation.gold import load_gold

ROOT = Path(__file__).resolve().parents[1]
TEST_SIZE = 60
TARGET_SIZE = 80
OVERLAP = 0.25


@pytest.fixture(scope="module")
def generated(tmp_path_factory):
    out = tmp_path_factory.mktemp("corpora")
    subprocess.run(
        [
            sys.executable, str(ROOT / "scripts" / "generate_corpora.py"),
            "--out", str(out),
            "--test-size", str(TEST_SIZE),
            "--target-size", str(TARGET_SIZE),
            "--overlap", str(OVERLAP),
            "--seed", "31",
        ],
        check=True,
        cwd=ROOT,
    )
    return out


def test_generated_files(generated):
    test = read_corpus(generated / "pm.txt")
    target = read_corpus(generated / "wos.txt")
    gold = load_gold(generated / "gold.tsv")
    assert (len(test), len(target)) == (TEST_SIZE, TARGET_SIZE)
    assert len(gold) == TEST_SIZE
    assert gold.positives == int(round(OVERLAP * TEST_SIZE))


def test_full_pipeline(generated, tmp_path):
    pm, wos, gold = generated / "pm.txt", generated / "wos.txt", generated / "gold.tsv"

    # Dedup with every compared method into one pair file
    pairs_path = tmp_path / "pairs.tsv"
    code = main([
        "dedup", "--test", str(pm), "--target", str(wos),
        "--method", "all", "--anchor-dict", "pinned", "--unique", "-o", str(pairs_path),
    ])
    assert code == 0
    pairs = read_pairs(pairs_path)
    assert {p.method.value for p in pairs} >= {"mgf", "tf", "svs", "csb"}

    # Score the pair file against the generated gold standard
    report_path = tmp_path / "report.tsv"
    assert main(["evaluate", "--gold", str(gold), "--pairs", str(pairs_path), "-o", str(report_path)]) == 0
    report = pd.read_csv(report_path, sep="\t").set_index("method")
    for method in ("MGF", "TF", "MTF", "SSF", "SVS", "CSB"):
        assert report.loc[method, "precision"] == 1.0
        assert report.loc[method, "recall"] == 1.0

    # Merge: the shared records are purged from the test side
    merged_path = tmp_path / "merged.txt"
    assert main(["merge", "--test", str(pm), "--target", str(wos), "--method", "mgf", "-o", str(merged_path)]) == 0
    with open(merged_path, encoding="utf-8") as fh:
        merged = read_canonical(fh)
    shared = int(round(OVERLAP * TEST_SIZE))
    assert len(merged) == TEST_SIZE + TARGET_SIZE - shared


def test_canonical_round_trip_through_cli(generated, tmp_path):
    canonical = tmp_path / "pm.canonical"
    assert main(["parse", "--test", str(generated / "pm.txt"), "-o", str(canonical)]) == 0
    keys_flat, keys_canonical = tmp_path / "flat.tsv", tmp_path / "canonical.tsv"
    main(["keys", "--test", str(generated / "pm.txt"), "--method", "mgf,ssf", "-o", str(keys_flat)])
    main(["keys", "--test", str(canonical), "--method", "mgf,ssf", "-o", str(keys_canonical)])
    assert keys_flat.read_bytes() == keys_canonical.read_bytes()


if __name__ == "__main__":
    pytest.main([__file__])
