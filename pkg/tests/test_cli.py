"""
CLI tests: every command through ``main``, its outputs and exit codes
(0 success, 2 data error, 64 usage error).
"""
import json

import pandas as pd
import pytest

from src.__main__ import main
from src.core.config import Method
from src.corpus import InputFormat, read_corpus
from src.corpus.canonical import read_canonical
from src.corpus.export import write_flat
from src.engine.pairs import read_pairs
from src.evaluation import synthesize_corpus
from src.evaluation.protocols import resolve_params
from src.keys import KeyParams, build_anchor_dict, build_key

REDD1 = ("20166753", "WOS:000275711400021")
AYRAL = ("20136098", "WOS:000273520400045")


@pytest.fixture
def gold_file(tmp_path):
    path = tmp_path / "gold.tsv"
    path.write_text(f"{REDD1[0]}\t{REDD1[1]}\n{AYRAL[0]}\t{AYRAL[1]}\n18774337\t-\n", encoding="utf-8")
    return path


def _canonical(path):
    with open(path, encoding="utf-8") as fh:
        return read_canonical(fh)


class TestParse:

    def test_canonical_output(self, medline_file, tmp_path):
        out = tmp_path / "pm.canonical"
        assert main(["parse", "--test", str(medline_file), "-o", str(out)]) == 0
        corpus = _canonical(out)
        assert [r.id for r in corpus] == ["20166753", "20136098", "18774337"]

    def test_rerun_is_byte_identical(self, isi_file, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        main(["parse", "--test", str(isi_file), "-o", str(first)])
        main(["parse", "--test", str(isi_file), "-o", str(second)])
        assert first.read_bytes() == second.read_bytes()

    def test_missing_terminator_is_a_data_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("FN x\nVR 1.0\nPT J\nTI Dangling\nUT WOS:000000000000042\n", encoding="utf-8")
        assert main(["parse", "--test", str(bad), "-o", str(tmp_path / "out.txt")]) == 2

    def test_missing_input_is_a_usage_error(self, tmp_path):
        assert main(["parse", "--test", str(tmp_path / "nope.txt"), "-o", str(tmp_path / "out.txt")]) == 64

    def test_argument_error_exits_64(self, medline_file):
        with pytest.raises(SystemExit) as exc:
            main(["parse", "--test", str(medline_file)])
        assert exc.value.code == 64


class TestKeys:

    def test_rows_per_method(self, medline_file, tmp_path):
        out = tmp_path / "keys.tsv"
        assert main(["keys", "--test", str(medline_file), "--method", "mgf,af", "-o", str(out)]) == 0
        df = pd.read_csv(out, sep="\t", header=None, names=["id", "method", "key"], dtype=str)
        assert list(df["method"]) == ["mgf"] * 3 + ["af"] * 3
        assert df.iloc[0]["key"] == "structualnyidfomphegv1"
        assert df[(df["method"] == "af") & (df["id"] == "20136098")]["key"].item() == "ayral-kaloustian"

    def test_bgf_with_pinned_dictionary(self, medline_file, tmp_path):
        out = tmp_path / "keys.tsv"
        assert main(["keys", "--test", str(medline_file), "--method", "bgf", "--anchor-dict", "pinned", "-o", str(out)]) == 0
        assert len(out.read_text(encoding="utf-8").splitlines()) == 3

    def test_similarity_method_rejected(self, medline_file, tmp_path):
        assert main(["keys", "--test", str(medline_file), "--method", "svs", "-o", str(tmp_path / "k.tsv")]) == 64

    def test_unknown_method(self, medline_file, tmp_path):
        assert main(["keys", "--test", str(medline_file), "--method", "soundex", "-o", str(tmp_path / "k.tsv")]) == 64


class TestDedup:

    def test_mgf_pairs(self, medline_file, isi_file, tmp_path):
        out = tmp_path / "pairs.tsv"
        code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "mgf", "-o", str(out)])
        assert code == 0
        assert [(p.test_id, p.target_id) for p in read_pairs(out)] == [REDD1, AYRAL]

    def test_several_methods_share_one_file(self, medline_file, isi_file, tmp_path):
        out = tmp_path / "pairs.tsv"
        main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "mgf", "--method", "tf", "-o", str(out)])
        methods = [p.method.value for p in read_pairs(out)]
        assert methods == ["mgf", "mgf", "tf"]

    def test_rerun_is_byte_identical(self, medline_file, isi_file, tmp_path):
        outputs = []
        for name, jobs in (("a.tsv", "1"), ("b.tsv", "2")):
            out = tmp_path / name
            main(["dedup", "--test", str(medline_file), "--target", str(isi_file),
                  "--method", "all", "--anchor-dict", "pinned", "--jobs", jobs, "-o", str(out)])
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_threshold_out_of_range(self, medline_file, isi_file, tmp_path):
        code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file),
                     "--method", "svs", "--threshold", "1.5", "-o", str(tmp_path / "p.tsv")])
        assert code == 64

    def test_missing_target(self, medline_file, tmp_path):
        assert main(["dedup", "--test", str(medline_file), "-o", str(tmp_path / "p.tsv")]) == 64

    def test_random_baseline_needs_gold(self, medline_file, isi_file, tmp_path):
        code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "mc", "-o", str(tmp_path / "p.tsv")])
        assert code == 64


class TestMerge:

    def test_purges_found_duplicates(self, medline_file, isi_file, tmp_path):
        out = tmp_path / "merged.txt"
        assert main(["merge", "--test", str(medline_file), "--target", str(isi_file), "--method", "mgf", "-o", str(out)]) == 0
        merged = _canonical(out)
        assert [r.id for r in merged] == [AYRAL[1], REDD1[1], "18774337"]

    def test_with_pair_file(self, medline_file, isi_file, tmp_path):
        pairs = tmp_path / "pairs.tsv"
        pairs.write_text(f"{AYRAL[0]}\t{AYRAL[1]}\ttf\t1.000000\n", encoding="utf-8")
        out = tmp_path / "merged.txt"
        main(["merge", "--test", str(medline_file), "--target", str(isi_file), "--pairs", str(pairs), "-o", str(out)])
        assert len(_canonical(out)) == 4

    def test_pair_with_unknown_record(self, medline_file, isi_file, tmp_path):
        pairs = tmp_path / "pairs.tsv"
        pairs.write_text("99999999\tWOS:000273520400045\ttf\t1.000000\n", encoding="utf-8")
        code = main(["merge", "--test", str(medline_file), "--target", str(isi_file), "--pairs", str(pairs), "-o", str(tmp_path / "m.txt")])
        assert code == 2


class TestEvaluate:

    def test_gold_protocol(self, medline_file, isi_file, gold_file, tmp_path):
        out = tmp_path / "report.tsv"
        code = main([
            "evaluate", "--test", str(medline_file), "--target", str(isi_file), "--gold", str(gold_file),
            "--method", "mgf,tf", "-o", str(out),
        ])
        assert code == 0
        df = pd.read_csv(out, sep="\t").set_index("method")
        assert df.loc["MGF", "true_positives"] == 2
        assert df.loc["MGF", "recall"] == 1.0
        assert df.loc["TF", "true_positives"] == 1
        assert df.loc["TF", "false_negatives"] == 1

    def test_existing_pair_file(self, medline_file, isi_file, gold_file, tmp_path):
        pairs = tmp_path / "pairs.tsv"
        main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "mgf,tf", "-o", str(pairs)])
        out = tmp_path / "report.json"
        code = main(["evaluate", "--gold", str(gold_file), "--pairs", str(pairs), "--format", "json", "-o", str(out)])
        assert code == 0
        rows = json.loads(out.read_text(encoding="utf-8"))
        assert [r["method"] for r in rows] == ["MGF", "TF"]
        assert rows[0]["precision"] == 1.0

    def test_full_self_join(self, medline_file, tmp_path):
        out = tmp_path / "report.tsv"
        assert main(["evaluate", "--protocol", "fpm", "--test", str(medline_file), "--method", "mgf", "-o", str(out)]) == 0
        row = pd.read_csv(out, sep="\t").iloc[0]
        assert (row["precision"], row["recall"]) == (1.0, 1.0)

    def test_gold_protocol_needs_gold(self, medline_file, isi_file, tmp_path):
        code = main(["evaluate", "--test", str(medline_file), "--target", str(isi_file), "-o", str(tmp_path / "r.tsv")])
        assert code == 64

    def test_malformed_gold_is_a_data_error(self, medline_file, isi_file, tmp_path):
        gold = tmp_path / "gold.tsv"
        gold.write_text("20166753\ta\tb\n", encoding="utf-8")
        code = main(["evaluate", "--test", str(medline_file), "--target", str(isi_file),
                     "--gold", str(gold), "-o", str(tmp_path / "r.tsv")])
        assert code == 2


class TestSplit:

    def test_halves_written_next_to_output(self, medline_file, tmp_path):
        out = tmp_path / "halves.txt"
        assert main(["split", "--test", str(medline_file), "-o", str(out)]) == 0
        first, second = _canonical(tmp_path / "halves_a.txt"), _canonical(tmp_path / "halves_b.txt")
        assert (len(first), len(second)) == (2, 1)

    def test_single_record_cannot_be_split(self, tmp_path):
        one = tmp_path / "one.txt"
        one.write_text("PMID- 1\nTI  - Only record\n", encoding="utf-8")
        assert main(["split", "--test", str(one), "-o", str(tmp_path / "halves.txt")]) == 2

class TestStats:

    def test_table_per_corpus(self, medline_file, isi_file, tmp_path):
        out = tmp_path / "stats.tsv"
        assert main(["stats", "--test", str(medline_file), "--target", str(isi_file), "-o", str(out)]) == 0
        df = pd.read_csv(out, sep="\t", dtype={"year_range": str})
        assert list(df["corpus"]) == ["test", "target"]
        assert list(df["docs"]) == [3, 2]
        assert list(df["docs_read"]) == [3, 2]
        assert list(df["year_range"]) == ["2008-2010", "2010-2010"]
        assert list(df["with_author"]) == [3, 2]
        assert list(df["with_source"]) == [2, 2]

    def test_json_without_target(self, medline_file, tmp_path):
        out = tmp_path / "stats.json"
        assert main(["stats", "--test", str(medline_file), "--format", "json", "-o", str(out)]) == 0
        rows = json.loads(out.read_text(encoding="utf-8"))
        assert [r["corpus"] for r in rows] == ["test"]
        assert rows[0]["with_title"] == 3

    def test_missing_test_corpus(self, tmp_path):
        assert main(["stats", "-o", str(tmp_path / "stats.tsv")]) == 64


class TestStoplist:

    @pytest.fixture
    def synthetic_file(self, tmp_path):
        path = tmp_path / "pm.txt"
        write_flat(synthesize_corpus(80, seed=5), path, InputFormat.MEDLINE)
        return path

    def test_bgf_keys_follow_the_stoplist(self, synthetic_file, tmp_path):
        corpus = read_corpus(synthetic_file)
        head = build_anchor_dict([corpus]).bigrams[0]
        stop = tmp_path / "stop.txt"
        stop.write_text(f"{head}\n", encoding="utf-8")

        plain, stopped = tmp_path / "plain.tsv", tmp_path / "stopped.tsv"
        assert main(["keys", "--test", str(synthetic_file), "--method", "bgf", "-o", str(plain)]) == 0
        assert main(["keys", "--test", str(synthetic_file), "--method", "bgf", "--stoplist", str(stop), "-o", str(stopped)]) == 0

        params = resolve_params(Method.BGF, KeyParams(), [corpus], frozenset({head}))
        expected = []
        for record in corpus:
            key = build_key(record, Method.BGF, params)
            if key is not None:
                expected.append(f"{record.id}\tbgf\t{key.value}")
        assert stopped.read_text(encoding="utf-8").splitlines() == expected
        assert plain.read_bytes() != stopped.read_bytes()

    def test_pinned_anchor_clashing_with_stoplist(self, medline_file, tmp_path):
        stop = tmp_path / "stop.txt"
        stop.write_text("th\n", encoding="utf-8")
        code = main(["keys", "--test", str(medline_file), "--method", "bgf", "--anchor-dict", "pinned",
                     "--stoplist", str(stop), "-o", str(tmp_path / "k.tsv")])
        assert code == 2

    def test_missing_stoplist(self, medline_file, tmp_path):
        code = main(["keys", "--test", str(medline_file), "--method", "bgf",
                     "--stoplist", str(tmp_path / "none.txt"), "-o", str(tmp_path / "k.tsv")])
        assert code == 64


class TestDictionaryDir:

    def test_similarity_with_default_params(self, medline_file, isi_file, tmp_path):
        out = tmp_path / "pairs.tsv"
        code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "svs,csb", "-o", str(out)])
        assert code == 0

    def test_dictionaries_dumped_and_reused(self, medline_file, isi_file, tmp_path):
        dicts = tmp_path / "dicts"
        outputs = []
        for name in ("a.tsv", "b.tsv"):
            out = tmp_path / name
            code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "svs,csb",
                         "--dictionary-dir", str(dicts), "-o", str(out)])
            assert code == 0
            outputs.append(out.read_bytes())
        assert (dicts / "svs.tsv").exists()
        assert (dicts / "csb.tsv").exists()
        assert outputs[0] == outputs[1]

    def test_empty_pinned_dictionary_finds_nothing(self, medline_file, isi_file, tmp_path):
        dicts = tmp_path / "dicts"
        dicts.mkdir()
        (dicts / "svs.tsv").write_text("", encoding="utf-8")
        out = tmp_path / "pairs.tsv"
        code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "svs",
                     "--dictionary-dir", str(dicts), "-o", str(out)])
        assert code == 0
        assert read_pairs(out) == []

    def test_malformed_dictionary_is_a_data_error(self, medline_file, isi_file, tmp_path):
        dicts = tmp_path / "dicts"
        dicts.mkdir()
        (dicts / "csb.tsv").write_text("not a dictionary line\n", encoding="utf-8")
        code = main(["dedup", "--test", str(medline_file), "--target", str(isi_file), "--method", "csb",
                     "--dictionary-dir", str(dicts), "-o", str(tmp_path / "pairs.tsv")])
        assert code == 2


if __name__ == "__main__":
    pytest.main([__file__])
