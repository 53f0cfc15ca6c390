"""
Command implementations behind ``python -m src``.

Each command reads its inputs, runs one stage of the pipeline, writes the
machine-readable result to ``cfg.output_path`` and prints a short summary on
stdout. Logging goes to stderr.

Flow of a dedup run:
    MEDLINE/ISI files -> Corpus -> keys/index or vectors -> duplicate pairs
"""
from __future__ import annotations

import tempfile
import time
from pathlib import Path
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

import pandas as pd

from src.core.config import DEFAULT_STOPLIST, Command, Method, Protocol, RunConfig
from src.core.exceptions import EXIT_OK, ConfigError
from src.corpus.canonical import write_canonical
from src.corpus.export import write_flat
from src.corpus.models import Corpus
from src.corpus.reader import InputFormat, read_corpus
from src.corpus.stats import stats_frame
from src.engine.merge import merge_corpora
from src.engine.pairs import DuplicatePair, read_pairs, write_pairs
from src.evaluation.gold import GoldStandard, load_gold
from src.evaluation.metrics import EvalReport, score, write_frame, write_reports
from src.evaluation.protocols import RunOptions, half_split, resolve_params, run_method, run_protocol
from src.evaluation.synthetic import synthesize_pair
from src.keys.anchors import AnchorDict, load_stoplist
from src.keys.fingerprints import KeyParams, build_key, check_params
from src.monitoring.logger import logger

# Share of the smaller benchmark corpus duplicated into the other one.
BENCHMARK_OVERLAP = 0.1

BENCHMARK_COLUMNS = ["method", "test_records", "target_records", "pairs", "seconds", "time_ratio"]


# -----------------------------
# Shared helpers
# -----------------------------

def _input_format(cfg: RunConfig) -> InputFormat:
    try:
        return InputFormat(cfg.input_format)
    except ValueError:
        raise ConfigError(f"Unknown input format: {cfg.input_format}", details={"format": cfg.input_format}) from None


def _read(path: Optional[Path], cfg: RunConfig) -> Corpus:
    return read_corpus(path, _input_format(cfg))


def _stoplist(cfg: RunConfig) -> FrozenSet[str]:
    return load_stoplist(cfg.stoplist_path) if cfg.stoplist_path is not None else DEFAULT_STOPLIST


def _key_params(cfg: RunConfig, stoplist: FrozenSet[str]) -> KeyParams:
    """ssf_n plus the anchor dictionary: pinned, loaded from file, or None (built per run)."""
    if cfg.anchor_dict_path is None:
        anchor = None
    elif cfg.anchor_dict_path == "pinned":
        anchor = AnchorDict.pinned(stoplist)
    else:
        anchor = AnchorDict.load(cfg.anchor_dict_path, stoplist)
    return KeyParams(ssf_n=cfg.ssf_n, anchor=anchor)


def _options(cfg: RunConfig, unique: Optional[bool] = None) -> RunOptions:
    stoplist = _stoplist(cfg)
    return RunOptions(
        params=_key_params(cfg, stoplist),
        threshold=cfg.threshold,
        unique=cfg.unique_pairs if unique is None else unique,
        seed=cfg.seed,
        n_jobs=cfg.jobs,
        stoplist=stoplist,
        dictionary_dir=cfg.dictionary_dir,
    )


def _sibling(path: Path, suffix: str) -> Path:
    """``halves.txt`` -> ``halves_a.txt``."""
    return path.with_name(f"{path.stem}_{suffix}{path.suffix}")


def _print_reports(reports: List[EvalReport]) -> None:
    for r in reports:
        print(
            f"{r.method}: gold={r.gold_duplicates} predicted={r.predicted} "
            f"TP={r.true_positives} FP={r.false_positives} FN={r.false_negatives} "
            f"P={r.precision:.3f} R={r.recall:.3f}"
        )


# -----------------------------
# Commands
# -----------------------------

def cmd_parse(cfg: RunConfig) -> int:
    """Parse a record file and write its canonical serialization."""
    corpus = _read(cfg.test_path, cfg)
    with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as out:
        write_canonical(corpus, out)
    print(f"parsed {len(corpus)} records, {corpus.skipped} skipped -> {cfg.output_path}")
    return EXIT_OK


def cmd_keys(cfg: RunConfig) -> int:
    """Write "id<TAB>method<TAB>key" for every record that yields a key."""
    corpus = _read(cfg.test_path, cfg)
    stoplist = _stoplist(cfg)
    key_params = _key_params(cfg, stoplist)
    rows: List[Tuple[str, str, str]] = []
    for method in cfg.methods:
        if not method.is_key:
            raise ConfigError(f"{method.value} is not a key method", details={"method": method.value})
        params = resolve_params(method, key_params, [corpus], stoplist)
        check_params(method, params)

        no_key = 0
        for record in corpus:
            key = build_key(record, method, params)
            if key is None:
                no_key += 1
                continue
            rows.append((record.id, method.value, key.value))
        print(f"{method.value}: {len(corpus) - no_key} keys, {no_key} records without key")

    pd.DataFrame(rows, columns=["id", "method", "key"]).to_csv(
        cfg.output_path, sep="\t", index=False, header=False, lineterminator="\n"
    )
    return EXIT_OK


def cmd_dedup(cfg: RunConfig) -> int:
    """
    Deduplicate the test corpus against the target corpus with every
    requested method; all pairs go to one TSV, grouped by method.
    """
    # -----------------------------
    # 1. Read
    # -----------------------------
    test = _read(cfg.test_path, cfg)
    target = _read(cfg.target_path, cfg)
    gold = load_gold(cfg.gold_path) if cfg.gold_path else None
    options = _options(cfg)

    # -----------------------------
    # 2. Match, method by method
    # -----------------------------
    pairs: List[DuplicatePair] = []
    for method in cfg.methods:
        found = run_method(method, test, target, options, gold)
        pairs.extend(found)
        print(f"{method.value}: {len(found)} duplicate pairs")

    # -----------------------------
    # 3. Write
    # -----------------------------
    write_pairs(pairs, cfg.output_path)
    logger.success(f"Wrote {len(pairs)} pairs to {cfg.output_path}")
    return EXIT_OK


def cmd_merge(cfg: RunConfig) -> int:
    """
    Merge/purge: the target corpus plus the test records not found as
    duplicates, in canonical form. Pairs come from ``--pairs`` or from a
    fresh run of the first requested method.
    """
    test = _read(cfg.test_path, cfg)
    target = _read(cfg.target_path, cfg)
    if cfg.pairs_path is not None:
        pairs = read_pairs(cfg.pairs_path)
    else:
        pairs = run_method(cfg.methods[0], test, target, _options(cfg, unique=True))

    result = merge_corpora(test, target, pairs)
    with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as out:
        write_canonical(result.merged, out)
    print(
        f"merged {len(result.merged)} records: {result.kept_from_target} from target, "
        f"{result.kept_from_test} from test, {len({p.test_id for p in result.removed})} purged"
    )
    return EXIT_OK


def _score_pair_file(cfg: RunConfig, gold: GoldStandard) -> List[EvalReport]:
    """One report per method found in the pair file, in order of first appearance."""
    by_method: Dict[Method, List[DuplicatePair]] = {}
    for p in read_pairs(cfg.pairs_path):
        by_method.setdefault(p.method, []).append(p)
    return [score(pairs, gold, m.label) for m, pairs in by_method.items()]


def cmd_evaluate(cfg: RunConfig) -> int:
    """One comparison-table row per method under the chosen protocol."""
    options = _options(cfg, unique=True)

    if cfg.protocol is Protocol.GOLD:
        gold = load_gold(cfg.gold_path)
        if cfg.pairs_path is not None:
            reports = _score_pair_file(cfg, gold)
        else:
            corpora = [_read(cfg.test_path, cfg), _read(cfg.target_path, cfg)]
            reports = [run_protocol(Protocol.GOLD, m, corpora, options, gold) for m in cfg.methods]
    else:
        corpora = [_read(cfg.test_path, cfg)]
        if cfg.protocol is Protocol.HPM and cfg.target_path is not None:
            corpora.append(_read(cfg.target_path, cfg))
        reports = [run_protocol(cfg.protocol, m, corpora, options) for m in cfg.methods]

    write_reports(reports, cfg.output_path, cfg.format)
    _print_reports(reports)
    return EXIT_OK


def _timed_run(method: Method, test_file: Path, target_file: Path, out: Path, options: RunOptions, gold: GoldStandard) -> Tuple[int, float]:
    """Read both files, deduplicate and write the pairs; returns (pairs, seconds)."""
    start = time.perf_counter()
    test = read_corpus(test_file, InputFormat.MEDLINE)
    target = read_corpus(target_file, InputFormat.ISI)
    pairs = run_method(method, test, target, options, gold)
    write_pairs(pairs, out)
    return len(pairs), time.perf_counter() - start


def _benchmark_scale(cfg: RunConfig, test_size: int, target_size: int, workdir: Path) -> List[dict]:
    test, target, gold = synthesize_pair(test_size, target_size, cfg.seed, overlap=BENCHMARK_OVERLAP)
    test_file, target_file = workdir / f"test_{test_size}.txt", workdir / f"target_{target_size}.txt"
    write_flat(test, test_file, InputFormat.MEDLINE)
    write_flat(target, target_file, InputFormat.ISI)

    options = _options(cfg)
    rows = []
    for method in cfg.methods:
        n_pairs, seconds = _timed_run(method, test_file, target_file, workdir / "pairs.tsv", options, gold)
        logger.info(f"{test_size} x {target_size}: {n_pairs} pairs in {seconds:.2f}s", extra={"method": method.value})
        rows.append({
            "method": method.value,
            "test_records": test_size,
            "target_records": target_size,
            "pairs": n_pairs,
            "seconds": seconds,
            "time_ratio": None,
        })
    return rows


def cmd_benchmark(cfg: RunConfig) -> int:
    """
    Time end-to-end runs (parse both files, match, write pairs) on seeded
    synthetic corpora. With ``scale_check`` the run is repeated at twice the
    sizes and the time ratio is reported.
    """
    if cfg.test_size == 0 or cfg.target_size == 0:
        write_frame(pd.DataFrame(columns=BENCHMARK_COLUMNS), cfg.output_path, cfg.format)
        print("benchmark: empty corpora, nothing to time")
        return EXIT_OK

    with tempfile.TemporaryDirectory(prefix="bibdedup-bench-") as tmp:
        workdir = Path(tmp)
        rows = _benchmark_scale(cfg, cfg.test_size, cfg.target_size, workdir)
        if cfg.scale_check:
            doubled = _benchmark_scale(cfg, 2 * cfg.test_size, 2 * cfg.target_size, workdir)
            for base, row in zip(rows, doubled):
                row["time_ratio"] = row["seconds"] / base["seconds"] if base["seconds"] > 0 else None
            rows.extend(doubled)

    df = pd.DataFrame(rows, columns=BENCHMARK_COLUMNS)
    write_frame(df, cfg.output_path, cfg.format)
    for row in rows:
        ratio = f" (x{row['time_ratio']:.2f})" if row["time_ratio"] is not None else ""
        print(
            f"{row['method']}: {row['test_records']} x {row['target_records']} records, "
            f"{row['pairs']} pairs, {row['seconds']:.2f}s{ratio}"
        )
    return EXIT_OK


def cmd_split(cfg: RunConfig) -> int:
    """Write two seeded random halves of the test corpus next to ``output_path``."""
    corpus = _read(cfg.test_path, cfg)
    halves = half_split(corpus, cfg.seed)
    for suffix, half in zip(("a", "b"), halves):
        path = _sibling(Path(cfg.output_path), suffix)
        with open(path, "w", encoding="utf-8", newline="\n") as out:
            write_canonical(half, out)
    print(f"split {len(corpus)} records into {len(halves[0])} + {len(halves[1])}")
    return EXIT_OK


def cmd_stats(cfg: RunConfig) -> int:
    """Content statistics table of the test corpus, and of the target corpus when given."""
    corpora = {"test": _read(cfg.test_path, cfg)}
    if cfg.target_path is not None:
        corpora["target"] = _read(cfg.target_path, cfg)

    df = stats_frame(corpora)
    write_frame(df, cfg.output_path, cfg.format)
    for row in df.itertuples(index=False):
        print(
            f"{row.corpus}: {row.docs} docs ({row.docs_read} read), {row.words} words, "
            f"years {row.year_range or '-'}, author {row.with_author}, "
            f"title {row.with_title}, source {row.with_source}"
        )
    return EXIT_OK


COMMANDS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.PARSE: cmd_parse,
    Command.KEYS: cmd_keys,
    Command.DEDUP: cmd_dedup,
    Command.MERGE: cmd_merge,
    Command.EVALUATE: cmd_evaluate,
    Command.BENCHMARK: cmd_benchmark,
    Command.SPLIT: cmd_split,
    Command.STATS: cmd_stats,
}


def run_command(cfg: RunConfig) -> int:
    logger.info(f"Running {cfg.command.value}", extra={"method": ",".join(m.value for m in cfg.methods)})
    return COMMANDS[cfg.command](cfg)
