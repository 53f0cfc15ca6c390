"""
bibdedup CLI entrypoint.

Available commands:

parse:      record file -> canonical serialization
keys:       record file -> "id<TAB>method<TAB>key" per method
dedup:      test vs target -> duplicate pair TSV
merge:      test + target (+ pairs) -> merged canonical corpus
evaluate:   comparison table under the gold, fpm or hpm protocol
benchmark:  timing of key methods on seeded synthetic corpora
split:      two random halves of a corpus
stats:      document, word, year and field counts per corpus

Exit status: 0 success, 2 data error, 64 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from src.core.config import (
    COMPARED_METHODS,
    DEFAULT_SEED,
    DEFAULT_SSF_N,
    DEFAULT_THRESHOLD,
    REFERENCE_TARGET_SIZE,
    REFERENCE_TEST_SIZE,
    Command,
    RunConfig,
)
from src.core.exceptions import EXIT_USAGE_ERROR, BibDedupError
from src.monitoring.logger import logger
from src.runner import run_command


class _Parser(argparse.ArgumentParser):
    """Argument errors are usage errors: exit 64, not argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _method_names(values: Optional[Sequence[str]]) -> Optional[List[str]]:
    """Flatten repeated/comma-separated --method values; "all" means the ten compared methods."""
    if not values:
        return None
    names: List[str] = []
    for value in values:
        for name in value.split(","):
            name = name.strip()
            if name.lower() == "all":
                names.extend(m.value for m in COMPARED_METHODS)
            elif name:
                names.append(name)
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bibdedup",
        description="Bibliographic record deduplication (MEDLINE / ISI)",
    )

    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", type=Path, required=True, help="Output file")
    common.add_argument(
        "--method",
        action="append",
        help="Method name (ssf, mgf, smgf, af, tf, mtf, ardf, bgf, svs, csb, mc or all); repeatable, comma-separated",
    )
    common.add_argument("--ssf-n", type=int, default=DEFAULT_SSF_N, help="Title words used by the SSF key")
    common.add_argument(
        "--anchor-dict",
        help="BGF anchor bigram file, or 'pinned' for the built-in dictionary; built from the input when omitted",
    )
    common.add_argument(
        "--stoplist",
        type=Path,
        help="Bigrams kept out of the BGF anchor dictionary, one per line (default: at, it, is)",
    )
    common.add_argument(
        "--dictionary-dir",
        type=Path,
        help="SVS/CSB dictionaries: <method>.tsv is loaded from here when present, else built and dumped here",
    )
    common.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD, help="Similarity threshold (svs, csb)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for every random step")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes; output does not depend on it")
    common.add_argument(
        "--input-format",
        choices=["auto", "medline", "isi", "canonical"],
        default="auto",
        help="Record file format (auto-detected from the first tag by default)",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    def corpus_args(p: argparse.ArgumentParser, target: bool) -> None:
        p.add_argument("--test", type=Path, help="Test corpus (PubMed side)")
        if target:
            p.add_argument("--target", type=Path, help="Target corpus (WoS side)")

    p = subparsers.add_parser("parse", parents=[common], help="Write the canonical form of a record file")
    corpus_args(p, target=False)

    p = subparsers.add_parser("keys", parents=[common], help="Write the fingerprint key of every record")
    corpus_args(p, target=False)

    p = subparsers.add_parser("dedup", parents=[common], help="Find duplicates of test records in the target")
    corpus_args(p, target=True)
    p.add_argument("--unique", action="store_true", help="At most one target per test record")
    p.add_argument("--gold", type=Path, help="Gold file (only used by the mc baseline)")

    p = subparsers.add_parser("merge", parents=[common], help="Merge two corpora, purging test duplicates")
    corpus_args(p, target=True)
    p.add_argument("--pairs", type=Path, help="Pair TSV to purge with (default: run the first --method)")

    p = subparsers.add_parser("evaluate", parents=[common], help="Score methods under a protocol")
    corpus_args(p, target=True)
    p.add_argument("--protocol", choices=["gold", "fpm", "hpm"], default="gold")
    p.add_argument("--gold", type=Path, help="Gold TSV: test_id<TAB>target_id or '-'")
    p.add_argument("--pairs", type=Path, help="Score an existing pair TSV instead of running methods")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = subparsers.add_parser("benchmark", parents=[common], help="Time methods on synthetic corpora")
    p.add_argument("--test-size", type=int, default=REFERENCE_TEST_SIZE)
    p.add_argument("--target-size", type=int, default=REFERENCE_TARGET_SIZE)
    p.add_argument("--scale-check", action="store_true", help="Repeat at twice the sizes and report the time ratio")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = subparsers.add_parser("split", parents=[common], help="Write two random halves of a corpus")
    corpus_args(p, target=False)

    p = subparsers.add_parser("stats", parents=[common], help="Write content statistics of one or two corpora")
    corpus_args(p, target=True)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {
        "command": Command(args.command),
        "output_path": args.output,
        "threshold": args.threshold,
        "ssf_n": args.ssf_n,
        "anchor_dict_path": args.anchor_dict,
        "stoplist_path": args.stoplist,
        "dictionary_dir": args.dictionary_dir,
        "seed": args.seed,
        "jobs": args.jobs,
        "input_format": args.input_format,
    }
    methods = _method_names(args.method)
    if methods is not None:
        values["methods"] = methods

    optional = {
        "test": "test_path",
        "target": "target_path",
        "gold": "gold_path",
        "pairs": "pairs_path",
        "protocol": "protocol",
        "format": "format",
        "unique": "unique_pairs",
        "test_size": "test_size",
        "target_size": "target_size",
        "scale_check": "scale_check",
    }
    for attr, field in optional.items():
        value = getattr(args, attr, None)
        if value is not None:
            values[field] = value
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        cfg = config_from_args(args)
        return run_command(cfg)
    except ValidationError as exc:
        logger.error(f"Invalid arguments: {exc}")
        print(f"bibdedup: invalid arguments: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except BibDedupError as exc:
        logger.error(f"{exc.error}: {exc.message}")
        print(f"bibdedup: {exc.message}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
