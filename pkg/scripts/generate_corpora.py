"""
bibdedup synthetic corpus generator.

Writes a seeded PubMed-side MEDLINE file, a WoS-side ISI file and the gold
standard linking them, ready for the CLI:

    python scripts/generate_corpora.py --out data/synthetic --test-size 7709 --target-size 12658
    python -m src evaluate --test data/synthetic/pm.txt --target data/synthetic/wos.txt \
        --gold data/synthetic/gold.tsv --method all -o report.tsv
"""
import argparse
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.core.config import DEFAULT_SEED, REFERENCE_TARGET_SIZE, REFERENCE_TEST_SIZE  # noqa: E402
from src.corpus.export import write_flat  # noqa: E402
from src.corpus.reader import InputFormat  # noqa: E402
from src.evaluation.synthetic import synthesize_pair  # noqa: E402
from src.monitoring.logger import logger  # noqa: E402


def main() -> None:
    parser = argparse.ArgumentParser(description="Generate seeded synthetic MEDLINE/ISI corpora")
    parser.add_argument("--out", type=Path, default=PROJECT_ROOT / "data" / "synthetic")
    parser.add_argument("--test-size", type=int, default=REFERENCE_TEST_SIZE)
    parser.add_argument("--target-size", type=int, default=REFERENCE_TARGET_SIZE)
    parser.add_argument("--overlap", type=float, default=0.05, help="Share of the smaller corpus present in both")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    test, target, gold = synthesize_pair(args.test_size, args.target_size, args.seed, overlap=args.overlap)

    write_flat(test, args.out / "pm.txt", InputFormat.MEDLINE)
    write_flat(target, args.out / "wos.txt", InputFormat.ISI)
    gold.save(args.out / "gold.tsv")

    logger.success(
        f"Wrote {len(test)} MEDLINE and {len(target)} ISI records, "
        f"{gold.positives} shared, to {args.out}"
    )


if __name__ == "__main__":
    main()
