"""
Local driver: compare the specialized invariant with the Homflypt oracle

Usage:
1. Bundled table:
   python scripts/check_table.py

2. Own table and random words:
   python scripts/check_table.py --table links.csv --random 50 --seed 7 --jobs 4
"""

import argparse
import random
import sys
from pathlib import Path

# Add project root to path for imports
PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from bt_invariants.braidio import compare_homflypt, compare_word, random_braid, table_rows
from bt_invariants.config import DEFAULT_SEED, EXIT_OK, EXIT_VERIFICATION_FAILED
from bt_invariants.metrics import ComputationMetrics


def check_table(args=None) -> int:
    """Run the table comparison and optional random words"""
    parser = argparse.ArgumentParser(description='Compare specialized Delta with the Homflypt oracle')
    parser.add_argument('--table', help='CSV with header name,n,word (default: bundled table)')
    parser.add_argument('--random', type=int, default=0, help='Additional random words')
    parser.add_argument('--max-strands', type=int, default=4)
    parser.add_argument('--max-length', type=int, default=8)
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    parser.add_argument('--jobs', type=int, default=1)
    cli_args = parser.parse_args(args)

    metrics = ComputationMetrics('check-table')
    print("Homflypt cross-check")
    print("-" * 50)

    verdicts = compare_homflypt(table_rows(cli_args.table), jobs=cli_args.jobs, seed=cli_args.seed)
    rng = random.Random(cli_args.seed)
    for _ in range(cli_args.random):
        word = random_braid(rng, rng.randint(2, cli_args.max_strands), cli_args.max_length)
        verdicts.append(compare_word(word, seed=cli_args.seed))

    for verdict in verdicts:
        mark = 'ok  ' if verdict.passed else 'FAIL'
        print(f"{mark} {verdict.name}: {verdict.word}")
        if not verdict.passed:
            print(f"     specialized: {verdict.specialized}")
            print(f"     oracle:      {verdict.oracle}")

    failed = sum(1 for verdict in verdicts if not verdict.passed)
    metrics.add_word(len(verdicts))
    metrics.add_checks(len(verdicts), failed)
    print("-" * 50)
    print(metrics.render())
    if failed:
        print(f"\n{failed} of {len(verdicts)} words disagree")
        return EXIT_VERIFICATION_FAILED
    print(f"\nAll {len(verdicts)} words agree")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(check_table())
