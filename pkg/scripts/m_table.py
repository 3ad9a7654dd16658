"""Print the table of M(C, delta) with footnotes, and check its monotonicity."""

from __future__ import annotations

import argparse

from grooming.bounds import check_monotonicity, known_M_table
from grooming.cli import emit_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-C", type=int, default=8)
    ap.add_argument("--max-delta", type=int, default=8)
    args = ap.parse_args()
    table = known_M_table(range(1, args.max_C + 1), range(1, args.max_delta + 1))
    print(emit_table(table), end="")
    bad = check_monotonicity(table)
    print(f"monotonicity violations: {len(bad)}")
    for line in bad:
        print("  " + line)


if __name__ == "__main__":
    main()
