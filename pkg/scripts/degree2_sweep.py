"""Exact worst-case ADM totals for maximum degree 2, against 2n-(C-1)."""

from __future__ import annotations

import argparse
import time

from grooming.solver import worst_case_A


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    print("n C  exact  2n-(C-1)  seconds")
    for n in range(2, args.max_n + 1):
        for C in range(2, n + 1):
            t0 = time.perf_counter()
            got = worst_case_A(n, C, 2, max_n=args.max_n).optimum
            formula = 2 * n - (C - 1)
            flag = "" if got == formula else "  <- differs"
            print(f"{n} {C}  {got:5d}  {formula:8d}  {time.perf_counter() - t0:7.2f}{flag}")


if __name__ == "__main__":
    main()
