"""Resumable scan of connected max-degree-3 graphs for C=4 with two ADMs per node."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from grooming.search import test_conjecture_43 as scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--checkpoint", type=Path, default=Path("conjecture43.ckpt"))
    ap.add_argument("--timeout", type=float, default=60.0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO)
    cert = scan(args.max_n, checkpoint=args.checkpoint, timeout=args.timeout, workers=args.workers)
    print(cert.to_text(), end="")


if __name__ == "__main__":
    main()
