"""Search for a cubic graph that cannot be split into 3-edge parts with two ADMs per node.

Writes the certificate to the given path (the checked-in fixture by default).
"""

from __future__ import annotations

import argparse
import logging
import time
from pathlib import Path

from grooming.search import find_M33_witness, verify_certificate

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "m33_witness.cert"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=22)
    ap.add_argument("--exhaustive-n", type=int, default=14, help="scan every cubic graph up to this order")
    ap.add_argument("--out", type=Path, default=FIXTURE)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO)
    t0 = time.perf_counter()
    cert = find_M33_witness(args.max_n, exhaustive_n=args.exhaustive_n)
    print(cert.to_text(), end="")
    print(f"# {time.perf_counter() - t0:.1f}s, re-verified: {verify_certificate(cert)}")
    if cert.graph is not None:
        args.out.write_text(cert.to_text())


if __name__ == "__main__":
    main()
