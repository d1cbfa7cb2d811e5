#!/usr/bin/env python3
"""Run the full verification pipeline over every bundled problem file and
print one status line each.  Exits nonzero if anything fails.

Usage:  python3 scripts/verify_bundled_specs.py [--out DIR]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hopfquiver.cli import main as cli_main  # noqa: E402

SPECS = Path(__file__).resolve().parents[1] / "specs"


def run(out_dir: str) -> int:
    worst = 0
    for spec in sorted(SPECS.glob("*.json")):
        t0 = time.perf_counter()
        code = cli_main(
            ["run", "--spec", str(spec), "--out", f"{out_dir}/{spec.stem}"]
        )
        elapsed = time.perf_counter() - t0
        status = "PASS" if code == 0 else f"FAIL (exit {code})"
        print(f"{spec.name:45s} {status:14s} {elapsed:6.2f}s")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="out", help="report directory root")
    args = parser.parse_args()
    sys.exit(run(args.out))
