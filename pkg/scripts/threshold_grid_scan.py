#!/usr/bin/env python3
"""Scan the rank-2 anticanonical threshold grid and print the TSV report.

Every row compares the closed-form bigness test against the brute-force
section-count oracle; the script exits non-zero on any disagreement.

Usage: python3 scripts/threshold_grid_scan.py [out.tsv]
"""
import sys

from ruledsurf.cli import main

if __name__ == "__main__":
    argv = [
        "scan",
        "--genus-range", "1:3",
        "--d1-range=-3:6",
        "--d2-range=-3:6",
        "--m-max", "64",
    ]
    if len(sys.argv) > 1:
        argv += ["--out", sys.argv[1]]
    raise SystemExit(main(argv))
