"""Run every bundled verification scenario and print per-check timings.

Equivalent to ``prenichols verify-paper --all --timings``; extra args are passed through.
"""
import sys

from prenichols.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-paper", "--all", "--timings", *sys.argv[1:]]))
