#!/usr/bin/env python3
"""Run the full corpus check suite and print the report.

Usage: python scripts/run_check_suite.py [corpus-dir] [--seed N] [--out path]
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gradedca.cli import main  # noqa: E402

if __name__ == "__main__":
    args = sys.argv[1:]
    corpus = args[0] if args and not args[0].startswith("-") else \
        os.path.join(os.path.dirname(__file__), "..", "corpus")
    rest = args[1:] if args and not args[0].startswith("-") else args
    sys.exit(main(["check", corpus] + rest))
