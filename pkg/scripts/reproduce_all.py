#!/usr/bin/env python3
"""Recompute every reference fixture and print a per-check summary.

Equivalent to `unknotting --human reproduce all`, kept as a script entry
point for quick experiment runs.
"""

import sys

from unknotting.cli import main

if __name__ == "__main__":
    sys.exit(main(["--human"] + sys.argv[1:] + ["reproduce", "all"]))
