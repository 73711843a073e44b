#!/usr/bin/env python3
"""Survey rank-2 candidate forms over a range of odd determinants.

For each odd determinant delta and census n, lists the candidate triples
(m1, a, m2) and the minimum correction value of each lifted form.  Useful
for spotting determinants where the obstruction has few candidates to
refute.

Usage: scan_determinants.py [--max-det 99] [--neg 2]
"""

import argparse

from unknotting.enumeration import enumerate_rank2
from unknotting.obstruction import candidate_table
from unknotting.quadforms import FormCandidate


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-det", type=int, default=99)
    parser.add_argument("--neg", type=int, default=2, choices=(0, 1, 2))
    args = parser.parse_args()

    for delta in range(1, args.max_det + 1, 2):
        triples = enumerate_rank2(delta, args.neg)
        if not triples:
            continue
        parts = []
        for t in triples:
            table = candidate_table(FormCandidate.from_triple(*t))
            m = table.min_nonspin() if table.group.order > 1 else table.spin_value
            parts.append(f"{t} min {m}")
        print(f"det {delta:4d}: " + "; ".join(parts))


if __name__ == "__main__":
    main()
