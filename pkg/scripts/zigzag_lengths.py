"""Histogram of shortest zigzag lengths over every submonoid pair up to a given order.

Gives an empirical view of how far below the |B|^2 cap the minimal
witnesses sit.
"""

import argparse
from collections import Counter

from dominion_lab.laws import EnumerationConfig, enumerated_pairs
from dominion_lab.zigzag import search_witness


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=5)
    args = ap.parse_args()
    hist = Counter()
    pairs = 0
    for B, A in enumerated_pairs(EnumerationConfig(args.max_order)):
        pairs += 1
        for b in B.elements:
            if b in A:
                continue
            w = search_witness(B, A.universe, b)
            if w is not None:
                hist[w.n] += 1
    print(f"{pairs} pairs (including the pinned one)")
    for n, count in sorted(hist.items()):
        print(f"  escapes with shortest zigzag of length {n}: {count}")
    if not hist:
        print("  no escapes")


if __name__ == "__main__":
    main()
