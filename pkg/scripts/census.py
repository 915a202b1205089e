"""Counts of enumerated commutative monoids per order, with SI and variety breakdowns."""

import argparse
import time
from collections import Counter

from dominion_lab.laws import monoids_of_order
from dominion_lab.morphisms import is_subdirectly_irreducible
from dominion_lab.varieties import generated_variety


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=5)
    args = ap.parse_args()
    for k in range(1, args.max_order + 1):
        start = time.perf_counter()
        ms = monoids_of_order(k)
        si = [M for M in ms if is_subdirectly_irreducible(M)]
        varieties = Counter(str(generated_variety(M)) for M in si)
        print(f"order {k}: {len(ms)} classes, {len(si)} SI ({time.perf_counter() - start:.2f}s)")
        for sig, count in sorted(varieties.items()):
            print(f"    SI generating {sig}: {count}")


if __name__ == "__main__":
    main()
