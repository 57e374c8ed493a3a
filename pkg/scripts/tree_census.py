"""Self-function census over free trees.

    python scripts/tree_census.py --max-n 10 --jobs 4
"""

import argparse
import time

from hchromatic.graphs import to_graph6
from hchromatic.suites import tree_census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    start = time.perf_counter()
    counts, collisions = tree_census(args.max_n, jobs=args.jobs)
    for n, c in counts.items():
        print(f"n={n:2d}  trees={c:6d}")
    for a, b in collisions:
        print(f"collision: {to_graph6(a)} {to_graph6(b)}")
    print(f"{sum(counts.values())} trees, {len(collisions)} collisions, {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
