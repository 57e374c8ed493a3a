"""Ranks of the star-colouring families against their upper bounds.

    python scripts/star_rank_sweep.py --max-k 6
"""

import argparse

from hchromatic.suites import partial_star_rank, star_family_bound, star_family_rank


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=5)
    args = ap.parse_args()
    print(" k  bound  rank  rank(no edgeless)  partial-star ranks n=1..3")
    for k in range(2, args.max_k + 1):
        ps = [partial_star_rank(k, n) for n in (1, 2, 3)]
        print(f"{k:2d}  {star_family_bound(k):5d}  {star_family_rank(k):4d}  "
              f"{star_family_rank(k, include_edgeless=False):17d}  {ps}")


if __name__ == "__main__":
    main()
