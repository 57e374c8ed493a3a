"""Sign pattern of omega(X_G^{S_{n+1}}) in the power-sum basis.

Prints a tally per (|V(G)|, n) and every graph where the signs mix.

    python scripts/monotone_probe.py --max-g 6 --max-n 4
"""

import argparse
from collections import Counter

from hchromatic.graphs import all_graphs, cycle, path, star, to_edge_list
from hchromatic.suites import omega_p_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-g", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()
    print(f"reference: omega(X_P4^C7) is {omega_p_report(path(4), cycle(7))}")
    for k in range(1, args.max_g + 1):
        for n in range(1, args.max_n + 1):
            tally = Counter()
            for g in all_graphs(k):
                kind = omega_p_report(g, star(n + 1))
                tally[kind] += 1
                if kind == "mixed":
                    print(f"  mixed: n={n} g={to_edge_list(g).strip()!r}")
            print(f"|V(G)|={k} n={n}: " + ", ".join(f"{kind}={c}" for kind, c in sorted(tally.items())))


if __name__ == "__main__":
    main()
