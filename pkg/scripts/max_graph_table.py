"""Tabulate maximal IASF-graphs over every ground set inside {0..B}.

Usage:
    python scripts/max_graph_table.py [--bound B] [--max-size N]

Shows that the maximal graph depends on the integers in X, not only on |X|.
"""

import argparse
from collections import defaultdict
from itertools import combinations

from iasfl import IntSet, build_max_iasf_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=8)
    ap.add_argument("--max-size", type=int, default=5)
    args = ap.parse_args()

    by_size = defaultdict(lambda: defaultdict(list))
    for n in range(2, args.max_size + 1):
        for rest in combinations(range(1, args.bound + 1), n - 1):
            x = IntSet((0,) + rest)
            g, _ = build_max_iasf_graph(x)
            pend = sum(1 for v in g.vertices if g.degree(v) == 1)
            by_size[n][(len(g.edges), pend)].append(x)

    print(f"{'|X|':>4} {'|V|':>5} {'|E|':>5} {'pend':>5} {'#X':>5}  example")
    for n in sorted(by_size):
        for (m, pend), xs in sorted(by_size[n].items()):
            print(f"{n:>4} {2 ** (n - 1):>5} {m:>5} {pend:>5} {len(xs):>5}  {xs[0]}")


if __name__ == "__main__":
    main()
