#!/usr/bin/env python3
"""Tabulate how close s(G) gets to the two edge-count bounds.

Prints one row per instance: the extremal families (where the bounds are
met exactly) followed by random connected graphs showing typical slack.

Usage:
    python scripts/tightness_table.py [--k-max 3] [--samples 20]
                                      [--n 10] [--seed 0]
"""

import argparse
import sys
from fractions import Fraction

from k4free.generators import gen_k5_union, gen_k6_chain, gen_random_connected
from k4free.oracle import exact_s
from k4free.potential import MAIN, greedy_fifth_transversal, phi_graph


def row(label, g):
    m = g.edge_count
    s = exact_s(g).size
    greedy = greedy_fifth_transversal(g).size
    line = f"{label:<18} n={g.n:<3} m={m:<3} s={s:<3} greedy={greedy:<3} m/5={m // 5:<3}"
    if g.is_connected():
        # s <= 3(m+1)/16 and phi_Main >= (16/3)s - 1, i.e. s <= 3(phi+1)/16
        phi = phi_graph(g, MAIN)
        upper = (phi + 1) * Fraction(3, 16)
        line += f" 3(m+1)/16={(3 * (m + 1)) // 16:<3} 3(phi+1)/16={float(upper):.2f}"
    print(line)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    for k in range(1, args.k_max + 1):
        row(f"k5-union k={k}", gen_k5_union(k))
        row(f"k6-chain k={k}", gen_k6_chain(k))
    n = args.n
    for i in range(args.samples):
        m = n - 1 + (i * (n * (n - 1) // 2 - n + 1)) // max(1, args.samples - 1)
        row(f"random n={n} m={m}", gen_random_connected(n, m, args.seed + i))
    return 0


if __name__ == "__main__":
    sys.exit(main())
