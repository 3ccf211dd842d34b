#!/usr/bin/env python3
"""Time the recursive and neighbourhood engines on k x k grids and compare pivot rules.

Usage: python scripts/grid_benchmark.py [--max-side 6] [--rules maxdeg,index,random]
"""

import argparse
import random
import time

from domrel.exact import drel_recursive, drel_via_neighbourhood, max_degree_pivot
from domrel.graph import grid_graph


def counting(rule):
    calls = [0]

    def pivot(x, y):
        calls[0] += 1
        return rule(x, y)

    return pivot, calls


def rules_for(g, seed):
    rng = random.Random(seed)
    lowest = lambda x, y: (y & -y).bit_length() - 1

    def random_rule(x, y):
        return rng.choice([v for v in range(g.n) if y >> v & 1])

    return {"maxdeg": max_degree_pivot(g), "index": lowest, "random": random_rule}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-side", type=int, default=5)
    ap.add_argument("--rules", default="maxdeg,index,random")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("side,n,rule,expansions,seconds,lowest_power")
    for side in range(2, args.max_side + 1):
        g = grid_graph(side, side)
        reference = None
        for name in args.rules.split(","):
            pivot, calls = counting(rules_for(g, args.seed)[name])
            t0 = time.perf_counter()
            poly = drel_recursive(g, pivot=pivot)
            secs = time.perf_counter() - t0
            if reference is None:
                reference = poly
            assert poly == reference, f"pivot rule {name} changed the result"
            print(f"{side},{g.n},{name},{calls[0]},{secs:.3f},{poly.lowest_degree()}")
        t0 = time.perf_counter()
        assert drel_via_neighbourhood(g) == reference
        print(f"{side},{g.n},neighbourhood,,{time.perf_counter() - t0:.3f},{reference.lowest_degree()}")


if __name__ == "__main__":
    main()
