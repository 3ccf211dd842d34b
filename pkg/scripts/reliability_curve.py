#!/usr/bin/env python3
"""Plot DRel(G, p) against p for an edge-list file or a family spec.

    python scripts/reliability_curve.py --family C:7 --out c7.png
    python scripts/reliability_curve.py --grid 5 --out grid5.png
"""

import argparse
from fractions import Fraction

from domrel.exact import drel_recursive
from domrel.families import FamilySpec
from domrel.graph import grid_graph, parse_graph


def main():
    ap = argparse.ArgumentParser()
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--family")
    src.add_argument("--grid", type=int, help="side length of a square grid")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--out", default="drel_curve.png")
    args = ap.parse_args()

    if args.graph:
        with open(args.graph) as fh:
            g, label = parse_graph(fh.read()), args.graph
    elif args.family:
        g, label = FamilySpec.parse(args.family).graph(), args.family
    else:
        g, label = grid_graph(args.grid, args.grid), f"{args.grid}x{args.grid} grid"

    poly = drel_recursive(g)
    xs = [Fraction(i, args.samples) for i in range(args.samples + 1)]
    ys = [float(poly.eval(x)) for x in xs]

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4, 4))
    ax.plot([float(x) for x in xs], ys, color="black", linewidth=1)
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.05)
    ax.set_xlabel("p")
    ax.set_ylabel("DRel")
    ax.set_title(label)
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}; DRel = {poly}")


if __name__ == "__main__":
    main()
