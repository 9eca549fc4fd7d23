#!/usr/bin/env python3
"""Compare exact, constructive and probabilistic bounds over a small sweep
of random regular graphs and the two named special graphs."""
import argparse

from dominator.bounds import compare_all
from dominator.graph import generate


def show(name, g, a, b, node_limit):
    print(f"== {name}  (n={g.n}, a={a}, b={b})")
    for rep in compare_all(g, a, b, node_limit=node_limit):
        if rep.applicable:
            tag = " vacuous" if rep.vacuous else ""
            print(f"  {rep.method:<15} {float(rep.value):8.2f}{tag}")
        else:
            print(f"  {rep.method:<15} n/a  ({rep.reason})")
    print()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--node-limit", type=int, default=10 ** 6)
    args = ap.parse_args()

    show("Heawood", generate("heawood"), 2, 2, args.node_limit)
    show("Petersen", generate("petersen"), 2, 3, args.node_limit)
    for n, r in [(16, 4), (20, 5), (30, 7)]:
        g = generate("random_regular", n=n, r=r, seed=args.seed)
        show(f"random {r}-regular", g, 2, 2, args.node_limit)


if __name__ == "__main__":
    main()
