#!/usr/bin/env python3
"""Print class sizes |T(n,d)|, |U(n,d)|, |B(n,d)| as a table, one row per (n, d)."""

import argparse

from menergy.enumerate import EnumQuery, count_class
from menergy.graph import GraphClass

KINDS = (GraphClass.TREE, GraphClass.UNICYCLIC, GraphClass.BICYCLIC)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    print(f"{'n':>3} {'d':>3} {'trees':>7} {'unicyc':>7} {'bicyc':>7}")
    for n in range(3, args.max_n + 1):
        for d in range(1, n):
            row = [count_class(EnumQuery(k, n, d)) for k in KINDS]
            if any(row):
                print(f"{n:>3} {d:>3} " + " ".join(f"{c:>7}" for c in row))
        print(f"{n:>3} {'all':>3} " + " ".join(f"{count_class(EnumQuery(k, n)):>7}" for k in KINDS))


if __name__ == "__main__":
    main()
