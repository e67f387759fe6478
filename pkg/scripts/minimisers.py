#!/usr/bin/env python3
"""For each (n, d) cell, show the ME minimiser of U(n,d) or B(n,d) next to the named
candidate, so cells where they differ stand out."""

import argparse

from menergy import families as fam
from menergy.enumerate import class_members
from menergy.graph import GraphClass, canonical_key
from menergy.matching import matching_vector
from menergy.spectral import me_from_roots


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=("unicyclic", "bicyclic"), default="unicyclic")
    ap.add_argument("--n", type=int, nargs=2, default=(5, 10), metavar=("LO", "HI"))
    args = ap.parse_args()
    uni = args.kind == "unicyclic"
    kind = GraphClass.UNICYCLIC if uni else GraphClass.BICYCLIC
    build = fam.uni_min if uni else fam.bi_min
    for n in range(args.n[0], args.n[1] + 1):
        for d in range(3, n - 1 if uni else n - 2):
            members = class_members(kind, n, d)
            scored = sorted((me_from_roots(matching_vector(g)), canonical_key(g), g) for g in members)
            best_me, best_key, best = scored[0]
            named = build(n, d)
            mark = "ok " if best_key == canonical_key(named) else "DIFF"
            print(f"{mark} n={n:2d} d={d:2d} |class|={len(members):4d} min ME={best_me:.9f} "
                  f"m={list(matching_vector(best))} named m={list(matching_vector(named))}")
            if mark == "DIFF":
                print(f"      minimiser edges: {best.edges()}")


if __name__ == "__main__":
    main()
