#!/usr/bin/env python3
"""E, ME and TRE for paths, stars and cycles up to a given order, using both ME routes."""

import argparse

from menergy import families as fam
from menergy.spectral import energy_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=16)
    args = ap.parse_args()
    print(f"{'graph':>6} {'E':>14} {'ME':>14} {'TRE':>14} {'route gap':>10}")
    for n in range(3, args.max_n + 1):
        for name, g in (("P", fam.path(n)), ("S", fam.star(n)), ("C", fam.cycle(n))):
            r = energy_report(g, "both")
            print(f"{name}{n:<5} {r.energy:14.10f} {r.matching_energy:14.10f} {r.tre:14.10f} {r.method_gap:10.1e}")


if __name__ == "__main__":
    main()
