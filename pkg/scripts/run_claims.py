#!/usr/bin/env python3
"""Run every registered claim and identity at its default range and write one CSV."""

import argparse
import sys

from menergy.verify import IDENTITIES, THEOREMS, all_passed, emit_report, verify_identity, verify_theorem


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="claims.csv")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--skip", action="append", default=[], help="claim id to leave out")
    args = ap.parse_args()

    reports = []
    for cid in THEOREMS:
        if cid not in args.skip:
            print(f"claim {cid} ...", file=sys.stderr, flush=True)
            reports += verify_theorem(cid, jobs=args.jobs)
    for iid in IDENTITIES:
        if iid not in args.skip:
            reports += verify_identity(iid, jobs=args.jobs)
    emit_report(reports, "csv", args.out)
    failed = [r for r in reports if r.in_claim and not r.passed]
    print(f"{len(reports)} cells, {len(failed)} failing -> {args.out}", file=sys.stderr)
    for r in failed:
        print(f"  FAIL {r.claim} n={r.n} d={r.d}: {r.note}", file=sys.stderr)
    return 0 if all_passed(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
