"""Run every claim check at its default bounds and print a summary table.

    python scripts/verify_all.py [--out reports/] [--quick]

``--quick`` shrinks every bound so the sweep finishes in a few seconds.
Exit status is 1 if any claim reports failures.
"""

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

from seifert_taut.census import Claim, default_bounds, emit, verify


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, help="directory for one jsonl report per claim")
    p.add_argument("--quick", action="store_true")
    args = p.parse_args()
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)

    failed = False
    print(f"{'claim':18s} {'bounds':28s} {'checked':>9s} {'exc':>4s} {'fail':>5s} {'time':>7s}")
    for claim in Claim:
        bounds = default_bounds(claim)
        if args.quick:
            bounds = replace(bounds, a_max=min(bounds.a_max, 12 if len(bounds.n) == 1 else 6))
        t0 = time.perf_counter()
        report = verify(claim, bounds)
        seconds = time.perf_counter() - t0
        failed |= not report.passed
        b = f"n={','.join(map(str, bounds.n))} amax={bounds.a_max}"
        print(f"{claim.value:18s} {b:28s} {report.checked:9d} {len(report.exceptions):4d} "
              f"{len(report.failures):5d} {seconds:6.1f}s")
        if report.notes.get("branches"):
            print("    branches:", ", ".join(f"{k}={v}" for k, v in report.notes["branches"].items()))
        for f in report.failures[:5]:
            print("    FAIL", f)
        if args.out:
            emit(report, "jsonl", args.out / f"{claim.value}.jsonl")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
