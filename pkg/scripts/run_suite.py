#!/usr/bin/env python3
"""Run a named campaign suite and print one line per theorem.

    python scripts/run_suite.py coquasiorders
    python scripts/run_suite.py semigroups --workers 4 --json results/semigroups.json
"""
import argparse
import json
import sys
import time

from apartness.oracle.suites import SUITES


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suite", choices=sorted(SUITES))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, help="override the suite seed")
    ap.add_argument("--json", help="write the full report here")
    args = ap.parse_args(argv)

    cfg = SUITES[args.suite]
    overrides = {} if args.seed is None else {"seed": args.seed}
    t0 = time.perf_counter()
    report = cfg.run(workers=args.workers, **overrides)
    wall = time.perf_counter() - t0

    for t in report.theorems:
        tag = "UNEXPECTED" if t.unexpected else "ok"
        print(f"{tag:10s} {t.theorem_id:55s} n={t.instances:<8d} fail={t.failed:<6d} "
              f"disagree={t.disagreement_count:<4d} {t.seconds:8.1f}s")
    budget = f" (budget {cfg.budget_seconds:.0f}s)" if cfg.budget_seconds else ""
    print(f"{cfg.name}: {len(report.unexpected)} unexpected, {wall:.1f}s{budget}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=1)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
