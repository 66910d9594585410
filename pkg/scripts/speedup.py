#!/usr/bin/env python3
"""Wall-clock of one fixed campaign at several worker counts.

The merged reports must be identical (timings aside) for every worker
count; the script exits non-zero if they are not. Speedup is only
meaningful with at least as many free cores as workers.
"""
import argparse
import json
import os
import sys
import time

from apartness.oracle.campaign import fuzz_campaign


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", default="1,2,4")
    ap.add_argument("--theorems", default="first-apartness-iso-semigroup")
    ap.add_argument("--size", type=int, default=2)
    ap.add_argument("--samples", type=int, default=2000)
    args = ap.parse_args(argv)

    counts = [int(w) for w in args.workers.split(",")]
    print(f"cpus available: {len(os.sched_getaffinity(0))}")
    base, reference = None, None
    for w in counts:
        t0 = time.perf_counter()
        r = fuzz_campaign([args.size], args.theorems, samples=args.samples, seed=1, workers=w)
        dt = time.perf_counter() - t0
        doc = json.dumps(r.to_dict(timings=False), sort_keys=True)
        reference = reference or doc
        base = base or dt
        print(f"workers={w:<3d} {dt:8.2f}s  speedup={base / dt:5.2f}  "
              f"identical={'yes' if doc == reference else 'NO'}")
        if doc != reference:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
