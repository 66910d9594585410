#!/usr/bin/env python3
"""Search for the least order/equivalence pair whose induced relation on
the classes is not antisymmetric, and print it."""
import json
import sys
import time

from apartness.oracle.campaign import find_counterexample


def main() -> int:
    t0 = time.perf_counter()
    cx = find_counterexample("quotient-order-antisymmetric-for-arbitrary-equivalence", range(1, 6))
    if cx is None:
        print("no counterexample up to size 5")
        return 1
    print(json.dumps(cx.to_dict(), indent=1))
    print(f"found at size {cx.size} after {time.perf_counter() - t0:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
