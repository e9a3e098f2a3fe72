#!/usr/bin/env python3
"""Benchmark decomposition wall time against instance size.

Usage: python scripts/bench_decompose.py [--max-n 2000] [--seed S]
Prints per-size timings and the fitted growth exponent between the two
largest sizes (should stay at or below ~2, i.e. quadratic).
"""

import argparse
import math
import sys
import time

from atforest.decompose import decompose, verify_decomposition
from atforest.testkit import random_near_triangulation


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--boundary", type=int, default=8)
    args = parser.parse_args()

    sizes = [n for n in (50, 100, 200, 500, 1000, 2000, 5000) if n <= args.max_n]
    timings = []
    print(f"{'n':>6}  {'decompose':>10}  {'verify':>10}")
    for n in sizes:
        pg = random_near_triangulation(n, args.boundary, args.seed)
        start = time.time()
        d = decompose(pg, (pg.outer_face[0], pg.outer_face[1]))
        mid = time.time()
        report = verify_decomposition(pg, d, "structural")
        end = time.time()
        if not report.verdict:
            print(f"n={n}: verification FAILED: {report.detail}")
            return 1
        timings.append((n, mid - start))
        print(f"{n:>6}  {mid - start:>9.3f}s  {end - mid:>9.3f}s")

    if len(timings) >= 2:
        (n1, t1), (n2, t2) = timings[-2], timings[-1]
        if t1 > 0 and t2 > 0:
            exponent = math.log(t2 / t1) / math.log(n2 / n1)
            print(f"growth exponent between n={n1} and n={n2}: {exponent:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
