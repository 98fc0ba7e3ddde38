"""Timing curves for the sign and Jacobi algorithms.

Prints the two benchmark tables over a geometric range of sizes; pass
``--json`` to also dump the structured reports.
"""

import argparse
import json
import time

from zolotarev import bench


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repetitions", type=int, default=bench.MIN_REPETITIONS)
    parser.add_argument("--json", help="write both reports to this file")
    args = parser.parse_args()

    reports = []
    start = time.perf_counter()
    sizes = [10**k for k in range(2, 7)]
    signs = bench.bench_signs(sizes, repetitions=args.repetitions)
    print(bench.render_table(signs))
    reports.append(bench.to_report("signs", {"sizes": sizes}, signs, time.perf_counter() - start))

    jac = []
    for max_n in (10**2, 10**3, 10**4):
        jac += bench.bench_jacobi(max_n, samples=200, repetitions=args.repetitions)
    print(bench.render_table(jac))
    reports.append(bench.to_report("jacobi", {"max_n": [10**2, 10**3, 10**4]}, jac, time.perf_counter() - start))

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(reports, fh, indent=2)
            fh.write("\n")


if __name__ == "__main__":
    main()
