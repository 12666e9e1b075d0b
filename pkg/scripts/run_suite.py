"""Run the theorem suite for each ground-set size and write a JSON summary.

Usage:
    python scripts/run_suite.py [--max-n 5] [--out suite.json]
"""

import argparse
import json
import time

from iasfl import run_theorem_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    results = {}
    for n in range(2, args.max_n + 1):
        t = time.perf_counter()
        rep = run_theorem_suite(n)
        dt = time.perf_counter() - t
        print(f"== max ground size {n} ({dt:.1f}s)")
        for line in rep.lines():
            print("  " + line)
        results[n] = json.loads(rep.to_json()) | {"seconds": round(dt, 2)}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
