"""Run every verification suite and write the results as JSON.

    python3 scripts/run_verification.py [--quick] [--out results.json]
"""

import argparse
import json
import sys
import time

from graphpoly import suites


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="verification.json")
    args = ap.parse_args()
    cfg = suites.SuiteConfig.quick() if args.quick else suites.SuiteConfig(seed=args.seed)
    results = []
    for name in suites.SUITES:
        t0 = time.perf_counter()
        r = suites.run_suite(name, cfg)
        print(f"{name:26s} {r.summary}  {time.perf_counter() - t0:.1f}s")
        results.append(r.to_json())
    with open(args.out, "w") as fh:
        json.dump(results, fh, indent=2)
    return 0 if all(r["summary"]["fail"] == 0 for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
