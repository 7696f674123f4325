#!/usr/bin/env python3
"""Run every verification suite over the built-in configuration matrix.

Prints one PASS/FAIL line per check and exits 0 only if everything
passes.  Equivalent to ``stablepieces verify --suite all --format table``
but handy when iterating on the library without reinstalling the entry
point.
"""

import argparse
import sys

from stablepieces import verify


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", choices=("all",) + verify.SUITE_NAMES, default="all")
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    results = verify.run_configs(
        verify.DEFAULT_MATRIX, suite=args.suite, samples=args.samples, seed=args.seed
    )
    failures = 0
    for type_spec, auto_spec, res in results:
        status = "PASS" if res.passed else "FAIL"
        detail = f"  ({res.details})" if res.details else ""
        print(f"{status} {type_spec} {auto_spec} {res.name}{detail}")
        failures += not res.passed
    print(f"\n{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
