#!/usr/bin/env python3
"""Export the closure poset of a configuration as a DOT file.

Example:

    python3 scripts/export_poset.py --type B2 --out b2_poset.dot
    dot -Tpdf b2_poset.dot -o b2_poset.pdf
"""

import argparse
import sys

from stablepieces.verify import build_context


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--type", required=True, help="type spec, e.g. A3")
    parser.add_argument("--auto", default="id", help='automorphism, e.g. "1:2,2:1"')
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    args = parser.parse_args()

    ctx = build_context(args.type, args.auto)
    name = f"closure_poset_{ctx.rs.type_label}_{ctx.sigma.spec_string()}"
    dot = ctx.closure_poset().to_dot(name)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
        print(f"wrote {len(ctx.pieces)} nodes to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(dot)
    return 0


if __name__ == "__main__":
    sys.exit(main())
