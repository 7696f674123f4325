"""Command-line front end.

Every subcommand prints byte-deterministic output for fixed inputs and
seed: all collections are sorted before emission.  Exit codes: 0 success
(and all checks passing), 1 usage or validation error, 2 check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import git_locus, pgl2_oracle, quotient_strata, verify
from .pieces import InternalConsistencyError
from .rootsys import DEFAULT_GUARD, RootSystemError, Weight
from .weyl import element_string

GUARD_ENV_VAR = "STABLEPIECES_GUARD"


def _guard_from(args):
    if args.guard is not None:
        return args.guard
    env = os.environ.get(GUARD_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise RootSystemError(f"{GUARD_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_GUARD


def _add_common(sub, auto_required=True):
    sub.add_argument("--type", required=True, help="type spec, e.g. A3")
    if auto_required:
        sub.add_argument("--auto", default="id", help='automorphism: "id" or "1:3,2:2,3:1"')
    sub.add_argument("--guard", type=int, default=None, help="Weyl group size guard")


def _add_format(sub, choices=("json", "table")):
    sub.add_argument("--format", choices=choices, default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stablepieces",
        description="Stable-piece combinatorics of wonderful compactifications.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("pieces", help="enumerate the pieces with their cores")
    _add_common(sub)
    _add_format(sub)

    sub = subs.add_parser("closure", help="list the pieces in one piece's closure")
    _add_common(sub)
    sub.add_argument("--piece", required=True, help="piece id, e.g. 'J={1,3};w=s2.s1'")
    _add_format(sub)

    sub = subs.add_parser("poset", help="closure poset (cover relations)")
    _add_common(sub)
    _add_format(sub, choices=("dot", "json"))

    sub = subs.add_parser("nilcone", help="pieces in the cone of a weight")
    _add_common(sub)
    sub.add_argument("--lambda", dest="lam", required=True, help="weight, e.g. 1,2")
    _add_format(sub)

    sub = subs.add_parser("semistable", help="the identity-element pieces")
    _add_common(sub)
    _add_format(sub)

    sub = subs.add_parser("common-nilcone", help="pieces in every cone")
    _add_common(sub)
    _add_format(sub)

    sub = subs.add_parser("strata", help="quotient strata (identity automorphism only)")
    _add_common(sub)
    _add_format(sub)

    sub = subs.add_parser("verify", help="run verification suites")
    sub.add_argument("--type", default=None, help="type spec; omit to run the built-in matrix")
    sub.add_argument("--auto", default="id")
    sub.add_argument("--guard", type=int, default=None)
    sub.add_argument("--suite", choices=("all",) + verify.SUITE_NAMES, default="all")
    sub.add_argument("--samples", type=int, default=200)
    sub.add_argument("--seed", type=int, default=42)
    _add_format(sub)

    sub = subs.add_parser("oracle-pgl2", help="rank-one matrix model checks")
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument("--seed", type=int, default=42)
    _add_format(sub)

    return parser


def _parse_weight(ctx, text):
    try:
        coeffs = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise RootSystemError(f"bad weight {text!r}") from None
    if len(coeffs) != ctx.rs.rank:
        raise RootSystemError(f"weight {text!r} has wrong length for {ctx.rs.type_label}")
    return Weight(coeffs)


def _piece_rows(pieces_list):
    return [
        {
            "id": p.id,
            "J": sorted(p.J),
            "w": element_string(p.w),
            "core": sorted(p.core),
        }
        for p in sorted(pieces_list, key=lambda p: p.id)
    ]


def _emit(args, obj, table_rows=None, table_header=None):
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        if table_rows is None:
            print(json.dumps(obj, indent=2, sort_keys=True))
            return
        widths = [max(len(str(row[k])) for row in table_rows + [dict(zip(table_header, table_header))])
                  for k in table_header]
        print("  ".join(h.ljust(w) for h, w in zip(table_header, widths)))
        for row in table_rows:
            print("  ".join(str(row[k]).ljust(w) for k, w in zip(table_header, widths)))


def _piece_table(rows):
    return [
        {"id": r["id"], "core": "{" + ",".join(map(str, r["core"])) + "}"}
        for r in rows
    ]


def _run(args):
    if args.command == "oracle-pgl2":
        report = pgl2_oracle.oracle_report(args.samples, args.seed)
        _emit(args, report,
              table_rows=[{"check": c["name"], "pass": c["pass"]} for c in report["checks"]],
              table_header=["check", "pass"])
        return 0 if all(c["pass"] for c in report["checks"]) else 2

    if args.command == "verify":
        configs = [(args.type, args.auto)] if args.type else list(verify.DEFAULT_MATRIX)
        results = verify.run_configs(
            configs, suite=args.suite, guard=_guard_from(args),
            samples=args.samples, seed=args.seed,
        )
        if args.format == "json":
            obj = [
                {"type": t, "automorphism": a, "name": r.name, "pass": r.passed,
                 "details": r.details}
                for t, a, r in results
            ]
            print(json.dumps(obj, indent=2, sort_keys=True))
        else:
            for t, a, r in results:
                status = "PASS" if r.passed else "FAIL"
                detail = f"  ({r.details})" if r.details else ""
                print(f"{status} {t} {a} {r.name}{detail}")
        return 0 if all(r.passed for _, _, r in results) else 2

    ctx = verify.build_context(args.type, args.auto, guard=_guard_from(args))
    sigma = ctx.sigma

    if args.command == "pieces":
        rows = _piece_rows(ctx.pieces)
        obj = {"type": ctx.rs.type_label, "automorphism": sigma.spec_string(), "pieces": rows}
        _emit(args, obj, table_rows=_piece_table(rows), table_header=["id", "core"])
        return 0

    if args.command == "closure":
        piece = ctx.parse_piece_id(args.piece)
        rows = _piece_rows(ctx.closure(piece))
        obj = {"piece": piece.id, "closure": [r["id"] for r in rows]}
        _emit(args, obj, table_rows=_piece_table(rows), table_header=["id", "core"])
        return 0

    if args.command == "poset":
        poset = ctx.closure_poset()
        if args.format == "dot":
            name = f"closure_poset_{ctx.rs.type_label}_{sigma.spec_string()}"
            sys.stdout.write(poset.to_dot(name))
        else:
            print(json.dumps(poset.to_json_obj(), indent=2, sort_keys=True))
        return 0

    if args.command == "nilcone":
        lam = _parse_weight(ctx, args.lam)
        members = git_locus.nilcone_pieces(ctx, lam)
        rows = _piece_rows(members)
        obj = {"lambda": str(lam), "pieces": [r["id"] for r in rows]}
        _emit(args, obj, table_rows=_piece_table(rows), table_header=["id", "core"])
        return 0

    if args.command == "semistable":
        rows = _piece_rows(git_locus.semistable_pieces(ctx))
        _emit(args, {"pieces": [r["id"] for r in rows]},
              table_rows=_piece_table(rows), table_header=["id", "core"])
        return 0

    if args.command == "common-nilcone":
        rows = _piece_rows(git_locus.common_nilcone(ctx))
        _emit(args, {"pieces": [r["id"] for r in rows]},
              table_rows=_piece_table(rows), table_header=["id", "core"])
        return 0

    if args.command == "strata":
        quotient_strata.require_untwisted(sigma)
        obj = quotient_strata.strata_json_obj(ctx.group)
        _emit(args, obj,
              table_rows=[
                  {"J": "{" + ",".join(map(str, s["J"])) + "}",
                   "cones": s["cone_count"], "piece": s["piece"]}
                  for s in obj["strata"]
              ],
              table_header=["J", "cones", "piece"])
        return 0

    raise RootSystemError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the validation code
        return 0 if exc.code == 0 else 1
    try:
        return _run(args)
    except (RootSystemError, pgl2_oracle.OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
