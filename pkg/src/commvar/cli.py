"""Command-line interface: info, irr-codim, and the verification suite.

Exit codes: 0 pass, 1 fail, 2 usage, 3 unsupported case, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .rootsystem import InvalidTypeError, build_root_system, root_length_classes
from .chevalley import build_lie_algebra
from .decomp import commvar_irr_codim
from .nilpotents import UnsupportedLeviError
from . import kernels, report


def _build_system(args):
    try:
        return build_root_system(args.type, args.rank)
    except InvalidTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)


def cmd_info(args) -> int:
    rs = _build_system(args)
    m = rs.rank + len(rs.roots)
    rows = [
        ("type", f"{rs.type_label}{rs.rank}"
         + (f" (requested {rs.requested_label})" if rs.requested_label else "")),
        ("dim g (m)", m),
        ("rank (r)", rs.rank),
        ("positive roots", len(rs.roots) // 2),
        ("lacety", rs.lacety),
        ("root length classes", root_length_classes(rs)),
    ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}")
    return 0


def cmd_irr_codim(args) -> int:
    rs = _build_system(args)
    g = build_lie_algebra(rs)
    try:
        codim, ledger = commvar_irr_codim(g, fast=args.fast, workers=args.workers)
    except UnsupportedLeviError as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps({"type": f"{rs.type_label}{rs.rank}", "codim": codim,
                          "classes": [e.as_dict() for e in ledger]}, indent=2))
        return 0
    print(f"irregular-locus codimension for {rs.type_label}{rs.rank}: {codim}")
    print(f"{'I':<12} {'Levi type':<12} {'rep':<16} {'dim s(I)_x':<11} {'c':<6} method")
    for e in ledger:
        c = e.c_value if e.c_value is not None else f">={e.c_lower_bound}"
        subset = "{" + ",".join(str(i + 1) for i in e.subset) + "}"
        print(f"{subset:<12} {'+'.join(e.signature):<12} {e.rep_label:<16} "
              f"{e.dim_sIx:<11} {str(c):<6} {e.method}")
    return 0


def cmd_verify_paper(args) -> int:
    try:
        results = report.run_all(fast=args.fast, seed=args.seed, workers=args.workers,
                                 max_rank=args.max_rank)
    except UnsupportedLeviError as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return 3
    width = max(len(r.check_id) for r in results)
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for r in results:
        counts[r.status] += 1
        line = f"{r.check_id:<{width}}  {r.status.upper():<12}"
        if r.status != "pass":
            line += f" expected={r.expected} computed={r.computed}"
        print(line)
    print(f"\n{counts['pass']} passed, {counts['fail']} failed, "
          f"{counts['inconclusive']} inconclusive ({len(results)} checks)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.as_dict() for r in results], fh, indent=2)
        print(f"report written to {args.out}")
    if counts["fail"]:
        return 1
    if counts["inconclusive"]:
        return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="commvar",
        description="Exact computations on commuting varieties of simple Lie algebras "
                    f"(point-count kernel backend: {kernels.BACKEND})")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="dimensions, rank, lacety of a simple type")
    p.add_argument("--type", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("irr-codim",
                       help="codimension of the irregular locus of the commuting variety")
    p.add_argument("--type", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--json", action="store_true", help="machine-readable ledger")
    p.add_argument("--fast", action="store_true", help="skip the p = 17 enumeration")
    p.add_argument("--workers", type=int, default=None,
                   help="point-count worker threads (default: COMMVAR_WORKERS or 4)")
    p.set_defaults(func=cmd_irr_codim)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--fast", action="store_true", help="primes {5, 13} only")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rank", type=int, default=4,
                   help="top rank for the classical series in the table")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
