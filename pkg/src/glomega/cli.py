"""Command-line front end: validate tables, run suites, print dimensions.

Exit codes: 0 all checks passed, 1 at least one check failed or did not
stabilize, 2 usage or load errors.  When ``--out`` is omitted but the
``OMEGA_OUT_DIR`` environment variable is set, the JSON report lands in that
directory as ``report-<suite>.json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .current import graded_dim
from .omega import StructureError, check_associativity, detect_unit, load_algebra
from .suites import SUITES, SuiteConfig, Report, resolve_omega, run_suite


def _parse_s(text: str):
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise StructureError("bad s list %r: %s" % (text, exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omega",
        description="exact verification suites for centralizer constructions over a coefficient table",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="validate an algebra file and report its properties")
    p_check.add_argument("file", help="path to a JSON multiplication table")

    p_run = sub.add_parser("run", help="run a named verification suite")
    p_run.add_argument("suite", choices=SUITES)
    p_run.add_argument("--omega", default="", help="builtin name (C, C^2, null(2), mat(2), nonassoc) or file path")
    p_run.add_argument("--n-min", type=int, default=2, dest="n_min")
    p_run.add_argument("--n-max", type=int, default=4, dest="n_max")
    p_run.add_argument("--d", type=int, default=2)
    p_run.add_argument("--max-len", type=int, default=3, dest="max_len")
    p_run.add_argument("--max-deg", type=int, default=2, dest="max_deg")
    p_run.add_argument("--s", default="0,1,-1,5/2", help="comma-separated rationals")
    p_run.add_argument("--seed", type=int, default=20240)
    p_run.add_argument("--out", default=None, help="path for the JSON report")

    p_dims = sub.add_parser("dims", help="graded dimensions of the gl(d) current algebra")
    p_dims.add_argument("--omega", default="C")
    p_dims.add_argument("--d", type=int, default=2)
    p_dims.add_argument("--grade", type=int, default=3)
    return parser


def _cmd_check(args) -> int:
    spec = load_algebra(args.file)
    print("name: %s" % spec.name)
    print("dim: %d" % spec.dim)
    print("basis: %s" % ", ".join(spec.basis))
    witness = check_associativity(spec)
    if witness is None:
        print("associative: yes")
    else:
        print("associative: no (witness triple %r)" % (witness,))
    unit = detect_unit(spec)
    print("unit: %s" % (unit if unit is not None else "none"))
    return 0


def _report_path(args) -> Optional[str]:
    if args.out:
        return args.out
    out_dir = os.environ.get("OMEGA_OUT_DIR")
    if out_dir:
        return os.path.join(out_dir, "report-%s.json" % args.suite)
    return None


def _cmd_run(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        omega=args.omega,
        n_min=args.n_min,
        n_max=args.n_max,
        d=args.d,
        max_len=args.max_len,
        max_deg=args.max_deg,
        s_values=_parse_s(args.s),
        seed=args.seed,
        out=args.out,
    )
    report = run_suite(cfg)
    print(report.human_summary())
    path = _report_path(args)
    if path:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print("report: %s" % path)
    return report.exit_code()


def _cmd_dims(args) -> int:
    spec = resolve_omega(args.omega)
    if args.grade < 0 or args.d < 1:
        raise StructureError("need grade >= 0 and d >= 1")
    print("omega=%s dim=%d d=%d" % (args.omega, spec.dim, args.d))
    for n in range(args.grade + 1):
        print("grade=%d dim=%d" % (n, graded_dim(spec, args.d, n)))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "dims":
            return _cmd_dims(args)
    except StructureError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
