"""Command-line front end.

Exit codes: 0 when every check passed, 1 when at least one violation was
found, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from .core import NotANumericalSemigroup, build_semigroup
from .enumeration import BACKEND, SweepConfig, SweepReport, fuzz_sweep, sweep
from .ledger import fmt_rational
from .partition import omega_boundary, omega_contains
from .report import (
    CSV_COLUMNS,
    analysis_notes,
    dumps_json,
    evaluate,
    parse_checks,
    record_text,
    records_to_csv,
    records_to_json,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

COLUMNS_HELP = "CSV columns (fixed order): " + ",".join(CSV_COLUMNS)


class UsageError(Exception):
    pass


def _gens(text: str) -> List[int]:
    try:
        gens = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse generator list {text!r}")
    if not gens:
        raise UsageError("empty generator list")
    if min(gens) <= 0:
        raise UsageError("generators must be positive")
    return gens


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        p = Path(path)
        if p.parent and not p.parent.exists():
            p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}")


def _emit_records(report: SweepReport, out: Optional[str]) -> None:
    if out is None:
        return
    if out.endswith(".json"):
        _write(out, records_to_json(report.records))
    else:
        _write(out, records_to_csv(report.records))


def _finish(report: SweepReport, args) -> int:
    _emit_records(report, args.out)
    if args.summary:
        _write(args.summary, report.summary_json())
    print(f"semigroups: {report.total}  filtered: {report.filtered}  "
          f"violations: {report.total_violations}", file=sys.stderr)
    for c, n in report.violations.items():
        if n:
            print(f"  {c}: {n}", file=sys.stderr)
    return EXIT_VIOLATION if report.total_violations else EXIT_OK


def cmd_analyze(args) -> int:
    try:
        S = build_semigroup(_gens(args.gens))
    except NotANumericalSemigroup:
        raise UsageError("not a numerical semigroup: gcd ≠ 1")
    rec = evaluate(S)
    if args.format == "json":
        d = rec.to_dict()
        d["notes"] = analysis_notes()
        sys.stdout.write(dumps_json(d))
    else:
        sys.stdout.write(record_text(rec))
    return EXIT_VIOLATION if rec.violated else EXIT_OK


def cmd_sweep(args) -> int:
    config = SweepConfig(
        max_genus=args.max_genus,
        filter=args.filter,
        checks=parse_checks(args.checks),
        worker_count=args.jobs,
        split_depth=args.split_depth,
        verbose=args.verbose,
    )
    return _finish(sweep(config), args)


def cmd_fuzz(args) -> int:
    config = SweepConfig(
        filter=args.filter,
        checks=parse_checks(args.checks),
        verbose=args.verbose,
        seed=args.seed,
        count=args.count,
        max_mult=args.max_mult,
        spread=args.spread,
        require=args.require.replace("-", "_") if args.require else None,
    )
    return _finish(fuzz_sweep(config), args)


def region_rows(mu: int, nu: int) -> List[List[str]]:
    """Lattice rows over [0, nu-1]^2 followed by hyperbola samples at integer q1."""
    rows = []
    for q1 in range(nu):
        for q2 in range(nu):
            rows.append(["lattice", str(q1), str(q2), "1" if omega_contains(mu, nu, q1, q2) else "0"])
    for q1 in range(1, nu):
        y = omega_boundary(mu, nu, q1)
        rows.append(["boundary", str(q1), fmt_rational(y), "1" if omega_contains(mu, nu, q1, y) else "0"])
    return rows


def cmd_region(args) -> int:
    if args.m < 1 or args.e < 1:
        raise UsageError("--m and --e must be positive")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "q1", "q2", "inside"])
    w.writerows(region_rows(args.m, args.e))
    _write(args.out, buf.getvalue())
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wilfbounds",
        description=f"Exact checks of Wilf-type bounds for numerical semigroups (walker: {BACKEND}).",
        epilog=COLUMNS_HELP,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report on a single semigroup", epilog=COLUMNS_HELP)
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 5,7,9")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="exhaustive sweep over the genus tree", epilog=COLUMNS_HELP)
    p.add_argument("--max-genus", type=_nonnegative, required=True)
    p.add_argument("--filter", choices=("all", "large-a2", "large_a2"), default="large-a2")
    p.add_argument("--checks", default="all", help="'all' or a comma-separated list of check ids")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--split-depth", type=_nonnegative, default=10)
    p.add_argument("--out", help="records file (.json for JSON, CSV otherwise)")
    p.add_argument("--summary", help="write the aggregate report as JSON")
    p.add_argument("--verbose", action="store_true", help="emit a record for every filtered semigroup")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("region", help="lattice points and boundary samples of Omega(m, e)")
    p.add_argument("--m", type=int, required=True, help="multiplicity")
    p.add_argument("--e", type=int, required=True, help="embedding dimension")
    p.add_argument("--out")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("fuzz", help="checks over seeded random generator sets", epilog=COLUMNS_HELP)
    p.add_argument("--count", type=_nonnegative, required=True)
    p.add_argument("--max-mult", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--spread", type=_positive, default=2)
    p.add_argument("--filter", choices=("all", "large-a2", "large_a2"), default="large-a2")
    p.add_argument("--checks", default="all")
    p.add_argument("--require", choices=("nu10-large-a2",), help="targeted mode")
    p.add_argument("--out")
    p.add_argument("--summary")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_fuzz)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
