"""Command-line front end: single invariants, series tables, verify suites.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 internal inconsistency (specialization disagreement).  All
rationals are emitted as decimal strings, never floats, and a fixed
seed yields byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import engine, verify
from .engine import SpecializationDisagreement
from .toric import ToricError, builtin_surface, load_surface_config

DEFAULT_SEED_ENV = "NESTHILB_SEED"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


class UsageError(Exception):
    pass


def _default_seed():
    raw = os.environ.get(DEFAULT_SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{DEFAULT_SEED_ENV} must be an integer, got {raw!r}")


def _resolve_surface(spec):
    """A builtin surface name, or a path to a YAML/JSON surface config."""
    if os.path.exists(spec):
        return load_surface_config(spec)
    try:
        return builtin_surface(spec), {}
    except ToricError:
        raise UsageError(
            f"unknown surface {spec!r}: not a builtin name or a config file"
        )


def _resolve_bundle(surface, named, label):
    """Bundle labels: O, K, O(a,b,...), a config label, or raw coefficients."""
    if label in named:
        return named[label]
    if label == "O":
        return surface.structure_sheaf()
    if label == "K":
        return surface.canonical_bundle()
    if label.startswith("O(") and label.endswith(")"):
        inner = label[2:-1]
        try:
            coeffs = [int(c) for c in inner.split(",")]
        except ValueError:
            raise UsageError(f"cannot parse bundle {label!r}")
        coeffs += [0] * (len(surface.rays) - len(coeffs))
        if len(coeffs) != len(surface.rays):
            raise UsageError(f"bundle {label!r} has too many coefficients")
        return surface.line_bundle(coeffs)
    try:
        coeffs = [int(c) for c in label.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse bundle {label!r}")
    if len(coeffs) != len(surface.rays):
        raise UsageError("one divisor coefficient per ray required")
    return surface.line_bundle(coeffs)


def _frac_dict(value):
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _emit_csv(header, rows, out):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    out.write(buf.getvalue())


def cmd_integrate(args, out):
    surface, named = _resolve_surface(args.surface)
    bundle = _resolve_bundle(surface, named, args.bundle)
    if args.n1 < args.n2:
        raise UsageError("n1 < n2: the nesting range is empty")
    routes = ["nested", "product"] if args.route == "both" else [args.route]
    records = [
        engine.invariant_record(
            surface, bundle, args.bundle, args.n1, args.n2,
            route=route, seed=args.seed, jobs=args.jobs,
        )
        for route in routes
    ]
    agreement = len({r.value for r in records}) == 1
    if args.format == "json":
        payload = {
            "records": [r.to_dict() for r in records],
            "agreement": agreement,
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        header = ["surface", "bundle", "n1", "n2", "route", "num", "den", "agreement"]
        rows = [
            [r.surface, r.bundle, r.n1, r.n2, r.route,
             str(r.value.numerator), str(r.value.denominator),
             str(agreement).lower()]
            for r in records
        ]
        _emit_csv(header, rows, out)
    return EXIT_OK


def cmd_series(args, out):
    surface, named = _resolve_surface(args.surface)
    bundle = _resolve_bundle(surface, named, args.bundle)
    direct = engine.z_nest_series(
        surface, bundle, args.cap, seed=args.seed, jobs=args.jobs, route=args.route
    )
    closed = engine.closed_form_series(surface, bundle, args.cap) if args.compare else None
    rows = []
    for n1 in range(args.cap + 1):
        for n2 in range(min(n1, args.cap - n1) + 1):
            value = direct.coeff(n1, n2)
            row = {"n1": n1, "n2": n2, "value": _frac_dict(value)}
            if closed is not None:
                cf = closed.coeff(n1, n2)
                row["closed_form"] = _frac_dict(cf)
                row["match"] = value == cf
            rows.append(row)
    if args.format == "json":
        payload = {
            "surface": surface.name,
            "bundle": args.bundle,
            "cap": args.cap,
            "rows": rows,
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        header = ["n1", "n2", "num", "den"]
        if closed is not None:
            header += ["closed_num", "closed_den", "match"]
        flat = []
        for row in rows:
            line = [row["n1"], row["n2"], row["value"]["num"], row["value"]["den"]]
            if closed is not None:
                line += [
                    row["closed_form"]["num"],
                    row["closed_form"]["den"],
                    str(row["match"]).lower(),
                ]
            flat.append(line)
        _emit_csv(header, flat, out)
    return EXIT_OK


def cmd_verify(args, out):
    checks = verify.run_suite(args.suite, cap=args.cap, seed=args.seed, jobs=args.jobs)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        line = f"{status} {c.label}"
        if not c.passed and c.detail:
            line += f": {c.detail}"
        out.write(line + "\n")
    summary = "pass" if not failed else f"fail ({len(failed)}/{len(checks)})"
    out.write(f"{args.suite}: {summary}\n")
    return EXIT_OK if not failed else EXIT_VERIFY_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nesthilb",
        description="Exact localization invariants of nested Hilbert schemes "
        "on toric surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None,
                       help=f"specialization seed (default ${DEFAULT_SEED_ENV} or 0)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p_int = sub.add_parser("integrate", help="one invariant at (n1, n2)")
    p_int.add_argument("--surface", required=True, help="builtin name or config path")
    p_int.add_argument("--bundle", default="O",
                       help="O, K, O(a,b,...), config label, or coefficients a,b,...")
    p_int.add_argument("--n1", type=int, required=True)
    p_int.add_argument("--n2", type=int, required=True)
    p_int.add_argument("--route", choices=("nested", "product", "both"), default="nested")
    common(p_int)

    p_ser = sub.add_parser("series", help="coefficient table up to a total-degree cap")
    p_ser.add_argument("--surface", required=True)
    p_ser.add_argument("--bundle", default="O")
    p_ser.add_argument("--cap", type=int, required=True)
    p_ser.add_argument("--route", choices=("nested", "product"), default="nested")
    p_ser.add_argument("--compare", choices=("closed-form",), default=None,
                       help="add the closed-product coefficient and a match flag")
    common(p_ser)

    p_ver = sub.add_parser("verify", help="run a named verification suite")
    p_ver.add_argument("suite", choices=verify.SUITES)
    p_ver.add_argument("--cap", type=int, default=None)
    common(p_ver)

    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if getattr(args, "cap", 0) is not None and getattr(args, "cap", 0) < 0:
            raise UsageError("--cap must be nonnegative")
        if getattr(args, "n1", 0) < 0 or getattr(args, "n2", 0) < 0:
            raise UsageError("n1 and n2 must be nonnegative")
        if args.command == "integrate":
            return cmd_integrate(args, out)
        if args.command == "series":
            return cmd_series(args, out)
        return cmd_verify(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ToricError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpecializationDisagreement as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
