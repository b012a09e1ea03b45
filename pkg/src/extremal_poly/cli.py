"""Command-line front end.

All structured output is JSON written by a canonical serializer (17
significant digits, fixed key order) so identical inputs produce
byte-identical bytes; `emit-plot` writes CSV for plotting tools. Exit
codes: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import json
import math
import os
import sys

from .energy import solve_equilibrium
from .errors import ExtremalPolyError, InputError
from .lemniscate import (
    largest_disk,
    radius_lower_bound,
    radius_upper_bound,
    vertical_halfwidth,
)
from .poly_core import TOL_ORACLE, log_disc_from_roots, poly_from_roots
from .solvers import solve_max_disc, solve_min_abs
from .verification import format_report, run_suite

_VALUE_CUTOFF = math.log(1e300)


def canonical_json(obj) -> str:
    """Serialize to JSON with 17-significant-digit floats and insertion
    key order. parse_json followed by canonical_json is the identity on
    canonical text, which is what makes CLI output reproducible."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if math.isnan(obj):
            raise ValueError("refusing to serialize NaN")
        if math.isinf(obj):
            return '"inf"' if obj > 0 else '"-inf"'
        # adding +0.0 folds -0.0 into 0.0, whose text round-trips
        return "%.17g" % (obj + 0.0)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(canonical_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        parts = (
            "%s:%s" % (json.dumps(str(k)), canonical_json(v))
            for k, v in obj.items()
        )
        return "{" + ",".join(parts) + "}"
    raise TypeError("cannot serialize %r" % type(obj))


def parse_json(text: str):
    return json.loads(text)


def log_disc_to_dict(ld) -> dict:
    value = None
    if ld.sign != 0 and ld.log_abs < _VALUE_CUTOFF:
        value = ld.value
    return {"sign": ld.sign, "log_abs": ld.log_abs, "value": value}


def solution_to_dict(sol) -> dict:
    lead = sol.polys[0]
    mirror = None
    if len(sol.polys) > 1:
        other = sol.polys[1]
        mirror = {"roots": list(other.roots), "coeffs": list(other.coeffs)}
    return {
        "problem": sol.problem,
        "regime": sol.regime,
        "roots": list(lead.roots),
        "coeffs": list(lead.coeffs),
        "achieved_m": sol.achieved_m,
        "log_disc": log_disc_to_dict(sol.achieved_disc),
        "lambda_or_B": sol.lambda_or_b,
        "mirror": mirror,
    }


def disk_to_dict(disk, bounds: dict | None) -> dict:
    return {
        "center_x": disk.center_x,
        "radius": disk.radius,
        "boundary_point": {
            "re": disk.boundary_point.real,
            "im": disk.boundary_point.imag,
        },
        "has_interior": disk.has_interior,
        "bounds": bounds,
    }


def config_to_dict(config) -> dict:
    return {
        "points": list(config.points),
        "a": config.a,
        "potential_v": config.potential_v,
        "energy_I": config.energy_I,
    }


def _parse_roots(text: str) -> list[float]:
    try:
        roots = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError("could not parse --roots: %s" % exc) from None
    if len(roots) < 2:
        raise InputError("--roots needs at least two comma-separated reals")
    return roots


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal-poly",
        description="Extremal real-rooted polynomials: discriminant vs "
        "modulus at a point off the real line, with lemniscate and "
        "charge-configuration applications.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-min", help="minimise |f(ai)| at fixed discriminant")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--disc", type=float, required=True)

    p = sub.add_parser("solve-disc", help="maximise discriminant at fixed |f(ai)|")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=float, required=True)

    p = sub.add_parser("lemniscate", help="largest inscribed disk of |f| <= 1")
    p.add_argument("--roots", type=str, required=True)
    p.add_argument(
        "--bounds", action="store_true",
        help="include the closed-form radius bounds for this degree and "
        "discriminant",
    )

    p = sub.add_parser("energy", help="minimum-energy charge configuration")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--v", type=float, required=True)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--deep", action="store_true")

    p = sub.add_parser("emit-plot", help="plot-ready CSV on stdout")
    p.add_argument("--what", choices=("lemniscate", "cdf"), required=True)
    p.add_argument("--roots", type=str, required=True)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=None)
    return parser


def _cmd_lemniscate(args) -> int:
    poly = poly_from_roots(_parse_roots(args.roots))
    disk = largest_disk(poly)
    bounds = None
    if args.bounds:
        ld = log_disc_from_roots(poly)
        if ld.sign != 1:
            bounds = {"disc": 0.0, "upper": None, "lower": None}
        else:
            disc = math.exp(ld.log_abs) if ld.log_abs < _VALUE_CUTOFF else None
            d = poly.degree
            bounds = {
                "disc": disc,
                "upper": radius_upper_bound(d, disc) if disc else None,
                "lower": radius_lower_bound(d, disc) if disc else None,
            }
    print(canonical_json(disk_to_dict(disk, bounds)))
    return 0


def _cmd_emit_plot(args) -> int:
    roots = _parse_roots(args.roots)
    if args.what == "lemniscate":
        poly = poly_from_roots(roots)
        n = args.samples if args.samples else 64 * poly.degree + 1
        if n < 2:
            raise InputError("--samples must be at least 2")
        lo = poly.roots[0] - 1.0
        hi = poly.roots[-1] + 1.0
        sys.stdout.write("x,halfwidth\n")
        for i in range(n):
            x = lo + (hi - lo) * i / (n - 1)
            y = vertical_halfwidth(poly, x)
            sys.stdout.write("%.17g,%.17g\n" % (x, y))
        return 0
    if args.a <= 0 or not math.isfinite(args.a):
        raise InputError("--a must be positive and finite")
    pts = sorted(roots)
    d = len(pts)
    sys.stdout.write("x,f_emp,f_arctan\n")
    for k, x in enumerate(pts, start=1):
        target = 0.5 + math.atan(x / args.a) / math.pi
        sys.stdout.write("%.17g,%.17g,%.17g\n" % (x, k / d, target))
    return 0


def _cmd_verify(args) -> int:
    tol = TOL_ORACLE
    env = os.environ.get("EXTREMAL_POLY_TOL")
    if env is not None:
        try:
            tol = float(env)
        except ValueError:
            raise InputError("EXTREMAL_POLY_TOL is not a number: %r" % env)
        if tol <= 0 or not math.isfinite(tol):
            raise InputError("EXTREMAL_POLY_TOL must be positive and finite")
    results = run_suite(deep=args.deep, tol_oracle=tol)
    print(format_report(results))
    return 0 if all(r.passed for r in results) else 1


def _glue_negative_roots(tokens: list[str]) -> list[str]:
    # argparse reads a value with a leading "-" as an option name, which
    # breaks `--roots -1,1`; rewrite that pair into `--roots=-1,1`.
    glued = []
    i = 0
    while i < len(tokens):
        if (
            tokens[i] == "--roots"
            and i + 1 < len(tokens)
            and tokens[i + 1][:1] == "-"
        ):
            glued.append("--roots=" + tokens[i + 1])
            i += 2
        else:
            glued.append(tokens[i])
            i += 1
    return glued


def main(argv=None) -> int:
    tokens = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(_glue_negative_roots(tokens))
    try:
        if args.command == "solve-min":
            sol = solve_min_abs(args.a, args.d, args.disc)
            print(canonical_json(solution_to_dict(sol)))
            return 0
        if args.command == "solve-disc":
            sol = solve_max_disc(args.a, args.d, args.m)
            print(canonical_json(solution_to_dict(sol)))
            return 0
        if args.command == "lemniscate":
            return _cmd_lemniscate(args)
        if args.command == "energy":
            config = solve_equilibrium(args.a, args.d, args.v)
            print(canonical_json(config_to_dict(config)))
            return 0
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "emit-plot":
            return _cmd_emit_plot(args)
    except ExtremalPolyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    raise AssertionError("unhandled command %r" % args.command)


if __name__ == "__main__":
    sys.exit(main())
