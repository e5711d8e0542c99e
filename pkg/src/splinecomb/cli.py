"""Command-line interface.

One executable with subcommand groups for spline evaluation, table
generation, volume experiments, and identity verification.  Every number
is emitted as a canonical "p/q" or integer string, never floating point,
and identical argument vectors produce byte-identical output.

Exit codes: 0 success, 1 verification failure (report still emitted in
full), 2 usage error or enumeration budget violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import descent, eulerian, geometry, splinecore
from .errors import TooLarge
from .numcore import factorial, format_rational, parse_rational
from .polyring import Polynomial
from .verify import (
    VerifyConfig,
    VerifyReport,
    verify_all,
    verify_descent,
    verify_eulerian,
)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    common.add_argument(
        "--budget",
        type=int,
        default=descent.DEFAULT_ENUMERATION_BUDGET,
        help="enumeration budget for brute-force routes",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="splinecomb", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    bspline = top.add_parser("bspline", help="exact cardinal B-spline operations")
    bsub = bspline.add_subparsers(dest="subcommand", required=True)
    p = bsub.add_parser("eval", parents=[common], help="evaluate the order-d spline")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", type=parse_rational, required=True)
    p.add_argument("--route", choices=("explicit", "recurrence"), default="explicit")
    p.set_defaults(handler=_cmd_bspline_eval)
    p = bsub.add_parser("piece", parents=[common], help="polynomial piece on [j, j+1)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(handler=_cmd_bspline_piece)
    p = bsub.add_parser("integrate", parents=[common], help="exact integral over [a, b]")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=parse_rational, required=True)
    p.add_argument("--b", type=parse_rational, required=True)
    p.set_defaults(handler=_cmd_bspline_integrate)

    eul = top.add_parser("eulerian", help="Eulerian numbers and refinements")
    esub = eul.add_subparsers(dest="subcommand", required=True)
    p = esub.add_parser("row", parents=[common], help="row of Eulerian numbers")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--route", choices=("spline", "brute"), default="spline")
    p.set_defaults(handler=_cmd_eulerian_row)
    p = esub.add_parser("refined", parents=[common], help="refined triangle for S_{d+1}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--route", choices=("explicit", "lambda", "brute"), default="explicit")
    p.set_defaults(handler=_cmd_eulerian_refined)
    p = esub.add_parser("verify", parents=[common], help="Eulerian identity suite")
    p.add_argument("--d-max", type=int, default=6)
    p.set_defaults(handler=_cmd_eulerian_verify)

    des = top.add_parser("descent", help="descent tables of indexed permutations")
    dsub = des.add_subparsers(dest="subcommand", required=True)
    p = dsub.add_parser("table", parents=[common], help="descent histogram for (d, n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=descent.ROUTES, default="spline")
    p.set_defaults(handler=_cmd_descent_table)
    p = dsub.add_parser("poly", parents=[common], help="descent generating polynomial")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_descent_poly)
    p = dsub.add_parser("verify", parents=[common], help="descent identity suite")
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=3)
    p.set_defaults(handler=_cmd_descent_verify)

    geo = top.add_parser("geometry", help="volume experiments")
    gsub = geo.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("mc", parents=[common], help="Monte Carlo slab volume")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--scale", type=int, required=True)
    p.add_argument("--lower", type=parse_rational, required=True)
    p.add_argument("--upper", type=parse_rational, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_geometry_mc)
    p = gsub.add_parser("minkowski", parents=[common], help="Minkowski volume polynomial")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_geometry_minkowski)

    p = top.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--all", action="store_true", required=True, help="run every suite")
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--samples", type=int, default=100_000, help="Monte Carlo samples per slice/seed")
    p.set_defaults(handler=_cmd_verify_all)

    return parser


def _emit(args, rows: list[tuple], payload: dict) -> None:
    """rows drive the csv rendering, payload the json one; same numbers."""
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for row in rows:
            print(",".join(str(cell) for cell in row))


def _poly_strings(poly: Polynomial) -> list[str]:
    return poly.coefficient_strings()


def _cmd_bspline_eval(args) -> int:
    if args.route == "recurrence":
        value = splinecore.bspline_eval_recurrence(args.d, args.x)
    else:
        value = splinecore.bspline_eval_explicit(args.d, args.x)
    text = format_rational(value)
    _emit(
        args,
        [(text,)],
        {"d": args.d, "x": format_rational(args.x), "route": args.route, "value": text},
    )
    return 0


def _cmd_bspline_piece(args) -> int:
    piece = splinecore.bspline_piece(args.d, args.j)
    coeffs = _poly_strings(piece.poly)
    _emit(args, [tuple(coeffs)], {"d": args.d, "j": args.j, "coefficients": coeffs})
    return 0


def _cmd_bspline_integrate(args) -> int:
    value = splinecore.bspline_integrate(args.d, args.a, args.b)
    text = format_rational(value)
    _emit(
        args,
        [(text,)],
        {
            "d": args.d,
            "a": format_rational(args.a),
            "b": format_rational(args.b),
            "value": text,
        },
    )
    return 0


def _cmd_eulerian_row(args) -> int:
    if args.route == "brute":
        row = eulerian.eulerian_bruteforce(args.d)
    else:
        row = eulerian.eulerian_row_spline(args.d)
    rows = [(k, row.value(k)) for k in range(1, args.d + 1)]
    _emit(
        args,
        rows,
        {"d": args.d, "route": args.route, "values": [str(v) for v in row.values]},
    )
    return 0


def _cmd_eulerian_refined(args) -> int:
    triangle = eulerian.refined_triangle(args.d, args.route)
    rows = [(k, j, triangle.value(k, j)) for k in range(args.d + 1) for j in range(args.d + 1)]
    _emit(
        args,
        rows,
        {
            "d": args.d,
            "route": args.route,
            "values": [[str(v) for v in row] for row in triangle.values],
        },
    )
    return 0


def _cmd_descent_table(args) -> int:
    table = descent.descent_table(args.d, args.n, args.route, budget=args.budget)
    rows = [(k, table.values[k]) for k in range(args.d + 1)]
    conservation = sum(table.values) == args.n**args.d * factorial(args.d)
    log_concave = all(m >= 0 for m in descent.log_concavity_verdict(table))
    _emit(
        args,
        rows,
        {
            "d": args.d,
            "n": args.n,
            "route": args.route,
            "values": [str(v) for v in table.values],
            "checks": {"conservation": conservation, "log_concave": log_concave},
        },
    )
    return 0


def _cmd_descent_poly(args) -> int:
    table = descent.descent_table(args.d, args.n, "spline")
    coeffs = _poly_strings(table.polynomial)
    _emit(args, [tuple(coeffs)], {"d": args.d, "n": args.n, "coefficients": coeffs})
    return 0


def _cmd_geometry_mc(args) -> int:
    spec = geometry.SliceSpec(d=args.d, scale=args.scale, lower=args.lower, upper=args.upper)
    est = geometry.mc_volume(spec, args.samples, args.seed)
    fields = [
        ("estimate", format_rational(est.estimate)),
        ("standard_error", format_rational(est.standard_error)),
        ("hits", est.hits),
        ("samples", est.samples),
        ("seed", est.seed),
    ]
    _emit(
        args,
        fields,
        {
            "d": args.d,
            "scale": args.scale,
            "lower": format_rational(args.lower),
            "upper": format_rational(args.upper),
            **dict(fields),
        },
    )
    return 0


def _cmd_geometry_minkowski(args) -> int:
    poly = geometry.minkowski_poly(args.d, args.k)
    coeffs = _poly_strings(poly)
    _emit(args, [tuple(coeffs)], {"d": args.d, "k": args.k, "coefficients": coeffs})
    return 0


def _report_rows(reports: list[VerifyReport]) -> list[tuple]:
    rows = [("suite", "cases_run", "cases_failed")]
    for rep in reports:
        rows.append((rep.suite, rep.cases_run, rep.cases_failed))
    for rep in reports:
        for case, expected, actual in rep.failures:
            rows.append(("failure", rep.suite, case, expected, actual))
    return rows


def _report_payload(reports: list[VerifyReport]) -> dict:
    return {
        "reports": [
            {
                "suite": rep.suite,
                "cases_run": rep.cases_run,
                "cases_failed": rep.cases_failed,
                "failures": [
                    {"case": case, "expected": expected, "actual": actual}
                    for case, expected, actual in rep.failures
                ],
            }
            for rep in reports
        ],
        "total_cases": sum(rep.cases_run for rep in reports),
        "total_failed": sum(rep.cases_failed for rep in reports),
    }


def _emit_reports(args, reports: list[VerifyReport]) -> int:
    _emit(args, _report_rows(reports), _report_payload(reports))
    return 0 if all(rep.ok for rep in reports) else 1


def _cmd_eulerian_verify(args) -> int:
    return _emit_reports(args, [verify_eulerian(VerifyConfig(d_max=args.d_max, budget=args.budget))])


def _cmd_descent_verify(args) -> int:
    config = VerifyConfig(d_max=args.d_max, n_max=args.n_max, budget=args.budget)
    return _emit_reports(args, [verify_descent(config)])


def _cmd_verify_all(args) -> int:
    config = VerifyConfig(
        d_max=args.d_max, n_max=args.n_max, budget=args.budget, mc_samples=args.samples
    )
    return _emit_reports(args, verify_all(config))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
