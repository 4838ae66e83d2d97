"""Command-line surface: dimension tables, series expansions, verification.

Output goes to stdout as CSV (header row, LF endings, no quoting) or as a
JSON object ``{"meta": ..., "data": ...}``; diagnostics go to stderr.
All integers in data records are serialized as decimal strings, so
nothing is ever clipped to machine words.  Exit status: 0 success, 1
verification failure, 2 usage error, 3 resource-cap error.
"""

import argparse
import json
import sys

from . import __version__
from .errors import ResourceCapError, SelfCheckError
from .hochschild import (
    Prime,
    hh_dimension,
    hh_dimension_oracle,
    hh_dimension_series,
)
from .partitions import DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_CAP
from .series import euler_partition_series, expand_with_partition_series
from .statistics import (
    distinct_subsets_rational,
    even_pairs_rational,
    parts_equal_rational,
)
from .verify import SUITE_NAMES, run_suites

DEFAULT_ORDER_CAP = 1000
HARD_ORDER_CAP = 5000

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_JSON_KWARGS = {"indent": 2}

_SERIES_ARITY = {"P": 0, "F": 1, "G": 2, "CD": 2, "E": 0, "HH": 2}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hhsym",
        description="Exact Hochschild cohomology dimensions of symmetric group "
        "algebras and the partition identities behind them.",
    )
    parser.add_argument(
        "--version", action="version", version="hhsym " + __version__
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_common(sub):
        sub.add_argument(
            "--format", choices=("csv", "json"), default="csv",
            help="output format (default csv)",
        )
        sub.add_argument(
            "--enum-cap", type=int, default=DEFAULT_ENUMERATION_CAP,
            help="largest n any enumeration may sweep (default %d, hard max %d)"
            % (DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_CAP),
        )
        sub.add_argument(
            "--order-cap", type=int, default=DEFAULT_ORDER_CAP,
            help="largest series expansion order (default %d, hard max %d)"
            % (DEFAULT_ORDER_CAP, HARD_ORDER_CAP),
        )

    dim = subparsers.add_parser(
        "dim", help="Hochschild cohomology dimension table for one degree"
    )
    dim.add_argument("--degree", type=int, choices=(0, 1, 2), required=True)
    dim.add_argument("--prime", type=int, required=True, help="the characteristic p")
    dim.add_argument("--n-max", type=int, required=True)
    dim.add_argument(
        "--route", choices=("formula", "series", "oracle", "all"), default="formula",
        help="computation route; 'all' cross-checks every route (default formula)",
    )
    add_common(dim)

    series = subparsers.add_parser(
        "series", help="coefficients of a named generating function"
    )
    series.add_argument(
        "--which", choices=tuple(_SERIES_ARITY), required=True,
        help="P: partition series; F k: parts equal to k; G k ell: length "
        "thresholds; CD k r: subset statistic; E: even pairs; HH degree p",
    )
    series.add_argument("--params", type=int, nargs="*", default=[])
    series.add_argument("--order", type=int, required=True)
    add_common(series)

    verify = subparsers.add_parser(
        "verify", help="run identity verification suites"
    )
    verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--r-max", type=int, default=None)
    add_common(verify)

    return parser


def _validate_caps(args, parser):
    if not 0 <= args.enum_cap <= HARD_ENUMERATION_CAP:
        parser.error(
            "--enum-cap must lie in 0..%d, got %d"
            % (HARD_ENUMERATION_CAP, args.enum_cap)
        )
    if not 0 <= args.order_cap <= HARD_ORDER_CAP:
        parser.error(
            "--order-cap must lie in 0..%d, got %d" % (HARD_ORDER_CAP, args.order_cap)
        )


def _parse_prime(value, parser):
    try:
        return Prime(value)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(args, command, params, labels, rows):
    """Write records, one per index n, as CSV or JSON."""
    if args.format == "csv":
        lines = ["n," + ",".join(labels)]
        for n, values in rows:
            lines.append("%d,%s" % (n, ",".join(values[label] for label in labels)))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        payload = {
            "meta": {"command": command, "params": params, "version": __version__},
            "data": [{"n": n, "values": values} for n, values in rows],
        }
        sys.stdout.write(json.dumps(payload, **_JSON_KWARGS) + "\n")


def _cmd_dim(args, parser):
    prime = _parse_prime(args.prime, parser)
    if args.n_max < 0:
        parser.error("--n-max must be >= 0, got %d" % args.n_max)
    routes = ("formula", "series", "oracle") if args.route == "all" else (args.route,)
    if "series" in routes and args.n_max > args.order_cap:
        raise ResourceCapError(
            "series route needs expansion order %d above --order-cap %d"
            % (args.n_max, args.order_cap)
        )
    if "oracle" in routes and args.n_max > args.enum_cap:
        raise ResourceCapError(
            "oracle route sweeps up to n = %d, above --enum-cap %d"
            % (args.n_max, args.enum_cap)
        )

    columns = {}
    if "formula" in routes:
        columns["formula"] = [
            hh_dimension(args.degree, n, prime) for n in range(args.n_max + 1)
        ]
    if "series" in routes:
        expansion = hh_dimension_series(args.degree, prime, args.n_max)
        columns["series"] = list(expansion.coefficients)
    if "oracle" in routes:
        columns["oracle"] = [
            hh_dimension_oracle(args.degree, n, prime, enum_cap=args.enum_cap)
            for n in range(args.n_max + 1)
        ]

    rows = [
        (n, {route: str(columns[route][n]) for route in routes})
        for n in range(args.n_max + 1)
    ]
    params = {
        "degree": args.degree,
        "prime": prime.value,
        "n_max": args.n_max,
        "route": args.route,
        "enum_cap": args.enum_cap,
        "order_cap": args.order_cap,
    }
    _emit(args, "dim", params, routes, rows)

    if len(routes) > 1:
        for n in range(args.n_max + 1):
            values = {columns[route][n] for route in routes}
            if len(values) > 1:
                sys.stderr.write(
                    "route disagreement at n=%d: %s\n"
                    % (n, " ".join("%s=%d" % (r, columns[r][n]) for r in routes))
                )
                return EXIT_VERIFICATION
    return EXIT_OK


def _series_label(which, params):
    if not params:
        return which
    return which + "_" + "_".join(str(p) for p in params)


def _cmd_series(args, parser):
    params = list(args.params)
    if len(params) != _SERIES_ARITY[args.which]:
        parser.error(
            "--which %s takes %d parameter(s), got %d"
            % (args.which, _SERIES_ARITY[args.which], len(params))
        )
    if args.order < 0:
        parser.error("--order must be >= 0, got %d" % args.order)
    if args.order > args.order_cap:
        raise ResourceCapError(
            "order %d exceeds --order-cap %d" % (args.order, args.order_cap)
        )

    if args.which == "P":
        expansion = euler_partition_series(args.order)
    elif args.which == "F":
        (k,) = params
        if k < 1:
            parser.error("F needs k >= 1, got %d" % k)
        expansion = expand_with_partition_series(parts_equal_rational(k), args.order)
    elif args.which == "G":
        k, ell = params
        if k < 1 or ell < 1:
            parser.error("G needs k, ell >= 1, got %d, %d" % (k, ell))
        expansion = expand_with_partition_series(
            parts_equal_rational(k * ell), args.order
        )
    elif args.which == "CD":
        k, r = params
        if k < 1 or r < 0:
            parser.error("CD needs k >= 1 and r >= 0, got %d, %d" % (k, r))
        expansion = expand_with_partition_series(
            distinct_subsets_rational(k, r), args.order
        )
    elif args.which == "E":
        expansion = expand_with_partition_series(even_pairs_rational(), args.order)
    else:
        degree, p = params
        if degree not in (0, 1, 2):
            parser.error("HH degree must be 0, 1 or 2, got %d" % degree)
        prime = _parse_prime(p, parser)
        expansion = hh_dimension_series(degree, prime, args.order)

    label = _series_label(args.which, params)
    rows = [
        (n, {label: str(expansion.coefficient(n))}) for n in range(args.order + 1)
    ]
    meta = {
        "which": args.which,
        "params": params,
        "order": args.order,
        "enum_cap": args.enum_cap,
        "order_cap": args.order_cap,
    }
    _emit(args, "series", meta, (label,), rows)
    return EXIT_OK


def _cmd_verify(args, parser):
    n_max = args.n_max
    if n_max is not None:
        if n_max < 0:
            parser.error("--n-max must be >= 0, got %d" % n_max)
        if n_max > args.enum_cap:
            raise ResourceCapError(
                "verification up to n = %d exceeds --enum-cap %d"
                % (n_max, args.enum_cap)
            )
    elif args.enum_cap < DEFAULT_ENUMERATION_CAP:
        n_max = args.enum_cap
    if args.r_max is not None and args.r_max < 1:
        parser.error("--r-max must be >= 1, got %d" % args.r_max)

    results = run_suites([args.suite], n_max=n_max, r_max=args.r_max)

    if args.format == "csv":
        lines = ["suite,identity,scope,status,detail"]
        for res in results:
            lines.append(
                "%s,%s,%s,%s,%s"
                % (
                    res.suite,
                    res.identity,
                    res.scope,
                    "pass" if res.passed else "fail",
                    res.detail,
                )
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        payload = {
            "meta": {
                "command": "verify",
                "params": {
                    "suite": args.suite,
                    "n_max": n_max,
                    "r_max": args.r_max,
                    "enum_cap": args.enum_cap,
                    "order_cap": args.order_cap,
                },
                "version": __version__,
            },
            "data": [
                {
                    "suite": res.suite,
                    "identity": res.identity,
                    "scope": res.scope,
                    "status": "pass" if res.passed else "fail",
                    "detail": res.detail,
                }
                for res in results
            ],
        }
        sys.stdout.write(json.dumps(payload, **_JSON_KWARGS) + "\n")

    failures = [res for res in results if not res.passed]
    if failures:
        first = failures[0]
        sys.stderr.write(
            "first counterexample: suite=%s identity=%s %s\n"
            % (first.suite, first.identity, first.detail)
        )
        return EXIT_VERIFICATION
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate_caps(args, parser)
    try:
        if args.command == "dim":
            return _cmd_dim(args, parser)
        if args.command == "series":
            return _cmd_series(args, parser)
        return _cmd_verify(args, parser)
    except ResourceCapError as exc:
        sys.stderr.write("resource cap exceeded: %s\n" % exc)
        return EXIT_RESOURCE
    except SelfCheckError as exc:
        sys.stderr.write("internal cross-check failed: %s\n" % exc)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
