"""Command-line front end.

Exit codes: 0 success; 2 precondition or input errors (with a one-line
diagnostic); 3 I/O failures; 4 internal invariant violations (bugs).
Output is UTF-8 and byte-stable for identical inputs at a single worker.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from .classify import enumerate_reduced, reproduce_tables
from .construct import construct, dj_family, level_solutions, profile
from .core import mask_to_string
from .errors import Exact1qError, InternalError
from .feasibility import decide
from .jsonio import (
    format_rational,
    function_to_dict,
    load_function,
    load_witness,
    parse_rational,
    result_to_dict,
)
from .poly import function_of, polynomial, represent
from .reduction import reduce
from .simulate import success_probabilities

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


def _emit(payload, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _workers(args) -> int:
    env = os.environ.get("EXACT1Q_WORKERS")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise Exact1qError(f"EXACT1Q_WORKERS must be an integer, got {env!r}")
        if value < 1:
            raise Exact1qError("EXACT1Q_WORKERS must be positive")
        return value
    return getattr(args, "workers", 1)


def _cmd_decide(args) -> None:
    f = load_function(args.function)
    _emit(result_to_dict(decide(f)), args.out)


def _cmd_reduce(args) -> None:
    f = load_function(args.function)
    _emit(function_to_dict(reduce(f).as_function()), args.out)


def _cmd_represent(args) -> None:
    f = load_function(args.function)
    p = represent(reduce(f))
    _emit({"coefficients": [format_rational(c) for c in p.coefficients]}, args.out)


def _cmd_polyfn(args) -> None:
    coeffs = [parse_rational(c) for c in args.coeffs.split(",")]
    classes = function_of(polynomial(coeffs))
    _emit(classes.as_bitstrings(), args.out)


def _cmd_construct(args) -> None:
    boundaries = [int(k) for k in args.k.split(",")]
    values = [parse_rational(a) for a in args.a.split(",")]
    prof = profile(boundaries, values)
    fn = construct(prof)
    payload = {
        "function": function_to_dict(fn),
        "level_solutions": [list(sol) for sol in level_solutions(prof)],
    }
    _emit(payload, args.out)


def _cmd_dj(args) -> None:
    _emit([function_to_dict(fn) for fn in dj_family(args.n)], args.out)


_CSV_COLUMNS = (
    "support",
    "feasible",
    "witness",
    "symmetric",
    "fewer_bits",
    "dj_computable",
    "maximal",
    "included_by",
    "non_trivial",
)


def _record_row(rec) -> list[str]:
    return [
        ";".join(rec.support_strings()),
        str(rec.feasible).lower(),
        " ".join(format_rational(v) for v in rec.witness.z) if rec.witness else "",
        str(rec.symmetric).lower(),
        str(rec.fewer_bits).lower(),
        str(rec.dj_computable).lower(),
        str(rec.maximal).lower(),
        ";".join(mask_to_string(m, rec.n) for m in rec.included_by)
        if rec.included_by
        else "",
        str(rec.non_trivial).lower(),
    ]


def _cmd_enumerate(args) -> None:
    records = enumerate_reduced(args.n, workers=_workers(args))
    if args.format == "csv":
        buf = io.StringIO()
        buf.write(",".join(_CSV_COLUMNS) + "\n")
        for rec in records:
            buf.write(",".join(_record_row(rec)) + "\n")
        text = buf.getvalue()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
    else:
        payload = [dict(zip(_CSV_COLUMNS, _record_row(rec))) for rec in records]
        _emit(payload, args.out)


def _cmd_tables(args) -> None:
    report = reproduce_tables(args.n, workers=_workers(args))
    _emit(report.to_json_dict(), args.out)


def _cmd_simulate(args) -> None:
    f = load_function(args.function)
    w = load_witness(args.witness)
    report = success_probabilities(f, w)
    _emit(report.to_json_dict(), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exact1q",
        description="Single-query decidability toolkit for promise Boolean functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide a function; emit witness or certificate")
    p.add_argument("function", help="function JSON file")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("reduce", help="emit the canonical reduced form")
    p.add_argument("function")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("represent", help="degree-1 coefficients of the reduced form")
    p.add_argument("function")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_represent)

    p = sub.add_parser("polyfn", help="input classes a degree-1 polynomial defines")
    p.add_argument("--coeffs", required=True, help="comma-separated rationals, e.g. 1/2,1/2")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_polyfn)

    p = sub.add_parser("construct", help="function computed by a grouped weight profile")
    p.add_argument("--k", required=True, help="group boundaries, e.g. 0,2,6")
    p.add_argument("--a", required=True, help="group weights, e.g. 1/6,1/12")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("dj", help="single-level family reachable by equal superposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_dj)

    p = sub.add_parser("enumerate", help="classify every reduced support at arity n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("tables", help="re-derive the bundled 3/4-bit catalog")
    p.add_argument("--n", type=int, required=True, choices=(3, 4))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("simulate", help="state-vector run of a witness on a function")
    p.add_argument("function")
    p.add_argument("--witness", required=True, help="witness JSON file")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except InternalError as err:
        print(f"exact1q: internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exact1qError as err:
        print(f"exact1q: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as err:
        print(f"exact1q: {err}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
