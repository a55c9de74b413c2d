"""Command-line interface.

Exit codes: 0 success, 1 validation error, 2 method unavailable,
3 verification divergence.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import harness
from .errors import MethodUnavailable, ValidationError, WeylGroupTooLarge
from .fitting import fit_polytope
from .freudenthal import freudenthal_diagram, multiplicity_at_offset
from .kostant import kostant_multiplicity
from .polytope import chamber_polytope, local_partition_count
from .rootsys import Weight, build_root_system, weyl_dimension
from .weyl import CAP_ENV_VAR, DEFAULT_CAP, generate_weyl_group, offset_to_dynkin, weight_box

EXIT_OK, EXIT_INVALID, EXIT_UNAVAILABLE, EXIT_DIVERGENCE = 0, 1, 2, 3


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def resolve_cap(args) -> int:
    """--weyl-cap, then the environment variable, then the config file, then the default."""
    if args.weyl_cap is not None:
        cap = args.weyl_cap
    elif os.environ.get(CAP_ENV_VAR):
        cap = int(os.environ[CAP_ENV_VAR])
    elif args.config:
        with open(args.config) as fh:
            cap = int(json.load(fh).get("weyl_cap", DEFAULT_CAP))
    else:
        cap = DEFAULT_CAP
    if cap <= 0:
        raise ValidationError("Weyl cap must be positive")
    return cap


def _case(args):
    rs = build_root_system(args.algebra)
    lam = Weight.dynkin(args.highest)
    weyl_dimension(rs, lam)  # validates rank and dominance
    return rs, lam


def _group_if(rs, args, needed: bool):
    if not needed:
        return None
    try:
        return generate_weyl_group(rs, resolve_cap(args))
    except WeylGroupTooLarge as exc:
        raise MethodUnavailable(f"Kostant method unavailable for {rs.algebra}: {exc}") from exc


def _write(args, data: bytes):
    if getattr(args, "out", None):
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())


def cmd_dim(args) -> int:
    rs, lam = _case(args)
    print(weyl_dimension(rs, lam))
    return EXIT_OK


def cmd_mult(args) -> int:
    rs, lam = _case(args)
    offset = args.offset
    if len(offset) != rs.rank:
        raise ValidationError(f"--offset needs {rs.rank} components")
    if args.method == "freudenthal":
        m = multiplicity_at_offset(rs, lam, offset)
    elif args.method == "kostant":
        wg = _group_if(rs, args, True)
        m = kostant_multiplicity(rs, wg, lam, Weight.dynkin(offset_to_dynkin(rs, lam, offset)))
    else:
        delta = weight_box(rs, lam)
        depth = tuple(d - j for d, j in zip(delta, offset))
        m = local_partition_count(chamber_polytope(rs, lam), rs, depth) if min(depth) >= 0 else 0
    print(m)
    return EXIT_OK


def cmd_diagram(args) -> int:
    rs, lam = _case(args)
    wg = _group_if(rs, args, args.method == "kostant")
    d = harness.compute_diagram(rs, lam, args.method, wg)
    _write(args, harness.serialize_diagram(d, args.format, args.include_zeros, args.dynkin_out))
    return EXIT_OK


def cmd_verify(args) -> int:
    rs, lam = _case(args)
    report = harness.verify_methods(rs, lam, args.methods, cap=resolve_cap(args))
    print(report.summary())
    if len(report.compared) < 2:
        print("fewer than two methods available; nothing to compare")
        return EXIT_UNAVAILABLE
    return EXIT_OK if report.ok else EXIT_DIVERGENCE


def cmd_bench(args) -> int:
    records = harness.run_benchmark(harness.SUITES[args.suite], args.reps)
    table = harness.format_bench_table(records)
    _write(args, table.encode())
    if args.out:
        sys.stdout.write(table)
    return EXIT_OK


def cmd_fit(args) -> int:
    rs, lam = _case(args)
    result = fit_polytope(freudenthal_diagram(rs, lam), rs, budget=args.budget)
    doc = {"algebra": str(rs.algebra), "highest": list(lam.as_ints()), "success": result.success,
           "nodes": result.nodes}
    if result.success:
        doc["caps"] = list(result.polytope.caps)
        doc["points"] = [list(v) for v in sorted(result.polytope.points)]
    else:
        doc["failed_fiber"] = list(result.failed_fiber) if result.failed_fiber else None
        doc["message"] = result.message
    _write(args, (json.dumps(doc) + "\n").encode())
    return EXIT_OK if result.success else EXIT_UNAVAILABLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weightmult",
                                     description="Weight multiplicities of simple Lie algebras.")
    parser.add_argument("--weyl-cap", type=int, default=None,
                        help=f"max Weyl group order to enumerate (env {CAP_ENV_VAR})")
    parser.add_argument("--config", help="JSON config file, e.g. {\"weyl_cap\": 100000}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def case_args(p):
        p.add_argument("--algebra", required=True, help="e.g. A2, B2, G2, F4")
        p.add_argument("--highest", required=True, type=_int_list, help="Dynkin labels, e.g. 5,3")

    p = sub.add_parser("dim", help="Weyl dimension of the representation")
    case_args(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("mult", help="multiplicity at one offset from the lowest weight")
    case_args(p)
    p.add_argument("--offset", required=True, type=_int_list)
    p.add_argument("--method", choices=harness.METHODS, default="freudenthal")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("diagram", help="full weight diagram")
    case_args(p)
    p.add_argument("--method", choices=harness.METHODS, default="polytope")
    p.add_argument("--format", choices=harness.FORMATS, default="compat-text")
    p.add_argument("--out")
    p.add_argument("--include-zeros", action="store_true")
    p.add_argument("--dynkin-out", action="store_true")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("verify", help="compare methods entry by entry")
    case_args(p)
    p.add_argument("--methods", type=lambda s: [m.strip() for m in s.split(",") if m.strip()],
                   default=list(harness.METHODS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time every method on a suite")
    p.add_argument("--suite", choices=sorted(harness.SUITES), default="default")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("fit-polytope", help="search a down-closed point set matching Freudenthal")
    case_args(p)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except MethodUnavailable as exc:
        print(f"unavailable: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
