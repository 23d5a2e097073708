"""Command line interface: uniform JSON output, decimal-string numbers.

Subcommands: generate, convert, cycle, double, fiber, search, verify.
All numbers in output are decimal strings (rationals as "num/den") so no
consumer can lose precision; diagnostics go to stderr.  Exit codes:
0 success, 1 structured validation error, 2 usage error, 3 interrupted
search (resumable via its checkpoint).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .arith import format_rational, parse_rational
from .errors import SquareDiffError
from .fiber import QuarticCurve, QuarticPoint, add, euler_point, fiber_of_triple, mul
from .section import params_from_m, triple_from_m
from .search import SearchConfig, naive_oracle_search, run_search, search
from .transforms import SixTuple, doubling_step, engel_cycle_euler
from .triples import (
    canonicalize_hyperbolic,
    companion_triple,
    euler_to_cuboid,
    euler_to_hyperbolic,
    euler_to_sumdiff,
    hyperbolic_to_euler,
    sumdiff_to_euler,
    SumDiffTriple,
    verify_euler,
)


def _parse_int_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise SquareDiffError(f"expected three comma-separated integers, got {text!r}")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError as exc:
        raise SquareDiffError(f"not an integer triple: {text!r}") from exc
    return a, b, c


def _parse_rat_tuple(text: str, arity: int) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != arity:
        raise SquareDiffError(f"expected {arity} comma-separated rationals, got {text!r}")
    return tuple(parse_rational(p) for p in parts)


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _cmd_verify(args) -> int:
    _triple, cert = verify_euler(args.x, args.y, args.z)
    _emit({"t": str(cert.t), "u": str(cert.u), "v": str(cert.v)})
    return 0


def _cmd_generate(args) -> int:
    m = parse_rational(args.m)
    params = params_from_m(m)
    triple = triple_from_m(m)
    _emit({"params": params.to_json(), "triple": triple.to_json()})
    return 0


def _cmd_convert(args) -> int:
    sources = [s for s in (args.triple, args.hyperbolic, args.sumdiff) if s is not None]
    if len(sources) != 1:
        raise SquareDiffError("give exactly one of --triple, --hyperbolic, --sumdiff")
    if args.triple is not None:
        e, _ = verify_euler(*_parse_int_triple(args.triple))
        if args.to == "hyperbolic":
            _emit(euler_to_hyperbolic(e).to_json())
        elif args.to == "cuboid":
            _emit(euler_to_cuboid(e).to_json())
        elif args.to == "sumdiff":
            _emit(euler_to_sumdiff(e).to_json())
        elif args.to == "companion":
            _emit(companion_triple(e).to_json())
        else:
            _emit(e.to_json())
        return 0
    if args.hyperbolic is not None:
        h = canonicalize_hyperbolic(*_parse_rat_tuple(args.hyperbolic, 3))
        if args.to != "euler":
            raise SquareDiffError("--hyperbolic input converts only --to euler")
        _emit(hyperbolic_to_euler(h).to_json())
        return 0
    a, b, c = _parse_int_triple(args.sumdiff)
    if args.to != "euler":
        raise SquareDiffError("--sumdiff input converts only --to euler")
    _emit(sumdiff_to_euler(SumDiffTriple(a, b, c)).to_json())
    return 0


def _cmd_cycle(args) -> int:
    e, _ = verify_euler(*_parse_int_triple(args.triple))
    for _ in range(args.steps):
        e = engel_cycle_euler(e)
        _emit(e.to_json())
    return 0


def _cmd_double(args) -> int:
    e, _ = verify_euler(*_parse_int_triple(args.triple))
    st = SixTuple.from_triple(e)
    for _ in range(args.steps):
        st = doubling_step(st)
        _emit(st.to_json())
    return 0


def _cmd_fiber(args) -> int:
    if args.triple is not None:
        e, _ = verify_euler(*_parse_int_triple(args.triple))
        m, curve, pt = fiber_of_triple(e)
        _emit(
            {
                "m": format_rational(m),
                "a": format_rational(curve.a),
                "point": pt.to_json(),
            }
        )
        return 0
    if args.a is None:
        raise SquareDiffError("give --triple, or --a with --op")
    curve = QuarticCurve(parse_rational(args.a))
    if args.op is None:
        pt = euler_point(curve)
        _emit({"a": format_rational(curve.a), "euler_point": pt.to_json()})
        return 0
    points = [QuarticPoint.affine(*_parse_rat_tuple(p, 2)) for p in args.point or []]
    if args.op == "double":
        if len(points) != 1:
            raise SquareDiffError("--op double needs one --point")
        result = mul(curve, points[0], 2)
    elif args.op == "add":
        if len(points) != 2:
            raise SquareDiffError("--op add needs two --point arguments")
        result = add(curve, points[0], points[1])
    else:  # mul
        if len(points) != 1 or args.n is None:
            raise SquareDiffError("--op mul needs one --point and --n")
        result = mul(curve, points[0], args.n)
    _emit({"a": format_rational(curve.a), "result": result.to_json()})
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        bound_N=args.bound,
        block_width=args.block_width,
        worker_count=args.workers,
        checkpoint_path=args.checkpoint,
        emit_format=args.format,
    )
    if args.oracle:
        count, records = naive_oracle_search(args.bound)
        for record in records:
            print(record.line(cfg.emit_format))
        print(f"count={count}", file=sys.stderr)
        return 0
    try:
        if args.output:
            count, _start = run_search(cfg, args.output)
        else:
            count, records = search(cfg)
            for record in records:
                print(record.line(cfg.emit_format))
        print(f"count={count}", file=sys.stderr)
        return 0
    except KeyboardInterrupt:
        hint = f" --checkpoint {args.checkpoint}" if args.checkpoint else ""
        print(f"interrupted; re-run the same command{hint} to resume", file=sys.stderr)
        return 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squarediffs",
        description="Exact solvers for the three-squares-with-square-differences "
        "problem and its hyperbolic and elliptic-fiber forms.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a triple and print its certificate")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("z", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="Euler's parametric solution for a rational m")
    p.add_argument("--m", required=True, help='parameter as "num/den"')
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("convert", help="convert between the equivalent formulations")
    p.add_argument(
        "--to",
        required=True,
        choices=["hyperbolic", "euler", "cuboid", "sumdiff", "companion"],
    )
    p.add_argument("--triple", help='Euler triple "x,y,z"')
    p.add_argument("--hyperbolic", help='hyperbolic triple "a,b,c" (rationals)')
    p.add_argument("--sumdiff", help='sum-difference triple "A,B,C"')
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("cycle", help="iterate the order-5 transformation")
    p.add_argument("--triple", required=True)
    p.add_argument("--steps", type=int, default=5)
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("double", help="iterate the solution-doubling step")
    p.add_argument("--triple", required=True)
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=_cmd_double)

    p = sub.add_parser("fiber", help="fiber location and the fiber group law")
    p.add_argument("--triple", help="locate this triple on its fiber")
    p.add_argument("--a", help='fiber parameter as "num/den"')
    p.add_argument("--op", choices=["double", "add", "mul"])
    p.add_argument("--point", action="append", help='fiber point "s,w" (repeatable)')
    p.add_argument("--n", type=int, help="multiplier for --op mul")
    p.set_defaults(func=_cmd_fiber)

    p = sub.add_parser("search", help="enumerate all primitive solutions below a bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--block-width", type=int, default=100_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--output", help="write records to this file instead of stdout")
    p.add_argument("--oracle", action="store_true", help="use the quadratic reference search")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SquareDiffError as exc:
        payload = {"error": type(exc).__name__, "detail": str(exc)}
        constraint = getattr(exc, "constraint", None)
        if constraint is not None:
            payload["constraint"] = constraint
        print(json.dumps(payload, separators=(",", ":")), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
