"""Command line entry point: ``ncpascal {verify-general,verify-copeland,print,bench,props}``."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import FreeAlgebra, Poly
from .copeland import (
    DEFAULT_CHECK_DEPTH,
    ConfigError,
    build_S,
    build_U,
    default_config,
    direct_power,
    general_rhs,
    verify_general,
)
from .matrix import INF, dim_str, mat_mul, mat_pow, mat_to_dict, mat_to_text
from .sampling import run_property_suite
from .weyl import HEIS, build_V, verify_copeland

TARGETS = ("S", "U", "V", "US_pow", "VS_pow")


def parse_dim(text: str):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("m must be a natural number or 'inf'")
    return value


def natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return value


def poly_arg(text: str) -> Poly:
    try:
        return Poly.parse_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--g takes comma-separated integers, got {text!r}")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncpascal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True, need_m=True):
        if need_n:
            p.add_argument("--n", type=natural, required=True)
        if need_m:
            p.add_argument("--m", type=parse_dim, required=True, help="natural number or 'inf'")
        p.add_argument("--check-depth", type=natural, default=DEFAULT_CHECK_DEPTH, help="window depth for m = inf")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify-general", help="check (ba)^n = e_0^T (U_b S)^n H_1 in Z<a,b>")
    common(p)
    p.add_argument("--a", default="a", help="free-algebra expression substituted for a")
    p.add_argument("--b", default="b", help="free-algebra expression substituted for b")

    p = sub.add_parser("verify-copeland", help="check (g(x) a)^n = e_0^T (V_g S)^n H_1")
    common(p)
    p.add_argument("--g", type=poly_arg, required=True, help="coefficients, constant term first")
    p.add_argument("--rep-depth", type=natural, default=8, help="apply both sides to t^k for k up to this")

    p = sub.add_parser("print", help="print S, U_b, V_g or the n-th power of U_b S / V_g S")
    p.add_argument("--target", required=True)
    p.add_argument("--m", type=parse_dim, required=True)
    p.add_argument("--n", type=natural, default=1)
    p.add_argument("--g", type=poly_arg, default=Poly((0, 1)))
    p.add_argument("--check-depth", type=natural, default=6, help="window shown for m = inf")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bench", help="time direct (ba)^n against the matrix route; CSV on stdout")
    p.add_argument("--n", type=natural, required=True, help="largest n")
    p.add_argument("--n-min", type=natural, default=1)
    p.add_argument("--m", type=parse_dim, default=None, help="default n + 1; 'inf' for the lazy path")
    p.add_argument("--repeat", type=natural, default=3)

    p = sub.add_parser("props", help="seeded randomized property harnesses")
    p.add_argument("--seed", type=natural, default=0)
    p.add_argument("--cases", type=natural, default=100)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(report, fmt: str, out) -> int:
    out.write((report.to_json() if fmt == "json" else report.to_text()) + "\n")
    return 0 if report.ok else 1


def cmd_verify_general(args, out) -> int:
    try:
        cfg = default_config(args.n, args.m, args.check_depth, a=args.a, b=args.b)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))
    return _emit(verify_general(cfg), args.format, out)


def cmd_verify_copeland(args, out) -> int:
    return _emit(verify_copeland(args.g, args.n, args.m, rep_depth=args.rep_depth), args.format, out)


def cmd_print(args, out) -> int:
    if args.target not in TARGETS:
        raise SystemExit(_usage_error(f"unknown target {args.target!r}; choose from {', '.join(TARGETS)}"))
    m = args.m
    if args.target in ("S", "U", "US_pow"):
        alg = FreeAlgebra(("a", "b"))
        r = alg.ops
        a, b = alg.gens
        if args.target == "S":
            mat = build_S(r, m)
        elif args.target == "U":
            mat = build_U(r, a, b, m)
        else:
            mat = mat_pow(mat_mul(build_U(r, a, b, m), build_S(r, m)), args.n, memo=True)
    else:
        if args.target == "V":
            mat = build_V(args.g, m)
        else:
            mat = mat_pow(mat_mul(build_V(args.g, m), build_S(HEIS, m)), args.n, memo=True)
    window = None if m != INF else args.check_depth
    if args.format == "json":
        payload = mat_to_dict(mat, window)
        payload["target"] = args.target
        if args.target.endswith("_pow"):
            payload["n"] = args.n
        out.write(dump_json(payload) + "\n")
    else:
        title = args.target + (f"^{args.n}" if args.target.endswith("_pow") else "")
        out.write(f"{title}  (m={dim_str(m)}, tri_bound={mat.tri_bound})\n")
        out.write(mat_to_text(mat, window) + "\n")
    return 0


def _time_ns(fn, repeat: int):
    best, value = None, None
    for _ in range(max(repeat, 1)):
        t0 = time.perf_counter_ns()
        value = fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best, value


def cmd_bench(args, out) -> int:
    alg = FreeAlgebra(("a", "b"))
    r = alg.ops
    a, b = alg.gens
    out.write("n,direct_ns,matrix_ns,equal\n")
    status = 0
    for n in range(args.n_min, args.n + 1):
        m = args.m if args.m is not None else n + 1
        if not n < m:
            raise SystemExit(_usage_error(f"need n < m, got n={n}, m={dim_str(m)}"))
        cfg = default_config(n, m)
        direct_ns, lhs = _time_ns(lambda: direct_power(r, a, b, n), args.repeat)
        matrix_ns, rhs = _time_ns(lambda: general_rhs(cfg), args.repeat)
        equal = lhs == rhs
        status |= 0 if equal else 1
        out.write(f"{n},{direct_ns},{matrix_ns},{str(equal).lower()}\n")
    return status


def cmd_props(args, out) -> int:
    results = run_property_suite(args.seed, args.cases)
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "cases": args.cases,
            "harnesses": {k: {"failures": v, "passed": not v} for k, v in results.items()},
        }
        out.write(dump_json(payload) + "\n")
    else:
        for name, fails in results.items():
            verdict = "PASS" if not fails else f"FAIL cases {fails}"
            out.write(f"{name:<22} {args.cases} cases  {verdict}\n")
    return 0 if all(not v for v in results.values()) else 1


def _usage_error(msg: str) -> int:
    sys.stderr.write(f"ncpascal: error: {msg}\n")
    return 2


COMMANDS = {
    "verify-general": cmd_verify_general,
    "verify-copeland": cmd_verify_copeland,
    "print": cmd_print,
    "bench": cmd_bench,
    "props": cmd_props,
}


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("verify-general", "verify-copeland") and not args.n < args.m:
        parser.error(f"need n < m, got n={args.n}, m={dim_str(args.m)}")
    try:
        return COMMANDS[args.command](args, out or sys.stdout)
    except ConfigError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
