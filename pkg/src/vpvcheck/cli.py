"""Command-line front end: ``vpvcheck verify | eval | list``.

Exit status:
  0 = ok (check_and_report failures do not count)
  1 = evaluation or domain error
  2 = usage error or unknown identity id
  3 = an assert_pass case failed
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .eulersums import (
    EulerSumKind, double_zeta, euler_sum, geom_power_sum, mtw_omega, power_sum,
)
from .polylog import DomainError, li, rogers_l, stirling2
from .registry import (
    FAMILIES, UnknownIdentityError, lookup, registry, select, summarize, verify, verify_suite,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_ASSERT = 0, 1, 2, 3
DEPTH_SCALE_ENV = "VPV_DEPTH_SCALE"


# ---------------------------------------------------------------- json output

def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    text = "%.17g" % x
    # keep floats recognisable as floats after a round trip
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def _quote(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ord(ch) < 0x20:
            out.append("\\u%04x" % ord(ch))
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def to_json(obj: Any, indent: int = 2, level: int = 0) -> str:
    """Deterministic JSON with every float written at 17 significant digits.

    Key order is sorted; NaN and infinities become null.
    """
    pad, inner = " " * (indent * level), " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return _quote(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{_quote(str(k))}: {to_json(obj[k], indent, level + 1)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + to_json(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


# ---------------------------------------------------------------- arg types

def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0 or math.isinf(v):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text}")
    return v


def _depth_spec(text: str) -> tuple[Optional[int], int]:
    """``N`` for every dimension or ``DIM:N`` for one dimension."""
    dim, _, n = text.rpartition(":")
    try:
        d = int(n)
        k = int(dim) if dim else None
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or DIM:N, got {text!r}")
    if d < 1:
        raise argparse.ArgumentTypeError(f"depth must be >= 1, got {d}")
    if k is not None and not 2 <= k <= 6:
        raise argparse.ArgumentTypeError(f"dimension must be in 2..6, got {k}")
    return k, d


def _param(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number in {text!r}")


def depth_scale_from_env(environ=os.environ) -> float:
    raw = environ.get(DEPTH_SCALE_ENV)
    if raw is None or raw.strip() == "":
        return 1.0
    return _positive_float(raw)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vpvcheck",
        description="Check polylogarithm, Euler-sum and visible-point product identities numerically.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify registered identities")
    v.add_argument("--family", choices=FAMILIES)
    v.add_argument("--id", action="append", dest="ids", metavar="ID",
                   help="identity id (repeatable)")
    v.add_argument("--id-prefix")
    v.add_argument("--depth", action="append", type=_depth_spec, default=[], metavar="N|DIM:N",
                   help="lattice truncation depth, for all dimensions or one (repeatable)")
    v.add_argument("--series-depth", type=int, metavar="N",
                   help="truncation depth for series-based cases")
    v.add_argument("--param", action="append", type=_param, default=[], metavar="NAME=VALUE",
                   help="override a parameter (single --id only)")
    v.add_argument("--tol-abs", type=_positive_float)
    v.add_argument("--tol-rel", type=_positive_float)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--parallel", action="store_true", help="run cases concurrently")

    e = sub.add_parser("eval", help="evaluate one function")
    fs = e.add_subparsers(dest="function", required=True)
    f = fs.add_parser("li", help="Li_s(z)")
    f.add_argument("-s", type=int, required=True)
    f.add_argument("-z", type=float, required=True)
    f = fs.add_parser("rogers_l", help="Rogers L(x), normalised L(1) = 1")
    f.add_argument("-x", type=float, required=True)
    f = fs.add_parser("double_zeta", help="zeta(s, t) = sum_{n>m>0} n^-s m^-t")
    f.add_argument("-s", type=float, required=True)
    f.add_argument("-t", type=float, required=True)
    f.add_argument("--depth", type=int, default=1_000_000)
    f = fs.add_parser("euler_sum", help="parametric Euler sum")
    f.add_argument("--kind", choices=[k.value for k in EulerSumKind], required=True)
    f.add_argument("-m", type=int, required=True)
    f.add_argument("-n", type=int, required=True)
    f.add_argument("--depth", type=int, default=1_000_000)
    f = fs.add_parser("mtw_omega", help="truncated MTW zeta sum")
    f.add_argument("-e", "--exponents", type=float, nargs="+", required=True,
                   help="s_1 .. s_K then the exponent on m_1 + ... + m_K")
    f.add_argument("--depth", type=int, default=1000)
    f = fs.add_parser("power_sum", help="1^p + ... + n^p")
    f.add_argument("-p", type=int, required=True)
    f.add_argument("-n", type=int, required=True)
    f = fs.add_parser("geom_power_sum", help="sum_{a=1}^n a^p z^a")
    f.add_argument("-p", type=int, required=True)
    f.add_argument("-n", type=int, required=True)
    f.add_argument("-z", type=float, required=True)
    f = fs.add_parser("stirling2", help="Stirling number of the second kind S(n, k)")
    f.add_argument("-n", type=int, required=True)
    f.add_argument("-k", type=int, required=True)

    ls = sub.add_parser("list", help="print the identity catalog")
    ls.add_argument("--family", choices=FAMILIES)
    ls.add_argument("--id-prefix")
    ls.add_argument("--format", choices=("text", "json"), default="text")
    return ap


# ---------------------------------------------------------------- commands

def _depth_arg(specs):
    if not specs:
        return None
    overall = [d for k, d in specs if k is None]
    per_dim = {k: d for k, d in specs if k is not None}
    if not per_dim:
        return overall[-1]
    if overall:
        return {k: per_dim.get(k, overall[-1]) for k in range(2, 7)}
    return per_dim


def _run_config(args, depth_scale: float) -> dict:
    depth = _depth_arg(args.depth)
    if isinstance(depth, dict):
        depth = {str(k): v for k, v in sorted(depth.items())}
    return {
        "family": args.family, "ids": args.ids, "id_prefix": args.id_prefix,
        "depth": depth, "series_depth": args.series_depth,
        "params": dict(args.param) or None,
        "tol_abs": args.tol_abs, "tol_rel": args.tol_rel,
        "depth_scale": depth_scale, "parallel": args.parallel,
    }


def _text_report(results, summary) -> str:
    width = max([len(r.id) for r in results] + [2])
    lines = [f"{'id':<{width}}  {'verdict':<12}  {'expectation':<16}  "
             f"{'abs_err':>9}  {'rel_err':>9}  {'delta':>9}  depth"]
    for r in results:
        lines.append(f"{r.id:<{width}}  {r.verdict:<12}  {r.expectation:<16}  "
                     f"{r.abs_err:>9.2e}  {r.rel_err:>9.2e}  {r.convergence_delta:>9.2e}  "
                     f"{'-' if r.depth_used is None else r.depth_used}")
        if r.note and r.verdict != "pass":
            lines.append(f"{'':<{width}}  note: {r.note}")
    lines.append("")
    lines.append(f"{summary['total']} cases: {summary['pass']} pass, {summary['fail']} fail, "
                 f"{summary['inconclusive']} inconclusive")
    if summary["assert_pass_failures"]:
        lines.append("assert_pass failures: " + ", ".join(summary["assert_pass_failures"]))
    if summary["assert_pass_inconclusive"]:
        lines.append(f"assert_pass inconclusive: {len(summary['assert_pass_inconclusive'])}")
    if summary["reported_failures"]:
        lines.append(f"reported (check_and_report) failures: {len(summary['reported_failures'])}")
    return "\n".join(lines)


def cmd_verify(args, out) -> int:
    try:
        depth_scale = depth_scale_from_env()
    except argparse.ArgumentTypeError as exc:
        print(f"vpvcheck: error: {DEPTH_SCALE_ENV}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ids = args.ids
    try:
        for i in ids or ():
            lookup(i)
    except UnknownIdentityError:
        print(f"vpvcheck: error: unknown identity id {i!r}", file=sys.stderr)
        return EXIT_USAGE
    if args.param and (not ids or len(ids) != 1):
        print("vpvcheck: error: --param needs exactly one --id", file=sys.stderr)
        return EXIT_USAGE
    if args.series_depth is not None and args.series_depth < 1:
        print("vpvcheck: error: --series-depth must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    depth = _depth_arg(args.depth)
    if args.param:
        case = lookup(ids[0])
        d = depth.get(case.dim) if isinstance(depth, dict) else depth
        if not case.is_lattice:
            d = args.series_depth if case.kind in ("series", "slow_series") else None
        if d is None and case.default_depth is not None and depth_scale != 1.0:
            d = max(2, math.ceil(case.default_depth * depth_scale))
        try:
            results = [verify(case, dict(args.param), d, args.tol_abs, args.tol_rel)]
        except DomainError as exc:
            print(f"vpvcheck: domain error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
    else:
        results = verify_suite(args.family, args.id_prefix, ids, depth, args.series_depth,
                               args.tol_abs, args.tol_rel, parallel=args.parallel,
                               depth_scale=depth_scale)
    if not results:
        print("vpvcheck: error: no identity matches the filter", file=sys.stderr)
        return EXIT_USAGE

    summary = summarize(results)
    if args.format == "json":
        doc = {
            "tool_version": __version__,
            "config": _run_config(args, depth_scale),
            "records": [r.as_dict() for r in results],
            "summary": summary,
        }
        out.write(to_json(doc) + "\n")
    else:
        out.write(_text_report(results, summary) + "\n")
    return EXIT_ASSERT if summary["assert_pass_failures"] else EXIT_OK


def _print_series(out, res) -> None:
    out.write(f"value {res.value!r}\n")
    out.write(f"tail_estimate {res.tail!r}\n")
    out.write(f"corrected {res.corrected!r}\n")
    out.write(f"convergence_delta {res.convergence_delta!r}\n")


def cmd_eval(args, out) -> int:
    fn = args.function
    try:
        if fn == "li":
            out.write(f"{li(args.s, args.z)!r}\n")
        elif fn == "rogers_l":
            out.write(f"{rogers_l(args.x)!r}\n")
        elif fn == "double_zeta":
            _print_series(out, double_zeta(args.s, args.t, args.depth, full_output=True))
        elif fn == "euler_sum":
            _print_series(out, euler_sum(args.kind, args.m, args.n, args.depth, full_output=True))
        elif fn == "mtw_omega":
            out.write(f"{mtw_omega(tuple(args.exponents), args.depth)!r}\n")
        elif fn == "power_sum":
            out.write(f"{power_sum(args.p, args.n)}\n")
        elif fn == "geom_power_sum":
            out.write(f"{geom_power_sum(args.p, args.n, args.z)!r}\n")
        elif fn == "stirling2":
            out.write(f"{stirling2(args.n, args.k)}\n")
    except (DomainError, ValueError, OverflowError, ZeroDivisionError) as exc:
        print(f"vpvcheck: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_list(args, out) -> int:
    cases = select(args.family, args.id_prefix)
    if args.format == "json":
        out.write(to_json([c.catalog_entry() for c in cases]) + "\n")
        return EXIT_OK
    width = max([len(c.id) for c in cases] + [2])
    fam = max([len(c.family) for c in cases] + [6])
    out.write(f"{'id':<{width}}  {'family':<{fam}}  {'expectation':<16}  citation\n")
    for c in cases:
        out.write(f"{c.id:<{width}}  {c.family:<{fam}}  {c.expectation:<16}  {c.citation}\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "verify":
        return cmd_verify(args, out)
    if args.command == "eval":
        return cmd_eval(args, out)
    return cmd_list(args, out)


if __name__ == "__main__":
    sys.exit(main())
