"""Command-line front end.

Subcommands: gf (one generating function), hankel (a determinant or a
Hankel transform), verify (identity sweeps with a machine-readable report),
seq (integer sequence emission).  Exit status is 0 iff every requested
value was produced and every requested check passed.

A key = value config file may be pointed to by $PATHDET_CONFIG; recognized
keys: n_max_symbolic, n_max_integer, parallel_workers, output_format.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from math import comb

from .closedform import CorollaryId, corollary_lhs_entry
from .hankel import HankelSpec, build_hankel, det_bareiss, det_bareiss_int, hankel_transform
from .paths import (
    NegativeHeight,
    Point,
    gf_dp,
    gf_restricted,
    gf_restricted_reflection,
    gf_unrestricted,
    prefix_gf,
    spec_endpoint_int,
    spec_prefix_int,
)
from .verify import CapExceeded, SweepConfig, run_checks

__all__ = ["main"]

_CONFIG_ENV = "PATHDET_CONFIG"


@dataclass
class ToolConfig:
    n_max_symbolic: int = 12
    n_max_integer: int = 24
    parallel_workers: int = 4
    output_format: str = "json"


def load_config(path: str | None) -> ToolConfig:
    cfg = ToolConfig()
    if not path:
        return cfg
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, _, value = (part.strip() for part in line.partition("="))
            if key in ("n_max_symbolic", "n_max_integer", "parallel_workers"):
                setattr(cfg, key, int(value))
            elif key == "output_format":
                if value not in ("json", "csv", "text"):
                    raise ValueError(f"{path}:{lineno}: unknown output format {value!r}")
                cfg.output_format = value
            else:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
    return cfg


def _point_arg(name: str) -> Point | None:
    if name == "symbolic":
        return None
    return Point(name)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdet",
        description="Exact Hankel determinants of three-step lattice-path generating functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gf = sub.add_parser("gf", help="print one path generating function")
    gf.add_argument("--n", type=int, required=True, help="number of steps")
    gf.add_argument("--k", type=int, required=True, help="start height")
    gf.add_argument("--l", type=int, required=True, help="end height")
    gf.add_argument("--restricted", action="store_true", help="never below the x-axis")
    gf.add_argument(
        "--method",
        choices=("closed", "dp", "reflection", "all"),
        default="closed",
        help="evaluation route; 'all' prints every route and an agreement verdict",
    )

    hk = sub.add_parser("hankel", help="one Hankel determinant or a Hankel transform")
    hk.add_argument(
        "--seq",
        required=True,
        help="prefix | restricted0 | mp | motzkin | catalan | corollary:<id>",
    )
    hk.add_argument("--k", type=int, default=0, help="start height / band parameter")
    hk.add_argument("--n", type=int, help="matrix dimension for a single determinant")
    hk.add_argument("--shift", type=int, choices=(0, 1), default=0)
    hk.add_argument("--transform", type=int, metavar="N", help="emit determinants for sizes 1..N")
    hk.add_argument(
        "--point",
        choices=("i", "omega", "one", "minus_one", "symbolic"),
        help="specialization point; 'symbolic' keeps Laurent entries",
    )
    hk.add_argument("--unsafe-n-max", type=int, help="override the hard dimension cap")

    vf = sub.add_parser("verify", help="run identity sweeps and report per-cell results")
    vf.add_argument(
        "--theorems",
        default="all",
        help="comma-separated check ids or groups (see README); default: all",
    )
    vf.add_argument("--n-max", type=int, help="sweep bound override")
    vf.add_argument("--k-max", type=int, help="sweep bound override")
    vf.add_argument("--shifts", default="0,1", help="subset of 0,1 for shifted families")
    vf.add_argument("--parallel", action="store_true", help="fan cells out across worker threads")
    vf.add_argument("--format", choices=("json", "csv", "text"), help="report format")
    vf.add_argument("--unsafe-n-max", type=int, help="override the hard dimension caps")

    sq = sub.add_parser("seq", help="emit an integer sequence")
    sq.add_argument(
        "--name",
        required=True,
        help="mp | motzkin | catalan | mp_k:<k> | band:<corollary-id>:<k>",
    )
    sq.add_argument("--count", type=int, required=True)
    sq.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_gf(args) -> int:
    try:
        routes: dict[str, object] = {}
        if args.restricted:
            if args.method in ("closed", "all"):
                routes["closed"] = gf_restricted(args.n, args.k, args.l)
            if args.method in ("dp", "all"):
                routes["dp"] = gf_dp(args.n, args.k, args.l, True)
            if args.method in ("reflection", "all"):
                routes["reflection"] = gf_restricted_reflection(args.n, args.k, args.l)
        else:
            if args.method == "reflection":
                print("reflection route applies to restricted paths only", file=sys.stderr)
                return 2
            if args.method in ("closed", "all"):
                routes["closed"] = gf_unrestricted(args.n, args.k, args.l)
            if args.method in ("dp", "all"):
                routes["dp"] = gf_dp(args.n, args.k, args.l, False)
    except (NegativeHeight, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.method != "all":
        print(next(iter(routes.values())).render())
        return 0
    for name, poly in routes.items():
        print(f"{name}: {poly.render()}")
    values = list(routes.values())
    agree = all(v == values[0] for v in values)
    print(f"agreement: {'ok' if agree else 'MISMATCH'}")
    return 0 if agree else 1


# integer families live at a fixed point; reject a contradictory --point
_NATURAL_POINT = {
    "mp": Point.OMEGA,
    "motzkin": Point.OMEGA,
    "catalan": Point.I,
    "corollary:C13": Point.I,
    "corollary:C14": Point.I,
    "corollary:C15": Point.OMEGA,
    "corollary:C16": Point.OMEGA,
    "corollary:C17": Point.ONE,
    "corollary:C18": Point.ONE,
    "corollary:T19": Point.MINUS_ONE,
}


def _integer_source(seq: str, k: int, point: Point | None):
    natural = _NATURAL_POINT.get(seq if not seq.startswith("corollary:") else
                                 "corollary:" + seq.split(":", 1)[1].upper())
    if natural is not None and point is not None and point is not natural:
        raise ValueError(f"sequence {seq!r} is defined at point {natural.value!r}")
    if seq == "prefix":
        return lambda m: spec_prefix_int(point, m, k)
    if seq == "restricted0":
        return lambda m: spec_endpoint_int(point, m, 0, k, True)
    if seq == "mp":
        return lambda m: spec_prefix_int(Point.OMEGA, m, k)
    if seq == "motzkin":
        return lambda m: spec_endpoint_int(Point.OMEGA, m, 0, 0, True)
    if seq == "catalan":
        return lambda m: comb(2 * m, m) // (m + 1)
    if seq.startswith("corollary:"):
        cid = CorollaryId(seq.split(":", 1)[1].upper())
        return lambda m: corollary_lhs_entry(cid, m, 0, k)
    raise ValueError(f"unknown sequence {seq!r}")


def _cmd_hankel(args, tool: ToolConfig) -> int:
    symbolic = args.seq in ("prefix", "restricted0") and args.point in (None, "symbolic")
    if not symbolic and args.point == "symbolic":
        print(f"error: sequence {args.seq!r} has no symbolic form", file=sys.stderr)
        return 2
    point = None if symbolic else (_point_arg(args.point) if args.point else None)
    size = args.transform if args.transform else args.n
    if size is None:
        print("error: pass --n for a single determinant or --transform N", file=sys.stderr)
        return 2
    cap = tool.n_max_symbolic if symbolic else tool.n_max_integer
    if args.unsafe_n_max is not None:
        print(f"warning: lifting hard cap to {args.unsafe_n_max}", file=sys.stderr)
        cap = args.unsafe_n_max
    if size > cap:
        print(f"error: dimension {size} exceeds the hard cap {cap}", file=sys.stderr)
        return 1
    try:
        if symbolic:
            if args.seq == "prefix":
                source = lambda m: prefix_gf(m, args.k)
            else:
                source = lambda m: gf_restricted(m, 0, args.k)
            if args.transform:
                dets = [
                    det_bareiss(build_hankel(HankelSpec(n, args.shift, source))).render()
                    for n in range(1, size + 1)
                ]
                print(" ".join(dets))
            else:
                det = det_bareiss(build_hankel(HankelSpec(size, args.shift, source)))
                print(det.render())
            return 0
        source = _integer_source(args.seq, args.k, point)
        if args.transform:
            print(" ".join(map(str, hankel_transform(source, size, args.shift))))
        else:
            values = [source(m + args.shift) for m in range(2 * size - 1)]
            rows = [[values[i + j] for j in range(size)] for i in range(size)]
            print(det_bareiss_int(rows))
        return 0
    except (NegativeHeight, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _report_text(report: dict) -> str:
    lines = []
    for cell in report["cells"]:
        params = cell["params"]
        check = params.get("check", "?")
        rest = " ".join(f"{k}={v}" for k, v in params.items() if k != "check")
        line = f"[{cell['status'].upper():>14}] {check} {rest}".rstrip()
        if cell["status"] == "fail" and cell.get("diff"):
            line += f"  diff: {cell['diff']}"
        lines.append(line)
    s = report["summary"]
    lines.append(
        f"summary: {s['passed']}/{s['total']} passed, {s['failed']} failed, "
        f"{s['table_mismatches']} reported table mismatches"
    )
    return "\n".join(lines)


def _report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["check", "params", "status", "lhs", "rhs", "diff"])
    for cell in report["cells"]:
        params = dict(cell["params"])
        check = params.pop("check", "")
        writer.writerow(
            [
                check,
                ";".join(f"{k}={v}" for k, v in params.items()),
                cell["status"],
                cell["lhs"] if cell["lhs"] is not None else "",
                cell["rhs"] if cell["rhs"] is not None else "",
                cell["diff"] if cell["diff"] is not None else "",
            ]
        )
    return buf.getvalue().rstrip("\n")


def _cmd_verify(args, tool: ToolConfig) -> int:
    try:
        shifts = tuple(sorted({int(s) for s in args.shifts.split(",") if s != ""}))
    except ValueError:
        print("error: --shifts must be a subset of 0,1", file=sys.stderr)
        return 2
    if not set(shifts) <= {0, 1}:
        print("error: --shifts must be a subset of 0,1", file=sys.stderr)
        return 2
    cfg = SweepConfig(
        n_max=args.n_max,
        k_max=args.k_max,
        shifts=shifts or (0, 1),
        theorems=tuple(t.strip() for t in args.theorems.split(",") if t.strip()),
        parallel=args.parallel,
        workers=tool.parallel_workers,
        n_cap_symbolic=tool.n_max_symbolic,
        n_cap_integer=tool.n_max_integer,
        allow_over_cap=args.unsafe_n_max is not None,
    )
    if args.unsafe_n_max is not None:
        print(f"warning: lifting hard caps to {args.unsafe_n_max}", file=sys.stderr)
        cfg.n_cap_symbolic = max(cfg.n_cap_symbolic, args.unsafe_n_max)
        cfg.n_cap_integer = max(cfg.n_cap_integer, args.unsafe_n_max)
    fmt = args.format or tool.output_format
    try:
        report = run_checks(cfg)
    except (CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    elif fmt == "csv":
        print(_report_csv(report))
    else:
        print(_report_text(report))
    return 0 if report["summary"]["failed"] == 0 else 1


def _sequence_values(name: str, count: int) -> list[int]:
    if name == "mp":
        return [spec_prefix_int(Point.OMEGA, n, 0) for n in range(count)]
    if name == "motzkin":
        return [spec_endpoint_int(Point.OMEGA, n, 0, 0, True) for n in range(count)]
    if name == "catalan":
        return [comb(2 * n, n) // (n + 1) for n in range(count)]
    if name.startswith("mp_k:"):
        k = int(name.split(":", 1)[1])
        return [spec_prefix_int(Point.OMEGA, n, k) for n in range(count)]
    if name.startswith("band:"):
        _, cid_name, k_str = name.split(":", 2)
        cid = CorollaryId(cid_name.upper())
        return [corollary_lhs_entry(cid, n, 0, int(k_str)) for n in range(count)]
    raise ValueError(f"unknown sequence name {name!r}")


def _cmd_seq(args) -> int:
    if args.count < 1:
        print("error: --count must be positive", file=sys.stderr)
        return 2
    try:
        values = _sequence_values(args.name, args.count)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(values))
    else:
        for v in values:
            print(v)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        tool = load_config(os.environ.get(_CONFIG_ENV))
    except (OSError, ValueError) as exc:
        print(f"error: bad config file: {exc}", file=sys.stderr)
        return 2
    if args.command == "gf":
        return _cmd_gf(args)
    if args.command == "hankel":
        return _cmd_hankel(args, tool)
    if args.command == "verify":
        return _cmd_verify(args, tool)
    if args.command == "seq":
        return _cmd_seq(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
