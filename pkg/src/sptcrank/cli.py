"""Command-line front end: ``sptcrank table|verify|scan|cache``.

Exit codes: 0 pass, 1 verification failure, 2 usage/config error,
3 internal assertion (e.g. a non-divisible crank-kernel numerator).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from datetime import datetime, timezone

from . import __version__
from .analytic import HParams, away_band, away_verdict, check_away, check_pole_minus_one, check_pole_one
from .asymptotics import default_grid, ratio_scan, sign_scan, wright_check
from .cache import FUNCTION_IDS, TABLES, Cache, InvalidParams, normalize_params
from .crank_table import crank_table
from .generating import IntegralityViolation
from .series import NotDivisible
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
MAX_ORDER = 20000

log = logging.getLogger("sptcrank")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- argument helpers


def parse_int_range(text: str) -> list:
    """'0..4' -> [0, 1, 2, 3, 4]; '0,2,5' -> [0, 2, 5]."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split(".."))
            step = 1 if hi >= lo else -1
            return list(range(lo, hi + step, step))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None


def _parse_real(text: str) -> float:
    text = text.strip()
    if "^" in text:
        base, exp = text.split("^")
        return float(base) ** float(exp)
    return float(text)


def parse_real_list(text: str) -> list:
    """'2^-4..2^-10' walks the exponent in unit steps; otherwise comma-separated reals."""
    try:
        if ".." in text:
            a, b = text.split("..")
            if "^" in a and "^" in b:
                base_a, ea = a.split("^")
                base_b, eb = b.split("^")
                if float(base_a) != float(base_b):
                    raise ValueError
                ea, eb = int(ea), int(eb)
                step = 1 if eb >= ea else -1
                return [float(base_a) ** e for e in range(ea, eb + step, step)]
            raise ValueError
        return [_parse_real(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse real list {text!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


def _header(args, extra: dict) -> dict:
    doc = {"version": __version__, **extra}
    if getattr(args, "timestamp", False):
        doc["timestamp"] = datetime.now(timezone.utc).isoformat()
    return doc


def _csv(rows: list, fields: list) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


# ---------------------------------------------------------------- table


def cmd_table(args) -> int:
    if args.order > args.max_order:
        raise UsageError(f"order {args.order} exceeds --max-order {args.max_order}")
    try:
        params = normalize_params(args.function, args.order, args.m, args.mmax)
    except InvalidParams as exc:
        raise UsageError(str(exc)) from None
    cache = Cache(args.cache_dir)
    t0 = time.perf_counter()
    entry, hit = cache.get(args.function, params)
    log.info("%s in %.3fs (checksum %s)", "loaded" if hit else "computed", time.perf_counter() - t0,
             entry.checksum[:12])
    if args.function in TABLES:
        M = params["mmax"]
        rows = entry.coeffs
        if args.format != "json":
            lines = ["m,n,value"]
            for m in range(-M, M + 1):
                r = rows[abs(m)]
                lines.extend(f"{m},{n},{c}" for n, c in enumerate(r))
            text = "\n".join(lines) + "\n"
        else:
            doc = _header(args, {"id": args.function, "params": params, "checksum": entry.checksum,
                                 "rows": {str(m): [str(c) for c in rows[m]] for m in range(M + 1)}})
            text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    else:
        if args.format != "json":
            text = "n,value\n" + "".join(f"{n},{c}\n" for n, c in enumerate(entry.coeffs))
        else:
            doc = _header(args, {"id": args.function, "params": params, "checksum": entry.checksum,
                                 "coeffs": [str(c) for c in entry.coeffs]})
            text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    _emit(text, args.output)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    if args.order < 1 or args.order > args.max_order:
        raise UsageError(f"order must lie in 1..{args.max_order}")
    try:
        results = run_suite(args.suite, args.order, oracle=args.oracle, oracle_order=args.oracle_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"suite {args.suite} order {args.order} version {__version__}"]
    lines += [r.line() for r in results]
    ok = all(r.ok for r in results)
    lines.append("RESULT " + ("PASS" if ok else "FAIL"))
    text = "\n".join(lines) + "\n"
    if args.format == "json":
        doc = _header(args, {"suite": args.suite, "order": args.order, "pass": ok,
                             "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail,
                                         "first_failure": r.first_failure} for r in results]})
        text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- scan


def _scan_signs(args):
    ms = parse_int_range(args.m or "0..4")
    if any(m < 0 for m in ms):
        raise UsageError("sign scans need m >= 0")
    if args.order < 10:
        raise UsageError("sign scans need --order >= 10")
    rows = []
    for fam in _families(args):
        for m in ms:
            s = sign_scan(fam, m, args.order)
            rows.append({"family": fam, "m": m, "N": s.N, "n0": s.n0, "holds": s.holds})
    return rows, ["family", "m", "N", "n0", "holds"], all(r["holds"] for r in rows)


def _scan_ratio(args):
    ms = parse_int_range(args.m or "0")
    grid = parse_int_range(args.grid) if args.grid else default_grid(args.order or 4000)
    top = max(grid) + 1
    rows, ok = [], True
    for fam in _families(args):
        table = crank_table(fam, top, max(abs(m) for m in ms))
        for m in ms:
            rep = ratio_scan(fam, m, grid, table)
            ok &= rep.verdict == "converging"
            for r in rep.rows():
                rows.append({"family": fam, "m": m, **r, "verdict": rep.verdict})
    return rows, ["family", "m", "n", "exact", "main", "ratio", "pair_averaged_ratio", "verdict"], ok


def _scan_pole(args):
    p = HParams(args.A, args.B)
    ys = parse_real_list(args.ys)
    if args.at == "away":
        reps = [check_away(p, y, away_band(y, args.points)) for y in ys]
        verdict = away_verdict(reps)
        rows = [{"y": r.y, "max_scaled": r.max_scaled, "argmax_x": r.argmax_x, "verdict": verdict} for r in reps]
        return rows, ["y", "max_scaled", "argmax_x", "verdict"], verdict == "bounded"
    check = check_pole_one if args.at == "1" else check_pole_minus_one
    table = check(p, ys)
    rows = [{**r, "verdict": table.verdict} for r in table.rows()]
    return rows, ["y", "residual", "main_term", "residual_times_y", "verdict"], table.verdict == "bounded"


def _scan_wright(args):
    us = parse_real_list(args.us)
    c = wright_check(args.s, us, args.M, args.steps)
    rows = [{"u": u, "P_real": p.real, "P_imag": p.imag, "bessel": b, "scaled_gap": g}
            for u, p, b, g in zip(c.us, c.P, c.bessel, c.scaled_gaps)]
    return rows, ["u", "P_real", "P_imag", "bessel", "scaled_gap"], c.decreasing


SCAN_PARAMS = {
    "signs": ("family", "m", "order"),
    "ratio": ("family", "m", "grid", "order"),
    "pole": ("A", "B", "ys", "at", "points"),
    "wright": ("s", "us", "M", "steps"),
}


def _families(args) -> list:
    return ["C1", "C5"] if args.family == "both" else [args.family]


def cmd_scan(args) -> int:
    handler = {"signs": _scan_signs, "ratio": _scan_ratio, "pole": _scan_pole, "wright": _scan_wright}[args.kind]
    try:
        rows, fields, ok = handler(args)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from None
    if args.format != "json":
        text = _csv(rows, fields)
    else:
        params = {k: getattr(args, k) for k in SCAN_PARAMS[args.kind]}
        doc = _header(args, {"kind": args.kind, "params": params, "pass": ok, "rows": rows})
        text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- cache


def cmd_cache(args) -> int:
    cache = Cache(args.cache_dir)
    if args.action == "list":
        for p in cache.entries():
            print(p.name)
    else:
        print(f"removed {cache.clear()} entries from {cache.directory}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=None, help="cache directory (default $SPTCRANK_CACHE_DIR)")
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="csv (default for table/scan; verify prints text) or json")
    common.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    common.add_argument("--timestamp", action="store_true", help="embed a UTC timestamp in JSON reports")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog="sptcrank", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="compute (or load) a coefficient table")
    t.add_argument("function", choices=FUNCTION_IDS)
    t.add_argument("--order", type=int, required=True)
    t.add_argument("--m", type=int, default=None)
    t.add_argument("--mmax", type=int, default=None, help="rows m=0..mmax for crank tables")
    t.add_argument("--max-order", type=int, default=MAX_ORDER)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run an exact verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--order", type=int, required=True)
    v.add_argument("--oracle", action="store_true", help="also compare with partition enumeration")
    v.add_argument("--oracle-order", type=int, default=60)
    v.add_argument("--max-order", type=int, default=MAX_ORDER)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="numeric or asymptotic scan")
    s.add_argument("kind", choices=("signs", "ratio", "pole", "wright"))
    s.add_argument("--family", choices=("C1", "C5", "both"), default="C1")
    s.add_argument("--m", default=None, help="m list, e.g. 0..4 or 0,1,2")
    s.add_argument("--order", type=int, default=None)
    s.add_argument("--grid", default=None, help="n grid, e.g. 500,1000,2000,4000")
    s.add_argument("--A", type=float, default=0.5)
    s.add_argument("--B", type=float, default=1.5)
    s.add_argument("--ys", default="2^-4..2^-10")
    s.add_argument("--at", choices=("1", "-1", "away"), default="1", help="which pole lemma to probe")
    s.add_argument("--points", type=int, default=32, help="x samples for --at away")
    s.add_argument("--s", type=float, default=-0.5)
    s.add_argument("--us", default="5,10,15,20")
    s.add_argument("--M", type=float, default=1.0)
    s.add_argument("--steps", type=int, default=4000)
    s.set_defaults(func=cmd_scan)

    c = sub.add_parser("cache", parents=[common], help="inspect or clear the cache")
    c.add_argument("action", choices=("list", "clear"))
    c.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.command == "scan" and args.kind == "signs" and args.order is None:
        args.order = 2000
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotDivisible, IntegralityViolation, AssertionError) as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
