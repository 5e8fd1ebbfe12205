"""Command-line front end.

Subcommands: enumerate, poly, verify, basecase, strings, projection, stats.
Exit codes: 0 = pass / output produced, 1 = verified failure (counterexample
emitted), 2 = usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd

from qtcat import cycles, paths, verify
from qtcat.bijections import BoundedPartition


class UsageError(Exception):
    pass


def _parse_slope(text):
    try:
        n, s = text.split("/")
        n, s = int(n), int(s)
    except ValueError:
        raise UsageError("slope must look like 17/12")
    if n < 1 or s < 1:
        raise UsageError("slope parameters must be positive")
    if gcd(n, s) != 1:
        raise UsageError("slope %d/%d is not coprime" % (n, s))
    return n, s


def _parse_ellm(text):
    try:
        ell, m = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError("ellm must look like 4,3")
    if ell < 1 or m < 1:
        raise UsageError("ell and m must be positive")
    return ell, m


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_text(rows, header, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=None) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(header)
        for r in rows:
            w.writerow([r[k] for k in header])
        return buf.getvalue()
    lines = ["\t".join(header)]
    for r in rows:
        lines.append("\t".join(str(r[k]) for k in header))
    return "\n".join(lines) + "\n"


def cmd_enumerate(args):
    header = ["steps", "area", "degr", "dinv", "maximal"]
    rows = []
    if args.slope:
        n, s = _parse_slope(args.slope)
        stream = paths.enumerate_rational(n, s)
    elif args.ellm:
        ell, m = _parse_ellm(args.ellm)
        stream = paths.enumerate_ellm(ell, m)
    else:
        raise UsageError("enumerate needs --slope or --ellm")
    for p in stream:
        st = paths.stats(p)
        if args.max_degr is not None and st.degr > args.max_degr:
            continue
        rows.append(
            {
                "steps": ",".join(str(x) for x in p.steps),
                "area": st.area,
                "degr": st.degr,
                "dinv": st.dinv,
                "maximal": paths.is_maximal(p),
            }
        )
    _emit(_rows_to_text(rows, header, args.format), args.out)
    return 0


def _poly_text(poly, fmt):
    if fmt == "json":
        return json.dumps(poly.to_obj()) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["q", "t", "c"])
        for (a, b), c in poly.terms():
            w.writerow([a, b, c])
        return buf.getvalue()
    return str(poly) + "\n"


def cmd_poly(args):
    n, s = _parse_slope(args.slope)
    if args.d is not None:
        if args.d < 0:
            raise UsageError("--d must be >= 0")
        poly = verify.catalan_slice(n, s, args.d)
    else:
        poly = verify.catalan_poly(n, s)
    _emit(_poly_text(poly, args.format), args.out)
    return 0


def _report_exit(report, args):
    if args.format == "json":
        text = json.dumps(report.to_obj(), indent=2) + "\n"
    else:
        lines = ["verdict: %s" % ("pass" if report.verdict else "fail")]
        lines.append("params: %s" % json.dumps(report.params))
        if report.counts:
            lines.append("counts: %s" % json.dumps(report.counts))
        if report.witness is not None:
            lines.append("witness: %s" % json.dumps(report.witness))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if report.verdict else 1


def cmd_verify(args):
    n, s = _parse_slope(args.slope)
    return _report_exit(verify.check_conjecture(n, s), args)


def cmd_basecase(args):
    if args.dstar < 0 or args.m_max < 1:
        raise UsageError("need --dstar >= 0 and --m-max >= 1")
    report = verify.basecase(range(1, args.m_max + 1), args.dstar, jobs=args.jobs)
    return _report_exit(report, args)


def cmd_strings(args):
    ell, m = _parse_ellm(args.ellm)
    if args.d is None or args.d < 0 or args.d >= (ell - 1) * m:
        raise UsageError("strings needs 0 <= --d < (ell-1)m")
    report = verify.verify_string_partition(ell, m, args.d)
    lines = []
    from qtcat.bijections import bounded_partitions

    for lam in bounded_partitions(args.d, ell - 1):
        st = cycles.string_of(lam, m)
        lines.append("string %s:" % (list(lam.parts),))
        for p in st.elements:
            sp = paths.positions_to_steps(p)
            lines.append(
                "  %s  area=%d, degr=%d"
                % (
                    ",".join(str(x) for x in sp.steps),
                    paths.area(p),
                    paths.degr_alpha(p),
                )
            )
    leftovers = []
    for p in paths.enumerate_positions(ell, m):
        if paths.degr_alpha(p) == args.d and not cycles.is_connected(p):
            leftovers.append(p)
    lines.append("disconnected (%d):" % len(leftovers))
    for p in leftovers:
        sp = paths.positions_to_steps(p)
        lines.append(
            "  %s  area=%d, degr=%d"
            % (",".join(str(x) for x in sp.steps), paths.area(p), paths.degr_alpha(p))
        )
    if args.format == "json":
        return _report_exit(report, args)
    text = "\n".join(lines) + "\n" + "verdict: %s\n" % (
        "pass" if report.verdict else "fail"
    )
    _emit(text, args.out)
    return 0 if report.verdict else 1


def cmd_projection(args):
    try:
        parts = tuple(int(v) for v in args.partition.split(",")) if args.partition else ()
    except ValueError:
        raise UsageError("partition must be comma-separated parts, e.g. 4,2,1")
    if args.ell is None or args.m is None:
        raise UsageError("projection needs --ell and --m")
    try:
        lam = BoundedPartition(parts, args.ell - 1)
    except ValueError as e:
        raise UsageError(str(e))
    if lam.size() >= (args.ell - 2) * args.m:
        raise UsageError("need |partition| < (ell-2)m")
    return _report_exit(verify.verify_projection(lam, args.m), args)


def cmd_stats(args):
    try:
        if args.slope:
            n, s = _parse_slope(args.slope)
            p = paths.parse_path_text(args.path, slope=(n, s))
        elif args.m:
            p = paths.parse_path_text(args.path, m=args.m)
        else:
            raise UsageError("stats needs --slope or --m")
        if isinstance(p, paths.PositionPath):
            p = paths.positions_to_steps(p)
    except ValueError as e:
        raise UsageError(str(e))
    st = paths.stats(p)
    row = {
        "steps": ",".join(str(x) for x in p.steps),
        "area": st.area,
        "degr": st.degr,
        "dinv": st.dinv,
        "M": st.M,
        "maximal": paths.is_maximal(p),
    }
    if args.format == "json":
        _emit(json.dumps(row) + "\n", args.out)
    else:
        _emit(
            "\n".join("%s: %s" % (k, v) for k, v in row.items()) + "\n", args.out
        )
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qtcat",
        description="Rational q,t-Catalan paths, statistics, and conjecture checks",
    )
    ap.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list paths with their statistics")
    p.add_argument("--slope")
    p.add_argument("--ellm")
    p.add_argument("--max-degr", type=int, default=None)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("poly", help="print the polynomial (or one degree slice)")
    p.add_argument("--slope", required=True)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("verify", help="check the conjecture for one slope")
    p.add_argument("--slope", required=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("basecase", help="base-case computations 1 and 2")
    p.add_argument("--dstar", type=int, default=20)
    p.add_argument("--m-max", type=int, default=20)
    p.set_defaults(fn=cmd_basecase)

    p = sub.add_parser("strings", help="string decomposition of one degree slice")
    p.add_argument("--ellm", required=True)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(fn=cmd_strings)

    p = sub.add_parser("projection", help="check the projection shift for a partition")
    p.add_argument("--partition", default="")
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(fn=cmd_projection)

    p = sub.add_parser("stats", help="statistics of a single path")
    p.add_argument("--path", required=True)
    p.add_argument("--slope")
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(fn=cmd_stats)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; preserve that
        raise e
    try:
        return args.fn(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
