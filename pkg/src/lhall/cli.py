"""``lhall`` command line: delta-vectors, Ehrhart values, point lists, maps
and exhaustive verification suites.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 size cap.
Reports are deterministic; ``elapsed_ms`` stays null unless ``--timing`` is
given, so runs with and without ``--parallel`` are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import ehrhart, parbox, reversal
from .errors import InvalidInput, LectureHallError, SizeCapExceeded
from .seq import check_cap, make_seq, parse_ints, parse_seq, star

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3

COMMANDS = ("delta", "ehrhart", "enumerate", "map", "verify")
DELTA_METHODS = ("par", "des", "asc", "all")
EHRHART_METHODS = ("direct", "delta", "both")
MAP_OPS = ("rem", "rem-inv", "rem-bar", "phi", "gamma", "prop64", "reversal-point")
PROPERTIES = ("bijection", "grading", "rev", "tilde", "s1", "prop64", "volume",
              "series", "reversal-delta")


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seq", required=True,
                        help="comma-separated entries, lecture:n or anti:n")
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--max-points", type=_positive, default=None,
                        help="size cap (default $LHALL_MAX_POINTS or 10^7)")
    common.add_argument("--parallel", action="store_true")
    common.add_argument("--timing", action="store_true",
                        help="report elapsed_ms (makes output run-dependent)")

    parser = _Parser(prog="lhall", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("delta", parents=[common], help="delta-vector of P_s")
    p.add_argument("--method", choices=DELTA_METHODS, default="all")

    p = sub.add_parser("ehrhart", parents=[common], help="lattice points in t P_s")
    p.add_argument("--t", type=_nonneg, default=1)
    p.add_argument("--method", choices=EHRHART_METHODS, default="both")

    p = sub.add_parser("enumerate", parents=[common], help="points of Par_s")
    p.add_argument("--star", action="store_true", help="enumerate Par_{s*} instead")

    p = sub.add_parser("map", parents=[common], help="apply one bijection")
    p.add_argument("--op", choices=MAP_OPS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--q", default=None)
    p.add_argument("--t", type=_nonneg, default=1)

    p = sub.add_parser("verify", parents=[common], help="exhaustive property check")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--T", type=_nonneg, default=None,
                   help="series truncation order / largest dilation checked")
    return parser


# -- commands: each returns (method, delta, values, counterexamples) -----------

def cmd_delta(s, args, cap):
    methods = ehrhart.applicable_methods(s) if args.method == "all" else [args.method]
    results = {m: ehrhart.delta(s, m, cap=cap, parallel=args.parallel).entries
               for m in methods}
    first = results[methods[0]]
    bad = [parbox.Counterexample((), f"{m} gives {list(d)}, {methods[0]} gives {list(first)}")
           for m, d in results.items() if d != first]
    values = {m: list(d) for m, d in results.items()}
    if args.method == "all":
        values["agree"] = not bad
    return args.method, list(first), values, bad


def cmd_ehrhart(s, args, cap):
    values = {"t": args.t}
    delta = None
    if args.method in ("direct", "both"):
        values["direct"] = ehrhart.ehrhart_direct(s, args.t, cap).count
    if args.method in ("delta", "both"):
        d = ehrhart.delta_via_parallelepiped(s, cap=cap, parallel=args.parallel)
        delta = list(d.entries)
        values["from_delta"] = ehrhart.ehrhart_from_delta(d, args.t).count
    bad = []
    if args.method == "both":
        values["agree"] = values["direct"] == values["from_delta"]
        if not values["agree"]:
            bad.append(parbox.Counterexample((args.t,), "direct count != delta transfer"))
    return args.method, delta, values, bad


def cmd_enumerate(s, args, cap):
    radices = star(s) if args.star else s
    pts = parbox.enumerate_par(radices, cap=cap, parallel=args.parallel)
    values = {"radices": list(radices), "count": len(pts),
              "grading": list(pts.grade()), "points": [list(x) for x in pts.points()]}
    return ("star" if args.star else "plain"), None, values, []


def _word_arg(text, what):
    if text is None:
        raise InvalidInput(f"--{what} is required for this operation")
    return parse_ints(text)


def cmd_map(s, args, cap):
    x = parse_ints(args.input)
    q = parse_ints(args.q) if args.q is not None else None
    op = args.op
    values = {"op": op, "input": list(x)}
    if q is not None:
        values["q"] = list(q)
    if op == "rem":
        out = parbox.rem_q(s, q, x) if q is not None else parbox.rem(s, x)
    elif op == "rem-inv":
        out = parbox.rem_q_inv(s, q, x) if q is not None else parbox.rem_inv(s, x)
    elif op == "rem-bar":
        out = parbox.rem_bar_q(s, q, x) if q is not None else parbox.rem_bar(s, x)
    elif op == "phi":
        out = parbox.phi_q(s, q, x) if q is not None else parbox.phi(s, x)
    elif op == "gamma":
        tr = reversal.gamma(s, x)
        out = tr.target
        values["trace"] = _trace_dict(tr)
    elif op == "prop64":
        n = _lecture_length(s)
        tr = reversal.prop64_trace(n, x)
        out = tr.output
        values["trace"] = _trace_dict(tr)
    else:
        values["t"] = args.t
        out = reversal.reversal_point_map(s, args.t, x)
    values["output"] = list(out)
    return op, None, values, []


def _trace_dict(tr):
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in vars(tr).items()}


def _lecture_length(s):
    if tuple(s) != tuple(range(1, len(s) + 1)):
        raise InvalidInput("this operation needs the lecture hall sequence 1,2,...,n")
    return len(s)


def cmd_verify(s, args, cap):
    prop = args.property
    par = args.parallel
    values = {"property": prop}
    if prop == "bijection":
        bad = parbox.verify_bijection(s, cap, par)
        values["checked"] = s.volume()
    elif prop == "grading":
        bad = parbox.verify_grading(s, cap, par)
        values["checked"] = s.volume()
    elif prop == "rev":
        bad = reversal.verify_rev_identity(s, cap, par)
        values["checked"] = s.volume()
    elif prop == "tilde":
        bad = reversal.verify_tilde_identity(s, cap, par)
        values["checked"] = s.volume()
    elif prop == "s1":
        bad = reversal.verify_s1_identity(s, cap, par)
        values["checked"] = s.volume()
    elif prop == "prop64":
        n = _lecture_length(s)
        bad = reversal.verify_prop64(n, cap, par)
        values["checked"] = s.volume()
    elif prop == "volume":
        bad = ehrhart.verify_volume(s, cap, par)
        values["checked"] = len(ehrhart.applicable_methods(s))
    elif prop == "series":
        T = args.T if args.T is not None else len(s) + 4
        values["T"] = T
        ok = ehrhart.series_check(s, T, cap=cap)
        bad = [] if ok else [parbox.Counterexample((T,), "series identity fails")]
        values["checked"] = T + 1
    else:
        T = args.T if args.T is not None else 3
        values["T"] = T
        bad = reversal.verify_reversal_delta(s, T, cap, par)
        values["checked"] = T + 1
    values["verdict"] = "fail" if bad else "pass"
    return prop, None, values, bad


HANDLERS = {"delta": cmd_delta, "ehrhart": cmd_ehrhart, "enumerate": cmd_enumerate,
            "map": cmd_map, "verify": cmd_verify}


# -- output --------------------------------------------------------------------

def _decimal(v):
    """Integers become decimal strings, recursively; bools and strings pass."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {k: _decimal(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_decimal(x) for x in v]
    return v


def make_report(command, s, method, delta, values, bad, elapsed_ms=None) -> dict:
    return {
        "s": _decimal(list(s)),
        "command": command,
        "method": method,
        "delta": _decimal(delta),
        "values": _decimal(values),
        "counterexamples": [{"input": _decimal(list(c.input)), "detail": c.detail}
                            for c in bad],
        "elapsed_ms": elapsed_ms,
    }


def _csv_cell(v):
    if isinstance(v, list):
        return ";".join(_csv_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=False)
    return "" if v is None else str(v)


def render(report, fmt) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    values = report["values"]
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        if report["command"] == "enumerate":
            m = len(values["radices"])
            w.writerow([f"x{i}" for i in range(1, m + 1)] + ["level"])
            for x in values["points"]:
                w.writerow(x + [x[-1]])
        else:
            w.writerow(["key", "value"])
            for key in ("s", "command", "method", "delta"):
                w.writerow([key, _csv_cell(report[key])])
            for k, v in values.items():
                w.writerow([k, _csv_cell(v)])
            for c in report["counterexamples"]:
                w.writerow(["counterexample", _csv_cell(c["input"]) + " " + c["detail"]])
        return buf.getvalue()
    lines = [f"s = {','.join(report['s'])}", f"{report['command']} ({report['method']})"]
    if report["delta"] is not None:
        lines.append(f"delta = {','.join(report['delta'])}")
    for k, v in values.items():
        if k == "points":
            lines.extend(",".join(x) for x in v)
        else:
            lines.append(f"{k} = {_csv_cell(v)}")
    for c in report["counterexamples"]:
        lines.append(f"counterexample {','.join(c['input'])}: {c['detail']}")
    if report["elapsed_ms"] is not None:
        lines.append(f"elapsed_ms = {report['elapsed_ms']}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        s = parse_seq(args.seq)
        cap = args.max_points
        check_cap(1, cap)
        method, delta, values, bad = HANDLERS[args.command](make_seq(s), args, cap)
    except SizeCapExceeded as exc:
        print(f"lhall: size cap exceeded: {exc}", file=stderr)
        return EXIT_CAP
    except LectureHallError as exc:
        print(f"lhall: invalid input: {exc}", file=stderr)
        return EXIT_INVALID
    elapsed = round((time.perf_counter() - start) * 1000, 3) if args.timing else None
    report = make_report(args.command, s, method, delta, values, bad, elapsed)
    stdout.write(render(report, args.format))
    return EXIT_FAIL if bad else EXIT_OK


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
