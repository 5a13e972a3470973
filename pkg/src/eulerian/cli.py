"""Command-line interface.

Usage:
    eulerian compute --kind B --n 3 --method recurrence --format json
    eulerian verify thmB --n-max 8
    eulerian verify all --n-max 6
    eulerian interlace --kind D --n-max 12
    eulerian refined --kind D --n 4
    eulerian bench --kind B --n-max 8 --workers-list 1,2,4

Exit status: 0 when everything passes, 1 on a failed check, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from contextlib import contextmanager

from . import enumeration as en
from .families import (
    Method,
    build_table,
    eulerian,
    half_sum_identity,
    p_poly,
    q_poly,
    refined_family,
)
from .perms import Kind, group_order
from .poly import reverse
from .roots import compatible_pair_cert, compatible_sample_check, interlaces, is_real_rooted
from .verify import TARGETS, run_target

__all__ = ["main", "build_parser"]

ENUM_LIMIT = {Kind.PLAIN: 12, Kind.SIGNED: 10, Kind.EVEN_SIGNED: 10}
REFINED_LIMIT = 8
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Emitter:
    """Writes records as JSON lines, CSV rows or plain text."""

    def __init__(self, stream, fmt: str, header: list):
        self.stream = stream
        self.fmt = fmt
        self.header = header
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(header)

    def emit(self, record: dict, text: str) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(record) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow([record.get(h, "") for h in self.header])
        else:
            self.stream.write(text + "\n")


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _n_range(args, floor: int) -> range:
    if args.n is not None:
        lo = hi = args.n
    else:
        if args.n_max is None:
            raise UsageError("give --n or --n-max")
        lo = floor if args.n_min is None else args.n_min
        hi = args.n_max
    if lo < floor:
        raise UsageError(f"range starts at {floor}")
    if hi < lo:
        raise UsageError(f"empty range [{lo}, {hi}]; range starts at {max(lo, floor)}")
    return range(lo, hi + 1)


def _guard(kind: Kind, n_max: int, force: bool) -> None:
    if n_max > ENUM_LIMIT[kind] and not force:
        raise UsageError(f"enumeration of type {kind.value} beyond n = {ENUM_LIMIT[kind]} "
                         "needs --force")


def _coeff_strings(poly) -> list:
    return [str(c) for c in poly.coeffs]


def cmd_compute(args, out) -> int:
    kind = Kind.parse(args.kind)
    method = Method(args.method)
    floor = 2 if (kind is Kind.EVEN_SIGNED and method is Method.RECURRENCE) else 0
    ns = _n_range(args, floor)
    if method is Method.ENUM:
        _guard(kind, ns[-1], args.force)
    try:
        table = build_table(kind, method, ns, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "k", "coeff"])
        for n, poly in table.entries.items():
            for k, c in enumerate(poly.coeffs):
                writer.writerow([n, k, str(c)])
        return EXIT_OK
    for n, poly in table.entries.items():
        if args.format == "json":
            out.write(json.dumps({"kind": kind.value, "n": n, "method": method.value,
                                  "coeffs": _coeff_strings(poly)}) + "\n")
        else:
            out.write(f"{kind.value}_{n}(t) = {poly}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = list(TARGETS) if args.target == "all" else [args.target]
    if args.target != "all" and args.target not in TARGETS:
        raise UsageError(f"unknown target {args.target!r}")
    em = Emitter(out, args.format, ["target", "n", "pass"])
    plans = []
    for name in names:
        target = TARGETS[name]
        if args.target == "all" and args.n_min is not None and args.n_min < target.n_min:
            ns = _n_range(argparse.Namespace(n=None, n_min=target.n_min, n_max=args.n_max),
                          target.n_min)
        else:
            ns = _n_range(args, target.n_min)
        if name != "unpleasant":
            _guard(Kind.SIGNED, ns[-1], args.force)
        plans.append((name, ns))
    failed = False
    for name, ns in plans:
        for n, ok in run_target(name, ns[0], ns[-1]):
            failed |= not ok
            em.emit({"target": name, "n": n, "pass": ok},
                    f"{name} n={n} {'PASS' if ok else 'FAIL'}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_interlace(args, out) -> int:
    kind = Kind.parse(args.kind)
    if kind is Kind.PLAIN:
        raise UsageError("interlace needs --kind B or D")
    floor = 1 if kind is Kind.SIGNED else 2
    ns = _n_range(args, floor)
    base = p_poly if kind is Kind.SIGNED else q_poly
    em = Emitter(out, args.format, ["kind", "n", "interlaces", "real_rooted", "pass"])
    failed = False
    for n in ns:
        f = base(n)
        inter = interlaces(f, reverse(f, n))
        rooted = is_real_rooted(eulerian(kind, n))
        ok = inter and rooted
        failed |= not ok
        name = "P" if kind is Kind.SIGNED else "Q"
        em.emit({"kind": kind.value, "n": n, "interlaces": inter, "real_rooted": rooted, "pass": ok},
                f"{kind.value} n={n} {name}_n interlaces reverse: {inter}; "
                f"{kind.value}_n real-rooted: {rooted} {'PASS' if ok else 'FAIL'}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_refined(args, out) -> int:
    kind = Kind.parse(args.kind)
    if kind is Kind.PLAIN:
        raise UsageError("refined needs --kind B or D")
    n = args.n
    floor = 1 if kind is Kind.SIGNED else 2
    if n is None or not floor <= n <= REFINED_LIMIT:
        raise UsageError(f"refined needs {floor} <= --n <= {REFINED_LIMIT}")
    family = refined_family(kind, n)
    halves = half_sum_identity(kind, n, family)
    matrix = [[compatible_pair_cert(family[i], family[j]) if i < j else None
               for j in range(2 * n)] for i in range(2 * n)]
    sample = compatible_sample_check(family, args.trials, args.seed)
    label = "T" if kind is Kind.EVEN_SIGNED else "B"
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "k", "d", "coeff"])
        for k, poly in enumerate(family):
            for d, c in enumerate(poly.coeffs):
                writer.writerow([n, k, d, str(c)])
    elif args.format == "json":
        for k, poly in enumerate(family):
            out.write(json.dumps({"kind": kind.value, "n": n, "k": k,
                                  "coeffs": _coeff_strings(poly)}) + "\n")
        out.write(json.dumps({"kind": kind.value, "n": n, "half_sums": halves}) + "\n")
        out.write(json.dumps({"kind": kind.value, "n": n, "pair_cert": matrix}) + "\n")
        out.write(json.dumps({"kind": kind.value, "n": n, "sample_check": sample,
                              "trials": args.trials, "seed": args.seed}) + "\n")
    else:
        for k, poly in enumerate(family):
            out.write(f"{label}_{{{n},{k}}}(t) = {poly}\n")
        out.write(f"half sums: {'PASS' if halves else 'FAIL'}\n")
        out.write("pairwise certificates (row i interlaces column j, i < j):\n")
        for i, row in enumerate(matrix):
            cells = ["." if c is None else ("1" if c else "0") for c in row]
            out.write(f"  {i:2d} {' '.join(cells)}\n")
        out.write(f"sample check ({args.trials} trials, seed {args.seed}): "
                  f"{'PASS' if sample else 'FAIL'}\n")
    return EXIT_OK if halves else EXIT_FAIL


def cmd_bench(args, out) -> int:
    kind = Kind.parse(args.kind)
    ns = _n_range(args, 2 if kind is Kind.EVEN_SIGNED else 1)
    try:
        workers_list = [int(w) for w in args.workers_list.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --workers-list {args.workers_list!r}") from exc
    em = Emitter(out, args.format, ["kind", "n", "method", "workers", "elements", "seconds"])
    for n in ns:
        # past the guard only the recurrence is timed
        enumerate_n = args.force or n <= ENUM_LIMIT[kind]
        for w in workers_list if enumerate_n else []:
            start = time.perf_counter()
            _, touched = en.descent_distribution(kind, n, workers=w, return_touched=True)
            secs = time.perf_counter() - start
            em.emit({"kind": kind.value, "n": n, "method": "enum", "workers": w,
                     "elements": touched, "seconds": round(secs, 6)},
                    f"{kind.value} n={n} enum workers={w}: {touched} elements "
                    f"(|group| = {group_order(kind, n)}) in {secs:.3f}s")
        start = time.perf_counter()
        eulerian(kind, n, Method.RECURRENCE)
        secs = time.perf_counter() - start
        em.emit({"kind": kind.value, "n": n, "method": "recurrence", "workers": 1,
                 "elements": "", "seconds": round(secs, 6)},
                f"{kind.value} n={n} recurrence: {secs:.6f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerian",
                                     description="Eulerian polynomials of types A, B and D.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind=True):
        if kind:
            p.add_argument("--kind", required=True, choices=["A", "B", "D"])
        p.add_argument("--n", type=int)
        p.add_argument("--n-min", type=int)
        p.add_argument("--n-max", type=int)
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--force", action="store_true",
                       help="allow enumeration beyond the desk-scale limit")

    p = sub.add_parser("compute", help="emit Eulerian polynomial coefficients")
    common(p)
    p.add_argument("--method", choices=[m.value for m in Method], default="recurrence")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a named identity over a range of n")
    p.add_argument("target", help=f"one of {', '.join(TARGETS)}, or 'all'")
    common(p, kind=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("interlace", help="interlacing of P_n or Q_n with its reverse")
    common(p)
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("refined", help="refined families T_{n,k} / B_{n,k}")
    common(p)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_refined)

    p = sub.add_parser("bench", help="timings for enumeration and recurrence")
    common(p)
    p.add_argument("--workers-list", default="1")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
