"""Command-line front end.

Single-value queries (sum, count, jacobi, detk), verification sweeps over
(m, n) ranges (verify), table emission (table), and named property suites
(lemma).  Exit codes: 0 all-pass, 1 verification failure, 2 resource
limit, 3 I/O, 4 usage.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .board import rectangle
from .decomp import reciprocity_free_sum
from .gaussian import GaussianInt
from .kasteleyn import build_kasteleyn, det_exact, signed_sum_via_det
from .lemmas import LEMMAS
from .residue import jacobi, theorem_rhs
from .spectral import ToleranceError, norm_product, round_signed
from .tiling import SizeLimitError, count_tilings, signed_sum

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_LIMIT = 2
EXIT_IO = 3
EXIT_USAGE = 4

METHODS = ("dp", "det", "reciprocity-free", "spectral")

# maps lemma flag dests to runner keyword names
_LEMMA_FLAGS = {
    "max": "bound",
    "m_max": "m_max",
    "n_max": "n_max",
    "n": "n",
    "tol": "tol",
    "rel_tol": "rel_tol",
    "limit": "limit",
    "max_area": "max_area",
    "arms": "arms",
    "length": "length",
}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this artifact reserves 2 for
    resource limits, so remap to 4."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="residue-tilings")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sum", help="signed tiling sum of a rectangle")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)

    p = sub.add_parser("count", help="number of tilings of a rectangle")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)

    p = sub.add_parser("jacobi", help="Jacobi symbol (m / n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("detk", help="determinant of the folded adjacency matrix")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", action="store_true",
                   help="emit the matrix and determinant as JSON")

    p = sub.add_parser("verify", help="sweep the main identity over a range")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--methods", default="dp,det",
                   help="comma list from: " + ", ".join(METHODS))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("table", help="emit S and Jacobi values over a range")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("lemma", help="run a named property suite")
    p.add_argument("name")
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--rel-tol", type=float, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--max-area", type=int, default=None)
    p.add_argument("--arms", type=int, default=None)
    p.add_argument("--length", type=int, default=None)

    return parser


def _cmd_sum(args) -> int:
    print(signed_sum(rectangle(args.width, args.height)).render())
    return EXIT_OK


def _cmd_count(args) -> int:
    print(count_tilings(rectangle(args.width, args.height)))
    return EXIT_OK


def _cmd_jacobi(args) -> int:
    print(jacobi(args.m, args.n))
    return EXIT_OK


def _cmd_detk(args) -> int:
    matrix = build_kasteleyn(args.m, args.n)
    det = det_exact(matrix)
    if args.matrix:
        print(json.dumps({"m": args.m, "n": args.n,
                          "matrix": matrix.to_json_obj(), "det": det}))
    else:
        print(det)
    return EXIT_OK


def _verify_case(task: tuple[int, int, tuple[str, ...], float]) -> list[dict]:
    m, n, methods, tol = task
    rhs = theorem_rhs(m, n)
    out = []
    for method in methods:
        limit_hit = False
        try:
            if method == "dp":
                lhs = signed_sum(rectangle(m - 1, n - 1))
                ok = lhs == rhs
            elif method == "det":
                lhs = GaussianInt(signed_sum_via_det(m, n))
                ok = lhs == rhs
            elif method == "reciprocity-free":
                lhs = GaussianInt(reciprocity_free_sum(m, n))
                ok = lhs == rhs
            else:
                z = norm_product(m, n)
                sign = -1 if m % 2 == 0 and (n * n - 1) // 8 % 2 else 1
                try:
                    lhs = GaussianInt(sign * round_signed(z, tol))
                    ok = lhs == rhs
                except ToleranceError:
                    lhs = repr(z)
                    ok = False
        except SizeLimitError as exc:
            lhs = f"limit: {exc}"
            ok = False
            limit_hit = True
        rendered = lhs if isinstance(lhs, str) else lhs.render()
        case = {"m": m, "n": n, "lhs": rendered, "rhs": rhs,
                "method": method, "pass": ok}
        if limit_hit:
            case["limit"] = True
        out.append(case)
    return out


def _cmd_verify(args, parser: _Parser) -> int:
    methods = tuple(s.strip() for s in args.methods.split(",") if s.strip())
    for method in methods:
        if method not in METHODS:
            parser.error(f"unknown method {method!r}")
    tasks = [
        (m, n, methods, args.tol)
        for n in range(1, args.n_max + 1, 2)
        for m in range(1, args.m_max + 1)
    ]
    start = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_verify_case, tasks))
    else:
        chunks = [_verify_case(t) for t in tasks]
    elapsed = time.perf_counter() - start
    cases = [case for chunk in chunks for case in chunk]
    cases.sort(key=lambda c: (c["n"], c["m"], METHODS.index(c["method"])))
    failed = sum(1 for c in cases if not c["pass"])
    limits = sum(1 for c in cases if c.get("limit"))
    report = {
        "cases": cases,
        "summary": {"total": len(cases), "failed": failed, "limit": limits,
                    "m_max": args.m_max, "n_max": args.n_max,
                    "methods": list(methods)},
    }
    # wall time goes to stderr so stdout stays byte-deterministic
    print(json.dumps(report, indent=2))
    print(f"verify: {len(cases)} cases in {elapsed:.2f}s", file=sys.stderr)
    if failed > limits:
        return EXIT_FAIL
    if limits:
        return EXIT_LIMIT
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = []
    for n in range(1, args.n_max + 1, 2):
        for m in range(1, args.m_max + 1):
            value = signed_sum(rectangle(m - 1, n - 1))
            rhs = theorem_rhs(m, n)
            rows.append((m, n, value.render(), rhs, value == rhs))
    try:
        handle = open(args.out, "w", encoding="utf-8", newline="") if args.out else None
        try:
            target = handle or sys.stdout
            if args.format == "csv":
                writer = csv.writer(target, lineterminator="\n")
                writer.writerow(["m", "n", "S", "jacobi", "agree"])
                for m, n, s, rhs, agree in rows:
                    writer.writerow([m, n, s, rhs, "true" if agree else "false"])
            else:
                obj = [
                    {"m": m, "n": n, "S": s, "jacobi": rhs, "agree": agree}
                    for m, n, s, rhs, agree in rows
                ]
                json.dump(obj, target, indent=2)
                target.write("\n")
        finally:
            if handle:
                handle.close()
    except OSError as exc:
        print(f"table: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_lemma(args, parser: _Parser) -> int:
    runner = LEMMAS.get(args.name)
    if runner is None:
        parser.error(f"unknown lemma {args.name!r}")
    accepted = inspect.signature(runner).parameters
    kwargs = {}
    for dest, kwarg in _LEMMA_FLAGS.items():
        value = getattr(args, dest)
        if value is None:
            continue
        if kwarg not in accepted:
            flag = "--" + dest.replace("_", "-")
            parser.error(f"lemma {args.name!r} does not take {flag}")
        kwargs[kwarg] = value
    report = runner(**kwargs)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["pass"] else EXIT_FAIL


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sum":
            return _cmd_sum(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "jacobi":
            return _cmd_jacobi(args)
        if args.command == "detk":
            return _cmd_detk(args)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "table":
            return _cmd_table(args)
        return _cmd_lemma(args, parser)
    except SizeLimitError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
