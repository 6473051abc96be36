"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 parse or validation
error, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exactla import expected_invariants, format_divisors, smith_normal_form
from .frieze import SameEdge, classify_minors, hinge_sequence, minor_witnesses, render_frieze
from .matrix import format_matrix, matrix_fast, matrix_glued, matrix_to_json
from .paths import matrix_bruteforce
from .polygon import DAngulationError, enumerate_dangulations, format_dangulation, parse_dangulation
from .verify import CHECKS, run_verify

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_USAGE = 0, 1, 2, 3
BRUTE_CAP = 14


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    return parse_dangulation(_read(args.input))


def cmd_validate(args, out):
    T = _load(args)
    out.write(f"n={T.n} d={T.d} m={T.m}, {len(T.faces)} faces\n")
    for f in T.faces:
        out.write(f"face {f.id}: {' '.join(map(str, f.vertices))}\n")
    return EXIT_OK


def cmd_matrix(args, out):
    T = _load(args)
    if args.method == "brute":
        if T.n > BRUTE_CAP and not args.unsafe_brute:
            raise UsageError(f"SizeLimit: brute force is capped at n <= {BRUTE_CAP} "
                             f"(pass --unsafe-brute to override)")
        M = matrix_bruteforce(T)
    elif args.method == "glue":
        M = matrix_glued(T)
    else:
        M = matrix_fast(T)
    out.write(matrix_to_json(T, M) if args.format == "structured" else format_matrix(M))
    return EXIT_OK


def cmd_invariants(args, out):
    T = _load(args)
    snf = smith_normal_form(matrix_fast(T).entries)
    exp_div, exp_det = expected_invariants(T.n, T.d, T.m)
    passed = snf.divisors == exp_div and snf.determinant == exp_det
    if args.format == "structured":
        doc = {"n": T.n, "d": T.d, "m": T.m,
               "determinant": snf.determinant, "divisors": list(snf.divisors),
               "expected_determinant": exp_det, "expected_divisors": list(exp_div),
               "passed": passed}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"det {snf.determinant}\n")
        out.write(f"divisors {format_divisors(snf.divisors)}\n")
        out.write(f"expected det {exp_det}\n")
        out.write(f"expected divisors {format_divisors(exp_div)}\n")
        out.write("PASS\n" if passed else "FAIL\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_frieze(args, out):
    T = _load(args)
    columns = args.columns if args.columns is not None else 2 * T.n
    if columns < 1:
        raise UsageError("--columns must be at least 1")
    out.write(render_frieze(T, columns))
    return EXIT_OK


def _witness_doc(e, f, w):
    return {"e": e, "f": f, "sequence": [list(z) for z in w.sequence], "gons": list(w.gons)}


def cmd_minors(args, out):
    T = _load(args)
    table = classify_minors(T)
    if args.format == "structured":
        doc = {"n": T.n, "d": T.d, "diagonals": [list(t) for t in T.diagonals],
               "minors": table,
               "witnesses": [_witness_doc(e, f, w) for (e, f), w in sorted(minor_witnesses(T).items())]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for row in table:
            out.write(" ".join(f"{x:2d}" for x in row) + "\n")
    return EXIT_OK


def cmd_hinge(args, out):
    T = _load(args)
    try:
        w = hinge_sequence(T, args.e, args.f)
    except SameEdge as exc:
        raise UsageError(str(exc)) from None
    if args.format == "structured":
        out.write(json.dumps(None if w is None else _witness_doc(args.e, args.f, w)) + "\n")
    elif w is None:
        out.write("none\n")
    else:
        out.write(" ".join(f"({u},{v})" for u, v in w.sequence) + "\n")
        faces = ["{" + ",".join(map(str, T.faces[g].vertices)) + "}" for g in w.gons]
        out.write("faces " + " ".join(faces) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    items = enumerate_dangulations(args.n, args.d)
    if args.count:
        out.write(f"{sum(1 for _ in items)}\n")
        return EXIT_OK
    first = True
    for T in items:
        if not first:
            out.write("\n")
        out.write(format_dangulation(T))
        first = False
    return EXIT_OK


def cmd_verify(args, out):
    checks = CHECKS if not args.checks else tuple(c.strip() for c in args.checks.split(","))
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise UsageError(f"unknown checks {sorted(unknown)}; choose from {', '.join(CHECKS)}")
    if args.dmin < 3 or args.dmax < args.dmin or args.jobs < 1:
        raise UsageError("need 3 <= dmin <= dmax and jobs >= 1")
    report = run_verify(args.dmin, args.dmax, args.nmax, checks, args.jobs, args.brute_nmax)
    out.write(report.to_json() if args.format == "structured" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dfrieze", description="Path-count matrices and friezes of d-angulations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", default="-", help="d-angulation file (default: stdin)")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.set_defaults(func=func)
        return p

    with_input("validate", cmd_validate, "check a d-angulation and list its faces")
    p = with_input("matrix", cmd_matrix, "print the path-count matrix")
    p.add_argument("--method", choices=("fast", "brute", "glue"), default="fast")
    p.add_argument("--unsafe-brute", action="store_true", help=f"allow brute force beyond n={BRUTE_CAP}")
    with_input("invariants", cmd_invariants, "determinant and elementary divisors")
    p = with_input("frieze", cmd_frieze, "render the frieze pattern")
    p.add_argument("--columns", type=int, default=None, help="entries per row (default 2n)")
    with_input("minors", cmd_minors, "table of adjacent 2x2 minors")
    p = with_input("hinge", cmd_hinge, "hinge sequence between boundary edges (e,e+1) and (f,f+1)")
    p.add_argument("e", type=int)
    p.add_argument("f", type=int)

    p = sub.add_parser("enumerate", help="list every d-angulation of P_n")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--count", action="store_true", help="print only the number")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the exhaustive checks")
    p.add_argument("--dmin", type=int, default=3)
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--checks", "--theorems", default="",
                   help=f"comma separated subset of: {', '.join(CHECKS)}")
    p.add_argument("--brute-nmax", type=int, default=10, help="largest n for brute-force checks")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DAngulationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
