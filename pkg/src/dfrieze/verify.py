"""Exhaustive checks over every d-angulation in a parameter range."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .exactla import verify_divisor_theorem, format_divisors
from .frieze import hinge_sequence, minor, witness_problems
from .matrix import glue_matrix, matrix_fast
from .paths import matrix_bruteforce
from .polygon import DAngulation, build_dangulation, cut_boundary_face, enumerate_dangulations

CHECKS = (
    "symmetry",        # fast matrix is symmetric
    "brute",           # fast matrix equals the d-path count, both symmetric
    "direction",       # clockwise counts equal counterclockwise counts
    "divisors",        # determinant and elementary divisors
    "gluing",          # block formula after cutting the face on (n, 1)
    "minors",          # adjacent minors and the hinge criterion
    "triangulation",   # d = 3: all off-diagonal minors are 1
)


@dataclass(frozen=True, order=True)
class Failure:
    n: int
    d: int
    diagonals: tuple[tuple[int, int], ...]
    check: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    dmin: int
    dmax: int
    nmax: int
    checks: tuple[str, ...]
    dangulations: int = 0
    cases: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [f"d={self.dmin}..{self.dmax} n<={self.nmax}: {self.dangulations} d-angulations"]
        for name in self.checks:
            lines.append(f"{name}: {self.cases.get(name, 0)} cases")
        for f in self.failures:
            lines.append(f"FAIL {f.check} n={f.n} d={f.d} {list(f.diagonals)}: "
                         f"expected {f.expected}, got {f.actual}")
        lines.append("OK" if self.ok else f"{len(self.failures)} failures")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "dmin": self.dmin, "dmax": self.dmax, "nmax": self.nmax,
            "checks": list(self.checks),
            "dangulations": self.dangulations,
            "cases": {k: self.cases.get(k, 0) for k in self.checks},
            "failures": [
                {"n": f.n, "d": f.d, "diagonals": [list(t) for t in f.diagonals],
                 "check": f.check, "expected": f.expected, "actual": f.actual}
                for f in self.failures
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def check_dangulation(T: DAngulation, checks=CHECKS, brute_nmax: int = 10):
    """Run the selected checks on one d-angulation; return (counts, failures)."""
    counts: Counter = Counter()
    failures: list[Failure] = []

    def fail(check, expected, actual):
        failures.append(Failure(T.n, T.d, T.diagonals, check, str(expected), str(actual)))

    M = matrix_fast(T)
    n, d = T.n, T.d

    if "symmetry" in checks:
        counts["symmetry"] += 1
        if not M.is_symmetric():
            fail("symmetry", "symmetric", "asymmetric")

    if n <= brute_nmax and ("brute" in checks or "direction" in checks):
        B = matrix_bruteforce(T)
        if "brute" in checks:
            counts["brute"] += 1
            if B != M or not B.is_symmetric():
                fail("brute", M.rows(), B.rows())
        if "direction" in checks:
            counts["direction"] += 1
            C = matrix_bruteforce(T, "cw")
            if C != B:
                fail("direction", B.rows(), C.rows())

    if "divisors" in checks:
        counts["divisors"] += 1
        rep = verify_divisor_theorem(T, M)
        if not rep.passed:
            fail("divisors",
                 f"det {rep.expected_determinant}, {format_divisors(rep.expected_divisors)}",
                 f"det {rep.determinant}, {format_divisors(rep.divisors)}")

    if "gluing" in checks and T.m >= 1:
        k = n - d + 2
        face = (1,) + tuple(range(k, n + 1))
        if T.is_diagonal(1, k) and any(f.vertices == face for f in T.faces):
            counts["gluing"] += 1
            G = glue_matrix(matrix_fast(cut_boundary_face(T, face)), d)
            if G != M:
                fail("gluing", M.rows(), G.rows())

    if "minors" in checks or ("triangulation" in checks and d == 3):
        for e in range(1, n + 1):
            for f in range(1, n + 1):
                value = minor(T, e, f, M)
                if "triangulation" in checks and d == 3 and e != f:
                    counts["triangulation"] += 1
                    if value != 1:
                        fail("triangulation", f"d({e},{f}) = 1", value)
                if "minors" not in checks:
                    continue
                counts["minors"] += 1
                if e == f:
                    if value != -1:
                        fail("minors", f"d({e},{e}) = -1", value)
                    continue
                if value not in (0, 1):
                    fail("minors", f"d({e},{f}) in {{0,1}}", value)
                w = hinge_sequence(T, e, f)
                if (value == 1) != (w is not None):
                    fail("minors", f"d({e},{f}) = 1 iff hinge exists",
                         f"d={value}, hinge={'yes' if w else 'no'}")
                if w is not None and (problems := witness_problems(T, w)):
                    fail("minors", "valid witness", "; ".join(problems))
    return counts, failures


def _run_chunk(args):
    n, d, diagonal_lists, checks, brute_nmax = args
    counts: Counter = Counter()
    failures = []
    for diags in diagonal_lists:
        c, f = check_dangulation(build_dangulation(n, d, diags), checks, brute_nmax)
        counts.update(c)
        failures.extend(f)
    return len(diagonal_lists), counts, failures


def parameter_pairs(dmin: int, dmax: int, nmax: int) -> list[tuple[int, int]]:
    return [(n, d) for d in range(dmin, dmax + 1) for n in range(d, nmax + 1, d - 2)]


def run_verify(dmin=3, dmax=6, nmax=12, checks=CHECKS, jobs=1, brute_nmax=10,
               chunk=500) -> VerifyReport:
    """Check every d-angulation with dmin <= d <= dmax and n <= nmax.

    With ``jobs > 1`` the work is spread over a process pool; the report
    is identical for any job count.
    """
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    checks = tuple(c for c in CHECKS if c in checks)
    tasks = []
    for n, d in parameter_pairs(dmin, dmax, nmax):
        diags = [T.diagonals for T in enumerate_dangulations(n, d)]
        for k in range(0, len(diags), chunk):
            tasks.append((n, d, diags[k:k + chunk], checks, brute_nmax))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, tasks))
    else:
        results = [_run_chunk(t) for t in tasks]
    report = VerifyReport(dmin, dmax, nmax, checks)
    total: Counter = Counter()
    for count, counts, failures in results:
        report.dangulations += count
        total.update(counts)
        report.failures.extend(failures)
    report.cases = dict(total)
    report.failures.sort()
    return report
