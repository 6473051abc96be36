"""Exact integer linear algebra: determinants and Smith normal forms.

Matrices are plain sequences of integer rows; nothing here ever produces
a rational or floating point intermediate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .polygon import DAngulation

IntMatrix = list[list[int]]


class NotSquare(ValueError):
    pass


@dataclass(frozen=True)
class SmithDecomposition:
    divisors: tuple[int, ...]
    determinant: int | None = None


def _copy(A: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in A]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    a = _copy(A)
    n = len(a)
    if any(len(row) != n for row in a):
        raise NotSquare(f"matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for r in range(k + 1, n):
            row_r = a[r]
            lead = row_r[k]
            for c in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                row_r[c] = (pivot * row_r[c] - lead * row_k[c]) // prev
            row_r[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _min_pivot(a: IntMatrix, t: int) -> tuple[int, int] | None:
    best = None
    for r in range(t, len(a)):
        row = a[r]
        for c in range(t, len(row)):
            x = row[c]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), r, c)
                if best[0] == 1:
                    return r, c
    return None if best is None else best[1:]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Elementary divisors of an integer matrix.

    Row/column reduction with a smallest-magnitude pivot; when the pivot
    fails to divide some remaining entry, that entry's row is added to the
    pivot row and reduction resumes.  Divisors are non-negative, ordered so
    each divides the next, zeros last.  For square input the (signed)
    determinant is reported as well.
    """
    a = _copy(A)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    det = determinant(A) if rows == cols else None
    divisors = []
    for t in range(min(rows, cols)):
        pos = _min_pivot(a, t)
        if pos is None:
            divisors.extend([0] * (min(rows, cols) - t))
            break
        while True:
            r, c = pos
            a[t], a[r] = a[r], a[t]
            for row in a:
                row[t], row[c] = row[c], row[t]
            p = a[t][t]
            dirty = False
            for r in range(t + 1, rows):
                if a[r][t]:
                    q = a[r][t] // p
                    row_r, row_t = a[r], a[t]
                    for c in range(t, cols):
                        row_r[c] -= q * row_t[c]
                    dirty = dirty or row_r[t] != 0
            for c in range(t + 1, cols):
                if a[t][c]:
                    q = a[t][c] // p
                    for r in range(t, rows):
                        a[r][c] -= q * a[r][t]
                    dirty = dirty or a[t][c] != 0
            if dirty:
                pos = _min_pivot_line(a, t)
                continue
            bad = next(
                (r for r in range(t + 1, rows) for c in range(t + 1, cols) if a[r][c] % p),
                None,
            )
            if bad is None:
                break
            row_b, row_t = a[bad], a[t]
            for c in range(t, cols):
                row_t[c] += row_b[c]
            pos = (t, t)
        divisors.append(abs(a[t][t]))
    return SmithDecomposition(tuple(divisors), det)


def _min_pivot_line(a: IntMatrix, t: int) -> tuple[int, int]:
    # smallest nonzero entry in row t or column t (past the pivot)
    best = (abs(a[t][t]), t, t)
    for r in range(t + 1, len(a)):
        x = a[r][t]
        if x and abs(x) < best[0]:
            best = (abs(x), r, t)
    for c in range(t + 1, len(a[t])):
        x = a[t][c]
        if x and abs(x) < best[0]:
            best = (abs(x), t, c)
    return best[1], best[2]


def special_matrix(kind: str, d: int) -> IntMatrix:
    """``"M"``: 0 on the diagonal and 1 elsewhere.  ``"Z"``: -2 and -1."""
    if kind in ("M", "Md"):
        on, off = 0, 1
    elif kind in ("Z", "Zd"):
        on, off = -2, -1
    else:
        raise ValueError(f"unknown special matrix {kind!r}")
    return [[on if a == b else off for b in range(d)] for a in range(d)]


def block_diagonal(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    p, q = len(A), len(B)
    out = [list(row) + [0] * q for row in A]
    out += [[0] * p + list(row) for row in B]
    return out


def reduce_glued(M: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Split the matrix of a polygon glued along (n, 1) into two blocks.

    Columns n+1.. each lose the sum of columns 1 and n; then rows n+1.. each
    lose the sum of (the new) rows 1 and n.  For a glued path-count matrix
    this leaves diag(M', Z_{d-2}) and changes neither determinant nor
    elementary divisors.
    """
    a = _copy(M)
    size = len(a)
    for row in a:
        s = row[0] + row[n - 1]
        for c in range(n, size):
            row[c] -= s
    for r in range(n, size):
        for c in range(size):
            a[r][c] -= a[0][c] + a[n - 1][c]
    return a


@dataclass(frozen=True)
class DivisorReport:
    passed: bool
    expected_divisors: tuple[int, ...]
    divisors: tuple[int, ...]
    expected_determinant: int
    determinant: int


def expected_invariants(n: int, d: int, m: int) -> tuple[tuple[int, ...], int]:
    divisors = (1,) * (n - m - 1) + (d - 1,) * (m + 1)
    return divisors, (-1) ** (n - 1) * (d - 1) ** (m + 1)


def verify_divisor_theorem(T: DAngulation, M=None) -> DivisorReport:
    """Compare the determinant and elementary divisors of M_T with the closed form."""
    from .matrix import matrix_fast

    M = M if M is not None else matrix_fast(T)
    snf = smith_normal_form(M.entries)
    exp_div, exp_det = expected_invariants(T.n, T.d, T.m)
    return DivisorReport(
        passed=snf.divisors == exp_div and snf.determinant == exp_det,
        expected_divisors=exp_div,
        divisors=snf.divisors,
        expected_determinant=exp_det,
        determinant=snf.determinant,
    )


def format_divisors(divisors: Sequence[int]) -> str:
    """Collapse a divisor list into ``value^multiplicity`` groups."""
    groups: list[list[int]] = []
    for x in divisors:
        if groups and groups[-1][0] == x:
            groups[-1][1] += 1
        else:
            groups.append([x, 1])
    return " ".join(f"{x}^{k}" for x, k in groups)
