"""Brute-force enumeration of d-paths.

A d-path from i to j picks, at each vertex strictly between i and j, one
face incident to that vertex, using no face more than d-2 times.  This is
the slow ground truth against which the fast matrix construction is
checked; it does not use symmetry or any recursion on the dissection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import PathMatrix
from .polygon import DAngulation, reduce_label


@dataclass(frozen=True)
class DPath:
    start: int
    end: int
    gons: tuple[int, ...]
    direction: str = "ccw"


def _between(T: DAngulation, i: int, j: int, direction: str) -> list[int]:
    n = T.n
    if direction == "ccw":
        steps = (j - i) % n
        return [reduce_label(i + k, n) for k in range(1, steps)]
    if direction == "cw":
        steps = (i - j) % n
        return [reduce_label(i - k, n) for k in range(1, steps)]
    raise ValueError(f"direction must be 'ccw' or 'cw', not {direction!r}")


def _search(T: DAngulation, i: int, j: int, direction: str, collect: list | None) -> int:
    if reduce_label(i, T.n) == reduce_label(j, T.n):
        return 0
    walk = _between(T, i, j, direction)
    cap = T.d - 2
    used = [0] * len(T.faces)
    chosen: list[int] = []
    choices = [T.incident_faces[v] for v in walk]

    def dfs(k):
        if k == len(walk):
            if collect is not None:
                collect.append(tuple(chosen))
            return 1
        total = 0
        for fid in choices[k]:
            if used[fid] < cap:
                used[fid] += 1
                chosen.append(fid)
                total += dfs(k + 1)
                chosen.pop()
                used[fid] -= 1
        return total

    return dfs(0)


def enumerate_dpaths(T: DAngulation, i: int, j: int, direction: str = "ccw") -> list[DPath]:
    """All d-paths from i to j, in lexicographic order of face ids.

    ``direction="cw"`` walks clockwise from i to j instead.  For i == j
    there is no path at all (a path never goes the full circle).
    """
    found: list[tuple[int, ...]] = []
    _search(T, i, j, direction, found)
    return [DPath(i, j, gons, direction) for gons in found]


def count_dpaths(T: DAngulation, i: int, j: int, direction: str = "ccw") -> int:
    return _search(T, i, j, direction, None)


def matrix_bruteforce(T: DAngulation, direction: str = "ccw") -> PathMatrix:
    n = T.n
    rows = tuple(
        tuple(count_dpaths(T, i, j, direction) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return PathMatrix(rows)
