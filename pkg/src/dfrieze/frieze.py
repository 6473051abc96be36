"""Frieze patterns built from the path-count matrix, and their 2x2 minors.

The pattern is indexed in diagonal coordinates: ``entry(i, j)`` for
i <= j <= i + n is m_{i,j} with labels reduced mod n.  Row k of the
pattern holds the entries entry(i, i + k); the glide reflection of the
pattern is entry(i, j) = entry(j, i + n), which is matrix symmetry.

Adjacent minors are indexed by boundary edges, written as the integer i
for the edge (i, i+1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .matrix import PathMatrix, matrix_fast
from .polygon import DAngulation, reduce_label


class SameEdge(ValueError):
    pass


class HingeCriterionViolation(AssertionError):
    """A minor disagrees with the existence of a hinge sequence."""


@dataclass(frozen=True)
class FriezePattern:
    matrix: PathMatrix
    dangulation: DAngulation | None = None

    @classmethod
    def of(cls, T: DAngulation) -> FriezePattern:
        return cls(matrix_fast(T), T)

    @property
    def n(self) -> int:
        return self.matrix.n

    def entry(self, i: int, j: int) -> int:
        if not i <= j <= i + self.n:
            raise IndexError(f"entry({i}, {j}) lies outside the strip")
        return self.matrix(i, j)

    def row(self, k: int, start: int, count: int) -> list[int]:
        return [self.entry(i, i + k) for i in range(start, start + count)]


@dataclass(frozen=True)
class HingeWitness:
    sequence: tuple[tuple[int, int], ...]
    gons: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.gons)


def _edge(i: int, n: int) -> tuple[int, int]:
    a, b = reduce_label(i, n), reduce_label(i + 1, n)
    return (min(a, b), max(a, b))


def minor(T: DAngulation, e: int, f: int, M: PathMatrix | None = None) -> int:
    """d(e, f) for boundary edges e = (i, i+1) and f = (j, j+1)."""
    M = M if M is not None else matrix_fast(T)
    i, j = e, f
    return M(i, j) * M(i + 1, j + 1) - M(i, j + 1) * M(i + 1, j)


def _dual_path(T: DAngulation, start: int, goal: int) -> list[int]:
    parent = {start: None}
    queue = deque([start])
    while queue:
        fid = queue.popleft()
        if fid == goal:
            break
        for gid, _ in T.dual_adjacency[fid]:
            if gid not in parent:
                parent[gid] = fid
                queue.append(gid)
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def hinge_sequence(T: DAngulation, e: int, f: int) -> HingeWitness | None:
    """Find e = z_0, ..., z_s = f through pairwise distinct faces, or None.

    Consecutive members must lie in a common face p_k and share a vertex.
    Since the faces are distinct and consecutive faces share a diagonal,
    the face sequence can only be the dual-tree path between the faces of
    e and f, and the z_k are the diagonals along it.
    """
    n = T.n
    if reduce_label(e, n) == reduce_label(f, n):
        raise SameEdge(f"e and f are both the edge {_edge(e, n)}")
    gons = _dual_path(T, T.face_of_edge(e).id, T.face_of_edge(f).id)
    seq = [_edge(e, n)]
    for a, b in zip(gons, gons[1:]):
        seq.append(next(t for g, t in T.dual_adjacency[a] if g == b))
    seq.append(_edge(f, n))
    for z, w in zip(seq, seq[1:]):
        if not set(z) & set(w):
            return None
    return HingeWitness(tuple(seq), tuple(gons))


def witness_problems(T: DAngulation, w: HingeWitness) -> list[str]:
    """Structural check of a witness; returns the violated conditions."""
    problems = []
    seq, gons = w.sequence, w.gons
    if len(seq) != len(gons) + 1:
        problems.append("length")
        return problems
    for z in seq[1:-1]:
        if not T.is_diagonal(*z):
            problems.append(f"{z} is not a diagonal")
    for k, fid in enumerate(gons):
        sides = T.faces[fid].edges()
        if seq[k] not in sides or seq[k + 1] not in sides:
            problems.append(f"(i) fails at step {k}")
        if not set(seq[k]) & set(seq[k + 1]):
            problems.append(f"(iii) fails at step {k}")
    if len(set(gons)) != len(gons):
        problems.append("(ii) faces repeat")
    return problems


def classify_minors(T: DAngulation, M: PathMatrix | None = None) -> list[list[int]]:
    """Table of d(e, f), e and f running over the boundary edges 1..n.

    Raises HingeCriterionViolation if some off-diagonal cell disagrees with
    the existence of a hinge sequence.
    """
    M = M if M is not None else matrix_fast(T)
    n = T.n
    table = [[minor(T, e, f, M) for f in range(1, n + 1)] for e in range(1, n + 1)]
    for e in range(1, n + 1):
        for f in range(1, n + 1):
            if e != f and (table[e - 1][f - 1] == 1) != (hinge_sequence(T, e, f) is not None):
                raise HingeCriterionViolation(f"d({e},{f}) = {table[e - 1][f - 1]}")
    return table


def minor_witnesses(T: DAngulation) -> dict[tuple[int, int], HingeWitness]:
    n = T.n
    out = {}
    for e in range(1, n + 1):
        for f in range(1, n + 1):
            if e != f:
                w = hinge_sequence(T, e, f)
                if w is not None:
                    out[(e, f)] = w
    return out


def render_frieze(T: DAngulation, columns: int, M: PathMatrix | None = None) -> str:
    """Text picture of rows 1..n-1 of the pattern, `columns` entries per row.

    entry(i, i + k) sits on line k at horizontal slot 2i + k, which gives
    the staggered diamond layout; each diamond of the picture is one
    adjacent 2x2 minor.
    """
    if columns < 1:
        raise ValueError("columns must be at least 1")
    M = M if M is not None else matrix_fast(T)
    pattern = FriezePattern(M, T)
    n = T.n
    lines = {k: pattern.row(k, 1, columns) for k in range(1, n)}
    width = max(len(str(x)) for row in lines.values() for x in row)
    out = []
    for k in range(1, n):
        slots = [" " * width] * (2 * columns + n)
        for idx, x in enumerate(lines[k]):
            slots[2 * idx + k - 1] = str(x).rjust(width)
        out.append(" ".join(slots).rstrip())
    return "\n".join(out) + "\n"
