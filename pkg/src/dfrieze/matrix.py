"""The symmetric path-count matrix of a d-angulation.

Two independent constructions are provided: ``matrix_fast`` propagates
values outward over the dual tree, one source vertex at a time, and
``matrix_glued`` peels boundary faces off and rebuilds the matrix with the
block formula of ``glue_matrix``.  Entries are Python ints throughout;
they grow exponentially with the number of faces.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .polygon import DAngulation, boundary_faces, cut_boundary_face, reduce_label


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PathMatrix:
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> PathMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> int:
        """Entry m_{i,j}, 1-based, with both indices reduced mod n."""
        n = self.n
        return self.entries[(i - 1) % n][(j - 1) % n]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.entries[a][b] == self.entries[b][a] for a in range(n) for b in range(a))

    def permuted(self, relabel) -> PathMatrix:
        """Matrix of the relabelled polygon: new(relabel(a), relabel(b)) = old(a, b)."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for a in range(1, n + 1):
            ra = relabel(a)
            for b in range(1, n + 1):
                out[ra - 1][relabel(b) - 1] = self.entries[a - 1][b - 1]
        return PathMatrix.from_rows(out)


def special_path_matrix(d: int) -> PathMatrix:
    """Matrix of a single d-gon: 0 on the diagonal, 1 elsewhere."""
    return PathMatrix(tuple(tuple(int(a != b) for b in range(d)) for a in range(d)))


def _fill_row(T: DAngulation, i: int) -> list[int]:
    vals: list[int | None] = [None] * (T.n + 1)
    vals[i] = 0
    seeds = T.incident_faces[i]
    for fid in seeds:
        for v in T.faces[fid].vertices:
            if v != i:
                vals[v] = 1
    visited = set(seeds)
    queue = deque(seeds)
    adjacency = T.dual_adjacency
    while queue:
        fid = queue.popleft()
        for gid, (k, l) in adjacency[fid]:
            if gid in visited:
                continue
            visited.add(gid)
            queue.append(gid)
            s = vals[k] + vals[l]
            for v in T.faces[gid].vertices:
                if v != k and v != l:
                    vals[v] = s
    return vals[1:]


def matrix_fast(T: DAngulation) -> PathMatrix:
    """Path-count matrix by breadth-first propagation over the dual tree.

    For source i, every vertex sharing a face with i gets 1; each further
    face, entered across a diagonal (k, l), gives its remaining vertices
    the value m_{i,k} + m_{i,l}.
    """
    return PathMatrix(tuple(tuple(_fill_row(T, i)) for i in range(1, T.n + 1)))


def glue_matrix(Mprime: PathMatrix, d: int) -> PathMatrix:
    """Matrix after gluing a d-gon onto the side (n, 1) of a d-angulated P_n.

    The new vertices are n+1..n+d-2.  Row i of the top-right block is
    constant with value m'_{i,1} + m'_{i,n}; the bottom-right block is the
    single-gon pattern of size d-2.
    """
    n = Mprime.n
    if d < 3 or any(len(row) != n for row in Mprime.entries):
        raise DimensionMismatch("expected a square matrix and d >= 3")
    if n < d or (n - d) % (d - 2):
        raise DimensionMismatch(f"{n}x{n} is not the size of a {d}-angulation matrix")
    r = [Mprime(i, 1) + Mprime(i, n) for i in range(1, n + 1)]
    size = n + d - 2
    out = []
    for a in range(size):
        if a < n:
            out.append(Mprime.entries[a] + (r[a],) * (d - 2))
        else:
            out.append(tuple(r) + tuple(int(a != b) for b in range(n, size)))
    return PathMatrix(tuple(out))


def _arc_start(T: DAngulation, vertices: tuple[int, ...]) -> int:
    # a boundary face is an arc s, s+1, ..., s+d-1 of the boundary
    vs = set(vertices)
    for v in vertices:
        if reduce_label(v - 1, T.n) not in vs:
            return v
    raise AssertionError("face is the whole polygon")


def matrix_glued(T: DAngulation) -> PathMatrix:
    """Path-count matrix by repeatedly cutting a boundary face and regluing.

    Each step rotates the labels so that the cut face is {1, n', ..., N}
    with N = n' + d - 2, which is the position ``glue_matrix`` expects.
    """
    if T.m == 0:
        return special_path_matrix(T.d)
    N, d = T.n, T.d
    face = boundary_faces(T)[0]
    shift = (N - d + 2) - _arc_start(T, face.vertices)
    rotated = T.rotate(shift)
    inner = cut_boundary_face(rotated, [reduce_label(v + shift, N) for v in face.vertices])
    glued = glue_matrix(matrix_glued(inner), d)
    return glued.permuted(lambda v: reduce_label(v - shift, N))


def quiddity_row(T: DAngulation, M: PathMatrix | None = None) -> list[int]:
    """Entries m_{i-1,i+1} for i = 1..n: the first non-trivial frieze row."""
    M = M if M is not None else matrix_fast(T)
    return [M(i - 1, i + 1) for i in range(1, T.n + 1)]


def format_matrix(M: PathMatrix) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in M.entries)


def parse_matrix(text: str) -> PathMatrix:
    rows = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    if any(len(row) != len(rows) for row in rows):
        raise DimensionMismatch("matrix text is not square")
    return PathMatrix.from_rows(rows)


def matrix_to_json(T: DAngulation, M: PathMatrix) -> str:
    doc = {
        "n": T.n,
        "d": T.d,
        "diagonals": [list(t) for t in T.diagonals],
        "entries": [x for row in M.entries for x in row],
    }
    return json.dumps(doc, indent=2) + "\n"


def matrix_from_json(text: str) -> tuple[int, int, list[tuple[int, int]], PathMatrix]:
    doc = json.loads(text)
    n = doc["n"]
    flat = doc["entries"]
    if len(flat) != n * n:
        raise DimensionMismatch(f"expected {n * n} entries, got {len(flat)}")
    M = PathMatrix.from_rows([flat[k * n:(k + 1) * n] for k in range(n)])
    return n, doc["d"], [tuple(t) for t in doc["diagonals"]], M
