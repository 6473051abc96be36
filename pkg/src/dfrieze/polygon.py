"""d-angulations of the labelled convex n-gon.

Vertices are labelled 1..n counterclockwise.  A d-angulation is stored as
its sorted diagonal list together with the faces obtained by recursively
splitting the vertex cycle along diagonals.  Faces are listed with their
vertices in increasing order (which, starting from the smallest label, is
counterclockwise order) and the face list is sorted lexicographically, so
face ids are stable across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator


class DAngulationError(ValueError):
    """Base class for invalid d-angulation input."""


class InvalidSize(DAngulationError):
    pass


class CrossingDiagonals(DAngulationError):
    pass


class NotDAngulation(DAngulationError):
    pass


class NotBoundaryFace(DAngulationError):
    pass


class CannotCut(DAngulationError):
    pass


class ParseError(DAngulationError):
    pass


def reduce_label(x: int, n: int) -> int:
    """Reduce an arbitrary integer into the label range 1..n."""
    return (x - 1) % n + 1


def diagonal_count(n: int, d: int) -> int:
    """Return m with n = d + m(d-2), raising InvalidSize if there is none."""
    if d < 3:
        raise InvalidSize(f"face size d={d} must be at least 3")
    if n < 3:
        raise InvalidSize(f"polygon size n={n} must be at least 3")
    if n < d or (n - d) % (d - 2):
        raise InvalidSize(f"n={n} is not of the form {d} + m*{d - 2}")
    return (n - d) // (d - 2)


def fuss_catalan(m: int, d: int) -> int:
    """Number of d-angulations of a polygon with m diagonals."""
    return comb((d - 1) * (m + 1), m) // (m + 1)


def crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """True if the chords a and b (sorted pairs) cross in the interior."""
    (p, q), (r, s) = sorted((a, b))
    return p < r < q < s


@dataclass(frozen=True)
class Face:
    id: int
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def edges(self) -> list[tuple[int, int]]:
        """Sides of the face as sorted vertex pairs, in cyclic order."""
        vs = self.vertices
        return [tuple(sorted((vs[k], vs[(k + 1) % len(vs)]))) for k in range(len(vs))]


@dataclass(frozen=True)
class DAngulation:
    n: int
    d: int
    m: int
    diagonals: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]
    # parent_labels[k - 1] is the label vertex k had before a cut, if any
    parent_labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    @cached_property
    def diagonal_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.diagonals)

    @cached_property
    def incident_faces(self) -> dict[int, tuple[int, ...]]:
        """Map vertex -> ids of the faces containing it, ascending."""
        inc = {v: [] for v in range(1, self.n + 1)}
        for f in self.faces:
            for v in f.vertices:
                inc[v].append(f.id)
        return {v: tuple(ids) for v, ids in inc.items()}

    @cached_property
    def diagonal_faces(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map each diagonal to the ids of the two faces it separates."""
        sides = {t: [] for t in self.diagonals}
        for f in self.faces:
            for e in f.edges():
                if e in sides:
                    sides[e].append(f.id)
        return {t: tuple(ids) for t, ids in sides.items()}

    @cached_property
    def dual_adjacency(self) -> dict[int, list[tuple[int, tuple[int, int]]]]:
        """Map face id -> [(neighbour id, shared diagonal)], neighbour ascending."""
        adj = {f.id: [] for f in self.faces}
        for t, (a, b) in self.diagonal_faces.items():
            adj[a].append((b, t))
            adj[b].append((a, t))
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def face_of_edge(self, i: int) -> Face:
        """The unique face containing the boundary edge (i, i+1)."""
        i = reduce_label(i, self.n)
        j = reduce_label(i + 1, self.n)
        for fid in self.incident_faces[i]:
            if j in self.faces[fid]:
                return self.faces[fid]
        raise AssertionError("boundary edge not covered by any face")

    def is_diagonal(self, u: int, v: int) -> bool:
        return tuple(sorted((u, v))) in self.diagonal_set

    def rotate(self, c: int) -> DAngulation:
        """Relabel every vertex k as k + c (mod n)."""
        n = self.n
        return build_dangulation(
            n, self.d, [(reduce_label(u + c, n), reduce_label(v + c, n)) for u, v in self.diagonals]
        )


def _split_faces(vertices: list[int], chords: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    # vertices: a sub-polygon in cyclic (increasing) order; chords lie inside it
    faces = []
    stack = [(vertices, chords)]
    while stack:
        vs, cs = stack.pop()
        if not cs:
            faces.append(tuple(sorted(vs)))
            continue
        (u, v), rest = cs[0], cs[1:]
        a, b = sorted((vs.index(u), vs.index(v)))
        inner = vs[a:b + 1]
        outer = vs[b:] + vs[:a + 1]
        inner_set = set(inner)
        ins, outs = [], []
        for c in rest:
            (ins if c[0] in inner_set and c[1] in inner_set else outs).append(c)
        stack.append((inner, ins))
        stack.append((outer, outs))
    return faces


def _check_dual_tree(faces: tuple[Face, ...], m: int) -> None:
    owner: dict[tuple[int, int], list[int]] = {}
    for f in faces:
        for e in f.edges():
            owner.setdefault(e, []).append(f.id)
    shared = [ids for ids in owner.values() if len(ids) == 2]
    if len(shared) != m:
        raise NotDAngulation("dual graph does not have m edges")
    adj = {f.id: [] for f in faces}
    for a, b in shared:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        for g in adj[queue.popleft()]:
            if g not in seen:
                seen.add(g)
                queue.append(g)
    if len(seen) != len(faces):
        raise NotDAngulation("dual graph is not connected")


def _make(n: int, d: int, diagonals: Iterable[tuple[int, int]], faces: Iterable[tuple[int, ...]],
          parent_labels=None) -> DAngulation:
    ordered = sorted(faces)
    return DAngulation(
        n=n, d=d, m=len(ordered) - 1,
        diagonals=tuple(sorted(diagonals)),
        faces=tuple(Face(k, vs) for k, vs in enumerate(ordered)),
        parent_labels=parent_labels,
    )


def build_dangulation(n: int, d: int, diagonals: Iterable[tuple[int, int]]) -> DAngulation:
    """Validate a diagonal set and return the resulting d-angulation of P_n.

    Raises InvalidSize if n is not d + m(d-2), CrossingDiagonals if two
    diagonals cross and NotDAngulation for any other defect (bad labels,
    boundary edges, repeats, wrong diagonal count, faces that are not d-gons).
    """
    m = diagonal_count(n, d)
    seen: set[tuple[int, int]] = set()
    for pair in diagonals:
        u, v = pair
        if not (1 <= u <= n and 1 <= v <= n):
            raise NotDAngulation(f"diagonal ({u},{v}) has a label outside 1..{n}")
        t = (min(u, v), max(u, v))
        if t[0] == t[1] or t[1] - t[0] == 1 or t == (1, n):
            raise NotDAngulation(f"({u},{v}) is not a diagonal of the {n}-gon")
        if t in seen:
            raise NotDAngulation(f"diagonal ({u},{v}) is listed twice")
        seen.add(t)
    diags = sorted(seen)
    for a, b in combinations(diags, 2):
        if crosses(a, b):
            raise CrossingDiagonals(f"diagonals {a} and {b} cross")
    if len(diags) != m:
        raise NotDAngulation(f"a {d}-angulation of the {n}-gon has {m} diagonals, got {len(diags)}")
    faces = _split_faces(list(range(1, n + 1)), diags)
    for f in faces:
        if len(f) != d:
            raise NotDAngulation(f"face {f} has {len(f)} vertices, expected {d}")
    T = _make(n, d, diags, faces)
    _check_dual_tree(T.faces, m)
    return T


def boundary_faces(T: DAngulation) -> list[Face]:
    """Faces with at most one side that is a diagonal of T."""
    return [f for f in T.faces if sum(e in T.diagonal_set for e in f.edges()) <= 1]


def _as_face(T: DAngulation, f) -> Face | None:
    key = tuple(sorted(f.vertices if isinstance(f, Face) else f))
    for g in T.faces:
        if g.vertices == key:
            return g
    return None


def cut_boundary_face(T: DAngulation, f) -> DAngulation:
    """Remove the boundary face f and relabel the rest as 1..n-d+2.

    The remaining vertices keep their counterclockwise order; the result's
    ``parent_labels`` records the original label of each new vertex.
    """
    if T.m == 0:
        raise CannotCut("a single d-gon has no diagonal to cut along")
    face = _as_face(T, f)
    cut = [e for e in face.edges() if e in T.diagonal_set] if face is not None else []
    if len(cut) != 1:
        raise NotBoundaryFace(f"{f} is not a boundary face of this d-angulation")
    t = cut[0]
    removed = set(face.vertices) - set(t)
    kept = [v for v in range(1, T.n + 1) if v not in removed]
    new = {v: k for k, v in enumerate(kept, start=1)}
    rest = build_dangulation(
        len(kept), T.d, [(new[u], new[v]) for u, v in T.diagonals if (u, v) != t]
    )
    return _make(rest.n, rest.d, rest.diagonals, (g.vertices for g in rest.faces),
                 parent_labels=tuple(kept))


def _dissections(vs: tuple[int, ...], d: int) -> list[tuple[list, list]]:
    # all d-angulations of the sub-polygon vs rooted at the side (vs[0], vs[-1])
    k = len(vs)
    if k == d:
        return [([], [vs])]
    step = d - 2
    results = []

    def choose(pos, picked):
        if len(picked) == d - 2:
            if (k - 1 - pos - 1) % step == 0:
                yield picked
            return
        for p in range(pos + 1, k - 1, step):
            yield from choose(p, picked + [p])

    for picked in choose(0, []):
        corners = [0] + picked + [k - 1]
        face = tuple(vs[p] for p in corners)
        parts = []
        chords = []
        for a, b in zip(corners, corners[1:]):
            if b - a > 1:
                chords.append((vs[a], vs[b]))
                parts.append(_dissections(vs[a:b + 1], d))
        for combo in product(*parts):
            diags = list(chords)
            faces = [face]
            for sub_diags, sub_faces in combo:
                diags.extend(sub_diags)
                faces.extend(sub_faces)
            results.append((diags, faces))
    return results


def enumerate_dangulations(n: int, d: int) -> Iterator[DAngulation]:
    """Yield every d-angulation of P_n once, ordered by sorted diagonal list."""
    diagonal_count(n, d)
    raw = [(tuple(sorted(diags)), faces) for diags, faces in _dissections(tuple(range(1, n + 1)), d)]
    raw.sort(key=lambda item: item[0])
    for diags, faces in raw:
        yield _make(n, d, diags, (tuple(sorted(f)) for f in faces))


def parse_dangulations(text: str) -> list[DAngulation]:
    """Parse blank-line separated blocks of the ``n d`` / ``u v`` text format."""
    blocks, current = [], []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        if not line.strip():
            if current:
                blocks.append(current)
                current = []
            continue
        current.append(line)
    if current:
        blocks.append(current)
    return [_parse_block(b) for b in blocks]


def parse_dangulation(text: str) -> DAngulation:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input")
    return _parse_block(lines)


def _ints(line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line.strip()!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line.strip()!r}") from None


def _parse_block(lines: list[str]) -> DAngulation:
    n, d = _ints(lines[0])
    diagonals = [_ints(ln) for ln in lines[1:]]
    # build_dangulation rejects repeats, boundary edges and bad labels
    return build_dangulation(n, d, diagonals)


def format_dangulation(T: DAngulation) -> str:
    return "\n".join([f"{T.n} {T.d}"] + [f"{u} {v}" for u, v in T.diagonals]) + "\n"
