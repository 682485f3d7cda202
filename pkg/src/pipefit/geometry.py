"""Platonic solids: canonical coordinates, metrics and vertex figures.

All coordinates are scaled to unit edge length and centred on the origin.
Angles are radians throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InfeasibleVertexError

KINDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def _readonly(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


def _angle(a: np.ndarray, b: np.ndarray) -> float:
    # atan2 form stays accurate near 0 and pi where arccos does not
    return math.atan2(float(np.linalg.norm(np.cross(a, b))), float(np.dot(a, b)))


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """Vertex coordinates plus edge and face incidence.

    Faces are vertex cycles ordered counter-clockwise when viewed from
    outside, so the right-hand normal points outward.
    """

    kind: str
    vertices: np.ndarray
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def degree(self) -> int:
        """Edges per vertex (uniform for Platonic solids)."""
        return 2 * self.num_edges // self.num_vertices

    @property
    def face_size(self) -> int:
        return len(self.faces[0])

    @property
    def edge_length(self) -> float:
        i, j = self.edges[0]
        return float(np.linalg.norm(self.vertices[i] - self.vertices[j]))

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return out

    def face_normal(self, f: int) -> np.ndarray:
        pts = self.vertices[list(self.faces[f])]
        n = np.cross(pts[1] - pts[0], pts[2] - pts[0])
        return n / np.linalg.norm(n)

    def face_centroid(self, f: int) -> np.ndarray:
        return self.vertices[list(self.faces[f])].mean(axis=0)

    def scaled(self, s: float) -> Polyhedron:
        return Polyhedron(self.kind, _readonly(self.vertices * s), self.edges, self.faces)


@dataclass(frozen=True)
class PolyhedronMetrics:
    """Size metrics of a solid, in the solid's length unit."""

    inradius: float
    circumradius: float
    face_inradius: float
    face_circumradius: float
    dihedral_angle: float
    second_row_height: float
    resting_height: float

    def scaled(self, s: float) -> PolyhedronMetrics:
        return PolyhedronMetrics(
            inradius=self.inradius * s,
            circumradius=self.circumradius * s,
            face_inradius=self.face_inradius * s,
            face_circumradius=self.face_circumradius * s,
            dihedral_angle=self.dihedral_angle,
            second_row_height=self.second_row_height * s,
            resting_height=self.resting_height * s,
        )


@dataclass(frozen=True)
class VertexFigure:
    """Local pattern at a vertex.

    Attributes:
        q: number of edges meeting at the vertex.
        gamma: face interior angle between adjacent edges.
        beta: angle between each edge and the vertex symmetry axis.
    """

    q: int
    gamma: float
    beta: float

    @classmethod
    def regular(cls, q: int, gamma: float) -> VertexFigure:
        return cls(q, gamma, edge_axis_angle(q, gamma))


@dataclass(frozen=True)
class RigidTransform:
    rotation: np.ndarray
    translation: np.ndarray

    def apply(self, points) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.rotation.T + self.translation

    @property
    def matrix(self) -> np.ndarray:
        m = np.eye(4)
        m[:3, :3] = self.rotation
        m[:3, 3] = self.translation
        return m


def _raw_coordinates(kind: str) -> tuple[np.ndarray, float]:
    """Published coordinate sets and their native edge length."""
    if kind == "tetrahedron":
        pts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        return np.array(pts, dtype=float), 2.0 * math.sqrt(2.0)
    if kind == "cube":
        pts = list(itertools.product((-1, 1), repeat=3))
        return np.array(pts, dtype=float), 2.0
    if kind == "octahedron":
        pts = []
        for axis in range(3):
            for s in (1, -1):
                p = [0, 0, 0]
                p[axis] = s
                pts.append(p)
        return np.array(pts, dtype=float), math.sqrt(2.0)
    if kind == "icosahedron":
        pts = []
        for a, b in itertools.product((1, -1), repeat=2):
            pts += [(0, a, b * PHI), (a, b * PHI, 0), (b * PHI, 0, a)]
        return np.array(pts, dtype=float), 2.0
    if kind == "dodecahedron":
        pts = [p for p in itertools.product((-1, 1), repeat=3)]
        for a, b in itertools.product((1, -1), repeat=2):
            pts += [(0, a / PHI, b * PHI), (a / PHI, b * PHI, 0), (b * PHI, 0, a / PHI)]
        return np.array(pts, dtype=float), 2.0 / PHI
    raise ValueError(f"unknown solid {kind!r}; expected one of {', '.join(KINDS)}")


def _find_faces(verts: np.ndarray) -> list[tuple[int, ...]]:
    # Supporting planes through vertex triples; origin is interior.
    n_v = len(verts)
    seen = set()
    faces = []
    for i, j, k in itertools.combinations(range(n_v), 3):
        n = np.cross(verts[j] - verts[i], verts[k] - verts[i])
        norm = np.linalg.norm(n)
        if norm < 1e-6:
            continue
        n = n / norm
        if np.dot(n, verts[i]) < 0:
            n = -n
        offsets = (verts - verts[i]) @ n
        if offsets.max() > 1e-7:
            continue
        members = frozenset(np.flatnonzero(np.abs(offsets) <= 1e-7).tolist())
        if members in seen:
            continue
        seen.add(members)
        idx = sorted(members)
        c = verts[idx].mean(axis=0)
        u = verts[idx[0]] - c
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        ang = {m: math.atan2(float((verts[m] - c) @ w), float((verts[m] - c) @ u)) % (2 * math.pi)
               for m in idx}
        cycle = sorted(idx, key=lambda m: ang[m])
        start = cycle.index(min(cycle))
        faces.append(tuple(cycle[start:] + cycle[:start]))
    faces.sort()
    return faces


@lru_cache(maxsize=None)
def platonic_solid(kind: str) -> Polyhedron:
    """Unit-edge Platonic solid centred on the origin.

    Results are cached, so repeated calls return the same object.
    """
    raw, native_edge = _raw_coordinates(kind)
    verts = raw / native_edge
    edges = tuple(
        (i, j)
        for i, j in itertools.combinations(range(len(verts)), 2)
        if abs(np.linalg.norm(verts[i] - verts[j]) - 1.0) < 1e-9
    )
    faces = tuple(_find_faces(verts))
    return Polyhedron(kind, _readonly(verts), edges, faces)


def resting_orientation(p: Polyhedron, face: int = 0) -> RigidTransform:
    """Transform that sets ``face`` on the ground plane z = 0.

    The face centroid goes to the origin and the rest of the solid lies in
    z >= 0. The in-plane x axis points at the face's first vertex.
    """
    n = p.face_normal(face)
    c = p.face_centroid(face)
    z = -n
    x = p.vertices[p.faces[face][0]] - c
    x = x - (x @ z) * z
    x /= np.linalg.norm(x)
    y = np.cross(z, x)
    rot = np.vstack([x, y, z])
    return RigidTransform(_readonly(rot), _readonly(-rot @ c))


def polyhedron_metrics(p: Polyhedron) -> PolyhedronMetrics:
    """Measure a solid from its coordinates.

    The second-row height is the top of the side faces that share an edge
    with the face the solid rests on, i.e. the highest point of the lowest
    ring of openings.
    """
    verts = p.vertices
    centroid = verts.mean(axis=0)
    f0 = p.faces[0]
    n0 = p.face_normal(0)
    c0 = p.face_centroid(0)
    inradius = float(abs((c0 - centroid) @ n0))
    circumradius = float(np.linalg.norm(verts - centroid, axis=1).max())

    k = len(f0)
    mids = [(verts[f0[i]] + verts[f0[(i + 1) % k]]) / 2 for i in range(k)]
    face_inradius = float(np.linalg.norm(mids[0] - c0))
    face_circumradius = float(np.linalg.norm(verts[f0[0]] - c0))

    base_edges = {frozenset((f0[i], f0[(i + 1) % k])) for i in range(k)}
    adjacent = []
    for fi, face in enumerate(p.faces[1:], start=1):
        m = len(face)
        if any(frozenset((face[i], face[(i + 1) % m])) in base_edges for i in range(m)):
            adjacent.append(fi)
    dihedral = math.pi - _angle(n0, p.face_normal(adjacent[0]))

    heights = resting_orientation(p, 0).apply(verts)[:, 2]
    side_vertices = sorted({v for fi in adjacent for v in p.faces[fi]})
    second_row = float(heights[side_vertices].max())

    return PolyhedronMetrics(
        inradius=inradius,
        circumradius=circumradius,
        face_inradius=face_inradius,
        face_circumradius=face_circumradius,
        dihedral_angle=dihedral,
        second_row_height=second_row,
        resting_height=float(heights.max()),
    )


def height_rows(p: Polyhedron, face: int = 0) -> list[float]:
    """Distinct vertex heights, lowest first, with the solid resting on ``face``."""
    heights = np.sort(resting_orientation(p, face).apply(p.vertices)[:, 2])
    tol = 1e-6 * p.edge_length
    rows = [float(heights[0])]
    for h in heights[1:]:
        if h - rows[-1] > tol:
            rows.append(float(h))
    return rows


def vertex_figure(p: Polyhedron, v: int) -> VertexFigure:
    """Extract (q, gamma, beta) at vertex ``v`` from coordinates."""
    if not 0 <= v < p.num_vertices:
        raise IndexError(f"vertex {v} out of range for {p.kind}")
    origin = p.vertices[v]
    nbrs = p.neighbors(v)
    dirs = np.array([p.vertices[u] - origin for u in nbrs])
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    axis = dirs.sum(axis=0)
    axis /= np.linalg.norm(axis)
    beta = _angle(dirs[0], axis)

    face = next(f for f in p.faces if v in f)
    pos = face.index(v)
    a = p.vertices[face[pos - 1]] - origin
    b = p.vertices[face[(pos + 1) % len(face)]] - origin
    gamma = _angle(a, b)
    return VertexFigure(len(nbrs), gamma, beta)


def vertex_axis(p: Polyhedron, v: int) -> np.ndarray:
    """Unit symmetry axis at ``v``, pointing into the solid along the edges' mean."""
    origin = p.vertices[v]
    dirs = np.array([p.vertices[u] - origin for u in p.neighbors(v)])
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    axis = dirs.sum(axis=0)
    return axis / np.linalg.norm(axis)


def edge_axis_angle(q: int, gamma: float) -> float:
    """Angle between each edge and the symmetry axis of a regular vertex.

    Uses sin(beta) = sin(gamma/2) / sin(pi/q).

    Raises:
        InfeasibleVertexError: if q edges with face angle ``gamma`` cannot
            meet symmetrically (the ratio exceeds one).
    """
    if q < 3:
        raise InfeasibleVertexError(f"a vertex needs at least 3 edges, got {q}")
    if not 0.0 < gamma < math.pi:
        raise InfeasibleVertexError(f"face angle must lie in (0, 180) degrees, got {math.degrees(gamma):g}")
    ratio = math.sin(gamma / 2.0) / math.sin(math.pi / q)
    if ratio > 1.0 + 1e-12:
        raise InfeasibleVertexError(
            f"{q} edges at {math.degrees(gamma):g} degrees exceed a full turn; "
            "they cannot meet symmetrically"
        )
    return math.asin(min(ratio, 1.0))


def solid_vertex_figure(kind: str) -> VertexFigure:
    """Vertex figure shared by every vertex of a Platonic solid."""
    return vertex_figure(platonic_solid(kind), 0)
