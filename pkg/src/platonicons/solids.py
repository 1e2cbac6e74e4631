"""Canonical geometry and symmetry data for the five Platonic solids.

All solids are normalized to unit circumradius with the centroid at the
origin, so every cone axis used downstream passes through the origin and
all published lengths are in circumradius units.

Canonical vertex order (documented, stable across runs):

* tetrahedron: (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), scaled by 1/sqrt(3)
* cube: sign patterns of (x,y,z) in the order produced by
  itertools.product((+1,-1), repeat=3), scaled by 1/sqrt(3)
* octahedron: (1,0,0), (-1,0,0), (0,1,0), (0,-1,0), (0,0,1), (0,0,-1)
* icosahedron: (0,±1,±p), (±1,±p,0), (±p,0,±1) with p the golden ratio,
  signs in (+,+), (+,-), (-,+), (-,-) order, scaled to unit radius
* dodecahedron: the eight cube corners (±1,±1,±1) followed by
  (0,±1/p,±p), (±1/p,±p,0), (±p,0,±1/p), scaled by 1/sqrt(3)

Faces are recovered from the convex hull, oriented outward, and listed in
a canonical order (sorted by their sorted vertex tuple); each face cycle
starts at its smallest vertex id.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.spatial import ConvexHull

SOLID_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

DUAL_NAME = {
    "tetrahedron": "tetrahedron",
    "cube": "octahedron",
    "octahedron": "cube",
    "dodecahedron": "icosahedron",
    "icosahedron": "dodecahedron",
}

# (V, E, F) per solid, used as construction-time sanity checks.
COUNTS = {
    "tetrahedron": (4, 6, 4),
    "cube": (8, 12, 6),
    "octahedron": (6, 12, 8),
    "dodecahedron": (20, 30, 12),
    "icosahedron": (12, 30, 20),
}

# Proper (rotation) group orders; full groups are twice these.
PROPER_GROUP_ORDER = {
    "tetrahedron": 12,
    "cube": 24,
    "octahedron": 24,
    "dodecahedron": 60,
    "icosahedron": 60,
}


def _raw_vertices(name: str) -> np.ndarray:
    p = (1.0 + math.sqrt(5.0)) / 2.0
    if name == "tetrahedron":
        v = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    elif name == "cube":
        v = list(itertools.product((1.0, -1.0), repeat=3))
    elif name == "octahedron":
        v = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    elif name == "icosahedron":
        signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        v = [(0, s * 1.0, t * p) for s, t in signs]
        v += [(s * 1.0, t * p, 0) for s, t in signs]
        v += [(s * p, 0, t * 1.0) for s, t in signs]
    elif name == "dodecahedron":
        v = list(itertools.product((1.0, -1.0), repeat=3))
        signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        v += [(0, s / p, t * p) for s, t in signs]
        v += [(s / p, t * p, 0) for s, t in signs]
        v += [(s * p, 0, t / p) for s, t in signs]
    else:
        raise ValueError(f"unknown solid {name!r}; valid names: {', '.join(SOLID_NAMES)}")
    arr = np.asarray(v, dtype=np.float64)
    return arr / np.linalg.norm(arr, axis=1)[:, None]


def _hull_faces(vertices: np.ndarray) -> list[tuple[int, ...]]:
    """Recover planar faces by merging coplanar hull simplices."""
    hull = ConvexHull(vertices)
    groups: dict[tuple[int, ...], set[int]] = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 9))
        groups.setdefault(key, set()).update(int(i) for i in simplex)
    faces = []
    for ids in groups.values():
        ids = sorted(ids)
        pts = vertices[ids]
        center = pts.mean(axis=0)
        normal = center / np.linalg.norm(center)  # centroid at origin, normal points outward
        e1 = pts[0] - center
        e1 = e1 - np.dot(e1, normal) * normal
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        ang = np.arctan2((pts - center) @ e2, (pts - center) @ e1)
        cycle = [ids[k] for k in np.argsort(ang)]
        # rotate so the smallest vertex id leads, preserving (outward CCW) orientation
        k = cycle.index(min(cycle))
        faces.append(tuple(cycle[k:] + cycle[:k]))
    faces.sort(key=lambda c: tuple(sorted(c)))
    return faces


@dataclass(frozen=True)
class SymmetryOp:
    """A symmetry of a solid stored as exact permutations plus a parity flag."""

    vertex_perm: tuple[int, ...]
    is_proper: bool
    face_perm: tuple[int, ...]
    edge_perm: tuple[int, ...]

    def compose(self, other: "SymmetryOp") -> "SymmetryOp":
        """self after other (apply other first)."""
        vp = tuple(self.vertex_perm[i] for i in other.vertex_perm)
        fp = tuple(self.face_perm[i] for i in other.face_perm)
        ep = tuple(self.edge_perm[i] for i in other.edge_perm)
        return SymmetryOp(vp, self.is_proper == other.is_proper, fp, ep)


@dataclass(frozen=True)
class PlatonicSolid:
    name: str
    vertices: np.ndarray  # (V, 3) unit circumradius, read-only
    faces: tuple[tuple[int, ...], ...]  # outward-oriented vertex cycles
    edges: tuple[tuple[int, int], ...]  # sorted vertex pairs, lexicographic
    face_adjacency: tuple[tuple[int, int], ...]  # per edge, the two incident faces
    dual_name: str
    dihedral: float
    dual_dihedral: float

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def centroid(self) -> np.ndarray:
        return np.zeros(3)

    @property
    def edge_length(self) -> float:
        i, j = self.edges[0]
        return float(np.linalg.norm(self.vertices[i] - self.vertices[j]))

    def edge_index(self, a: int, b: int) -> int:
        return self._edge_lookup[(a, b) if a < b else (b, a)]

    @property
    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        d = self.__dict__.get("_edge_lookup_cache")
        if d is None:
            d = {e: k for k, e in enumerate(self.edges)}
            self.__dict__["_edge_lookup_cache"] = d
        return d

    def vertex_neighbors(self, v: int) -> tuple[int, ...]:
        nbrs = sorted({b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v})
        return tuple(nbrs)

    def faces_of_edge(self, a: int, b: int) -> tuple[int, int]:
        return self.face_adjacency[self.edge_index(a, b)]

    def face_normal(self, f: int) -> np.ndarray:
        c = self.vertices[list(self.faces[f])].mean(axis=0)
        return c / np.linalg.norm(c)

    def face_center(self, f: int) -> np.ndarray:
        return self.vertices[list(self.faces[f])].mean(axis=0)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": [[float(x) for x in v] for v in self.vertices],
            "faces": [list(f) for f in self.faces],
            "edges": [list(e) for e in self.edges],
            "face_adjacency": [list(p) for p in self.face_adjacency],
            "dual_name": self.dual_name,
            "dihedral": self.dihedral,
            "dual_dihedral": self.dual_dihedral,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _dihedral_angle(vertices: np.ndarray, faces, edges, adjacency) -> float:
    (a, b), (f1, f2) = edges[0], adjacency[0]

    def normal(face):
        pts = vertices[list(face)]
        c = pts.mean(axis=0)
        return c / np.linalg.norm(c)

    n1, n2 = normal(faces[f1]), normal(faces[f2])
    return math.pi - math.acos(float(np.clip(np.dot(n1, n2), -1.0, 1.0)))


@lru_cache(maxsize=None)
def build_solid(name: str) -> PlatonicSolid:
    """Build the canonical unit-circumradius solid, checking its invariants."""
    if name not in SOLID_NAMES:
        raise ValueError(f"unknown solid {name!r}; valid names: {', '.join(SOLID_NAMES)}")
    vertices = _raw_vertices(name)
    faces = _hull_faces(vertices)

    edge_set = set()
    for cyc in faces:
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            edge_set.add((a, b) if a < b else (b, a))
    edges = tuple(sorted(edge_set))

    adjacency = []
    for a, b in edges:
        inc = [fi for fi, cyc in enumerate(faces) if a in cyc and b in cyc]
        if len(inc) != 2:
            raise AssertionError(f"edge ({a},{b}) of {name} not shared by exactly 2 faces")
        adjacency.append((inc[0], inc[1]))
    adjacency = tuple(adjacency)

    nv, ne, nf = COUNTS[name]
    if (len(vertices), len(edges), len(faces)) != (nv, ne, nf):
        raise AssertionError(f"{name}: bad (V,E,F) = {(len(vertices), len(edges), len(faces))}")

    dihedral = _dihedral_angle(vertices, faces, edges, adjacency)
    dual = DUAL_NAME[name]
    if dual == name:
        dual_dihedral = dihedral
    else:
        dv = _raw_vertices(dual)
        dfaces = _hull_faces(dv)
        dedges = set()
        for cyc in dfaces:
            for i, a in enumerate(cyc):
                b = cyc[(i + 1) % len(cyc)]
                dedges.add((a, b) if a < b else (b, a))
        dedges = tuple(sorted(dedges))
        dadj = tuple(
            tuple(fi for fi, cyc in enumerate(dfaces) if a in cyc and b in cyc) for a, b in dedges
        )
        dual_dihedral = _dihedral_angle(dv, dfaces, dedges, dadj)

    vertices.setflags(write=False)
    return PlatonicSolid(
        name=name,
        vertices=vertices,
        faces=tuple(faces),
        edges=edges,
        face_adjacency=adjacency,
        dual_name=dual,
        dihedral=dihedral,
        dual_dihedral=dual_dihedral,
    )


def dual_dihedral(solid: PlatonicSolid) -> float:
    """Dihedral angle of the dual solid; the cone apex angle used downstream."""
    return solid.dual_dihedral


def _orthonormal_frame(v: np.ndarray, n: np.ndarray) -> np.ndarray:
    a = v / np.linalg.norm(v)
    b = n - np.dot(n, a) * a
    b /= np.linalg.norm(b)
    return np.column_stack([a, b, np.cross(a, b)])


def _perm_of_map(vertices: np.ndarray, R: np.ndarray) -> tuple[int, ...] | None:
    imgs = vertices @ R.T
    perm = []
    for img in imgs:
        d = np.linalg.norm(vertices - img, axis=1)
        j = int(np.argmin(d))
        if d[j] > 1e-9:
            return None
        perm.append(j)
    if len(set(perm)) != len(perm):
        return None
    return tuple(perm)


@lru_cache(maxsize=None)
def _group_cached(name: str) -> tuple[SymmetryOp, ...]:
    solid = build_solid(name)
    vertices = solid.vertices
    v0 = 0
    n0 = solid.vertex_neighbors(v0)[0]
    frame0 = _orthonormal_frame(vertices[v0], vertices[n0])

    face_key = {tuple(sorted(f)): i for i, f in enumerate(solid.faces)}
    edge_key = {e: i for i, e in enumerate(solid.edges)}

    ops: dict[tuple[int, ...], SymmetryOp] = {}
    for w in range(len(vertices)):
        for m in solid.vertex_neighbors(w):
            frame = _orthonormal_frame(vertices[w], vertices[m])
            for sign in (1.0, -1.0):
                fr = frame.copy()
                fr[:, 2] *= sign
                R = fr @ frame0.T
                perm = _perm_of_map(vertices, R)
                if perm is None or perm in ops:
                    continue
                fp = tuple(
                    face_key[tuple(sorted(perm[v] for v in f))] for f in solid.faces
                )
                ep = tuple(
                    edge_key[tuple(sorted((perm[a], perm[b])))] for a, b in solid.edges
                )
                ops[perm] = SymmetryOp(perm, sign > 0, fp, ep)

    expected = PROPER_GROUP_ORDER[name]
    proper = sum(1 for op in ops.values() if op.is_proper)
    if proper != expected or len(ops) != 2 * expected:
        raise AssertionError(
            f"{name}: found {proper} rotations / {len(ops)} total, expected {expected}/{2 * expected}"
        )
    return tuple(sorted(ops.values(), key=lambda op: (not op.is_proper, op.vertex_perm)))


def symmetry_group(solid: PlatonicSolid, proper_only: bool = False) -> tuple[SymmetryOp, ...]:
    """All symmetries of the solid as vertex permutations (rotations first)."""
    ops = _group_cached(solid.name)
    if proper_only:
        return tuple(op for op in ops if op.is_proper)
    return ops


def op_matrix(solid: PlatonicSolid, op: SymmetryOp) -> np.ndarray:
    """Orthogonal matrix realizing a symmetry op (derived on demand)."""
    V = solid.vertices
    W = V[list(op.vertex_perm)]
    R, *_ = np.linalg.lstsq(V, W, rcond=None)
    return R.T


def dump_solid_tables(path: str) -> None:
    """Write all five solid tables to a JSON file for inspection."""
    data = {name: build_solid(name).to_dict() for name in SOLID_NAMES}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
