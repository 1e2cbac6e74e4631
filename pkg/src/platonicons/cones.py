"""Cones, ridge conics, and face modules.

A module sits on one face: it is the volume common to 2 or 3 equal right
circular cones (apices at chosen face vertices, axes through the centroid,
half-angle = half the dual solid's dihedral) on the outward side of the
face plane.  Where two cone surfaces meet above the face they form a
conic-section crease, the ridge.  The exposed piece of each cone between
its two face edges is a patch; patches are the rolling contact units.

The global tolerance table for the whole package lives here.  All values
are relative to circumradius 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .solids import PlatonicSolid, build_solid

TOL = {
    "exact": 1e-12,  # table-level identities
    "geometry": 1e-9,  # surface membership, cone law, circumscription
    "tangent": 1e-8,  # tangent-plane coincidence, support tests
    "triple_point": 1e-7,  # pentagon ridge concurrency
    "pose": 1e-6,  # rolling pose closure and height
    "chord": 1e-10,  # ridge arc-length sampling chord error
}


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class Cone:
    """Right circular cone with apex at a solid vertex, axis toward the centroid."""

    apex_vertex: int
    apex: np.ndarray
    axis: np.ndarray  # unit, apex -> centroid
    half_angle: float

    @property
    def cos_a(self) -> float:
        return math.cos(self.half_angle)

    @property
    def sin_a(self) -> float:
        return math.sin(self.half_angle)

    def solid_residual(self, x: np.ndarray) -> float:
        """Positive inside the (one-sided) solid cone, ~0 on the surface.

        Scaled so that near the surface it approximates Euclidean distance.
        """
        w = x - self.apex
        return (float(np.dot(w, self.axis)) - float(np.linalg.norm(w)) * self.cos_a) / self.sin_a

    def surface_normal(self, generator_dir: np.ndarray) -> np.ndarray:
        """Outward surface normal along a generator direction (unit)."""
        return (self.cos_a * generator_dir - self.axis) / self.sin_a

    def tangent_plane_distance_to_origin(self, generator_dir: np.ndarray) -> float:
        n = self.surface_normal(generator_dir)
        return abs(float(np.dot(self.apex, n)))


def cone_for_vertex(solid: PlatonicSolid, vertex_id: int) -> Cone:
    """The module cone at a vertex; every incident edge is a generator."""
    if not 0 <= vertex_id < solid.n_vertices:
        raise ValueError(f"vertex id {vertex_id} out of range for {solid.name}")
    apex = np.array(solid.vertices[vertex_id])
    return Cone(
        apex_vertex=vertex_id,
        apex=apex,
        axis=_unit(-apex),
        half_angle=solid.dual_dihedral / 2.0,
    )


def ray_cone_hit(cone: Cone, origin: np.ndarray, direction: np.ndarray) -> float:
    """Smallest positive ray parameter hitting the cone surface (forward sheet).

    Returns nan when the ray misses.  A root at s=0 (origin already on the
    surface, as for tangent cone pairs sharing a solid edge) is skipped.
    """
    w = origin - cone.apex
    ca2 = cone.cos_a * cone.cos_a
    da = float(np.dot(direction, cone.axis))
    wa = float(np.dot(w, cone.axis))
    A = da * da - ca2
    B = 2.0 * (wa * da - ca2 * float(np.dot(w, direction)))
    C = wa * wa - ca2 * float(np.dot(w, w))

    roots = []
    if abs(A) < 1e-13:
        if abs(B) > 1e-13:
            roots = [-C / B]
    else:
        disc = B * B - 4.0 * A * C
        if disc >= 0.0:
            q = -0.5 * (B + math.copysign(math.sqrt(disc), B if B != 0 else 1.0))
            roots = [q / A]
            if q != 0.0:
                roots.append(C / q)
    best = math.nan
    for s in roots:
        if s <= 1e-9:
            continue
        x = origin + s * np.asarray(direction)
        if np.dot(x - cone.apex, cone.axis) < -1e-12:
            continue  # shadow sheet
        if math.isnan(best) or s < best:
            best = s
    return best


@dataclass(frozen=True)
class RidgeConic:
    """Crease where two module cones intersect above the face.

    The curve lies in the perpendicular bisector plane of the two apices;
    its coefficients (A,B,C,D,E,F for A u^2 + B uv + C v^2 + D u + E v + F)
    are expressed in the orthonormal in-plane frame (e1 = in-face, e2 = face
    normal).  ``sampler(t)`` evaluates the arc at normalized arc length
    t in [0, 1]: the azimuth is looked up in an adaptively built length
    table, then the point is recomputed exactly on both cone surfaces by
    ray casting, so sampled points deviate from the true curve by far less
    than TOL["chord"].  Endpoints are snapped to the exact vertex/midpoint
    coordinates.
    """

    cone_a: int
    cone_b: int
    plane_point: np.ndarray
    plane_normal: np.ndarray
    frame_e1: np.ndarray
    frame_e2: np.ndarray
    coefficients: tuple[float, float, float, float, float, float]
    arc_start: np.ndarray
    arc_end: np.ndarray
    length: float
    _cast_apex: np.ndarray = field(repr=False)
    _cast_u: np.ndarray = field(repr=False)
    _cast_w: np.ndarray = field(repr=False)
    _cast_cone: Cone = field(repr=False)
    _target_cone: Cone = field(repr=False)
    _phis: np.ndarray = field(repr=False)  # azimuth nodes of the length table
    _cum: np.ndarray = field(repr=False)  # normalized cumulative arc length

    def _points_at_phi(self, phi: np.ndarray) -> np.ndarray:
        cone, tgt = self._cast_cone, self._target_cone
        g = (
            cone.cos_a * cone.axis[None, :]
            + cone.sin_a
            * (np.cos(phi)[:, None] * self._cast_u[None, :] + np.sin(phi)[:, None] * self._cast_w[None, :])
        )
        w0 = self._cast_apex - tgt.apex
        ca2 = tgt.cos_a * tgt.cos_a
        da = g @ tgt.axis
        wa = float(np.dot(w0, tgt.axis))
        A = da * da - ca2
        B = 2.0 * (wa * da - ca2 * (g @ w0))
        C = wa * wa - ca2 * float(np.dot(w0, w0))
        disc = np.maximum(B * B - 4.0 * A * C, 0.0)
        q = -0.5 * (B + np.copysign(np.sqrt(disc), np.where(B == 0.0, 1.0, B)))
        with np.errstate(divide="ignore", invalid="ignore"):
            r1 = np.where(np.abs(A) > 1e-13, q / np.where(A == 0.0, 1.0, A), np.inf)
            r2 = np.where(np.abs(q) > 1e-300, C / np.where(q == 0.0, 1.0, q), np.inf)

        def _valid(r):
            ok = r > 1e-9
            x = self._cast_apex[None, :] + np.where(ok, r, 0.0)[:, None] * g
            ok &= (x - tgt.apex) @ tgt.axis >= -1e-12  # forward sheet only
            return np.where(ok, r, np.inf)

        s = np.minimum(_valid(r1), _valid(r2))
        s = np.where(np.isfinite(s), s, 0.0)
        return self._cast_apex[None, :] + s[:, None] * g

    def sampler(self, t) -> np.ndarray:
        """Point(s) on the arc at normalized arc length t in [0, 1]."""
        t_arr = np.atleast_1d(np.clip(np.asarray(t, dtype=np.float64), 0.0, 1.0))
        phi = np.interp(t_arr, self._cum, self._phis)
        pts = self._points_at_phi(phi)
        pts[t_arr <= 0.0] = self.arc_start
        pts[t_arr >= 1.0] = self.arc_end
        if np.isscalar(t) or np.ndim(t) == 0:
            return pts[0]
        return pts


def _conic_coefficients(cone: Cone, c: np.ndarray, e1: np.ndarray, e2: np.ndarray):
    d = c - cone.apex
    ca2 = cone.cos_a**2
    pa = float(np.dot(d, cone.axis))
    qa = float(np.dot(e1, cone.axis))
    ra = float(np.dot(e2, cone.axis))
    return (
        qa * qa - ca2,
        2.0 * qa * ra,
        ra * ra - ca2,
        2.0 * pa * qa - 2.0 * ca2 * float(np.dot(d, e1)),
        2.0 * pa * ra - 2.0 * ca2 * float(np.dot(d, e2)),
        pa * pa - ca2 * float(np.dot(d, d)),
    )


def _azimuth_frame(cone: Cone, ref_dir: np.ndarray):
    """In-plane basis perpendicular to the axis, zero azimuth at ref_dir."""
    u = ref_dir - np.dot(ref_dir, cone.axis) * cone.axis
    u = _unit(u)
    return u, np.cross(cone.axis, u)


def generator_direction(cone: Cone, u: np.ndarray, w: np.ndarray, phi: float) -> np.ndarray:
    """Unit generator direction at azimuth phi in the (u, w) frame."""
    return cone.cos_a * cone.axis + cone.sin_a * (math.cos(phi) * u + math.sin(phi) * w)


def _signed_azimuth(cone: Cone, u: np.ndarray, w: np.ndarray, direction: np.ndarray) -> float:
    return math.atan2(float(np.dot(direction, w)), float(np.dot(direction, u)))


def _adaptive_arc(eval_fn, lo: float, hi: float, chord_tol: float, max_points: int = 300000):
    """Refine [lo, hi] until the midpoint-to-chord sag is below chord_tol."""
    params = [lo, hi]
    pts = [eval_fn(lo), eval_fn(hi)]
    i = 0
    while i < len(params) - 1 and len(params) < max_points:
        a, b = params[i], params[i + 1]
        mid = 0.5 * (a + b)
        pm = eval_fn(mid)
        sag = np.linalg.norm(pm - 0.5 * (pts[i] + pts[i + 1]))
        if sag > chord_tol and (b - a) > 1e-12:
            params.insert(i + 1, mid)
            pts.insert(i + 1, pm)
        else:
            i += 1
    return np.array(params), np.array(pts)


def ridge_conic(cone_a: Cone, cone_b: Cone, solid: PlatonicSolid, face_id: int) -> RidgeConic:
    """Construct the ridge between two module cones over a face.

    Arc endpoints by face type: triangle - third vertex and apex-edge
    midpoint; square - the two non-apex vertices; pentagon - a boundary
    point (common neighbor or opposite-edge midpoint) and the module's
    triple point.
    """
    face = solid.faces[face_id]
    a, b = cone_a.apex_vertex, cone_b.apex_vertex
    if a == b:
        raise ValueError("ridge requires two distinct apices")
    if a not in face or b not in face:
        raise ValueError(f"apices ({a},{b}) not both on face {face_id} of {solid.name}")

    c = 0.5 * (cone_a.apex + cone_b.apex)
    n_plane = _unit(cone_b.apex - cone_a.apex)
    normal_f = solid.face_normal(face_id)
    e2 = normal_f  # out-of-face direction lies in the bisector plane
    e1 = _unit(np.cross(e2, n_plane))
    coeffs = _conic_coefficients(cone_a, c, e1, e2)

    k = len(face)
    ia, ib = face.index(a), face.index(b)
    sep = min((ia - ib) % k, (ib - ia) % k)

    if k == 3:
        (third,) = [v for v in face if v not in (a, b)]
        start = np.array(solid.vertices[third])
        end = np.array(c)
    elif k == 4:
        others = [v for v in face if v not in (a, b)]
        start = np.array(solid.vertices[others[0]])
        end = np.array(solid.vertices[others[1]])
    elif k == 5:
        start, end = _pentagon_arc_endpoints(solid, face_id, cone_a, cone_b, sep)
    else:  # pragma: no cover - solids only have 3/4/5-gon faces
        raise ValueError(f"unsupported face size {k}")

    # sample by ray casting from cone_a toward cone_b's surface
    u, w = _azimuth_frame(cone_a, start - cone_a.apex)
    phi_start = 0.0
    phi_end = _signed_azimuth(cone_a, u, w, end - cone_a.apex)

    def eval_point(phi: float) -> np.ndarray:
        if phi == phi_start:
            return start
        if phi == phi_end:
            return end
        g = generator_direction(cone_a, u, w, phi)
        s = ray_cone_hit(cone_b, cone_a.apex, g)
        if math.isnan(s):
            # degenerate only in the immediate vicinity of a shared generator
            frac = (phi - phi_start) / (phi_end - phi_start)
            return start + frac * (end - start)
        return cone_a.apex + s * g

    # length table: parameter accuracy is second order in the node spacing,
    # so a much coarser refinement than the point tolerance suffices
    params, pts = _adaptive_arc(eval_point, phi_start, phi_end, 1e-7, max_points=4000)
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    length = float(cum[-1])
    cum /= cum[-1]

    return RidgeConic(
        cone_a=a,
        cone_b=b,
        plane_point=c,
        plane_normal=n_plane,
        frame_e1=e1,
        frame_e2=e2,
        coefficients=coeffs,
        arc_start=start,
        arc_end=end,
        length=length,
        _cast_apex=np.array(cone_a.apex),
        _cast_u=u,
        _cast_w=w,
        _cast_cone=cone_a,
        _target_cone=cone_b,
        _phis=params,
        _cum=cum,
    )


def _pentagon_apices(face: tuple[int, ...], pair: tuple[int, int]):
    """Recover (distinguished, edge_pair) roles for a pentagon apex pair."""
    k = len(face)
    ia, ib = face.index(pair[0]), face.index(pair[1])
    sep = min((ia - ib) % k, (ib - ia) % k)
    if sep == 1:
        # the adjacent pair is the opposite edge; distinguished is across
        mid = [v for v in face if v not in pair]
        for v in mid:
            iv = face.index(v)
            if (iv - ia) % k in (2, 3) and (iv - ib) % k in (2, 3):
                return v, pair
        raise AssertionError("no opposite vertex found")
    # distance-2 pair: one is distinguished, the other an opposite-edge end
    for d, e in ((pair[0], pair[1]), (pair[1], pair[0])):
        idd, ide = face.index(d), face.index(e)
        # the third apex is adjacent to e and not adjacent to d
        for v in face:
            if v in pair:
                continue
            iv = face.index(v)
            adj_e = (iv - ide) % k in (1, k - 1)
            adj_d = (iv - idd) % k in (1, k - 1)
            if adj_e and not adj_d:
                return d, (e, v)
    raise AssertionError("could not orient pentagon pair")


def _pentagon_arc_endpoints(solid, face_id, cone_a: Cone, cone_b: Cone, sep: int):
    face = solid.faces[face_id]
    pair = (cone_a.apex_vertex, cone_b.apex_vertex)
    dist, edge_pair = _pentagon_apices(face, pair)
    tp = _triple_point(solid, face_id, dist, edge_pair)
    if sep == 1:
        # adjacent pair: from the shared-edge midpoint up to the triple point
        start = 0.5 * (cone_a.apex + cone_b.apex)
    else:
        # distinguished-to-edge-end pair: starts at their common neighbor
        k = len(face)
        ia, ib = face.index(pair[0]), face.index(pair[1])
        between = face[(ia + 1) % k] if (ib - ia) % k == 2 else face[(ia - 1) % k]
        start = np.array(solid.vertices[between])
    return start, tp


@lru_cache(maxsize=None)
def _triple_point_cached(solid_name: str, face_id: int, dist: int, e1: int, e2: int) -> tuple:
    solid = build_solid(solid_name)
    half = solid.dual_dihedral / 2.0
    cone_d = cone_for_vertex(solid, dist)
    cone_1 = cone_for_vertex(solid, e1)
    cone_2 = cone_for_vertex(solid, e2)
    # walk the adjacent-pair ridge from the shared-edge midpoint; the triple
    # point is where the distinguished cone's surface cuts it
    mid = 0.5 * (cone_1.apex + cone_2.apex)
    u, w = _azimuth_frame(cone_1, cone_2.apex - cone_1.apex)

    def point_at(phi: float) -> np.ndarray:
        g = generator_direction(cone_1, u, w, phi)
        s = ray_cone_hit(cone_2, cone_1.apex, g)
        if math.isnan(s):
            return mid
        return cone_1.apex + s * g

    def f(phi: float) -> float:
        return cone_d.solid_residual(point_at(phi))

    # bracket: at the midpoint the point is strictly inside the distinguished
    # cone; sweep azimuth toward the distinguished vertex until it exits
    span = _signed_azimuth(cone_1, u, w, cone_d.apex - cone_1.apex)
    lo, hi = 0.0, span
    flo = cone_d.solid_residual(mid)
    if flo <= 0:
        raise AssertionError("pentagon module: midpoint not inside distinguished cone")
    n = 256
    phis = np.linspace(0.0, span, n)
    prev, fprev = 0.0, flo
    found = False
    for phi in phis[1:]:
        fv = f(phi)
        if fv <= 0.0:
            lo, hi, found = prev, phi, True
            break
        prev, fprev = phi, fv
    if not found:
        raise AssertionError("pentagon module: no triple point bracket found")
    from scipy.optimize import brentq

    phi_t = brentq(f, lo, hi, xtol=1e-15)
    return tuple(point_at(phi_t))


def _triple_point(solid, face_id, dist, edge_pair) -> np.ndarray:
    e1, e2 = sorted(edge_pair)
    return np.array(_triple_point_cached(solid.name, face_id, dist, e1, e2))


ORIENTATION_COUNT = {3: 3, 4: 2, 5: 5}


def apex_set_for_face(solid: PlatonicSolid, face_id: int, index: int) -> tuple[int, ...]:
    """Apex vertices selected by an orientation index (see configs module).

    Triangle index i chooses edge {cyc[i], cyc[i+1]} in the documented order
    ({a,b}, {b,c}, {a,c}); square index chooses a diagonal; pentagon index
    chooses the distinguished vertex, whose apex set adds the two endpoints
    of the opposite edge.
    """
    cyc = solid.faces[face_id]
    k = len(cyc)
    kk = ORIENTATION_COUNT[k]
    if not 0 <= index < kk:
        raise ValueError(f"orientation index {index} out of range: face {face_id} has {kk} orientations")
    if k == 3:
        pairs = ((cyc[0], cyc[1]), (cyc[1], cyc[2]), (cyc[0], cyc[2]))
        return tuple(sorted(pairs[index]))
    if k == 4:
        return tuple(sorted((cyc[index], cyc[index + 2])))
    return tuple(sorted((cyc[index], cyc[(index + 2) % 5], cyc[(index + 3) % 5])))


@dataclass(frozen=True)
class Patch:
    """Exposed piece of one cone between two face edges of its apex."""

    face_id: int
    apex_vertex: int
    slot_edges: tuple[int, int]  # edge ids, ascending; patch end 0 / end 1
    slot_others: tuple[int, int]  # far endpoint of each slot edge
    azimuth_width: float
    # azimuth frame: zero at the end-0 generator
    frame_u: np.ndarray = field(repr=False)
    frame_w: np.ndarray = field(repr=False)
    sweep_sign: float = 1.0


@dataclass(frozen=True)
class Module:
    """All cone geometry over a single configured face."""

    solid: PlatonicSolid
    face_id: int
    orientation_index: int
    apex_ids: tuple[int, ...]
    cones: tuple[Cone, ...]
    ridges: tuple[RidgeConic, ...]
    patches: tuple[Patch, ...]

    def cone_of(self, vertex_id: int) -> Cone:
        return self.cones[self.apex_ids.index(vertex_id)]

    def patch_of(self, vertex_id: int) -> Patch:
        for p in self.patches:
            if p.apex_vertex == vertex_id:
                return p
        raise KeyError(vertex_id)


def _build_patch(solid: PlatonicSolid, face_id: int, apex: int) -> Patch:
    cyc = solid.faces[face_id]
    k = len(cyc)
    i = cyc.index(apex)
    nbrs = (cyc[(i - 1) % k], cyc[(i + 1) % k])
    edges = sorted(((apex, n) if apex < n else (n, apex)) for n in nbrs)
    e_ids = tuple(solid.edge_index(*e) for e in edges)
    others = tuple(e[0] if e[0] != apex else e[1] for e in edges)
    cone = cone_for_vertex(solid, apex)
    g0 = solid.vertices[others[0]] - cone.apex
    g1 = solid.vertices[others[1]] - cone.apex
    u, w = _azimuth_frame(cone, g0)
    phi1 = _signed_azimuth(cone, u, w, g1)
    return Patch(
        face_id=face_id,
        apex_vertex=apex,
        slot_edges=e_ids,
        slot_others=others,
        azimuth_width=abs(phi1),
        frame_u=u,
        frame_w=w,
        sweep_sign=math.copysign(1.0, phi1),
    )


@lru_cache(maxsize=None)
def _module_cached(solid_name: str, face_id: int, index: int) -> Module:
    solid = build_solid(solid_name)
    apexes = apex_set_for_face(solid, face_id, index)
    cones = tuple(cone_for_vertex(solid, v) for v in apexes)
    pairs = [(i, j) for i in range(len(apexes)) for j in range(i + 1, len(apexes))]
    ridges = tuple(ridge_conic(cones[i], cones[j], solid, face_id) for i, j in pairs)
    patches = tuple(_build_patch(solid, face_id, v) for v in apexes)
    return Module(
        solid=solid,
        face_id=face_id,
        orientation_index=index,
        apex_ids=apexes,
        cones=cones,
        ridges=ridges,
        patches=patches,
    )


def build_module(solid: PlatonicSolid, face_id: int, index: int) -> Module:
    """Module over a face for an orientation index (cached; immutable)."""
    return _module_cached(solid.name, face_id, index)


def patch_generator(module: Module, patch: Patch, t: float) -> np.ndarray:
    """Unit generator direction at azimuth fraction t in [0, 1] (end 0 -> end 1)."""
    cone = module.cone_of(patch.apex_vertex)
    phi = patch.sweep_sign * t * patch.azimuth_width
    return generator_direction(cone, patch.frame_u, patch.frame_w, phi)


def patch_outer_radius(module: Module, patch: Patch, t: float) -> float:
    """Slant distance from the apex to the patch's outer (ridge) boundary."""
    cone = module.cone_of(patch.apex_vertex)
    L = module.solid.edge_length
    if t <= 0.0 or t >= 1.0:
        other = patch.slot_others[0 if t <= 0.0 else 1]
        if other in module.apex_ids:
            return 0.5 * L  # shared apex edge: ridge lands on its midpoint
        return L
    g = patch_generator(module, patch, t)
    best = math.inf
    for c in module.cones:
        if c.apex_vertex == patch.apex_vertex:
            continue
        s = ray_cone_hit(c, cone.apex, g)
        if not math.isnan(s) and s < best:
            best = s
    if math.isinf(best):
        # only adjacent to the shared-edge azimuth limit; interpolate ends
        return (1.0 - t) * patch_outer_radius(module, patch, 0.0) + t * patch_outer_radius(
            module, patch, 1.0
        )
    return best


def patch_point(module: Module, patch: Patch, t: float, s: float) -> np.ndarray:
    """Surface point at azimuth fraction t and radial fraction s."""
    cone = module.cone_of(patch.apex_vertex)
    return cone.apex + s * patch_outer_radius(module, patch, t) * patch_generator(module, patch, t)


def patch_area(module: Module, patch: Patch) -> float:
    """Lateral area of a patch by quadrature (independent of any mesh)."""
    from scipy.integrate import quad

    cone = module.cone_of(patch.apex_vertex)

    def integrand(t: float) -> float:
        r = patch_outer_radius(module, patch, t)
        return 0.5 * r * r

    val, _ = quad(integrand, 0.0, 1.0, limit=200)
    return cone.sin_a * patch.azimuth_width * val


def module_volume(module: Module) -> float:
    """Volume between the face plane and the module surface (divergence theorem)."""
    from scipy.integrate import quad

    total = 0.0
    for patch in module.patches:
        cone = module.cone_of(patch.apex_vertex)
        u, w, sign, width = patch.frame_u, patch.frame_w, patch.sweep_sign, patch.azimuth_width

        def integrand(t: float) -> float:
            phi = sign * t * width
            g = generator_direction(cone, u, w, phi)
            dg = (
                cone.sin_a
                * (-math.sin(phi) * u + math.cos(phi) * w)
                * sign
                * width
            )
            r = patch_outer_radius(module, patch, t)
            return 0.5 * r * r * float(np.dot(cone.apex, np.cross(g, dg)))

        val, _ = quad(integrand, 0.0, 1.0, limit=200)
        total += val / 3.0
    # face polygon contribution (normal pointing into the module's far side)
    solid = module.solid
    cyc = solid.faces[module.face_id]
    pts = solid.vertices[list(cyc)]
    center = pts.mean(axis=0)
    area = 0.0
    for i in range(len(cyc)):
        a, b = pts[i] - center, pts[(i + 1) % len(cyc)] - center
        area += 0.5 * np.linalg.norm(np.cross(a, b))
    n_in = -solid.face_normal(module.face_id)
    total += float(np.dot(center, n_in)) * area / 3.0
    return total


def classify_point(module: Module, point: np.ndarray) -> dict:
    """Total membership classification against one module.

    Returns {"kind": one of interior/on-patch/on-ridge/on-face-plane/exterior,
    "apex": vertex id for on-patch, "ridge": (a, b) for on-ridge}.
    """
    tol = TOL["geometry"]
    x = np.asarray(point, dtype=np.float64)
    solid = module.solid
    n_f = solid.face_normal(module.face_id)
    h = float(np.dot(x - solid.face_center(module.face_id), n_f))
    residuals = {c.apex_vertex: c.solid_residual(x) for c in module.cones}

    if h < -tol or any(r < -tol for r in residuals.values()):
        return {"kind": "exterior"}

    on = [v for v, r in residuals.items() if abs(r) <= tol]
    if len(on) >= 2:
        for ridge in module.ridges:
            if {ridge.cone_a, ridge.cone_b} <= set(on):
                if abs(float(np.dot(x - ridge.plane_point, ridge.plane_normal))) <= tol:
                    return {"kind": "on-ridge", "ridge": (ridge.cone_a, ridge.cone_b)}
    if on:
        apex = min(on, key=lambda v: float(np.linalg.norm(x - module.cone_of(v).apex)))
        return {"kind": "on-patch", "apex": apex}
    if h <= tol:
        return {"kind": "on-face-plane"}
    return {"kind": "interior"}
