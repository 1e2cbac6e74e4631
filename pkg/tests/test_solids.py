import itertools
import math

import numpy as np
import pytest

from platonicons.solids import (
    COUNTS,
    DUAL_NAME,
    PROPER_GROUP_ORDER,
    SOLID_NAMES,
    build_solid,
    dual_dihedral,
    op_matrix,
    symmetry_group,
)

ALL = list(SOLID_NAMES)


def test_unknown_name_rejected():
    with pytest.raises(ValueError, match="tetrahedron"):
        build_solid("pyramid")


@pytest.mark.parametrize("name", ALL)
def test_counts_and_euler(name):
    s = build_solid(name)
    assert (s.n_vertices, s.n_edges, s.n_faces) == COUNTS[name]
    assert s.n_vertices - s.n_edges + s.n_faces == 2


@pytest.mark.parametrize("name", ALL)
def test_unit_circumradius_and_centroid(name):
    s = build_solid(name)
    r = np.linalg.norm(s.vertices, axis=1)
    assert np.all(np.abs(r - 1.0) < 1e-12)
    assert np.all(np.abs(s.vertices.mean(axis=0)) < 1e-12)


@pytest.mark.parametrize("name", ALL)
def test_faces_planar_and_regular(name):
    s = build_solid(name)
    for f, cyc in enumerate(s.faces):
        pts = s.vertices[list(cyc)]
        n = s.face_normal(f)
        heights = pts @ n
        assert np.ptp(heights) < 1e-12, "face not planar"
        sides = [np.linalg.norm(pts[i] - pts[(i + 1) % len(cyc)]) for i in range(len(cyc))]
        assert max(sides) - min(sides) < 1e-12, "side lengths unequal"
        angles = []
        for i in range(len(cyc)):
            a = pts[(i - 1) % len(cyc)] - pts[i]
            b = pts[(i + 1) % len(cyc)] - pts[i]
            angles.append(math.acos(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b))))
        assert max(angles) - min(angles) < 1e-12, "interior angles unequal"


@pytest.mark.parametrize("name", ALL)
def test_faces_oriented_outward(name):
    s = build_solid(name)
    for cyc in s.faces:
        pts = s.vertices[list(cyc)]
        n = np.cross(pts[1] - pts[0], pts[2] - pts[1])
        assert np.dot(n, pts.mean(axis=0)) > 0, "face cycle not CCW from outside"


@pytest.mark.parametrize("name", ALL)
def test_each_edge_in_two_faces(name):
    s = build_solid(name)
    for (a, b), (f1, f2) in zip(s.edges, s.face_adjacency):
        assert f1 != f2
        for f in (f1, f2):
            cyc = s.faces[f]
            assert a in cyc and b in cyc
            k = cyc.index(a)
            assert cyc[(k + 1) % len(cyc)] == b or cyc[(k - 1) % len(cyc)] == b


def test_tetrahedron_vertices_even_sign_product():
    s = build_solid("tetrahedron")
    signs = np.sign(s.vertices * math.sqrt(3.0))
    for row in signs:
        assert int(np.sum(row < 0)) % 2 == 0
    assert np.allclose(np.abs(s.vertices), 1.0 / math.sqrt(3.0), atol=1e-12)


def test_octahedron_vertices_axis_aligned():
    s = build_solid("octahedron")
    expected = {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}
    got = {tuple(int(round(x)) for x in v) for v in s.vertices}
    assert got == expected
    assert s.n_edges == 12


@pytest.mark.parametrize("name", ALL)
def test_group_orders(name):
    s = build_solid(name)
    assert len(symmetry_group(s, proper_only=True)) == PROPER_GROUP_ORDER[name]
    assert len(symmetry_group(s)) == 2 * PROPER_GROUP_ORDER[name]


@pytest.mark.parametrize("name", ALL)
def test_group_contains_identity_and_closed(name):
    s = build_solid(name)
    ops = symmetry_group(s)
    perms = {op.vertex_perm for op in ops}
    ident = tuple(range(s.n_vertices))
    assert ident in perms
    # closure under composition (sampled for the big groups, full for small)
    sample = ops if len(ops) <= 48 else ops[::7]
    for g in sample:
        for h in sample:
            assert g.compose(h).vertex_perm in perms


@pytest.mark.parametrize("name", ALL)
def test_ops_preserve_geometry(name):
    s = build_solid(name)
    edge_set = set(s.edges)
    face_set = {tuple(sorted(f)) for f in s.faces}
    for op in symmetry_group(s):
        p = op.vertex_perm
        assert {tuple(sorted((p[a], p[b]))) for a, b in s.edges} == edge_set
        assert {tuple(sorted(p[v] for v in f)) for f in s.faces} == face_set
        R = op_matrix(s, op)
        assert np.allclose(R @ R.T, np.eye(3), atol=1e-12)
        assert abs(np.linalg.det(R) - (1.0 if op.is_proper else -1.0)) < 1e-9
        imgs = s.vertices @ R.T
        assert np.max(np.linalg.norm(imgs - s.vertices[list(p)], axis=1)) < 1e-12


@pytest.mark.parametrize("name", ALL)
def test_induced_permutations_consistent(name):
    s = build_solid(name)
    for op in symmetry_group(s)[::5]:
        p = op.vertex_perm
        for ei, (a, b) in enumerate(s.edges):
            img = tuple(sorted((p[a], p[b])))
            assert s.edges[op.edge_perm[ei]] == img
        for fi, f in enumerate(s.faces):
            img = tuple(sorted(p[v] for v in f))
            assert tuple(sorted(s.faces[op.face_perm[fi]])) == img


def test_dual_involution():
    for name in ALL:
        assert DUAL_NAME[DUAL_NAME[name]] == name


# Independent oracle for the dual dihedral: twice the angle between any edge
# at a vertex and the vertex-to-centroid direction.
@pytest.mark.parametrize("name", ALL)
def test_dual_dihedral_equals_edge_radius_angle(name):
    s = build_solid(name)
    half = dual_dihedral(s) / 2.0
    for v in range(s.n_vertices):
        axis = -s.vertices[v]
        for w in s.vertex_neighbors(v):
            d = s.vertices[w] - s.vertices[v]
            ang = math.acos(np.dot(d, axis) / np.linalg.norm(d))
            assert abs(ang - half) < 1e-9


def test_dual_dihedral_reference_values():
    # closed forms: arccos(1/3), arccos(-1/3), pi/2, arccos(-1/sqrt 5), arccos(-sqrt5/3)
    expect = {
        "tetrahedron": math.acos(1.0 / 3.0),
        "cube": math.acos(-1.0 / 3.0),
        "octahedron": math.pi / 2.0,
        "icosahedron": math.acos(-1.0 / math.sqrt(5.0)),
        "dodecahedron": math.acos(-math.sqrt(5.0) / 3.0),
    }
    for name, val in expect.items():
        assert abs(dual_dihedral(build_solid(name)) - val) < 1e-12


def test_edge_length_is_twice_cos_half_angle():
    for name in ALL:
        s = build_solid(name)
        alpha = s.dual_dihedral / 2.0
        assert abs(s.edge_length - 2.0 * math.cos(alpha)) < 1e-12


def test_json_roundtrip(tmp_path):
    import json

    from platonicons.solids import dump_solid_tables

    path = tmp_path / "solids.json"
    dump_solid_tables(str(path))
    data = json.loads(path.read_text())
    assert set(data) == set(ALL)
    s = build_solid("cube")
    assert data["cube"]["faces"] == [list(f) for f in s.faces]
    assert np.allclose(np.array(data["cube"]["vertices"]), s.vertices)
