import math
import random

import numpy as np
import pytest

from normaltiling import errors
from normaltiling.generators import disclination_patch, hex_patch
from normaltiling.normalize import normalize, refine_to_edge_to_edge
from normaltiling.tiling import (
    build_halfedge,
    face_metrics,
    patch_summary,
    shared_side_violations,
)

from _fixtures import (
    check_invariants,
    random_fixture,
    split_neighbour,
    star_patch,
    three_hexagons,
    two_faces_two_sides,
)
from conftest import HEX_AREA

HEXAGON = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]


def single_hexagon(coords=True):
    faces = {0: [0, 1, 2, 3, 4, 5], 1: [5, 4, 3, 2, 1, 0]}
    return build_halfedge(faces, 1, dict(enumerate(HEXAGON)) if coords else None)


def test_single_hexagon_counts():
    t = single_hexagon()
    assert (len(t.vertices), t.n_edges, len(t.faces)) == (6, 6, 2)
    check_invariants(t)


def test_three_hexagons_share_a_degree_three_vertex():
    t, centre = three_hexagons()
    check_invariants(t)
    assert t.degree(centre) == 3
    assert len(t.interior_faces) == 3


def test_two_faces_sharing_two_sides_are_flagged():
    t = two_faces_two_sides()
    check_invariants(t)
    assert (1, 2, 2) in shared_side_violations(t)
    assert not face_metrics(t, 1).convex


@pytest.mark.parametrize("t", [hex_patch(0), hex_patch(3), disclination_patch(3, 2),
                               star_patch(5)], ids=repr)
def test_generated_invariants(t):
    check_invariants(t)


def test_rotation_is_counter_clockwise():
    t = hex_patch(2)
    for v in t.vertices:
        if v in t.boundary_vertices():
            continue
        p = t.point(v)
        angles = [math.atan2(*(t.point(t.dest(h)) - p)[::-1]) for h in t.rotation(v)]
        steps = [(b - a) % (2 * math.pi) for a, b in zip(angles, angles[1:] + angles[:1])]
        assert sum(steps) == pytest.approx(2 * math.pi)


# -- construction errors ----------------------------------------------------

def test_edge_on_one_face_only():
    faces = {0: [0, 1, 2], 1: [0, 2, 3], 2: [3, 2, 1, 0]}
    with pytest.raises(errors.NonManifoldEdge):
        build_halfedge({0: [0, 1, 2], 1: [2, 1, 0], 2: [0, 2, 3]}, 1)
    build_halfedge(faces, 2)


def test_orientation_mismatch():
    faces = {0: [0, 1, 2, 3], 1: [0, 1, 4], 2: [3, 2, 1, 4, 0][::-1]}
    with pytest.raises(errors.OrientationMismatch):
        build_halfedge({0: [0, 1, 2], 1: [0, 1, 2]}, 1)
    with pytest.raises(errors.TilingError):
        build_halfedge(faces, 2)


def test_dangling_vertex():
    with pytest.raises(errors.DanglingVertex):
        build_halfedge({0: [0, 1, 2], 1: [2, 1, 0]}, 1, vertices=[0, 1, 2, 7])


def test_outer_face_must_exist_and_euler_must_hold():
    with pytest.raises(errors.TopologyError):
        build_halfedge({0: [0, 1, 2], 1: [2, 1, 0]}, 5)
    # two disjoint triangles: V - E + F = 6 - 6 + 4 = 4
    faces = {0: [0, 1, 2], 1: [2, 1, 0], 2: [3, 4, 5], 3: [5, 4, 3]}
    with pytest.raises(errors.TopologyError):
        build_halfedge(faces, 1)


def test_short_cycle_rejected():
    with pytest.raises(errors.TopologyError):
        build_halfedge({0: [0, 1], 1: [1, 0]}, 1)


def test_clockwise_face_rejected():
    pts = dict(enumerate(HEXAGON))
    with pytest.raises(errors.GeometryError):
        build_halfedge({0: [5, 4, 3, 2, 1, 0], 1: [0, 1, 2, 3, 4, 5]}, 1, pts)


def test_unflagged_coincident_points_rejected():
    pts = dict(enumerate(HEXAGON))
    pts[6] = pts[0]
    faces = {0: [0, 6, 1, 2, 3, 4, 5], 1: [5, 4, 3, 2, 1, 6, 0]}
    with pytest.raises(errors.GeometryError):
        build_halfedge(faces, 1, pts)
    t = build_halfedge(faces, 1, pts, zero_length=[(0, 6)])
    assert t.sides(0) == 7
    assert face_metrics(t, 0).area == pytest.approx(HEX_AREA)


def test_overlapping_faces_rejected():
    # second face folded over the first
    pts = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0.5, 0.5)}
    with pytest.raises(errors.GeometryError):
        build_halfedge({0: [0, 1, 2], 1: [0, 2, 3], 2: [3, 2, 1, 0]}, 2, pts)


# -- face metrics -----------------------------------------------------------

def test_regular_hexagon_metrics():
    m = face_metrics(single_hexagon(), 0)
    assert (m.sides, m.index) == (6, 0)
    assert m.area == pytest.approx(3 * math.sqrt(3) / 2, abs=1e-9)
    assert m.diameter == pytest.approx(2.0, abs=1e-9)
    assert m.inradius == pytest.approx(math.sqrt(3) / 2, abs=1e-9)
    assert m.circumradius == pytest.approx(1.0, abs=1e-9)
    assert m.convex and m.geometric_corners == 6


def test_heptagon_index():
    assert face_metrics(disclination_patch(3, 1), 0).index == 1


def test_combinatorial_metrics_have_no_geometry():
    t = single_hexagon(coords=False)
    m = face_metrics(t, 0)
    assert (m.sides, m.index, m.area) == (6, 0, None)
    with pytest.raises(errors.MissingCoordinates):
        face_metrics(t, 0, geometric=True)


def test_outer_face_has_no_metrics():
    t = single_hexagon()
    with pytest.raises(errors.TilingError):
        face_metrics(t, t.outer)


def test_absorbed_t_vertex_counts_as_side():
    base = hex_patch(3)
    t, w = split_neighbour(base, 0, 1)
    assert t.sides(0) == 6 and (0, w) in t.hidden
    refined, trace = refine_to_edge_to_edge(t)
    assert (w, 0) in trace.absorptions
    m = face_metrics(refined, 0)
    assert (m.sides, m.geometric_corners, m.index) == (7, 6, 1)
    assert m.convex


def test_face_metric_invariants_on_random_fixtures():
    rng = random.Random(5)
    for _ in range(5):
        t, _ = random_fixture(rng)
        for f in t.interior_faces:
            m = face_metrics(t, f)
            assert m.index == m.sides - 6
            assert m.geometric_corners <= m.sides
            if m.convex:
                assert m.inradius <= m.circumradius
                assert math.pi * m.inradius ** 2 <= m.area + 1e-9
                assert m.area <= math.pi * m.circumradius ** 2 + 1e-9


def test_diameter_dominates_sampled_boundary_points():
    rng = np.random.default_rng(0)
    t, _ = random_fixture(random.Random(11))
    for f in t.interior_faces:
        m = face_metrics(t, f)
        if not m.convex:
            continue
        poly = t.polygon(f)
        samples = []
        for i in range(len(poly)):
            a, b = poly[i], poly[(i + 1) % len(poly)]
            for s in rng.uniform(0, 1, 5):
                samples.append(a + s * (b - a))
        samples = np.array(samples)
        d = np.sqrt(((samples[:, None] - samples[None]) ** 2).sum(-1)).max()
        assert d <= m.diameter + 1e-9


# -- patch summary ----------------------------------------------------------

def test_hex_patch_summary():
    s = patch_summary(hex_patch(2))
    assert s.interior_face_count == 19
    assert s.C_interior == 0
    assert s.avg_sides_interior == 6
    assert s.A_min == pytest.approx(HEX_AREA, abs=1e-9)
    assert s.D_max == pytest.approx(2.0, abs=1e-9)


def test_disclination_summary():
    s = patch_summary(disclination_patch(3, 1))
    assert s.C_interior == 1
    assert s.A_min is None


def test_summary_bounds_every_face():
    t, _ = random_fixture(random.Random(2))
    s = patch_summary(t)
    ms = [face_metrics(t, f) for f in t.interior_faces]
    assert s.C_interior == sum(m.sides - 6 for m in ms)
    assert all(s.A_min <= m.area and m.diameter <= s.D_max for m in ms)


@pytest.mark.parametrize("t", [hex_patch(3), hex_patch(2, side=0.3)], ids=repr)
def test_normality_parameters_reduce(t):
    s = patch_summary(t)
    assert math.pi * s.r_min ** 2 <= s.A_min
    assert s.D_max <= 2 * s.R_max + 1e-12


def test_structural_equality_ignores_rotation_and_metadata():
    t = hex_patch(1)
    faces = {f: (c[2:] + c[:2]) for f, c in t.raw_faces().items()}
    u = build_halfedge(faces, t.outer, t.coords, metadata={"x": 1})
    assert u == t
    moved = dict(t.coords)
    moved[0] = (moved[0][0] + 1e-3, moved[0][1])
    assert build_halfedge(t.raw_faces(), t.outer, moved) != t


def test_index_preserved_by_normalization_definition():
    t, _ = normalize(star_patch(5))
    for f in t.interior_faces:
        assert face_metrics(t, f).index == t.sides(f) - 6
