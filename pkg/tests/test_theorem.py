import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from normaltiling import errors
from normaltiling.dual import bfs_balls, build_dual
from normaltiling.generators import hex_patch
from normaltiling.theorem import (
    containment_check,
    default_origin,
    index_sum_bound,
    packing_capacity,
    verify_theorem,
)
from normaltiling.tiling import patch_summary

from _fixtures import modified_hex

from conftest import HEX_AREA

mpmath.mp.dps = 40


def test_bound_for_unit_hexagon():
    expected = float(16 * mpmath.pi / (3 * mpmath.sqrt(3)) - 6)
    assert abs(index_sum_bound(HEX_AREA, 2.0) - expected) < 1e-9
    assert abs(expected - 3.673597) < 1e-6


@pytest.mark.parametrize("D", [0.5, 1.0, 2.0, 7.3])
def test_bound_special_areas(D):
    assert abs(index_sum_bound(math.pi * D * D / 3, D)) < 1e-9
    assert abs(index_sum_bound(math.pi * D * D / 4, D) - 2) < 1e-9


@pytest.mark.parametrize("A,D,exc", [
    (0, 1, errors.NonPositiveInput),
    (1, -1, errors.NonPositiveInput),
    (float("nan"), 1, errors.NonPositiveInput),
    (1.0, 1.0, errors.InconsistentAD),
])
def test_bound_rejects_bad_input(A, D, exc):
    with pytest.raises(exc):
        index_sum_bound(A, D, strict=True)


def test_strict_mode_allows_the_extreme_area():
    assert index_sum_bound(math.pi, 2.0, strict=True) == pytest.approx(2, abs=1e-9)
    assert index_sum_bound(1.0, 1.0) == pytest.approx(2 * math.pi - 6, abs=1e-12)


def test_packing_capacity_values():
    expected = float(4 * mpmath.pi / (3 * mpmath.sqrt(3) / 2))
    assert abs(packing_capacity(0, 2.0, HEX_AREA) - expected) < 1e-9
    assert abs(expected - 4.836798) < 1e-6
    assert packing_capacity(1, 2.0, HEX_AREA) == pytest.approx(4 * expected, abs=1e-9)
    assert packing_capacity(0, 3.0, math.pi * 9) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(errors.NonPositiveInput):
        packing_capacity(-1, 1.0, 1.0)


@given(st.floats(0.1, 10), st.floats(0.3, 1.0), st.integers(0, 50))
def test_bound_is_capacity_identity(D, frac, i):
    A = frac * math.pi * D * D / 4
    lhs = index_sum_bound(A, D)
    rhs = 2 * packing_capacity(i, D, A) / (i + 1) ** 2 - 6
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


def test_bound_monotonicity():
    D = 2.0
    areas = [0.5 + 0.25 * k for k in range(10)]
    vals = [index_sum_bound(a, D) for a in areas]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    diams = [1.6 + 0.1 * k for k in range(10)]
    vals = [index_sum_bound(1.5, d) for d in diams]
    assert all(x < y for x, y in zip(vals, vals[1:]))


def test_hex_containment(hex8):
    g = build_dual(hex8, 0)
    bd = bfs_balls(g, 8)
    recs = containment_check(hex8, bd, 2.0)
    assert [r.i for r in recs] == list(range(bd.boundary_safe_radius + 1))
    assert all(r.ok for r in recs)
    assert recs[2].tiles == 19
    assert recs[2].capacity == pytest.approx(36 * math.pi / HEX_AREA, abs=1e-9)
    assert abs(recs[2].capacity - 43.53) < 0.01
    for r in recs:
        assert r.tiles == 3 * r.i ** 2 + 3 * r.i + 1
    # the origin tile fits in a disk of radius D around its own centroid
    assert recs[0].tiles == 1 and recs[0].max_distance == pytest.approx(1.0)


def test_containment_needs_coordinates():
    from normaltiling.generators import disclination_patch
    t = disclination_patch(3, 1)
    bd = bfs_balls(build_dual(t, 0), 3)
    with pytest.raises(errors.MissingCoordinates):
        containment_check(t, bd, 2.0)
    with pytest.raises(errors.MissingCoordinates):
        verify_theorem(t)


def test_verify_hex_patch(hex8):
    rep = verify_theorem(hex8)
    assert rep.origin == 0
    assert rep.C == 0 and rep.C_normalized == 0 and rep.non_hexagons == 0
    assert rep.satisfied and rep.packing_ok
    assert rep.bound == pytest.approx(16 * math.pi / (3 * math.sqrt(3)) - 6, abs=1e-9)
    d = rep.to_dict()
    assert d["packing_ok"] and len(d["packing_checks"]) == rep.boundary_safe_radius + 1


def test_verify_realized_disclination(realized_disclination):
    t, layout = realized_disclination
    assert layout.converged
    rep = verify_theorem(t)
    s = patch_summary(t)
    assert rep.C == 1 and rep.non_hexagons == 1
    assert rep.bound == pytest.approx(2 * math.pi * s.D_max ** 2 / s.A_min - 6, abs=1e-9)
    assert rep.satisfied and rep.packing_ok


def test_verify_rejects_pentagons():
    base = hex_patch(3)
    u = base.face_cycle(0)[0]
    v = base.face_cycle(0)[1]
    t = modified_hex(base, contractions=[(u, [v])])
    assert min(t.sides(f) for f in t.interior_faces) == 5
    with pytest.raises(errors.FewerThanSixSides):
        verify_theorem(t)
    with pytest.raises(errors.HypothesisViolation):
        verify_theorem(t)


def test_default_origin_is_central():
    assert default_origin(hex_patch(4)) == 0
