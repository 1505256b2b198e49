"""Planar polygon predicates used by the face audits.

Polygons are ``(n, 2)`` float arrays in counter-clockwise order. Consecutive
coincident points (zero-length edges) are tolerated by every routine here
after :func:`drop_repeated`.
"""
import math
import os
import random

import numpy as np
from scipy.optimize import linprog

TOL = 1e-9


def default_seed() -> int:
    """Seed for randomized routines; ``NORMALTILING_SEED`` overrides it."""
    return int(os.environ.get("NORMALTILING_SEED", "0"))


def drop_repeated(pts, tol=TOL):
    """Remove consecutive (cyclically) coincident points."""
    pts = np.asarray(pts, dtype=float)
    if len(pts) < 2:
        return pts
    keep = []
    n = len(pts)
    for i in range(n):
        if np.hypot(*(pts[i] - pts[i - 1])) > tol:
            keep.append(i)
    if not keep:
        return pts[:1]
    return pts[keep]


def signed_area(pts):
    pts = np.asarray(pts, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def centroid(pts):
    """Area centroid; falls back to the vertex mean for degenerate polygons."""
    pts = np.asarray(pts, dtype=float)
    a = signed_area(pts)
    if abs(a) < TOL * TOL:
        return pts.mean(axis=0)
    x, y = pts[:, 0], pts[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    cx = float(np.dot(x + xn, cross)) / (6 * a)
    cy = float(np.dot(y + yn, cross)) / (6 * a)
    return np.array([cx, cy])


def turning_angles(pts):
    """Signed exterior angle at each vertex, in (-pi, pi]."""
    pts = np.asarray(pts, dtype=float)
    e_in = pts - np.roll(pts, 1, axis=0)
    e_out = np.roll(pts, -1, axis=0) - pts
    cross = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
    dot = (e_in * e_out).sum(axis=1)
    return np.arctan2(cross, dot)


def _corner_cross(pts):
    """Cross products at each vertex normalised by the adjacent edge lengths."""
    e_in = pts - np.roll(pts, 1, axis=0)
    e_out = np.roll(pts, -1, axis=0) - pts
    cross = e_in[:, 0] * e_out[:, 1] - e_in[:, 1] * e_out[:, 0]
    scale = np.hypot(e_in[:, 0], e_in[:, 1]) * np.hypot(e_out[:, 0], e_out[:, 1])
    return cross / np.maximum(scale, TOL * TOL)


def is_convex(pts, tol=TOL):
    """Weak convexity of a positively oriented polygon.

    Collinear vertices are allowed; reflex corners and backtracking
    (180 degree turns) are not.
    """
    pts = drop_repeated(pts)
    if len(pts) < 3 or signed_area(pts) <= 0:
        return False
    sines = _corner_cross(pts)
    if np.any(sines < -tol):
        return False
    # a zero cross product with a reversed direction is a spike, not a straight angle
    e_in = pts - np.roll(pts, 1, axis=0)
    e_out = np.roll(pts, -1, axis=0) - pts
    dots = (e_in * e_out).sum(axis=1)
    if np.any((np.abs(sines) <= tol) & (dots < 0)):
        return False
    return bool(np.isclose(turning_angles(pts).sum(), 2 * math.pi, atol=1e-6))


def strict_corner_count(pts, tol=TOL):
    """Number of vertices that are not collinear with their neighbours."""
    pts = drop_repeated(pts)
    if len(pts) < 3:
        return 0
    return int(np.count_nonzero(np.abs(_corner_cross(pts)) > tol))


def _segments_cross(p, q, r, s, tol):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1, d2 = orient(r, s, p), orient(r, s, q)
    d3, d4 = orient(p, q, r), orient(p, q, s)
    if ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)) and (
        (d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)
    ):
        return True
    return False


def is_simple(pts, tol=TOL):
    """True if no two non-adjacent edges of the polygon properly intersect
    and no vertex repeats."""
    pts = drop_repeated(pts)
    n = len(pts)
    if n < 3:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if np.hypot(*(pts[i] - pts[j])) <= tol:
                return False
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            if _segments_cross(a, b, c, d, tol):
                return False
    return True


def diameter(pts):
    """Largest pairwise vertex distance (the true diameter for convex sets)."""
    pts = np.asarray(pts, dtype=float)
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((diff ** 2).sum(axis=-1)).max())


def chebyshev_center(pts):
    """Largest inscribed disk of a convex CCW polygon.

    Solves ``max r`` subject to ``n_i . c + r <= n_i . p_i`` for every edge
    with outward unit normal ``n_i``. Returns ``(center, radius)``.
    """
    pts = drop_repeated(pts)
    edges = np.roll(pts, -1, axis=0) - pts
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    normals = np.column_stack([edges[:, 1], -edges[:, 0]]) / lengths[:, None]
    b = (normals * pts).sum(axis=1)
    a_ub = np.column_stack([normals, np.ones(len(pts))])
    res = linprog(
        c=[0.0, 0.0, -1.0],
        A_ub=a_ub,
        b_ub=b,
        bounds=[(None, None), (None, None), (0, None)],
        method="highs",
    )
    if not res.success:
        raise RuntimeError(f"Chebyshev center LP failed: {res.message}")
    return np.array(res.x[:2]), float(res.x[2])


# -- minimum enclosing circle (randomized incremental) -----------------------

def _circle_two(a, b):
    c = (a + b) / 2
    return c, float(np.hypot(*(a - c)))


def _circle_three(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-300:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay)
          + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx)
          + (cx * cx + cy * cy) * (bx - ax)) / d
    center = np.array([ux, uy])
    return center, float(np.hypot(*(a - center)))


def _inside(circle, p, eps):
    return np.hypot(*(p - circle[0])) <= circle[1] + eps


def _circle_with_two(pts, p, q, eps):
    circ = _circle_two(p, q)
    left = right = None
    px, py = p
    qx, qy = q
    for r in pts:
        if _inside(circ, r, eps):
            continue
        cross = (qx - px) * (r[1] - py) - (qy - py) * (r[0] - px)
        c = _circle_three(p, q, r)
        if c is None:
            continue
        ccross = (qx - px) * (c[0][1] - py) - (qy - py) * (c[0][0] - px)
        if cross > 0 and (left is None or ccross > (qx - px) * (left[0][1] - py) - (qy - py) * (left[0][0] - px)):
            left = c
        elif cross < 0 and (right is None or ccross < (qx - px) * (right[0][1] - py) - (qy - py) * (right[0][0] - px)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[1] <= right[1] else right


def _circle_with_one(pts, p, eps):
    circ = (p.copy(), 0.0)
    for i, q in enumerate(pts):
        if not _inside(circ, q, eps):
            if circ[1] == 0.0:
                circ = _circle_two(p, q)
            else:
                circ = _circle_with_two(pts[: i + 1], p, q, eps)
    return circ


def min_enclosing_circle(pts, seed=None):
    """Smallest circle containing all points; expected linear time.

    Returns ``(center, radius)``. The shuffle is seeded so results are
    reproducible.
    """
    pts = [np.asarray(p, dtype=float) for p in np.asarray(pts, dtype=float)]
    rng = random.Random(default_seed() if seed is None else seed)
    rng.shuffle(pts)
    scale = max(1.0, max(float(np.abs(p).max()) for p in pts))
    eps = 1e-12 * scale
    circ = None
    for i, p in enumerate(pts):
        if circ is None or not _inside(circ, p, eps):
            circ = _circle_with_one(pts[: i + 1], p, eps)
    return circ


def point_inside_segment(p, a, b, tol=TOL):
    """True if ``p`` lies in the open segment ``ab`` (collinearity relative
    to the segment length)."""
    ab = b - a
    length = math.hypot(ab[0], ab[1])
    if length <= tol:
        return False
    ap = p - a
    dist = abs(ab[0] * ap[1] - ab[1] * ap[0]) / length
    if dist > tol * max(length, 1.0):
        return False
    t = (ap[0] * ab[0] + ap[1] * ab[1]) / (length * length)
    margin = tol * max(1.0, 1.0 / length)
    return margin < t < 1 - margin
