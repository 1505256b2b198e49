"""Packing-side checks and the closed-form index-sum bound.

For tiles of area at least ``A`` and diameter at most ``D`` covering the
plane with every tile having six or more sides, the total index is at most
``2 pi D^2 / A - 6``. On a finite patch we evaluate both sides of the
counting argument at every boundary-safe radius: tiles within dual distance
``i`` of the origin fit in a disk of radius ``(i + 1) D`` around the origin
tile's centroid, so there are at most ``pi (i + 1)^2 D^2 / A`` of them.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .dual import BallDecomposition, bfs_balls, build_dual
from .errors import (
    FewerThanSixSides,
    InconsistentAD,
    MissingCoordinates,
    NonConvexTile,
    NonPositiveInput,
)
from .normalize import normalize
from .tiling import Tiling, face_centroid, face_metrics, patch_summary

TOL = 1e-9


def _positive(**values):
    for name, x in values.items():
        if not (x > 0) or not math.isfinite(x):
            raise NonPositiveInput(f"{name} must be positive and finite, got {x!r}")


def index_sum_bound(A: float, D: float, *, strict: bool = False) -> float:
    """``2 pi D^2 / A - 6``: the largest total tile index compatible with
    minimum tile area ``A`` and maximum tile diameter ``D``.

    With ``strict`` the pair must be realizable by a single convex set,
    i.e. ``A <= pi D^2 / 4``.
    """
    _positive(A=A, D=D)
    if strict and A > math.pi * D * D / 4 * (1 + 1e-12):
        raise InconsistentAD(f"area {A} exceeds pi D^2 / 4 = {math.pi * D * D / 4} for D = {D}")
    return 2 * math.pi * D * D / A - 6


def packing_capacity(i: int, D: float, A: float) -> float:
    if i < 0:
        raise NonPositiveInput(f"radius must be >= 0, got {i}")
    _positive(A=A, D=D)
    return math.pi * (i + 1) ** 2 * D * D / A


@dataclass
class PackingRecord:
    i: int
    tiles: int
    capacity: float
    disk_radius: float
    max_distance: float
    contained: bool
    within_capacity: bool

    @property
    def ok(self) -> bool:
        return self.contained and self.within_capacity


def containment_check(t: Tiling, bd: BallDecomposition, D: float,
                      A: float | None = None) -> list[PackingRecord]:
    """Check both packing facts at radii ``0..boundary_safe_radius``.

    ``t`` must carry the face ids ``bd`` was computed on; ``A`` defaults to
    the patch's smallest tile area.
    """
    if not t.has_coords:
        raise MissingCoordinates("containment check needs coordinates")
    if A is None:
        A = patch_summary(t).A_min
    origin = bd.spheres[0][0]
    center = face_centroid(t, origin)
    records = []
    far = 0.0
    count = 0
    for i in range(bd.boundary_safe_radius + 1):
        for f in bd.spheres[i]:
            count += 1
            pts = t.polygon(f)
            far = max(far, float(np.hypot(*(pts - center).T).max()))
        radius = (i + 1) * D
        cap = packing_capacity(i, D, A)
        records.append(PackingRecord(
            i=i, tiles=count, capacity=cap, disk_radius=radius, max_distance=far,
            contained=far <= radius + TOL, within_capacity=count <= cap + TOL))
    return records


@dataclass
class BoundReport:
    A: float
    D: float
    C: int
    C_normalized: int
    bound: float
    satisfied: bool
    origin: int
    boundary_safe_radius: int
    non_hexagons: int
    avg_sides: float
    packing_checks: list[PackingRecord] = field(default_factory=list)

    @property
    def packing_ok(self) -> bool:
        return all(r.ok for r in self.packing_checks)

    def to_dict(self):
        d = asdict(self)
        d["packing_ok"] = self.packing_ok
        return d


def default_origin(t: Tiling) -> int:
    """Interior face whose centroid is nearest the mean of all tile centroids."""
    faces = t.interior_faces
    if not t.has_coords:
        return faces[0]
    cents = np.array([face_centroid(t, f) for f in faces])
    mid = cents.mean(axis=0)
    d = np.hypot(*(cents - mid).T)
    return faces[int(np.argmin(d))]


def verify_theorem(t: Tiling, origin: int | None = None) -> BoundReport:
    """Run every check on a geometric patch of convex tiles with >= 6 sides."""
    if not t.has_coords:
        raise MissingCoordinates("bound verification needs coordinates")
    for f in t.interior_faces:
        if t.sides(f) < 6:
            raise FewerThanSixSides(f"face {f} has {t.sides(f)} sides")
    for f in t.interior_faces:
        if not face_metrics(t, f).convex:
            raise NonConvexTile(f"face {f} is not convex")
    summary = patch_summary(t)
    A, D = summary.A_min, summary.D_max
    norm, trace = normalize(t)
    if origin is None:
        origin = default_origin(t)
    g = build_dual(norm, origin)
    bd = bfs_balls(g, len(g.nodes))
    bound = index_sum_bound(A, D, strict=True)
    C = summary.C_interior
    return BoundReport(
        A=A,
        D=D,
        C=C,
        C_normalized=trace.index_sum_after,
        bound=bound,
        satisfied=C <= bound + TOL,
        origin=origin,
        boundary_safe_radius=bd.boundary_safe_radius,
        non_hexagons=sum(1 for f in t.interior_faces if t.sides(f) != 6),
        avg_sides=float(summary.avg_sides_interior),
        packing_checks=containment_check(norm, bd, D, A),
    )
