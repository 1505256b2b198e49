"""Test tilings: honeycomb patches and single-defect disclination patches.

Both are built the same way. We first lay out a triangulated cone made of
``6 + c`` copies of a 60 degree sector of the triangular lattice, glued
cyclically around a centre point (``c = 0`` is the flat lattice). The tiling
is the dual of that triangulation: one tile per lattice point within hex
distance ``rings`` of the centre, one tiling vertex per lattice triangle.
The centre tile then has ``6 + c`` sides and every other tile six.
"""
from __future__ import annotations

import math

import numpy as np

from .tiling import Tiling, build_halfedge


def _cone(rings: int, sectors: int):
    """Lattice points and CCW triangles of the cone out to distance rings+1.

    Points are canonical keys: ``("o",)``, ``("r", s, a)`` on ray ``s`` and
    ``("p", s, a, b)`` strictly inside sector ``s``. Each sector uses the
    skew basis (u_s, u_{s+1}) so a point's hex distance is ``a + b``.
    """
    reach = rings + 1

    def key(s, a, b):
        if a == 0 and b == 0:
            return ("o",)
        if b == 0:
            return ("r", s, a)
        if a == 0:
            return ("r", (s + 1) % sectors, b)
        return ("p", s, a, b)

    triangles = []
    for s in range(sectors):
        for a in range(reach):
            for b in range(reach - a):
                triangles.append((key(s, a, b), key(s, a + 1, b), key(s, a, b + 1)))
                if a + b + 2 <= reach:
                    triangles.append((key(s, a + 1, b), key(s, a + 1, b + 1), key(s, a, b + 1)))
    return triangles


def _dist(p):
    if p[0] == "o":
        return 0
    if p[0] == "r":
        return p[2]
    return p[2] + p[3]


def _order_key(p):
    # centre first, then by ring, then around the ring
    if p[0] == "o":
        return (0, 0, 0, 0)
    if p[0] == "r":
        return (p[2], p[1], 0, 0)
    return (p[2] + p[3], p[1], p[3], 0)


def _flat_position(p, spacing):
    """Position of a lattice point in the flat (six sector) lattice."""
    if p[0] == "o":
        return np.zeros(2)
    s = p[1]
    a = p[2]
    b = 0 if p[0] == "r" else p[3]
    u = np.array([math.cos(s * math.pi / 3), math.sin(s * math.pi / 3)])
    w = np.array([math.cos((s + 1) * math.pi / 3), math.sin((s + 1) * math.pi / 3)])
    return spacing * (a * u + b * w)


def _dual_patch(rings, sectors, side=None, metadata=None):
    triangles = _cone(rings, sectors)
    # triangle lookup by its directed edge leaving a given point
    by_edge = {}
    some_tri = {}
    for ti, (p, q, r) in enumerate(triangles):
        by_edge[(p, q)] = ti
        by_edge[(q, r)] = ti
        by_edge[(r, p)] = ti
        for x in (p, q, r):
            some_tri.setdefault(x, ti)

    points = sorted({p for tri in triangles for p in tri if _dist(p) <= rings}, key=_order_key)
    fans = {}
    for p in points:
        ti = some_tri[p]
        fan = [ti]
        while True:
            tri = triangles[ti]
            i = tri.index(p)
            r = tri[(i + 2) % 3]
            ti = by_edge[(p, r)]
            if ti == fan[0]:
                break
            fan.append(ti)
        fans[p] = fan

    used = sorted({ti for fan in fans.values() for ti in fan})
    vid = {ti: i for i, ti in enumerate(used)}
    faces = {i: [vid[ti] for ti in fans[p]] for i, p in enumerate(points)}
    outer = len(points)
    faces[outer] = _outer_cycle(faces)

    coords = None
    if side is not None:
        spacing = math.sqrt(3) * side
        coords = {}
        for ti in used:
            pos = sum(_flat_position(p, spacing) for p in triangles[ti]) / 3
            coords[vid[ti]] = (float(pos[0]), float(pos[1]))
    return build_halfedge(faces, outer, coords, edge_to_edge=True, metadata=metadata)


def _outer_cycle(faces):
    """Clockwise boundary cycle of a disk given its CCW interior faces."""
    directed = set()
    for cyc in faces.values():
        n = len(cyc)
        for j in range(n):
            directed.add((cyc[j], cyc[(j + 1) % n]))
    succ = {}
    for u, v in directed:
        if (v, u) not in directed:
            succ[v] = u
    start = min(succ)
    cyc = [start]
    v = succ[start]
    while v != start:
        cyc.append(v)
        v = succ[v]
    if len(cyc) != len(succ):
        raise ValueError("boundary is not a single cycle")
    return cyc


def hex_patch(rings: int, side: float = 1.0) -> Tiling:
    """Centered patch of regular hexagons; face 0 is the central tile."""
    if rings < 0:
        raise ValueError("rings must be >= 0")
    if side <= 0:
        raise ValueError("side must be positive")
    return _dual_patch(rings, 6, side=side,
                       metadata={"generator": "hex", "rings": rings, "side": side})


def disclination_patch(rings: int, c: int) -> Tiling:
    """Combinatorial patch whose central face 0 has ``6 + c`` sides."""
    if rings < 1:
        raise ValueError("rings must be >= 1")
    if c < 1:
        raise ValueError("extra index c must be >= 1 (c = 0 is hex_patch)")
    return _dual_patch(rings, 6 + c, metadata={"generator": "disclination", "rings": rings,
                                               "extra_index": c})


def hex_face_count(rings: int) -> int:
    return 3 * rings * rings + 3 * rings + 1
