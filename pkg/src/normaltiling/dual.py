"""Dual triangulation of a normalized patch and its metric balls.

Nodes are interior tiles, edges join tiles sharing a side (zero-length
sides included), triangles are the tile triples around interior vertices.
Balls use the unit-length metric on the 1-skeleton.

On a finite patch the infinite-plane picture only holds away from the
boundary: ``boundary_safe_radius`` is the largest ``i`` with ``B(i + 1)``
free of tiles touching the outer face, and all labels and recurrence
residuals are restricted to it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import NotNormalized, OriginNotInterior
from .normalize import is_normalized
from .tiling import Tiling, shared_side_violations

ORIGIN, REGULAR, GENERATING, UNCLASSIFIED = "origin", "regular", "generating", "unclassified"


@dataclass(frozen=True, eq=False)
class DualGraph:
    nodes: tuple[int, ...]  # face ids, ascending
    indptr: np.ndarray
    indices: np.ndarray  # CSR over node positions
    edges: tuple[tuple[int, int], ...]  # face id pairs
    triangles: tuple[tuple[int, int, int], ...]
    sides: np.ndarray
    touches_boundary: np.ndarray
    origin: int

    @property
    def position(self) -> dict[int, int]:
        cache = self.__dict__.get("_pos")
        if cache is None:
            cache = {f: i for i, f in enumerate(self.nodes)}
            object.__setattr__(self, "_pos", cache)
        return cache

    def neighbors(self, f: int) -> list[int]:
        i = self.position[f]
        return [self.nodes[j] for j in self.indices[self.indptr[i]:self.indptr[i + 1]]]

    def degree(self, f: int) -> int:
        i = self.position[f]
        return int(self.indptr[i + 1] - self.indptr[i])

    def index(self, f: int) -> int:
        """Tile index (sides - 6); equals degree - 6 away from the boundary."""
        return int(self.sides[self.position[f]]) - 6

    def to_dict(self):
        return {
            "origin": self.origin,
            "nodes": [{"face": f, "sides": int(s), "degree": self.degree(f),
                       "touches_boundary": bool(b)}
                      for f, s, b in zip(self.nodes, self.sides, self.touches_boundary)],
            "edges": [list(e) for e in self.edges],
            "triangles": [list(tr) for tr in self.triangles],
        }


def build_dual(t: Tiling, origin_face: int) -> DualGraph:
    if origin_face not in t.faces or origin_face == t.outer:
        raise OriginNotInterior(f"origin {origin_face} is not an interior face")
    if not is_normalized(t):
        raise NotNormalized("patch must be edge-to-edge with interior vertex degrees 3")
    multi = shared_side_violations(t)
    if multi:
        f, g, c = multi[0]
        raise NotNormalized(f"faces {f} and {g} share {c} sides")

    nodes = tuple(t.interior_faces)
    pos = {f: i for i, f in enumerate(nodes)}
    adj = [[] for _ in nodes]
    edges = set()
    for h in range(len(t.origin)):
        f, g = t.face[h], t.face[t.twin[h]]
        if f == t.outer or g == t.outer:
            continue
        adj[pos[f]].append(pos[g])
        if f < g:
            edges.add((f, g))
    indptr = np.zeros(len(nodes) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adj])
    indices = np.array([j for a in adj for j in sorted(a)], dtype=np.int64)

    boundary = t.boundary_vertices()
    triangles = sorted(tuple(sorted(t.vertex_faces(v))) for v in t.vertices if v not in boundary)
    touching = set(f for v in boundary for f in t.vertex_faces(v))
    return DualGraph(
        nodes=nodes,
        indptr=indptr,
        indices=indices,
        edges=tuple(sorted(edges)),
        triangles=tuple(triangles),
        sides=np.array([t.sides(f) for f in nodes], dtype=np.int64),
        touches_boundary=np.array([f in touching for f in nodes], dtype=bool),
        origin=origin_face,
    )


@dataclass
class BallDecomposition:
    dist: dict[int, int]
    spheres: list[list[int]]
    ball_degree: dict[int, int]
    labels: dict[int, str]
    boundary_safe_radius: int
    violations: list[tuple[int, int, int]] = field(default_factory=list)  # (face, radius, degree)

    @property
    def radius(self) -> int:
        return len(self.spheres) - 1

    def ball(self, i: int) -> list[int]:
        return [f for s in self.spheres[: i + 1] for f in s]


def bfs_balls(g: DualGraph, i_max: int) -> BallDecomposition:
    """BFS spheres around the origin with regular/generating labels.

    ``i_max`` is clipped to the origin's eccentricity.
    """
    o = g.position[g.origin]
    dist = kernels.bfs_distances(g.indptr, g.indices, o)
    bdeg = kernels.ball_degrees(g.indptr, g.indices, dist)
    reached = dist >= 0
    ecc = int(dist[reached].max())
    i_eff = max(0, min(int(i_max), ecc))

    touching = reached & g.touches_boundary
    if touching.any():
        raw_safe = int(dist[touching].min()) - 2
    else:
        raw_safe = ecc
    safe = max(0, min(raw_safe, i_eff))

    spheres = [[] for _ in range(i_eff + 1)]
    dmap, degmap, labels = {}, {}, {}
    violations = []
    for i, f in enumerate(g.nodes):
        d = int(dist[i])
        if d < 0 or d > i_eff:
            continue
        spheres[d].append(f)
        dmap[f] = d
        degmap[f] = int(bdeg[i])
        if d == 0:
            labels[f] = ORIGIN
        elif d <= safe and bdeg[i] == 4:
            labels[f] = REGULAR
        elif d <= safe and bdeg[i] == 3:
            labels[f] = GENERATING
        else:
            labels[f] = UNCLASSIFIED
            if d <= safe:
                violations.append((f, d, int(bdeg[i])))
    return BallDecomposition(
        dist=dmap,
        spheres=spheres,
        ball_degree=degmap,
        labels=labels,
        boundary_safe_radius=safe,
        violations=violations,
    )


@dataclass
class GrowthSequences:
    """Per-radius counts: ``S`` sphere sizes, ``J`` generating vertices,
    ``I`` index sums, ``B`` ball sizes, for radii ``0..i_max``."""

    S: list[int]
    J: list[int]
    I: list[int]
    B: list[int]

    @property
    def i_max(self) -> int:
        return len(self.S) - 1

    @property
    def residual_S(self) -> list[int | None]:
        return [None if not 1 <= i < self.i_max else
                self.S[i + 1] - (self.S[i] + self.I[i] + self.J[i])
                for i in range(len(self.S))]

    @property
    def residual_J(self) -> list[int | None]:
        return [None if not 1 <= i < self.i_max else
                self.J[i + 1] - (self.I[i] + self.J[i])
                for i in range(len(self.S))]

    def rows(self):
        rs, rj = self.residual_S, self.residual_J
        for i in range(len(self.S)):
            yield (i, self.S[i], self.J[i], self.I[i], self.B[i], rs[i], rj[i])

    def truncated(self, i_max: int) -> "GrowthSequences":
        n = i_max + 1
        return GrowthSequences(self.S[:n], self.J[:n], self.I[:n], self.B[:n])


def growth_sequences(bd: BallDecomposition, g: DualGraph) -> GrowthSequences:
    """Sequences up to the boundary-safe radius."""
    S, J, I, B = [], [], [], []
    total = 0
    for i in range(bd.boundary_safe_radius + 1):
        sphere = bd.spheres[i]
        S.append(len(sphere))
        J.append(sum(1 for f in sphere if bd.labels[f] == GENERATING))
        I.append(sum(g.index(f) for f in sphere))
        total += len(sphere)
        B.append(total)
    return GrowthSequences(S, J, I, B)
