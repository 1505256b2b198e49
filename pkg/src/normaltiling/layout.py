"""Straight-line realization of combinatorial patches.

Two stages: a barycentric (Tutte) embedding with the boundary pinned to a
regular polygon, which already makes every interior face convex for the
3-connected patches the generators produce, followed by gradient descent
with free boundary on

    sum over edges (|e| / L - 1)^2 + w * sum over corners max(0, m - turn)^2

which evens out edge lengths while keeping every corner's exterior angle
above the margin ``m``. The result is audited face by face; the report,
not the optimizer, decides whether the layout is usable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve

from . import geometry, kernels
from .errors import GeometryError, LayoutDiverged, TilingError
from .tiling import Tiling, build_halfedge, check_embedding

PENALTY_WEIGHT = 10.0


@dataclass(frozen=True)
class LayoutParams:
    max_iterations: int = 4000
    step_size: float = 0.05
    convexity_margin: float = 0.15  # radians
    target_edge_length: float = 1.0

    def __post_init__(self):
        if self.max_iterations <= 0 or self.step_size <= 0 or self.target_edge_length <= 0:
            raise ValueError("layout parameters must be positive")
        if not 0 < self.convexity_margin < math.pi / 6:
            raise ValueError("convexity_margin must lie in (0, pi/6)")


@dataclass
class LayoutReport:
    converged: bool
    iterations: int
    energy: float
    min_turn: float
    face_convex: dict[int, bool] = field(default_factory=dict)
    face_min_turn: dict[int, float] = field(default_factory=dict)
    edge_length_range: tuple[float, float] = (0.0, 0.0)
    used_fallback: bool = False

    @property
    def all_convex(self) -> bool:
        return all(self.face_convex.values())


def tutte_embedding(t: Tiling, edge_length: float = 1.0) -> dict[int, tuple[float, float]]:
    """Barycentric embedding with the boundary on a regular polygon."""
    ring = list(reversed(t.face_cycle(t.outer)))  # counter-clockwise
    m = len(ring)
    radius = edge_length / (2 * math.sin(math.pi / m))
    fixed = {v: (radius * math.cos(2 * math.pi * j / m), radius * math.sin(2 * math.pi * j / m))
             for j, v in enumerate(ring)}
    free = [v for v in t.vertices if v not in fixed]
    pos = dict(fixed)
    if free:
        col = {v: i for i, v in enumerate(free)}
        rows, cols, vals = [], [], []
        rhs = np.zeros((len(free), 2))
        for v in free:
            i = col[v]
            nbrs = [t.dest(h) for h in t.rotation(v)]
            rows.append(i)
            cols.append(i)
            vals.append(float(len(nbrs)))
            for w in nbrs:
                if w in col:
                    rows.append(i)
                    cols.append(col[w])
                    vals.append(-1.0)
                else:
                    rhs[i] += fixed[w]
        lap = sp.csr_matrix((vals, (rows, cols)), shape=(len(free), len(free)))
        sol = np.column_stack([spsolve(lap, rhs[:, 0]), spsolve(lap, rhs[:, 1])])
        for v in free:
            pos[v] = (float(sol[col[v], 0]), float(sol[col[v], 1]))
    return pos


def _problem(t: Tiling):
    vid = {v: i for i, v in enumerate(t.vertices)}
    edges = np.array([(vid[u], vid[v]) for u, v in t.edges()], dtype=np.int64)
    corners = []
    for f in t.interior_faces:
        cyc = t.face_cycle(f)
        n = len(cyc)
        for j in range(n):
            corners.append((vid[cyc[j - 1]], vid[cyc[j]], vid[cyc[(j + 1) % n]]))
    return vid, edges, np.array(corners, dtype=np.int64)


def _audit(t: Tiling):
    convex, turns = {}, {}
    for f in t.interior_faces:
        pts = geometry.drop_repeated(t.polygon(f))
        convex[f] = geometry.is_convex(pts) and geometry.strict_corner_count(pts) == len(pts)
        turns[f] = float(geometry.turning_angles(pts).min())
    return convex, turns


def realize_layout(t: Tiling, params: LayoutParams | None = None, *,
                   raise_on_failure: bool = False) -> tuple[Tiling, LayoutReport]:
    """Assign coordinates to a combinatorial patch.

    The face structure is kept exactly; only coordinates are added. If the
    iteration budget runs out before every interior face is convex the
    best valid layout is still returned, with ``report.converged`` false
    (or :class:`LayoutDiverged` raised when ``raise_on_failure``).
    """
    params = params or LayoutParams()
    if t.zero_length or t.hidden:
        raise TilingError("layout needs a patch without zero-length edges or T-vertices")
    L = params.target_edge_length
    start = tutte_embedding(t, L)
    vid, edges, corners = _problem(t)
    x = np.array([start[v] for v in t.vertices], dtype=float)
    margin = params.convexity_margin

    energy, grad = kernels.layout_energy_grad(x, edges, L, corners, margin, PENALTY_WEIGHT)
    step = params.step_size
    it = 0
    for it in range(1, params.max_iterations + 1):
        trial = x - step * grad
        e_new, g_new = kernels.layout_energy_grad(trial, edges, L, corners, margin, PENALTY_WEIGHT)
        if e_new < energy:
            improvement = energy - e_new
            x, energy, grad = trial, e_new, g_new
            step = min(step * 1.2, 10 * params.step_size)
            if improvement < 1e-12 * max(1.0, energy):
                break
        else:
            step *= 0.5
            if step < 1e-14:
                break

    def assemble(pos):
        coords = {v: (float(pos[vid[v]][0]), float(pos[vid[v]][1])) for v in t.vertices}
        return build_halfedge(t.raw_faces(), t.outer, coords, edge_to_edge=t.edge_to_edge,
                              metadata={**t.metadata, "layout": "tutte+descent"},
                              check_geometry=False)

    out = assemble(x)
    fallback = False
    try:
        check_embedding(out)
    except GeometryError:
        out = assemble(np.array([start[v] for v in t.vertices]))
        fallback = True
    convex, turns = _audit(out)
    lengths = [float(np.hypot(*(out.point(u) - out.point(v)))) for u, v in out.edges()]
    report = LayoutReport(
        converged=all(convex.values()),
        iterations=it,
        energy=float(energy),
        min_turn=min(turns.values()),
        face_convex=convex,
        face_min_turn=turns,
        edge_length_range=(min(lengths), max(lengths)),
        used_fallback=fallback,
    )
    if raise_on_failure and not report.converged:
        raise LayoutDiverged("layout did not make every interior face convex", out, report)
    return out, report
