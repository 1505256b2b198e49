"""SVG rendering of patches, their duals and BFS balls."""
from __future__ import annotations

from xml.sax.saxutils import quoteattr

import numpy as np

from . import geometry
from .dual import GENERATING, ORIGIN, bfs_balls, build_dual
from .errors import MissingCoordinates
from .layout import tutte_embedding
from .normalize import normalize
from .theorem import default_origin
from .tiling import Tiling, build_halfedge

MODES = ("tiling", "dual", "balls")
WIDTH = 800.0
# ring colours cycle; chosen to stay distinguishable in greyscale too
PALETTE = ("#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf", "#1f77b4", "#9467bd", "#8c564b")


class _Canvas:
    def __init__(self, points):
        pts = np.asarray(points, dtype=float)
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        span = max(float((hi - lo).max()), 1e-9)
        self.scale = (WIDTH - 40) / span
        self.lo, self.hi = lo, hi
        self.height = float((hi[1] - lo[1]) * self.scale + 40)
        self.items = []

    def xy(self, p):
        return (20 + (p[0] - self.lo[0]) * self.scale, 20 + (self.hi[1] - p[1]) * self.scale)

    def add(self, text):
        self.items.append(text)

    def document(self, title):
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{WIDTH:.0f}" height="{self.height:.0f}" '
                f'viewBox="0 0 {WIDTH:.0f} {self.height:.0f}">\n'
                f'<title>{title}</title>\n')
        return head + "\n".join(self.items) + "\n</svg>\n"


def _with_positions(t: Tiling) -> Tiling:
    if t.has_coords:
        return t
    coords = tutte_embedding(t)
    return build_halfedge(t.raw_faces(declared=False), t.outer, coords,
                          hidden=t.hidden, check_geometry=False)


def render_svg(t: Tiling, mode: str = "tiling", bd=None, origin: int | None = None,
               radius: int | None = None) -> str:
    """Render ``t`` as SVG.

    ``tiling`` draws one polygon per interior face and needs coordinates;
    non-hexagons get the ``defect`` class. ``dual`` and ``balls`` place dual
    nodes at tile centroids, falling back to a barycentric embedding for
    combinatorial patches. ``balls`` colours nodes by BFS radius and marks
    generating nodes with an extra ring.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "tiling":
        if not t.has_coords:
            raise MissingCoordinates("tiling mode needs coordinates")
        canvas = _Canvas([t.coords[v] for v in t.vertices])
        for f in t.interior_faces:
            pts = " ".join("%.3f,%.3f" % canvas.xy(t.coords[v]) for v in t.face_cycle(f))
            cls = "tile" if t.sides(f) == 6 else "tile defect"
            fill = "#f4f1de" if t.sides(f) == 6 else "#e07a5f"
            canvas.add(f'<polygon class="{cls}" data-face="{f}" data-sides="{t.sides(f)}" '
                       f'points="{pts}" fill="{fill}" stroke="#3d405b" stroke-width="1"/>')
        return canvas.document("tiling")

    placed = _with_positions(t)
    norm, _ = normalize(placed)
    if origin is None:
        origin = bd.spheres[0][0] if bd is not None else default_origin(placed)
    g = build_dual(norm, origin)
    if mode == "balls" and bd is None:
        bd = bfs_balls(g, radius if radius is not None else len(g.nodes))
    cent = {f: geometry.centroid(geometry.drop_repeated(norm.polygon(f))) for f in g.nodes}
    canvas = _Canvas(list(cent.values()) + [norm.coords[v] for v in norm.vertices])
    for f in t.interior_faces:
        pts = " ".join("%.3f,%.3f" % canvas.xy(placed.coords[v]) for v in placed.face_cycle(f))
        canvas.add(f'<polygon class="outline" points="{pts}" fill="none" stroke="#cccccc" '
                   f'stroke-width="0.5"/>')
    for f, h in g.edges:
        (x1, y1), (x2, y2) = canvas.xy(cent[f]), canvas.xy(cent[h])
        canvas.add(f'<line class="dual-edge" x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" '
                   f'y2="{y2:.3f}" stroke="#555555" stroke-width="0.8"/>')
    r = max(2.0, 0.12 * canvas.scale)
    for f in g.nodes:
        x, y = canvas.xy(cent[f])
        classes = ["node"]
        fill = "#333333"
        if mode == "balls":
            d = bd.dist.get(f)
            if d is None:
                fill = "#dddddd"
                classes.append("outside")
            else:
                fill = PALETTE[d % len(PALETTE)]
                classes.append(f"ring-{d}")
                label = bd.labels[f]
                if label in (GENERATING, ORIGIN):
                    classes.append(label)
        if g.index(f) != 0:
            classes.append("indexed")
        attrs = f'class={quoteattr(" ".join(classes))} data-face="{f}"'
        canvas.add(f'<circle {attrs} cx="{x:.3f}" cy="{y:.3f}" r="{r:.2f}" fill="{fill}"/>')
        if "generating" in classes:
            canvas.add(f'<circle class="generating-mark" cx="{x:.3f}" cy="{y:.3f}" '
                       f'r="{1.8 * r:.2f}" fill="none" stroke="#000000" stroke-width="1.2"/>')
        if "indexed" in classes:
            canvas.add(f'<text class="index-label" x="{x + 1.5 * r:.3f}" y="{y - 1.5 * r:.3f}" '
                       f'font-size="{2 * r:.1f}">{g.index(f):+d}</text>')
    return canvas.document(mode)
