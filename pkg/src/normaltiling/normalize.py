"""Rewrites that bring a patch to edge-to-edge form with degree-3 vertices.

Both rewrites can only add sides to tiles, never remove them, so the index
sum is non-decreasing through :func:`normalize`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeBelowThree, MissingCoordinates, NotEdgeToEdge
from .tiling import Tiling, build_halfedge


@dataclass
class NormalizationTrace:
    splits: list = field(default_factory=list)  # (vertex, path vertex ids, zero-length edges)
    absorptions: list = field(default_factory=list)  # (vertex, face)
    index_sum_before: int = 0
    index_sum_after: int = 0

    @property
    def empty(self) -> bool:
        return not self.splits and not self.absorptions

    def to_dict(self):
        return {
            "splits": [
                {"vertex": v, "path": list(path), "zero_length": [list(e) for e in edges]}
                for v, path, edges in self.splits
            ],
            "absorptions": [{"vertex": v, "face": f} for v, f in self.absorptions],
            "index_sum_before": self.index_sum_before,
            "index_sum_after": self.index_sum_after,
        }


def index_sum(t: Tiling) -> int:
    return sum(t.index(f) for f in t.interior_faces)


def _rebuild(t: Tiling, faces, coords, zero_length, hidden=()):
    return build_halfedge(
        faces, t.outer, coords,
        zero_length=zero_length, hidden=hidden, edge_to_edge=not hidden,
        metadata=t.metadata,
    )


def refine_to_edge_to_edge(t: Tiling) -> tuple[Tiling, NormalizationTrace]:
    """Make every T-vertex a corner of the tile whose side it lies on.

    T-vertices are found geometrically when the patch is built, so this step
    turns each hidden boundary vertex into a counted side. A patch without
    coordinates is accepted only if it is flagged edge-to-edge.
    """
    before = index_sum(t)
    if not t.hidden:
        if not t.has_coords and not t.edge_to_edge:
            raise MissingCoordinates(
                "T-vertex detection needs coordinates (or an edge_to_edge flag)")
        return t, NormalizationTrace(index_sum_before=before, index_sum_after=before)
    absorbed = sorted((v, f) for f, v in t.hidden)
    out = _rebuild(t, t.raw_faces(declared=False), t.coords, [tuple(e) for e in t.zero_length])
    return out, NormalizationTrace(
        absorptions=absorbed, index_sum_before=before, index_sum_after=index_sum(out))


def split_high_degree_vertices(t: Tiling) -> tuple[Tiling, NormalizationTrace]:
    """Replace each interior vertex of degree d >= 4 by a path of d - 2
    degree-3 vertices joined by zero-length edges.

    Incident edges are handed out along the path in counter-clockwise order,
    starting from the edge towards the smallest neighbour id: the two path
    ends take two edges each, interior path vertices one. The original id
    survives as the first path vertex. Vertices on the outer boundary are
    left alone.
    """
    if t.hidden:
        raise NotEdgeToEdge("patch has unabsorbed T-vertices; refine it first")
    before = index_sum(t)
    boundary = t.boundary_vertices()
    faces = t.raw_faces(declared=False)
    coords = dict(t.coords) if t.has_coords else None
    zero = [tuple(e) for e in t.zero_length]
    next_id = max(t.vertices) + 1
    splits = []
    for v in t.vertices:
        if v in boundary:
            continue
        rot = t.rotation(v)
        d = len(rot)
        if d <= 2:
            raise DegreeBelowThree(f"interior vertex {v} has degree {d}")
        if d == 3:
            continue
        k0 = min(range(d), key=lambda k: t.dest(rot[k]))
        rot = rot[k0:] + rot[:k0]
        path = [v] + list(range(next_id, next_id + d - 3))
        next_id += d - 3

        def owner(k):
            return max(0, min(k - 1, d - 3))

        for k in range(d):
            f = t.face[rot[k]]
            hi, lo = owner((k + 1) % d), owner(k)
            step = -1 if hi >= lo else 1
            seg = [path[j] for j in range(hi, lo + step, step)]
            cyc = faces[f]
            i = cyc.index(v)
            faces[f] = cyc[:i] + seg + cyc[i + 1:]
        edges = [(path[j], path[j + 1]) for j in range(d - 3)]
        zero.extend(edges)
        if coords is not None:
            for w in path[1:]:
                coords[w] = coords[v]
        splits.append((v, tuple(path), tuple(edges)))
    if not splits:
        return t, NormalizationTrace(index_sum_before=before, index_sum_after=before)
    out = _rebuild(t, faces, coords, zero)
    return out, NormalizationTrace(
        splits=splits, index_sum_before=before, index_sum_after=index_sum(out))


def normalize(t: Tiling) -> tuple[Tiling, NormalizationTrace]:
    """Edge-to-edge refinement followed by vertex splitting."""
    mid, tr1 = refine_to_edge_to_edge(t)
    out, tr2 = split_high_degree_vertices(mid)
    return out, NormalizationTrace(
        splits=tr2.splits,
        absorptions=tr1.absorptions,
        index_sum_before=tr1.index_sum_before,
        index_sum_after=tr2.index_sum_after,
    )


def is_normalized(t: Tiling) -> bool:
    if t.hidden:
        return False
    boundary = t.boundary_vertices()
    return all(t.degree(v) == 3 for v in t.vertices if v not in boundary)
