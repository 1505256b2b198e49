"""Half-edge model of a finite tiling patch and its per-face audits.

A patch is a planar map on a closed disk: every interior face is a tile and
one distinguished outer face closes the map to a sphere. Interior face
cycles are counter-clockwise; the outer cycle runs clockwise, so every
undirected edge is used once in each direction.

Tiles that are not edge-to-edge are accepted when coordinates are given: a
side ``a -> b`` of a tile that has no reverse in any other face is scanned
for vertices of the patch lying strictly inside it. Those vertices are
threaded into the tile's cycle (so the half-edge map stays valid) but stay
*hidden*: they are not corners of that tile and do not count as its sides
until :func:`normaltiling.normalize.refine_to_edge_to_edge` absorbs them.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import geometry
from .errors import (
    DanglingVertex,
    EmptyPatch,
    GeometryError,
    MissingCoordinates,
    NonManifoldEdge,
    NonManifoldVertex,
    NonSimplePolygon,
    OrientationMismatch,
    TilingError,
    TopologyError,
)


@dataclass(frozen=True)
class Face:
    id: int
    edge: int  # one half-edge on the boundary
    outer: bool


@dataclass(frozen=True, eq=False)
class Tiling:
    """Immutable half-edge structure. Build it with :func:`build_halfedge`."""

    vertices: tuple[int, ...]
    coords: Mapping[int, tuple[float, float]] | None
    origin: tuple[int, ...]
    twin: tuple[int, ...]
    next: tuple[int, ...]
    face: tuple[int, ...]
    faces: Mapping[int, Face]
    outer: int
    zero_length: frozenset = frozenset()
    hidden: frozenset = frozenset()
    edge_to_edge: bool = False
    metadata: Mapping = field(default_factory=dict)

    # -- basic queries ------------------------------------------------------

    @property
    def has_coords(self) -> bool:
        return self.coords is not None

    @property
    def interior_faces(self) -> list[int]:
        return sorted(f for f in self.faces if f != self.outer)

    @property
    def n_edges(self) -> int:
        return len(self.origin) // 2

    def dest(self, h: int) -> int:
        return self.origin[self.next[h]]

    def face_half_edges(self, f: int) -> list[int]:
        start = self.faces[f].edge
        out = [start]
        h = self.next[start]
        while h != start:
            out.append(h)
            h = self.next[h]
        return out

    def face_cycle(self, f: int) -> list[int]:
        """All boundary vertices of face ``f`` in order, hidden ones included."""
        return [self.origin[h] for h in self.face_half_edges(f)]

    def corners(self, f: int) -> list[int]:
        """Boundary vertices that count as sides of ``f``."""
        if not self.hidden:
            return self.face_cycle(f)
        return [v for v in self.face_cycle(f) if (f, v) not in self.hidden]

    def sides(self, f: int) -> int:
        return len(self.corners(f))

    def index(self, f: int) -> int:
        return self.sides(f) - 6

    @property
    def _outgoing(self) -> dict[int, int]:
        cache = self.__dict__.get("_outgoing_cache")
        if cache is None:
            cache = {}
            for h, v in enumerate(self.origin):
                cache.setdefault(v, h)
            object.__setattr__(self, "_outgoing_cache", cache)
        return cache

    @property
    def prev(self) -> tuple[int, ...]:
        cache = self.__dict__.get("_prev_cache")
        if cache is None:
            p = [0] * len(self.next)
            for h, n in enumerate(self.next):
                p[n] = h
            cache = tuple(p)
            object.__setattr__(self, "_prev_cache", cache)
        return cache

    def rotation(self, v: int) -> list[int]:
        """Outgoing half-edges of ``v`` in counter-clockwise order."""
        start = self._outgoing[v]
        prev = self.prev
        out = [start]
        h = self.twin[prev[start]]
        while h != start:
            out.append(h)
            h = self.twin[prev[h]]
        return out

    def degree(self, v: int) -> int:
        return len(self.rotation(v))

    def vertex_faces(self, v: int) -> list[int]:
        return [self.face[h] for h in self.rotation(v)]

    def boundary_vertices(self) -> set[int]:
        return set(self.face_cycle(self.outer))

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as sorted vertex pairs."""
        out = set()
        for h, u in enumerate(self.origin):
            v = self.dest(h)
            out.add((min(u, v), max(u, v)))
        return sorted(out)

    def point(self, v: int) -> np.ndarray:
        if self.coords is None:
            raise MissingCoordinates("patch has no coordinates")
        return np.asarray(self.coords[v], dtype=float)

    def polygon(self, f: int) -> np.ndarray:
        if self.coords is None:
            raise MissingCoordinates("patch has no coordinates")
        return np.array([self.coords[v] for v in self.face_cycle(f)], dtype=float)

    def raw_faces(self, *, declared: bool = True) -> dict[int, list[int]]:
        """Face cycles keyed by id; ``declared`` drops hidden vertices."""
        if declared:
            return {f: self.corners(f) if f != self.outer else self.face_cycle(f)
                    for f in self.faces}
        return {f: self.face_cycle(f) for f in self.faces}

    # -- structural identity ------------------------------------------------

    def canonical(self):
        def rot(cyc):
            i = cyc.index(min(cyc))
            return tuple(cyc[i:] + cyc[:i])

        coords = None
        if self.coords is not None:
            coords = tuple((v, tuple(map(float, self.coords[v]))) for v in self.vertices)
        return (
            self.vertices,
            coords,
            tuple((f, rot(self.face_cycle(f))) for f in sorted(self.faces)),
            self.outer,
            tuple(sorted(tuple(sorted(e)) for e in self.zero_length)),
            tuple(sorted(self.hidden)),
        )

    def __eq__(self, other):
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return (f"Tiling(V={len(self.vertices)}, E={self.n_edges}, F={len(self.faces)}, "
                f"geometric={self.has_coords})")


def _edge_key(u, v):
    return frozenset((u, v))


def _insert_t_vertices(faces, outer, coords):
    directed = set()
    for cyc in faces.values():
        n = len(cyc)
        for j in range(n):
            directed.add((cyc[j], cyc[(j + 1) % n]))
    pts = {v: np.asarray(p, dtype=float) for v, p in coords.items()}
    hidden = set()
    new_faces = {}
    for f, cyc in faces.items():
        if f == outer:
            new_faces[f] = list(cyc)
            continue
        n = len(cyc)
        out = []
        for j in range(n):
            a, b = cyc[j], cyc[(j + 1) % n]
            out.append(a)
            if (b, a) in directed:
                continue
            pa, pb = pts[a], pts[b]
            found = []
            for w, pw in pts.items():
                if w in (a, b):
                    continue
                if geometry.point_inside_segment(pw, pa, pb):
                    t = float(np.dot(pw - pa, pb - pa))
                    found.append((t, w))
            for _, w in sorted(found):
                out.append(w)
                hidden.add((f, w))
        new_faces[f] = out
    return new_faces, hidden


def build_halfedge(
    faces: Mapping[int, Sequence[int]],
    outer: int,
    coords: Mapping[int, Sequence[float]] | None = None,
    *,
    vertices: Sequence[int] | None = None,
    zero_length=(),
    hidden=(),
    edge_to_edge: bool | None = None,
    metadata: Mapping | None = None,
    check_geometry: bool = True,
) -> Tiling:
    """Validate raw face cycles and assemble a :class:`Tiling`.

    ``faces`` maps face id to its cyclic vertex list; ``outer`` names the
    outer face. ``vertices`` optionally lists every declared vertex so
    unused ones are reported. ``hidden`` pre-declares (face, vertex) pairs
    already threaded into cycles; normally these are detected from
    coordinates instead.
    """
    faces = {int(f): [int(v) for v in cyc] for f, cyc in faces.items()}
    if outer not in faces:
        raise TopologyError(f"outer face {outer} not among faces")
    if len(faces) < 2:
        raise TopologyError("need at least one interior face")
    for f, cyc in faces.items():
        if len(cyc) < 3:
            raise TopologyError(f"face {f} has fewer than 3 vertices")
        if len(set(cyc)) != len(cyc):
            raise TopologyError(f"face {f} repeats a vertex")

    used = set(v for cyc in faces.values() for v in cyc)
    declared = set(vertices) if vertices is not None else set(used)
    if coords is not None:
        coords = {int(v): (float(p[0]), float(p[1])) for v, p in coords.items()}
        declared |= set(coords)
    dangling = declared - used
    if dangling:
        raise DanglingVertex(f"vertices not on any face: {sorted(dangling)[:10]}")
    undeclared = used - declared
    if undeclared:
        raise TopologyError(f"face vertices not declared: {sorted(undeclared)[:10]}")
    if coords is not None:
        missing = used - set(coords)
        if missing:
            raise MissingCoordinates(f"coordinates missing for {sorted(missing)[:10]}")

    hidden = set((int(f), int(v)) for f, v in hidden)
    if coords is not None:
        faces, found = _insert_t_vertices(faces, outer, coords)
        hidden |= found

    # undirected usage count, then orientation
    use = Counter()
    directed = {}
    for f in sorted(faces):
        cyc = faces[f]
        n = len(cyc)
        for j in range(n):
            u, v = cyc[j], cyc[(j + 1) % n]
            use[_edge_key(u, v)] += 1
    for key, cnt in use.items():
        if cnt != 2:
            u, v = sorted(key)
            raise NonManifoldEdge(f"edge ({u}, {v}) lies on {cnt} face(s)")

    origin, nxt, fac = [], [], []
    first = {}
    for f in sorted(faces):
        cyc = faces[f]
        n = len(cyc)
        base = len(origin)
        first[f] = base
        for j in range(n):
            u, v = cyc[j], cyc[(j + 1) % n]
            if (u, v) in directed:
                raise OrientationMismatch(
                    f"edge ({u}, {v}) traversed in the same direction by faces "
                    f"{fac[directed[(u, v)]]} and {f}")
            directed[(u, v)] = base + j
            origin.append(u)
            fac.append(f)
            nxt.append(base + (j + 1) % n)
    twin = [directed[(origin[nxt[h]], origin[h])] for h in range(len(origin))]

    # each vertex's fan must be a single cycle
    prev = [0] * len(nxt)
    for h, n_ in enumerate(nxt):
        prev[n_] = h
    out_by_v = defaultdict(list)
    for h, u in enumerate(origin):
        out_by_v[u].append(h)
    for v, hs in out_by_v.items():
        start = hs[0]
        seen = 1
        h = twin[prev[start]]
        while h != start:
            seen += 1
            h = twin[prev[h]]
            if seen > len(hs):
                break
        if seen != len(hs):
            raise NonManifoldVertex(f"vertex {v} has a pinched neighbourhood")

    n_v, n_e, n_f = len(used), len(origin) // 2, len(faces)
    if n_v - n_e + n_f != 2:
        raise TopologyError(f"Euler characteristic V-E+F = {n_v - n_e + n_f}, expected 2")

    zl = set()
    for e in zero_length:
        u, v = (int(x) for x in e)
        if (u, v) not in directed:
            raise TopologyError(f"zero-length flag on non-edge ({u}, {v})")
        zl.add(_edge_key(u, v))
    for f, v in hidden:
        if f == outer or v not in faces.get(f, ()):
            raise TopologyError(f"hidden vertex {v} not on interior face {f}")

    if edge_to_edge is None:
        edge_to_edge = not hidden
    t = Tiling(
        vertices=tuple(sorted(used)),
        coords=coords,
        origin=tuple(origin),
        twin=tuple(twin),
        next=tuple(nxt),
        face=tuple(fac),
        faces={f: Face(f, first[f], f == outer) for f in sorted(faces)},
        outer=outer,
        zero_length=frozenset(zl),
        hidden=frozenset(hidden),
        edge_to_edge=bool(edge_to_edge),
        metadata=dict(metadata or {}),
    )
    if coords is not None and check_geometry:
        check_embedding(t)
    return t


def check_embedding(t: Tiling, tol: float = geometry.TOL) -> None:
    """Raise :class:`GeometryError` unless the coordinates embed the map."""
    for u, v in t.edges():
        length = float(np.hypot(*(t.point(u) - t.point(v))))
        flagged = _edge_key(u, v) in t.zero_length
        if flagged and length > tol:
            raise GeometryError(f"zero-length edge ({u}, {v}) has length {length:g}")
        if not flagged and length <= tol:
            raise GeometryError(f"edge ({u}, {v}) has coincident endpoints but is not flagged")
    total = 0.0
    for f in t.interior_faces:
        pts = geometry.drop_repeated(t.polygon(f))
        if not geometry.is_simple(pts):
            raise NonSimplePolygon(f"face {f} is not a simple polygon")
        a = geometry.signed_area(pts)
        if a <= 0:
            raise GeometryError(f"face {f} is not positively oriented")
        total += a
    hull = -geometry.signed_area(geometry.drop_repeated(t.polygon(t.outer)))
    if hull <= 0 or abs(total - hull) > 1e-9 * max(1.0, hull) * len(t.faces):
        raise GeometryError(
            f"interior faces cover area {total:.12g} but the outer boundary encloses {hull:.12g}; "
            "faces overlap or the boundary is misoriented")


def shared_side_violations(t: Tiling) -> list[tuple[int, int, int]]:
    """Pairs of interior faces sharing more than one edge, as ``(f, g, count)``.

    Convex tiles meet along at most one side, so any entry flags either a
    degree-2 vertex between them or a non-convex configuration.
    """
    count = Counter()
    for h in range(len(t.origin)):
        f, g = t.face[h], t.face[t.twin[h]]
        if f < g and t.outer not in (f, g):
            count[(f, g)] += 1
    return [(f, g, c) for (f, g), c in sorted(count.items()) if c > 1]


# -- audits -----------------------------------------------------------------

@dataclass(frozen=True)
class FaceMetrics:
    sides: int
    index: int
    area: float | None = None
    diameter: float | None = None
    convex: bool | None = None
    inradius: float | None = None
    circumradius: float | None = None
    geometric_corners: int | None = None


def face_metrics(t: Tiling, f: int, geometric: bool | None = None) -> FaceMetrics:
    """Side count, index and (when coordinates exist) shape measures of ``f``.

    ``inradius`` is only defined for convex faces and is ``None`` otherwise.
    Pass ``geometric=True`` to demand the shape fields.
    """
    if f not in t.faces:
        raise TilingError(f"no face {f}")
    if f == t.outer:
        raise TilingError("face metrics are defined for interior faces only")
    sides = t.sides(f)
    if geometric is None:
        geometric = t.has_coords
    if not geometric:
        return FaceMetrics(sides=sides, index=sides - 6)
    if not t.has_coords:
        raise MissingCoordinates("geometric face metrics need coordinates")
    pts = geometry.drop_repeated(t.polygon(f))
    area = geometry.signed_area(pts)
    if area <= 0 or not geometry.is_simple(pts):
        raise NonSimplePolygon(f"face {f} is not a simple positively oriented polygon")
    convex = geometry.is_convex(pts)
    inradius = geometry.chebyshev_center(pts)[1] if convex else None
    _, circ = geometry.min_enclosing_circle(pts)
    return FaceMetrics(
        sides=sides,
        index=sides - 6,
        area=area,
        diameter=geometry.diameter(pts),
        convex=convex,
        inradius=inradius,
        circumradius=circ,
        geometric_corners=geometry.strict_corner_count(pts),
    )


@dataclass(frozen=True)
class PatchSummary:
    C_interior: int
    avg_sides_interior: Fraction
    interior_face_count: int
    A_min: float | None = None
    D_max: float | None = None
    r_min: float | None = None
    R_max: float | None = None


def patch_summary(t: Tiling) -> PatchSummary:
    """Aggregate face metrics over interior faces (the outer face is skipped)."""
    faces = t.interior_faces
    if not faces:
        raise EmptyPatch("patch has no interior faces")
    metrics = [face_metrics(t, f) for f in faces]
    total_sides = sum(m.sides for m in metrics)
    out = dict(
        C_interior=sum(m.index for m in metrics),
        avg_sides_interior=Fraction(total_sides, len(faces)),
        interior_face_count=len(faces),
    )
    if t.has_coords:
        inr = [m.inradius for m in metrics]
        out.update(
            A_min=min(m.area for m in metrics),
            D_max=max(m.diameter for m in metrics),
            r_min=None if any(r is None for r in inr) else min(inr),
            R_max=max(m.circumradius for m in metrics),
        )
    return PatchSummary(**out)


def face_centroid(t: Tiling, f: int) -> np.ndarray:
    return geometry.centroid(geometry.drop_repeated(t.polygon(f)))


def euler_characteristic(t: Tiling) -> int:
    return len(t.vertices) - t.n_edges + len(t.faces)
