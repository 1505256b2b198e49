"""``tiling/1`` JSON documents and CSV export.

A document lists vertices (with coordinates on all of them or on none) and
faces as cyclic vertex-id arrays; interior faces run counter-clockwise and
exactly one face is flagged ``outer``. Zero-length edges are listed under
``metadata.zero_length``; their endpoints carry identical coordinates.
"""
from __future__ import annotations

import csv
import io
import json

import jsonschema

from .errors import SchemaError
from .tiling import Tiling, build_halfedge

FORMAT = "tiling/1"

SCHEMA = {
    "type": "object",
    "required": ["format", "vertices", "faces"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": FORMAT},
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "integer"},
                    "x": {"type": "number"},
                    "y": {"type": "number"},
                },
                "dependentRequired": {"x": ["y"], "y": ["x"]},
            },
        },
        "faces": {
            "type": "array",
            "minItems": 2,
            "items": {
                "type": "object",
                "required": ["id", "vertices"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "integer"},
                    "vertices": {"type": "array", "items": {"type": "integer"}, "minItems": 3},
                    "outer": {"type": "boolean"},
                },
            },
        },
        "metadata": {
            "type": "object",
            "properties": {
                "edge_to_edge": {"type": "boolean"},
                "zero_length": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer"},
                              "minItems": 2, "maxItems": 2},
                },
            },
        },
    },
}

_validator = jsonschema.Draft202012Validator(SCHEMA)


def load_document(doc) -> Tiling:
    """Validate a decoded document and build the tiling."""
    errors = sorted(_validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise SchemaError(err.message, err.json_path)

    ids = [v["id"] for v in doc["vertices"]]
    if len(set(ids)) != len(ids):
        raise SchemaError("duplicate vertex id", "$.vertices")
    with_xy = [v for v in doc["vertices"] if "x" in v]
    if with_xy and len(with_xy) != len(ids):
        raise SchemaError("either all vertices carry coordinates or none do", "$.vertices")
    fids = [f["id"] for f in doc["faces"]]
    if len(set(fids)) != len(fids):
        raise SchemaError("duplicate face id", "$.faces")
    outer = [f["id"] for f in doc["faces"] if f.get("outer", False)]
    if len(outer) != 1:
        raise SchemaError(f"expected exactly one outer face, found {len(outer)}", "$.faces")
    known = set(ids)
    for k, f in enumerate(doc["faces"]):
        for j, v in enumerate(f["vertices"]):
            if v not in known:
                raise SchemaError(f"unknown vertex {v}", f"$.faces[{k}].vertices[{j}]")

    meta = dict(doc.get("metadata", {}))
    zero = [tuple(e) for e in meta.pop("zero_length", [])]
    e2e = meta.pop("edge_to_edge", None)
    coords = {v["id"]: (v["x"], v["y"]) for v in doc["vertices"]} if with_xy else None
    return build_halfedge(
        {f["id"]: f["vertices"] for f in doc["faces"]},
        outer[0],
        coords,
        vertices=ids,
        zero_length=zero,
        edge_to_edge=e2e,
        metadata=meta,
    )


def parse_tiling(text: str) -> Tiling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return load_document(doc)


def _rotate_min(cyc):
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


def to_document(t: Tiling) -> dict:
    vertices = []
    for v in t.vertices:
        if t.has_coords:
            x, y = t.coords[v]
            vertices.append({"id": v, "x": float(x), "y": float(y)})
        else:
            vertices.append({"id": v})
    faces = []
    for f in sorted(t.faces):
        cyc = t.face_cycle(f) if f == t.outer else t.corners(f)
        entry = {"id": f, "vertices": _rotate_min(cyc)}
        if f == t.outer:
            entry["outer"] = True
        faces.append(entry)
    meta = {k: v for k, v in t.metadata.items() if k not in ("zero_length", "edge_to_edge")}
    meta["edge_to_edge"] = t.edge_to_edge
    if t.zero_length:
        meta["zero_length"] = sorted(sorted(e) for e in t.zero_length)
    return {"format": FORMAT, "vertices": vertices, "faces": faces, "metadata": meta}


def emit_tiling(t: Tiling) -> str:
    """Canonical serialization: byte-identical for structurally equal input."""
    return json.dumps(to_document(t), indent=1, sort_keys=True) + "\n"


GROWTH_COLUMNS = ("i", "S", "J", "I", "B", "residual_S", "residual_J")


def growth_csv(seq) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(GROWTH_COLUMNS)
    for row in seq.rows():
        w.writerow(["" if x is None else x for x in row])
    return buf.getvalue()
