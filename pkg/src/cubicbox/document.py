"""Box document serialization (canonical JSON) and OBJ scene export.

A box document records one axis-parallel box per vertex with endpoints in
integer tenths, plus provenance (hash of the canonical edge-list form of
the input, the generator seed when known, and the tool version).  Writing
is canonical - sorted keys, tight separators, trailing newline - so a
write/read/write round trip is byte-identical.
"""

from __future__ import annotations

import hashlib
import json

import numpy as np

from . import __version__
from .graph import Graph, serialize_graph

__all__ = ["SCHEMA_VERSION", "box_document", "dumps_document",
           "loads_document", "boxes_from_document", "export_obj",
           "DocumentError"]

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """A box document is malformed or inconsistent."""


def input_hash(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()


def box_document(g: Graph, boxes: np.ndarray, seed: int | None = None) -> dict:
    if boxes.shape != (g.n, 3, 2):
        raise DocumentError(f"expected {(g.n, 3, 2)} box array, "
                            f"got {boxes.shape}")
    recs = []
    for i in range(g.n):
        recs.append({
            "id": i,
            "x": [int(boxes[i, 0, 0]), int(boxes[i, 0, 1])],
            "y": [int(boxes[i, 1, 0]), int(boxes[i, 1, 1])],
            "z": [int(boxes[i, 2, 0]), int(boxes[i, 2, 1])],
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "n": g.n,
        "boxes": recs,
        "provenance": {
            "input_sha256": input_hash(g),
            "seed": seed,
            "tool_version": __version__,
        },
    }


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("unknown or missing schema_version")
    n = doc.get("n")
    recs = doc.get("boxes")
    if not isinstance(n, int) or not isinstance(recs, list) or len(recs) != n:
        raise DocumentError("box list does not match n")
    seen = set()
    for rec in recs:
        if not isinstance(rec.get("id"), int) or not 0 <= rec["id"] < n:
            raise DocumentError("box id out of range")
        if rec["id"] in seen:
            raise DocumentError(f"duplicate box id {rec['id']}")
        seen.add(rec["id"])
        for ax in ("x", "y", "z"):
            pair = rec.get(ax)
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(e, int) for e in pair)
                    or pair[0] > pair[1]):
                raise DocumentError(f"box {rec['id']}: bad {ax} interval")
    return doc


def boxes_from_document(doc: dict) -> np.ndarray:
    n = doc["n"]
    out = np.zeros((n, 3, 2), np.int64)
    for rec in doc["boxes"]:
        i = rec["id"]
        for ax, name in enumerate(("x", "y", "z")):
            out[i, ax, 0] = rec[name][0]
            out[i, ax, 1] = rec[name][1]
    return out


# OBJ cuboid topology: 8 corners, 12 triangles (two per face), CCW outward
_CORNERS = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0),
            (0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)]
_TRIS = [(0, 2, 1), (0, 3, 2), (4, 5, 6), (4, 6, 7),
         (0, 1, 5), (0, 5, 4), (1, 2, 6), (1, 6, 5),
         (2, 3, 7), (2, 7, 6), (3, 0, 4), (3, 4, 7)]

# display-only widening of zero-width axes: 0.02 coordinate units total
_EPS_TENTHS = 0.1


def export_obj(doc: dict) -> str:
    """One cuboid mesh per vertex; coordinates in tenths of a unit."""
    boxes = boxes_from_document(doc)
    thickened = []
    lines = [
        "# touching 3-box representation",
        f"# boxes: {doc['n']}",
        "# coordinates are integer tenths of the construction unit",
    ]
    body = []
    vbase = 1
    for i in range(doc["n"]):
        lo = boxes[i, :, 0].astype(float)
        hi = boxes[i, :, 1].astype(float)
        for ax in range(3):
            if lo[ax] == hi[ax]:
                lo[ax] -= _EPS_TENTHS
                hi[ax] += _EPS_TENTHS
                thickened.append((i, "xyz"[ax]))
        body.append(f"o box_{i}")
        for cx, cy, cz in _CORNERS:
            x = hi[0] if cx else lo[0]
            y = hi[1] if cy else lo[1]
            z = hi[2] if cz else lo[2]
            body.append(f"v {x:g} {y:g} {z:g}")
        for a, b, c in _TRIS:
            body.append(f"f {vbase + a} {vbase + b} {vbase + c}")
        vbase += 8
    lines.append(f"# axes thickened for display (0.02 units): "
                 f"{len(thickened)}")
    for i, ax in thickened[:100]:
        lines.append(f"#   box {i} axis {ax}")
    return "\n".join(lines + body) + "\n"
