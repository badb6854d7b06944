"""Box assembly and the independent geometric verifier.

The verifier sees only raw box coordinates: it recomputes the whole
intersection graph by brute force (closed intervals, so shared endpoints
count), compares edge sets, and checks that every adjacent pair touches,
i.e. shares exactly an endpoint on some axis, which keeps box interiors
disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

__all__ = ["VerificationReport", "assemble_boxes", "intersection_graph",
           "verify", "restrict"]


@dataclass
class VerificationReport:
    edges_match: bool
    missing_edges: list[tuple[int, int]] = field(default_factory=list)
    extra_edges: list[tuple[int, int]] = field(default_factory=list)
    touch_ok: bool = True
    non_touching_edges: list[tuple[int, int]] = field(default_factory=list)
    axis_supergraph: tuple[bool, bool, bool] = (True, True, True)

    @property
    def ok(self) -> bool:
        return self.edges_match and self.touch_ok

    def to_json_dict(self) -> dict:
        return {
            "edges_match": self.edges_match,
            "missing_edges": [list(e) for e in self.missing_edges],
            "extra_edges": [list(e) for e in self.extra_edges],
            "touch_ok": self.touch_ok,
            "non_touching_edges": [list(e) for e in self.non_touching_edges],
            "axis_supergraph": list(self.axis_supergraph),
            "ok": self.ok,
        }


def assemble_boxes(ix: np.ndarray, iy: np.ndarray, iz: np.ndarray) -> np.ndarray:
    """Stack three per-axis interval assignments into an (n, 3, 2) box array."""
    if not (len(ix) == len(iy) == len(iz)):
        raise ValueError("interval assignments cover different vertex sets")
    return np.stack([ix, iy, iz], axis=1).astype(np.int64)


def _adjacency(boxes: np.ndarray, block: int = 1024) -> np.ndarray:
    n = boxes.shape[0]
    lo = boxes[:, :, 0]
    hi = boxes[:, :, 1]
    adj = np.zeros((n, n), dtype=bool)
    for s in range(0, n, block):
        e = min(s + block, n)
        ov = np.ones((e - s, n), dtype=bool)
        for ax in range(3):
            ov &= lo[s:e, ax][:, None] <= hi[None, :, ax]
            ov &= lo[None, :, ax] <= hi[s:e, ax][:, None]
        adj[s:e] = ov
    np.fill_diagonal(adj, False)
    return adj


def intersection_graph(boxes: np.ndarray) -> Graph:
    """Pairwise closed-box overlap scan; quadratic on purpose."""
    adj = _adjacency(boxes)
    iu, iv = np.nonzero(np.triu(adj, 1))
    return Graph.from_edge_array(boxes.shape[0],
                                 np.column_stack([iu, iv]), validate=False)


def verify(g: Graph, boxes: np.ndarray) -> VerificationReport:
    """Edge-set equality plus boundary-contact check for every edge."""
    if boxes.shape[0] != g.n:
        raise ValueError(f"{boxes.shape[0]} boxes for {g.n} vertices")
    from . import _kernels as K

    boxes = np.ascontiguousarray(boxes, dtype=np.int64)
    blo = np.ascontiguousarray(boxes[:, :, 0])
    bhi = np.ascontiguousarray(boxes[:, :, 1])
    keys = g._edge_keys
    miss, extra, nontouch, s0, s1, s2 = K._verify_pairs(blo, bhi, keys, g.n)
    sup = (bool(s0), bool(s1), bool(s2))
    if miss == 0 and extra == 0 and nontouch == 0:
        return VerificationReport(edges_match=True, touch_ok=True,
                                  axis_supergraph=sup)
    # slow path: reconstruct the offending pairs for the report
    got = intersection_graph(boxes)
    got_e = got.edges()
    got_keys = got_e[:, 0] * g.n + got_e[:, 1] if got.m else np.empty(0, np.int64)
    missing = np.setdiff1d(keys, got_keys)
    extra_k = np.setdiff1d(got_keys, keys)
    e = g.edges()
    non_touching: list[tuple[int, int]] = []
    if e.size:
        u, v = e[:, 0], e[:, 1]
        lo, hi = boxes[:, :, 0], boxes[:, :, 1]
        touch = np.zeros(len(e), dtype=bool)
        overlap_all = np.ones(len(e), dtype=bool)
        for ax in range(3):
            touch |= lo[u, ax] == hi[v, ax]
            touch |= lo[v, ax] == hi[u, ax]
            overlap_all &= (lo[u, ax] <= hi[v, ax]) & (lo[v, ax] <= hi[u, ax])
        non_touching = [(int(a), int(b))
                        for a, b in e[overlap_all & ~touch]]
    return VerificationReport(
        edges_match=bool(missing.size == 0 and extra_k.size == 0),
        missing_edges=[(int(k // g.n), int(k % g.n)) for k in missing],
        extra_edges=[(int(k // g.n), int(k % g.n)) for k in extra_k],
        touch_ok=not non_touching,
        non_touching_edges=non_touching,
        axis_supergraph=sup,
    )


def restrict(boxes: np.ndarray, original_count: int) -> np.ndarray:
    """Keep the boxes of the original index-prefix vertices."""
    if original_count > boxes.shape[0]:
        raise ValueError("original count exceeds box count")
    return boxes[:original_count]
