"""Saturated induced cycle/path extraction for max-degree-3 graphs.

A *saturated* structure is an induced cycle or path that no local move can
grow: cycles admit no removable vertex (a vertex whose removal lets two
fresh vertices join), and paths are unextendable at both ends with no
removable end point.  Extraction grows a seed one move at a time; each
move inspects only a constant-radius neighborhood, and the candidate
removable set is refreshed by re-testing vertices within distance 4 of
the vertices a move touched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels as K
from .graph import Graph

__all__ = [
    "WorkingStructure",
    "ExtractionStats",
    "is_saturated",
    "extend_cycle",
    "extend_path",
    "refresh_removables",
    "find_saturated",
    "find_induced_cycle",
]


@dataclass(frozen=True)
class WorkingStructure:
    """An induced cycle or path under construction, with removable candidates."""

    kind: str  # "cycle" | "path"
    vertices: tuple[int, ...]
    removables: frozenset[int] = field(default_factory=frozenset)
    touched: int = 0  # vertices re-tested by the last removable refresh

    def __post_init__(self):
        if self.kind not in ("cycle", "path"):
            raise ValueError(f"bad kind {self.kind!r}")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in structure")


@dataclass
class ExtractionStats:
    """Per-extraction counters used by the acceptance checks."""

    size: int
    kind: str
    iterations: int
    max_touched: int

    @property
    def within_bound(self) -> bool:
        return self.iterations <= 2 * self.size + 2


class _State:
    """Reusable per-graph state arrays for the kernels."""

    def __init__(self, g: Graph, alive: Optional[np.ndarray] = None):
        n = g.n
        self.g = g
        self.indptr = g.indptr
        self.indices = g.indices
        self.alive = np.ones(n, np.uint8) if alive is None else alive
        self.smem = np.zeros(n, np.uint8)
        self.nxt = np.full(n, -1, np.int32)
        self.prv = np.full(n, -1, np.int32)
        self.rmem = np.zeros(n, np.uint8)
        # stamps stay well below 2^31 for one build (a few per extraction move)
        self.stampbuf = np.zeros(n, np.int32)
        self.stamp = 0
        self.order = np.empty(n, np.int32)
        self.ever = np.empty(3 * n + 16, np.int32)
        self.parent = np.empty(n, np.int32)
        self.depth = np.empty(n, np.int32)
        self.pos = np.empty(n, np.int32)
        self.queue = np.empty(n + 1, np.int32)

    def load_structure(self, ws: WorkingStructure) -> None:
        verts = np.asarray(ws.vertices, np.int32)
        self.smem[:] = 0
        self.nxt[:] = -1
        self.prv[:] = -1
        self.smem[verts] = 1
        if len(verts) > 1:
            for i, v in enumerate(verts):
                w = verts[(i + 1) % len(verts)]
                self.nxt[v] = w
                self.prv[w] = v
            if ws.kind == "path":
                self.nxt[verts[-1]] = -1
                self.prv[verts[0]] = -1


def _scan_removables(st: _State, vertices: Sequence[int]) -> frozenset[int]:
    return frozenset(
        int(v) for v in vertices
        if K._pot_removable(st.indptr, st.indices, st.alive, st.smem, int(v))
    )


def _alive_mask(g: Graph, alive: Optional[Iterable[int]]) -> Optional[np.ndarray]:
    if alive is None:
        return None
    mask = np.zeros(g.n, np.uint8)
    mask[np.fromiter(alive, dtype=np.int64)] = 1
    return mask


def is_saturated(g: Graph, ws: WorkingStructure,
                 alive: Optional[Iterable[int]] = None) -> bool:
    """True when no extension move applies to the structure."""
    st = _State(g, _alive_mask(g, alive))
    st.load_structure(ws)
    if ws.kind == "cycle":
        return not _scan_removables(st, ws.vertices)
    head, tail = ws.vertices[0], ws.vertices[-1]
    code, _, _ = K._path_move(st.indptr, st.indices, st.alive, st.smem,
                              st.nxt, st.prv, head, tail, len(ws.vertices))
    return code == 0


def _structure_from_state(st: _State, size: int, kind: int,
                          head: int) -> tuple[str, tuple[int, ...]]:
    out = []
    v = head
    for _ in range(size):
        out.append(int(v))
        v = st.nxt[v]
    return ("cycle" if kind == 1 else "path"), tuple(out)


def extend_cycle(g: Graph, ws: WorkingStructure, x: int,
                 alive: Optional[Iterable[int]] = None) -> WorkingStructure:
    """Remove removable vertex x and add the two fresh vertices of its pattern."""
    if ws.kind != "cycle":
        raise ValueError("structure is not a cycle")
    st = _State(g, _alive_mask(g, alive))
    st.load_structure(ws)
    if not K._pot_removable(st.indptr, st.indices, st.alive, st.smem, x):
        raise AssertionError(f"vertex {x} is not removable")
    code, a, b = K._cycle_move(st.indptr, st.indices, st.alive, st.smem,
                               st.nxt, st.prv, x)
    if code < 0:
        raise AssertionError(f"no extension move for removable vertex {x}")
    verts = list(ws.vertices)
    i = verts.index(x)
    opened = verts[i + 1:] + verts[:i]  # path from nxt[x] around to prv[x]
    if code == 10:
        kind, order = "path", opened + [a, b]
    elif code == 11:
        kind, order = "path", [b, a] + opened
    elif code == 12:
        kind, order = "path", [b] + opened + [a]
    else:
        kind, order = "cycle", opened + [a, b]
    keep = frozenset(ws.removables) & frozenset(order)
    return WorkingStructure(kind, tuple(int(v) for v in order), keep)


def extend_path(g: Graph, ws: WorkingStructure,
                alive: Optional[Iterable[int]] = None) -> WorkingStructure:
    """Apply the path extension move (append, close, or endpoint swap)."""
    if ws.kind != "path":
        raise ValueError("structure is not a path")
    st = _State(g, _alive_mask(g, alive))
    st.load_structure(ws)
    head, tail = ws.vertices[0], ws.vertices[-1]
    code, w1, w2 = K._path_move(st.indptr, st.indices, st.alive, st.smem,
                                st.nxt, st.prv, head, tail, len(ws.vertices))
    if code == 0:
        raise AssertionError("structure is already saturated")
    verts = list(ws.vertices)
    if code == 1:
        kind, order = "path", [w1] + verts
    elif code == 2:
        kind, order = "path", verts + [w1]
    elif code == 3:
        kind, order = "cycle", verts + [w1]
    elif code == 4:
        kind, order = "cycle", verts[1:] + [w1]
    elif code == 5:
        kind, order = "cycle", verts[:-1] + [w1]
    elif code == 6:
        kind, order = "path", [w2, w1] + verts[1:]
    elif code == 7:
        kind, order = "cycle", [w1] + verts[1:] + [w2]
    elif code == 8:
        kind, order = "path", verts[:-1] + [w1, w2]
    else:
        kind, order = "cycle", verts[:-1] + [w1, w2]
    keep = frozenset(ws.removables) & frozenset(order)
    return WorkingStructure(kind, tuple(int(v) for v in order), keep)


def refresh_removables(g: Graph, ws: WorkingStructure,
                       participants: Iterable[int],
                       alive: Optional[Iterable[int]] = None) -> WorkingStructure:
    """Re-test removability within distance 4 of each participant.

    The result matches a from-scratch scan of the whole structure; only the
    constant-size neighborhood of the move is actually re-tested.
    """
    st = _State(g, _alive_mask(g, alive))
    st.load_structure(ws)
    st.rmem[:] = 0
    for v in ws.removables:
        st.rmem[v] = 1
    parts = [int(p) for p in participants][:3]
    while len(parts) < 3:
        parts.append(-1)
    heap = np.empty(64, np.int64)
    ball = np.empty(1024, np.int32)
    _, _, st.stamp, touched = K._retest_ball(
        st.indptr, st.indices, st.alive, st.smem, st.rmem,
        parts[0], parts[1], parts[2], heap, 0, st.stampbuf, st.stamp, ball)
    new = frozenset(int(v) for v in np.flatnonzero(st.rmem))
    return WorkingStructure(ws.kind, ws.vertices, new, touched=touched)


def find_saturated(g: Graph,
                   seed: Optional[int] = None,
                   seed_cycle: Optional[Sequence[int]] = None,
                   alive: Optional[Iterable[int]] = None,
                   state: Optional[_State] = None) -> tuple[WorkingStructure, ExtractionStats]:
    """Grow a saturated cycle or path inside the (alive part of the) graph.

    The seed's connected component must have at least 3 vertices.  Starts
    from ``seed_cycle`` if given, else from the single vertex ``seed``
    (default: smallest alive id).
    """
    st = state if state is not None else _State(g, _alive_mask(g, alive))
    if seed_cycle is not None:
        seed_arr = np.asarray(seed_cycle, np.int32)
        kind0 = 1
    else:
        if seed is None:
            alive_ids = np.flatnonzero(st.alive)
            if alive_ids.size == 0:
                raise ValueError("empty graph")
            seed = int(alive_ids[0])
        seed_arr = np.asarray([seed], np.int32)
        kind0 = 0
    ok, st.stamp = K._comp_at_least(st.indptr, st.indices, st.alive,
                                    int(seed_arr[0]), 3, st.stampbuf, st.stamp,
                                    st.queue)
    if not ok:
        raise ValueError("component has fewer than 3 vertices")
    size, kind, iters, max_touch, st.stamp, status = K._find_strand(
        st.indptr, st.indices, st.alive, st.smem, st.nxt, st.prv, st.rmem,
        st.stampbuf, st.stamp, seed_arr, kind0, st.order, st.ever)
    if status == 2:
        raise AssertionError("removable vertex had no extension move")
    if status != 0:
        raise AssertionError(f"extraction failed (status {status})")
    if iters > 2 * size + 2:
        raise AssertionError(
            f"iteration bound violated: {iters} > 2*{size}+2")
    verts = tuple(int(v) for v in st.order[:size])
    kind_s = "cycle" if kind == 1 else "path"
    stats = ExtractionStats(size, kind_s, iters, max_touch)
    ws = WorkingStructure(kind_s, verts)
    return ws, stats


def find_induced_cycle(g: Graph,
                       start: Optional[int] = None,
                       alive: Optional[Iterable[int]] = None,
                       state: Optional[_State] = None) -> Optional[list[int]]:
    """An induced cycle in the component of start, or None if acyclic."""
    st = state if state is not None else _State(g, _alive_mask(g, alive))
    if start is None:
        alive_ids = np.flatnonzero(st.alive)
        if alive_ids.size == 0:
            return None
        start = int(alive_ids[0])
    ln, st.stamp = K._induced_cycle(st.indptr, st.indices, st.alive, start,
                                    st.parent, st.depth, st.pos,
                                    st.stampbuf, st.stamp, st.queue, st.order)
    if ln == 0:
        return None
    return [int(v) for v in st.order[:ln]]


def normalize_structure(kind: str, verts: Sequence[int]) -> tuple[int, ...]:
    """Canonical orientation: paths from the smaller endpoint; cycles from
    the smallest vertex toward its smaller neighbor."""
    verts = list(verts)
    if kind == "path":
        if len(verts) > 1 and verts[0] > verts[-1]:
            verts.reverse()
        return tuple(verts)
    i = min(range(len(verts)), key=verts.__getitem__)
    nleft = verts[i - 1]
    nright = verts[(i + 1) % len(verts)]
    out = []
    if nright <= nleft:
        for t in range(len(verts)):
            out.append(verts[(i + t) % len(verts)])
    else:
        for t in range(len(verts)):
            out.append(verts[(i - t) % len(verts)])
    return tuple(out)
