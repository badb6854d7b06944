"""Vertex classification of a cubic graph driving the box construction.

The graph is split in two rounds.  First, saturated *strands* (induced
cycles and paths) are peeled off together with their neighborhoods; what
survives is the *remnant*.  Second, the strand neighborhood (*fringe*) is
split into *anchors* (fringe vertices that kept two unclaimed remnant
neighbors) and *links*, while the remnant splits into anchor-owned
*buffers* and untouched *loose* vertices.

Ten final classes:

  cycle        strand-cycle vertex
  path_end     strand-path end point
  path_second  strand-path interior vertex adjacent to an end point
  path_inner   remaining strand-path interior vertex
  link_end     link that ends a chain of G[buffer2 + path_end + links]
  link_inner   link interior to such a chain or on a chain cycle
  anchor       fringe vertex owning a buffer cluster
  buffer1      buffer with one link neighbor
  buffer2      buffer with two link neighbors
  loose        leftover vertex (isolated vertices and edges)

Component structures are stored as flat arrays (order + offsets) so the
compiled kernels can consume them; the dataclass views are materialized
lazily.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels as K
from .extract import ExtractionStats, _State
from .graph import Graph

__all__ = [
    "CYCLE", "PATH_END", "PATH_SECOND", "PATH_INNER", "LINK_END",
    "LINK_INNER", "ANCHOR", "BUFFER1", "BUFFER2", "LOOSE", "CLASS_NAMES",
    "TheoryViolation", "StrandComponent", "ChainComponent", "AnchorCluster",
    "Partition", "primary_partition", "fine_partition", "build_partition",
    "validate_partition",
]

(CYCLE, PATH_END, PATH_SECOND, PATH_INNER, LINK_END,
 LINK_INNER, ANCHOR, BUFFER1, BUFFER2, LOOSE) = range(10)

CLASS_NAMES = ("cycle", "path_end", "path_second", "path_inner", "link_end",
               "link_inner", "anchor", "buffer1", "buffer2", "loose")

STRAND_CLASSES = (CYCLE, PATH_END, PATH_SECOND, PATH_INNER)
LINK_CLASSES = (LINK_END, LINK_INNER)

_CHAIN_KIND_NAMES = ("path", "alt_cycle", "mixed_cycle")


class TheoryViolation(RuntimeError):
    """The structural guarantees of the construction failed on this input."""


@dataclass(frozen=True)
class StrandComponent:
    kind: str  # "cycle" | "path"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ChainComponent:
    kind: str  # "path" | "alt_cycle" | "mixed_cycle"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class AnchorCluster:
    anchor: int
    x1: int
    x1p: int
    x2: int   # buffer hanging off x1, -1 if absent
    x2p: int  # buffer hanging off x1p, -1 if absent
    shape: str  # "a".."e"

    def members(self) -> tuple[int, ...]:
        out = [self.anchor, self.x1, self.x1p]
        if self.x2 >= 0:
            out.append(self.x2)
        if self.x2p >= 0:
            out.append(self.x2p)
        return tuple(out)


class Partition:
    """Full classification plus component structures and anchor maps."""

    def __init__(self, n, classes, strand_flat, strand_starts, strand_kinds,
                 chain_flat, chain_starts, chain_kinds,
                 cl_anchor, cl_x1, cl_x1p, cl_x2, cl_x2p, cl_shape,
                 link_of, fringe_of, inner_of, loose_of, stats):
        self.n = n
        self.classes = classes
        self.strand_flat = strand_flat
        self.strand_starts = strand_starts
        self.strand_kinds = strand_kinds  # 1 cycle, 0 path
        self.chain_flat = chain_flat
        self.chain_starts = chain_starts
        self.chain_kinds = chain_kinds    # 0 path, 1 alt_cycle, 2 mixed_cycle
        self.cl_anchor = cl_anchor
        self.cl_x1 = cl_x1
        self.cl_x1p = cl_x1p
        self.cl_x2 = cl_x2
        self.cl_x2p = cl_x2p
        self.cl_shape = cl_shape          # 0..4 for "a".."e"
        self.link_of = link_of
        self.fringe_of = fringe_of
        self.inner_of = inner_of
        self.loose_of = loose_of
        self.stats = stats

    @cached_property
    def strands(self) -> list[StrandComponent]:
        out = []
        for i in range(len(self.strand_starts) - 1):
            seg = self.strand_flat[self.strand_starts[i]:self.strand_starts[i + 1]]
            kind = "cycle" if self.strand_kinds[i] else "path"
            out.append(StrandComponent(kind, tuple(int(v) for v in seg)))
        return out

    @cached_property
    def chains(self) -> list[ChainComponent]:
        out = []
        for i in range(len(self.chain_starts) - 1):
            seg = self.chain_flat[self.chain_starts[i]:self.chain_starts[i + 1]]
            out.append(ChainComponent(_CHAIN_KIND_NAMES[self.chain_kinds[i]],
                                      tuple(int(v) for v in seg)))
        return out

    @cached_property
    def clusters(self) -> list[AnchorCluster]:
        return [AnchorCluster(int(self.cl_anchor[i]), int(self.cl_x1[i]),
                              int(self.cl_x1p[i]), int(self.cl_x2[i]),
                              int(self.cl_x2p[i]),
                              "abcde"[self.cl_shape[i]])
                for i in range(len(self.cl_anchor))]

    def mask(self, *codes: int) -> np.ndarray:
        out = np.zeros(self.n, dtype=bool)
        for c in codes:
            out |= self.classes == c
        return out

    def to_json_dict(self) -> dict:
        return {
            "classes": [CLASS_NAMES[c] for c in self.classes],
            "strands": [{"kind": s.kind, "vertices": list(s.vertices)}
                        for s in self.strands],
            "chains": [{"kind": c.kind, "vertices": list(c.vertices)}
                       for c in self.chains],
            "clusters": [{"anchor": c.anchor, "x1": c.x1, "x1p": c.x1p,
                          "x2": c.x2, "x2p": c.x2p, "shape": c.shape}
                         for c in self.clusters],
        }


def _neighbor_counts(g: Graph, mask: np.ndarray) -> np.ndarray:
    vals = mask[g.indices].astype(np.int64)
    out = np.zeros(g.n, dtype=np.int64)
    nonempty = g.indptr[:-1] < g.indptr[1:]
    if vals.size:
        sums = np.add.reduceat(vals, g.indptr[:-1][nonempty])
        out[nonempty] = sums
    return out


def _normalize_arr(kind: int, arr: np.ndarray) -> np.ndarray:
    """Canonical orientation: paths from the smaller endpoint; cycles from
    the smallest vertex toward its smaller neighbor."""
    a = arr.astype(np.int64)
    if kind == 0:
        return a[::-1].copy() if a[0] > a[-1] else a
    i = int(a.argmin())
    left = a[i - 1]
    right = a[(i + 1) % a.size]
    if right <= left:
        return np.concatenate([a[i:], a[:i]])
    if i == 0:
        return np.concatenate([a[:1], a[:0:-1]])
    return np.concatenate([a[i::-1], a[:i:-1]])


def _primary_arrays(g: Graph):
    """Strand peeling driver over flat state arrays.

    Returns (orders, kinds, stats, in_s, in_n1, in_a1) where orders is a
    list of normalized vertex arrays.  Spin-off pieces created by a removal
    are reprocessed from their boundary vertices (LIFO, a fixed
    deterministic order); untouched components are found by an ascending
    id sweep and get an induced-cycle seed.
    """
    if not (g.degrees() == 3).all():
        raise ValueError("primary partition requires a cubic graph")
    st = _State(g)
    alive = st.alive
    orders: list[np.ndarray] = []
    kinds: list[int] = []
    stats: list[ExtractionStats] = []
    removed_buf = np.empty(g.n, np.int32)
    boundary_buf = np.empty(g.n, np.int32)
    pending: list[int] = []
    pointer = 0
    while True:
        seedv = -1
        pristine = False
        while pending:
            v = pending.pop()
            if alive[v]:
                seedv = v
                break
        if seedv < 0:
            while pointer < g.n and not alive[pointer]:
                pointer += 1
            if pointer >= g.n:
                break
            seedv = pointer
            pristine = True
        ok, st.stamp = K._comp_at_least(g.indptr, g.indices, alive, seedv, 3,
                                        st.stampbuf, st.stamp, st.queue)
        if not ok:
            if pristine:
                pointer += 1
            continue
        kind0 = 0
        seed_arr = None
        if pristine:
            ln, st.stamp = K._induced_cycle(
                g.indptr, g.indices, alive, seedv, st.parent, st.depth,
                st.pos, st.stampbuf, st.stamp, st.queue, st.order)
            if ln:
                seed_arr = st.order[:ln].copy()
                kind0 = 1
        if seed_arr is None:
            seed_arr = np.asarray([seedv], np.int32)
        size, kind, iters, max_touch, st.stamp, status = K._find_strand(
            g.indptr, g.indices, alive, st.smem, st.nxt, st.prv, st.rmem,
            st.stampbuf, st.stamp, seed_arr, kind0, st.order, st.ever)
        if status != 0:
            raise AssertionError(f"extraction failed (status {status})")
        if iters > 2 * size + 2:
            raise AssertionError(
                f"iteration bound violated: {iters} > 2*{size}+2")
        raw = st.order[:size]
        orders.append(_normalize_arr(kind, raw))
        kinds.append(kind)
        stats.append(ExtractionStats(size, "cycle" if kind else "path",
                                     iters, max_touch))
        _, bn, st.stamp = K._remove_and_boundary(
            g.indptr, g.indices, alive, raw, size,
            st.stampbuf, st.stamp, removed_buf, boundary_buf)
        pending.extend(boundary_buf[:bn].tolist())
    in_s = np.zeros(g.n, np.uint8)
    for arr in orders:
        in_s[arr] = 1
    near_s = np.empty(g.n, np.uint8)
    K._mask_neighbor_any(g.indptr, g.indices, in_s, near_s)
    in_n1 = near_s & (in_s == 0)
    in_a1 = ((in_s == 0) & (in_n1 == 0)).view(np.uint8)
    return orders, kinds, stats, in_s, in_n1, in_a1


def primary_partition(g: Graph) -> tuple[list[StrandComponent], np.ndarray,
                                         np.ndarray, np.ndarray,
                                         list[ExtractionStats]]:
    """Peel saturated strands until no component of the survivor graph has
    three vertices; classify every vertex as strand / fringe / remnant."""
    orders, kinds, stats, in_s, in_n1, in_a1 = _primary_arrays(g)
    strands = [StrandComponent("cycle" if k else "path",
                               tuple(int(v) for v in arr))
               for k, arr in zip(kinds, orders)]
    return strands, in_s, in_n1, in_a1, stats


def fine_partition(g: Graph, in_n1: np.ndarray, in_a1: np.ndarray):
    """Scan the fringe in ascending id, promoting to anchor any vertex with
    two unclaimed remnant neighbors and buffering their remnant closure."""
    in_r, in_b, x1a, x1b, x2a, x2b, err, err_v = K._fine_partition(
        g.indptr, g.indices, in_n1, in_a1)
    if err == 1:
        raise TheoryViolation(
            f"remnant vertex {err_v} has two unclaimed remnant neighbors")
    if err == 2:
        raise TheoryViolation(
            f"fringe vertex {err_v} has three remnant neighbors")
    return in_r, in_b, x1a, x1b, x2a, x2b


def _strand_arrays(orders: list[np.ndarray], kinds: list[int]):
    lens = np.array([a.size for a in orders], np.int64)
    starts = np.zeros(len(orders) + 1, np.int64)
    np.cumsum(lens, out=starts[1:])
    flat = (np.concatenate(orders) if orders
            else np.empty(0, np.int64))
    return flat, starts, np.asarray(kinds, np.uint8)


def _classify_strand_vertices(n, flat, starts, kinds) -> np.ndarray:
    classes = np.full(n, -1, np.int8)
    classes[flat] = PATH_INNER
    kind_per_vertex = np.repeat(kinds, np.diff(starts))
    classes[flat[kind_per_vertex == 1]] = CYCLE
    pth = np.flatnonzero(kinds == 0)
    if pth.size:
        lens = starts[pth + 1] - starts[pth]
        if lens.min() < 3:
            raise TheoryViolation("strand path with fewer than 3 vertices")
        classes[flat[starts[pth] + 1]] = PATH_SECOND
        classes[flat[starts[pth + 1] - 2]] = PATH_SECOND
        classes[flat[starts[pth]]] = PATH_END
        classes[flat[starts[pth + 1] - 1]] = PATH_END
    return classes


def build_partition(g: Graph, validate: bool = True) -> Partition:
    """Run the full classification pipeline on a cubic graph."""
    orders, kinds, stats, in_s, in_n1, in_a1 = _primary_arrays(g)
    in_r, in_b, x1a, x1b, x2a, x2b = fine_partition(g, in_n1, in_a1)
    strand_flat, strand_starts, strand_kinds = _strand_arrays(orders, kinds)

    classes = _classify_strand_vertices(g.n, strand_flat, strand_starts,
                                        strand_kinds)
    in_n = (in_n1 == 1) & (in_r == 0)
    in_a = (in_a1 == 1) & (in_b == 0)
    classes[in_r == 1] = ANCHOR
    classes[in_a] = LOOSE

    link_cnt = np.empty(g.n, np.int64)
    K._count_in_mask(g.indptr, g.indices, in_n.view(np.uint8), link_cnt)
    bmask = in_b == 1
    b1 = bmask & (link_cnt == 1)
    b2 = bmask & (link_cnt == 2)
    if (bmask & ~b1 & ~b2).any():
        v = int(np.flatnonzero(bmask & ~b1 & ~b2)[0])
        raise TheoryViolation(
            f"buffer {v} has {int(link_cnt[v])} link neighbors (want 1 or 2)")
    classes[b1] = BUFFER1
    classes[b2] = BUFFER2

    chain_mask = b2 | (classes == PATH_END) | in_n
    order = np.empty(g.n, np.int32)
    cstarts = np.empty(g.n + 1, np.int64)
    ckinds = np.empty(g.n, np.int8)
    tmp = np.empty(g.n, np.int32)
    ncomp, total, err, err_v = K._chain_components(
        g.indptr, g.indices, chain_mask.view(np.uint8),
        in_n.view(np.uint8), order, cstarts, ckinds, tmp)
    if err == 1:
        raise TheoryViolation(f"chain vertex {err_v} has degree > 2 in chains")
    if err:
        raise TheoryViolation(f"chain cycle through {err_v} has no link vertex")
    chain_flat = order[:total].astype(np.int64)
    chain_starts = cstarts[:ncomp + 1].copy()
    chain_kinds = ckinds[:ncomp].copy()

    link_end = np.zeros(g.n, dtype=bool)
    is_path = chain_kinds == 0
    if is_path.any():
        link_end[chain_flat[chain_starts[:-1][is_path]]] = True
        link_end[chain_flat[chain_starts[1:][is_path] - 1]] = True
    classes[in_n & link_end] = LINK_END
    classes[in_n & ~link_end] = LINK_INNER
    if (classes < 0).any():
        v = int(np.flatnonzero(classes < 0)[0])
        raise TheoryViolation(f"vertex {v} left unclassified")

    # anchor clusters with canonical labeling (x1 = smaller of the pair)
    anchors = np.flatnonzero(in_r == 1).astype(np.int64)
    ax1 = x1a[anchors].astype(np.int64)
    ax1p = x1b[anchors].astype(np.int64)
    ax2 = x2a[anchors].astype(np.int64)
    ax2p = x2b[anchors].astype(np.int64)
    swap = ax1 > ax1p
    ax1[swap], ax1p[swap] = ax1p[swap], ax1[swap].copy()
    ax2[swap], ax2p[swap] = ax2p[swap], ax2[swap].copy()
    adj_pair = g.has_edges(ax1, ax1p) if anchors.size else np.zeros(0, bool)
    shape = np.full(anchors.size, 1, np.int8)  # default "b"
    shape[adj_pair] = 0
    if (adj_pair & ((ax2 >= 0) | (ax2p >= 0))).any():
        u = int(anchors[np.flatnonzero(adj_pair & ((ax2 >= 0) | (ax2p >= 0)))[0]])
        raise TheoryViolation(
            f"anchor {u}: adjacent buffer pair with outer buffers")
    shape[~adj_pair & (ax2 >= 0) & (ax2p < 0)] = 2
    shape[~adj_pair & (ax2 < 0) & (ax2p >= 0)] = 3
    shape[~adj_pair & (ax2 >= 0) & (ax2p >= 0)] = 4

    link_mask = (classes == LINK_END) | (classes == LINK_INNER)
    src_link = (classes == CYCLE) | (classes == PATH_SECOND) | (classes == BUFFER1)
    link_of = _unique_anchor(g, src_link, link_mask, 1, 1,
                             "expected exactly one link neighbor")
    fringe_of = _unique_anchor(g, classes == PATH_INNER,
                               link_mask | (classes == ANCHOR), 1, 1,
                               "path_inner vertex needs one anchor-or-link neighbor")
    inner_of = _unique_anchor(g, classes == ANCHOR, classes == PATH_INNER, 1, 1,
                              "anchor needs exactly one path_inner neighbor")
    loose_of = _unique_anchor(g, link_mask, classes == LOOSE, 0, 1,
                              "link vertex has two loose neighbors")

    part = Partition(g.n, classes, strand_flat, strand_starts, strand_kinds,
                     chain_flat, chain_starts, chain_kinds,
                     anchors, ax1, ax1p, ax2, ax2p, shape,
                     link_of, fringe_of, inner_of, loose_of, stats)
    if validate:
        problems = validate_partition(g, part)
        if problems:
            raise TheoryViolation("; ".join(problems[:5]))
    return part


def _unique_anchor(g: Graph, src: np.ndarray, dst: np.ndarray, lo: int, hi: int,
                   what: str) -> np.ndarray:
    out, bad = K._unique_neighbor_in(g.indptr, g.indices,
                                     src.view(np.uint8), dst.view(np.uint8),
                                     lo, hi)
    if bad >= 0:
        raise TheoryViolation(f"vertex {bad}: {what}")
    return out


# -- validation ---------------------------------------------------------------

_NONADJ_PAIRS = [
    ("loose vs strand", [LOOSE], list(STRAND_CLASSES)),
    ("loose-and-link vs anchor", [LOOSE, LINK_END, LINK_INNER], [ANCHOR]),
    ("loose vs buffer", [LOOSE], [BUFFER1, BUFFER2]),
    ("cycle vs path", [CYCLE], [PATH_END, PATH_SECOND, PATH_INNER]),
    ("cycle/path_end/path_second vs anchor",
     [CYCLE, PATH_END, PATH_SECOND], [ANCHOR]),
    ("strand vs buffer", list(STRAND_CLASSES), [BUFFER1, BUFFER2]),
    ("path_end vs path_end", [PATH_END], [PATH_END]),
    ("path_end vs path_inner", [PATH_END], [PATH_INNER]),
    ("link_inner vs loose", [LINK_INNER], [LOOSE]),
    ("anchor vs anchor", [ANCHOR], [ANCHOR]),
    ("buffer2-or-path_end independent",
     [BUFFER2, PATH_END], [BUFFER2, PATH_END]),
]

_FORBIDDEN = np.zeros((10, 10), dtype=np.uint8)
_PAIR_LABEL = {}
for _name, _xs, _ys in _NONADJ_PAIRS:
    for _x in _xs:
        for _y in _ys:
            _FORBIDDEN[_x, _y] = _FORBIDDEN[_y, _x] = 1
            _PAIR_LABEL[(_x, _y)] = _PAIR_LABEL[(_y, _x)] = _name


_COUNT_RULE_MSG = {
    1: "link with several loose neighbors",
    2: "chain-interior link with a loose neighbor",
    3: "buffer1 without exactly one link neighbor",
    4: "buffer2 without exactly two link neighbors",
    5: "cycle/path_second without exactly one link neighbor",
    6: "path_end without exactly two link neighbors",
    7: "path_inner without exactly one fringe neighbor",
    8: "anchor without exactly one path_inner neighbor",
    9: "anchor without exactly one strand neighbor",
    10: "anchor without exactly two buffer neighbors",
    11: "strand vertex with no fringe neighbor",
    12: "remnant vertex with two remnant neighbors",
    13: "fringe vertex not adjacent to a strand interior",
    14: "link between two chain partners lacks a path_inner neighbor",
}

_CHAIN_RULE_MSG = {
    1: "chain path end not marked link_end",
    2: "link_end in chain interior",
    3: "link_end on a chain cycle",
    4: "alternating chain cycle mistyped or misrotated",
    5: "mixed chain cycle is actually alternating",
    6: "mixed chain cycle not cut at a link-link edge",
}

_CLUSTER_RULE_MSG = {
    1: "vertex belongs to two clusters",
    2: "anchor not adjacent to its buffer",
    3: "cluster shape disagrees with the buffer-pair adjacency",
    4: "outer buffer not adjacent to its inner buffer",
    5: "unexpected edge inside a cluster",
    6: "two clusters touch",
}


def validate_partition(g: Graph, p: Partition) -> list[str]:
    """Check every structural contract; returns human-readable violations."""
    out: list[str] = []
    classes = p.classes
    edges = g.edges()
    eu = np.ascontiguousarray(edges[:, 0])
    ev = np.ascontiguousarray(edges[:, 1])

    bad = K._check_nonadj(eu, ev, classes, _FORBIDDEN)
    if bad >= 0:
        key = (int(classes[eu[bad]]), int(classes[ev[bad]]))
        out.append(f"non-adjacency '{_PAIR_LABEL[key]}' broken by edge "
                   f"{int(eu[bad])}-{int(ev[bad])}")

    counts = K._class_counts(g.indptr, g.indices, classes)
    rule, v = K._check_counts(classes, counts)
    if rule:
        out.append(f"{_COUNT_RULE_MSG[rule]}: vertex {int(v)}")

    if p.chain_flat.size > g.n - 2:
        out.append("chain subgraph larger than n-2")

    # strand and chain components induce their stated shapes and cover
    # exactly the matching classes
    comp_id = np.full(g.n, -1, np.int32)
    K._fill_comp_ids(p.strand_flat, p.strand_starts, comp_id)
    badv = K._check_flat_shapes(g.indptr, g.indices, p.strand_flat,
                                p.strand_starts, p.strand_kinds == 1, comp_id)
    if badv >= 0:
        out.append(f"strand component around vertex {int(badv)} is not an "
                   f"induced cycle/path")
    if not ((comp_id >= 0) == p.mask(*STRAND_CLASSES)).all():
        out.append("strand classes and strand components disagree")

    comp_id = np.full(g.n, -1, np.int32)
    K._fill_comp_ids(p.chain_flat, p.chain_starts, comp_id)
    badv = K._check_flat_shapes(g.indptr, g.indices, p.chain_flat,
                                p.chain_starts, p.chain_kinds != 0, comp_id)
    if badv >= 0:
        out.append(f"chain component around vertex {int(badv)} is not an "
                   f"induced cycle/path")
    if not ((comp_id >= 0) == p.mask(BUFFER2, PATH_END, LINK_END, LINK_INNER)).all():
        out.append("chain classes and chain components disagree")

    rule, v = K._check_chain_types(p.chain_flat, p.chain_starts,
                                   p.chain_kinds, classes)
    if rule:
        out.append(f"{_CHAIN_RULE_MSG[rule]}: vertex {int(v)}")

    cluster_id = np.full(g.n, -1, np.int64)
    rule, v = K._check_cluster_shapes(g.indptr, g.indices, classes,
                                      p.cl_anchor, p.cl_x1, p.cl_x1p,
                                      p.cl_x2, p.cl_x2p, p.cl_shape,
                                      cluster_id)
    if rule:
        out.append(f"{_CLUSTER_RULE_MSG[rule]}: vertex {int(v)}")
    elif not ((cluster_id >= 0) == p.mask(ANCHOR, BUFFER1, BUFFER2)).all():
        out.append("clusters do not partition anchors plus buffers")
    return out
