"""Vertex orderings and the three per-axis interval assignments.

Every endpoint is an exact integer in tenths of the coordinate unit; the
native granularity of the construction is one half, and the buffer-cluster
sub-intervals use single tenths.  The three assignments become the x, y
and z extents of the final boxes.

Assignment rules key off the vertex class plus three orderings: loose
vertices ranked with edge partners adjacent, chain vertices ranked
consecutively per chain component (alternating cycles, then mixed cycles,
then paths), and strand vertices ranked consecutively per strand with
cycles rotated to start at their *entry vertex* (the cycle vertex whose
link neighbor starts leftmost on the x axis).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels as K
from .graph import Graph
from .partition import Partition, StrandComponent, TheoryViolation, LOOSE

__all__ = ["Orderings", "build_orderings", "intervals_x", "intervals_y",
           "intervals_z", "TEN"]

TEN = 10  # tenths per coordinate unit

_UNSET = np.int64(1) << 60

# chain kind codes inside the ordering arrays: alternating cycles first,
# then mixed cycles, then paths (this is also the rank block order)
_ALT, _MIXED, _PATH = 0, 1, 2
_BLOCK_OF_PARTITION_KIND = np.array([_PATH, _ALT, _MIXED], dtype=np.int8)


@dataclass
class Orderings:
    n: int
    loose_rank: np.ndarray
    loose_rev: np.ndarray
    loose_partner: np.ndarray
    loose_count: int
    chain_rank: np.ndarray
    ch_kind: np.ndarray          # _ALT/_MIXED/_PATH, -1 outside chains
    ch_first: np.ndarray
    ch_last: np.ndarray
    ch_c1rank: np.ndarray
    ch_ctrank: np.ndarray
    strand_rank: np.ndarray
    st_pos: np.ndarray
    st_len: np.ndarray
    st_head: np.ndarray
    strand_rot_flat: np.ndarray
    strand_starts: np.ndarray
    strand_kinds: np.ndarray

    @cached_property
    def strands(self) -> list[StrandComponent]:
        out = []
        for i in range(len(self.strand_starts) - 1):
            seg = self.strand_rot_flat[self.strand_starts[i]:self.strand_starts[i + 1]]
            kind = "cycle" if self.strand_kinds[i] else "path"
            out.append(StrandComponent(kind, tuple(int(v) for v in seg)))
        return out


def build_orderings(g: Graph, p: Partition) -> Orderings:
    n = p.n
    in_a = (p.classes == LOOSE).view(np.uint8)
    loose_rank, loose_partner, loose_count, bad = K._pi_a(
        g.indptr, g.indices, in_a)
    if bad >= 0:
        raise TheoryViolation(f"loose vertex {bad} has two loose neighbors")
    loose_rev = np.where(loose_rank > 0, loose_count + 1 - loose_rank, 0)

    chain_rank = np.zeros(n, np.int64)
    ch_kind = np.full(n, -1, np.int8)
    ch_first = np.zeros(n, np.uint8)
    ch_last = np.zeros(n, np.uint8)
    ch_c1rank = np.zeros(n, np.int64)
    ch_ctrank = np.zeros(n, np.int64)
    nchain = len(p.chain_starts) - 1
    if nchain:
        blocks = _BLOCK_OF_PARTITION_KIND[p.chain_kinds]
        mins = np.minimum.reduceat(p.chain_flat, p.chain_starts[:-1])
        comp_order = np.lexsort((mins, blocks))
        total = K._rank_chains(p.chain_flat, p.chain_starts,
                               blocks, comp_order, n,
                               chain_rank, ch_kind, ch_first, ch_last,
                               ch_c1rank, ch_ctrank)
        if total > n - 2:
            raise TheoryViolation(
                f"chain subgraph has {total} vertices, exceeding n-2 = {n - 2}")

    # cycle entry vertex: the one whose link neighbor starts leftmost on the
    # x axis; that left endpoint is chain_rank for alternating-cycle links
    # and n + chain_rank otherwise, so this key orders identically
    linkkey = np.where(ch_kind == _ALT, chain_rank, n + chain_rank)
    strand_rank = np.zeros(n, np.int64)
    st_pos = np.zeros(n, np.int64)
    st_len = np.zeros(n, np.int64)
    st_head = np.full(n, -1, np.int64)
    rot_flat = np.empty_like(p.strand_flat)
    nstr = len(p.strand_starts) - 1
    if nstr:
        mins = np.minimum.reduceat(p.strand_flat, p.strand_starts[:-1])
        comp_order = np.argsort(mins)
        K._rank_strands(p.strand_flat, p.strand_starts, p.strand_kinds,
                        comp_order, p.link_of, linkkey, n,
                        strand_rank, st_pos, st_len, st_head, rot_flat)

    return Orderings(n, loose_rank, loose_rev, loose_partner, int(loose_count),
                     chain_rank, ch_kind, ch_first, ch_last, ch_c1rank,
                     ch_ctrank, strand_rank, st_pos, st_len, st_head,
                     rot_flat, p.strand_starts, p.strand_kinds)


def _fresh(n: int) -> tuple[np.ndarray, np.ndarray]:
    # every class is covered by exactly one kernel branch (the validator
    # pins the class/component agreement), so plain empty buffers suffice
    return np.empty(n, np.int64), np.empty(n, np.int64)


def _finish(lo: np.ndarray, hi: np.ndarray, axis: str) -> np.ndarray:
    if (lo > hi).any():
        v = int(np.flatnonzero(lo > hi)[0])
        raise TheoryViolation(f"vertex {v} got an empty {axis} interval")
    return np.column_stack([lo, hi])


def intervals_x(p: Partition, o: Orderings) -> np.ndarray:
    """First-axis intervals (endpoints in tenths)."""
    lo, hi = _fresh(p.n)
    K._intervals_x_kernel(p.classes, o.loose_rank, o.loose_partner,
                          o.loose_count, o.chain_rank, o.ch_kind, o.ch_first,
                          o.ch_last, o.ch_c1rank, o.ch_ctrank, o.strand_rank,
                          o.st_pos, o.st_len, o.st_head, p.link_of,
                          p.fringe_of, p.loose_of, lo, hi)
    out = _finish(lo, hi, "x")
    n = p.n
    if out[:, 0].min() < -TEN or out[:, 1].max() > TEN * (2 * n + o.loose_count) + 5:
        raise TheoryViolation("x intervals out of range")
    return out


def intervals_y(p: Partition, o: Orderings) -> np.ndarray:
    """Second-axis intervals (endpoints in tenths)."""
    lo, hi = _fresh(p.n)
    K._intervals_y_kernel(p.classes, o.loose_rank, o.loose_rev,
                          o.loose_partner, o.strand_rank, o.st_pos, o.st_len,
                          p.cl_anchor, p.cl_x1, p.cl_x1p, p.cl_x2, p.cl_x2p,
                          p.cl_shape, p.inner_of, p.loose_of, lo, hi)
    return _finish(lo, hi, "y")


def intervals_z(p: Partition, o: Orderings) -> np.ndarray:
    """Third-axis intervals (endpoints in tenths)."""
    lo, hi = _fresh(p.n)
    K._intervals_z_kernel(p.classes, o.chain_rank, o.ch_kind, o.ch_first,
                          o.ch_last, o.ch_c1rank, o.ch_ctrank, p.link_of,
                          p.fringe_of, lo, hi)
    out = _finish(lo, hi, "z")
    if out[:, 0].min() < TEN or out[:, 1].max() > TEN * (p.n + 1):
        raise TheoryViolation("z intervals out of range")
    return out
