"""Interval assignment: K4 hand trace, cluster layouts, range contracts."""

import numpy as np
import pytest

from cubicbox.graph import Graph, random_cubic
from cubicbox.intervals import TEN, build_orderings, intervals_x, intervals_y, intervals_z
from cubicbox.partition import LOOSE, build_partition

from conftest import from_nx, k4, named_cubic_graphs

import networkx as nx


def _build(g):
    p = build_partition(g)
    o = build_orderings(g, p)
    return p, o, intervals_x(p, o), intervals_y(p, o), intervals_z(p, o)


def test_k4_hand_trace_exact():
    # vertices 0,1,2 form the strand triangle; 3 is their shared link
    p, o, ix, iy, iz = _build(k4())
    assert o.chain_rank[3] == 1
    assert list(o.strand_rank[:3]) == [1, 2, 3]
    assert ix[3].tolist() == [50, 80]      # [5, 8]
    assert ix[0].tolist() == [50, 50]      # [5, 5]
    assert ix[1].tolist() == [50, 55]      # [5, 5.5]
    assert ix[2].tolist() == [50, 55]
    assert iy[3].tolist() == [0, 40]       # [0, 4]
    assert iy[0].tolist() == [10, 30]      # [1, 3]
    assert iy[1].tolist() == [20, 30]      # [2, 3]
    assert iy[2].tolist() == [30, 35]      # [3, 3.5]
    assert iz[3].tolist() == [10, 15]      # [1, 1.5]
    assert iz[0].tolist() == [15, 50]      # [1.5, 5]
    assert iz[1].tolist() == [15, 50]
    assert iz[2].tolist() == [15, 50]


def test_all_endpoints_are_half_unit_multiples_mostly():
    # native grid is one half; buffer clusters refine to tenths on axis y
    for name, g in named_cubic_graphs().items():
        p, o, ix, iy, iz = _build(g)
        for arr in (ix, iz):
            assert (arr % 5 == 0).all(), name
        assert (iy % 1 == 0).all(), name


def test_interval_ranges():
    for seed in range(10):
        g = random_cubic(30, seed)
        n = g.n
        p, o, ix, iy, iz = _build(g)
        a_count = int((p.classes == LOOSE).sum())
        assert ix.min() >= -TEN
        assert ix.max() <= TEN * (2 * n + a_count) + 5
        assert iz.min() >= TEN and iz.max() <= TEN * (n + 1)
        assert (ix[:, 0] <= ix[:, 1]).all()
        assert (iy[:, 0] <= iy[:, 1]).all()
        assert (iz[:, 0] <= iz[:, 1]).all()


def test_chain_rank_bound():
    for seed in range(20):
        g = random_cubic(20, seed)
        p = build_partition(g)
        o = build_orderings(g, p)
        assert o.chain_rank.max() <= g.n - 2


def test_supergraph_property_each_axis():
    for name, g in named_cubic_graphs().items():
        p, o, ix, iy, iz = _build(g)
        for u, v in g.iter_edges():
            for arr in (ix, iy, iz):
                assert arr[u, 0] <= arr[v, 1] and arr[v, 0] <= arr[u, 1], \
                    (name, u, v)


def test_cluster_layout_matches_local_graph():
    """Inside every buffer cluster the y intervals reproduce exactly the
    cluster's edges (pairwise closed-overlap check)."""
    found = set()
    for n in (50, 100, 200):
        for seed in range(30):
            g = random_cubic(n, seed)
            p, o, ix, iy, iz = _build(g)
            for c in p.clusters:
                found.add(c.shape)
                mem = c.members()
                for i, a in enumerate(mem):
                    for b in mem[i + 1:]:
                        overlap = (iy[a, 0] <= iy[b, 1]) and (iy[b, 0] <= iy[a, 1])
                        assert overlap == g.has_edge(int(a), int(b)), \
                            (seed, c, a, b)
                base = TEN * o.strand_rank[p.inner_of[c.anchor]]
                for m in mem:
                    assert base < iy[m, 0] <= iy[m, 1] < base + TEN
    assert found == {"a", "b", "c", "d", "e"}


def test_strand_cycle_entry_is_point_interval_on_x():
    for seed in range(20):
        g = random_cubic(16, seed)
        p, o, ix, iy, iz = _build(g)
        for s in o.strands:
            if s.kind != "cycle":
                continue
            head = s.vertices[0]
            assert ix[head, 0] == ix[head, 1]
