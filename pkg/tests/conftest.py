"""Shared graph generators and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

import networkx as nx
import numpy as np
import pytest

from cubicbox.graph import Graph


# -- constructions ----------------------------------------------------------


def from_nx(G: "nx.Graph") -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(G.number_of_nodes(),
                 [(mapping[u], mapping[v]) for u, v in G.edges()])


def k4() -> Graph:
    return Graph(4, list(itertools.combinations(range(4), 2)))


def named_cubic_graphs() -> dict[str, Graph]:
    return {
        "K4": k4(),
        "K3,3": from_nx(nx.complete_bipartite_graph(3, 3)),
        "cube": from_nx(nx.hypercube_graph(3)),
        "prism": from_nx(nx.circular_ladder_graph(3)),
        "mobius-kantor": from_nx(nx.LCF_graph(16, [5, -5], 8)),
        "petersen": from_nx(nx.petersen_graph()),
    }


def all_connected_maxdeg3(n: int) -> Iterable[Graph]:
    """Every connected labeled graph on n vertices with max degree 3."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        deg = [0] * n
        edges = []
        ok = True
        b = bits
        i = 0
        while b:
            if b & 1:
                u, v = pairs[i]
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 3 or deg[v] > 3:
                    ok = False
                    break
                edges.append((u, v))
            b >>= 1
            i += 1
        if not ok or len(edges) < n - 1:
            continue
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) == n:
            yield Graph(n, edges)


def random_connected_maxdeg3(n: int, seed: int) -> Graph:
    """A random connected max-degree-3 graph (greedy edge insertion)."""
    rng = np.random.default_rng(seed)
    while True:
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        deg = [0] * n
        edges = []
        target = int(rng.integers(n - 1, 3 * n // 2 + 1))
        for u, v in pairs:
            if len(edges) >= target:
                break
            if deg[u] < 3 and deg[v] < 3:
                deg[u] += 1
                deg[v] += 1
                edges.append((u, v))
        g = Graph(n, edges)
        if _connected(g):
            return g


def _connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            y = int(y)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def all_cubic_graphs(n: int) -> list[Graph]:
    """All labeled 3-regular simple graphs on n vertices (backtracking)."""
    out: list[Graph] = []
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    adj = [set() for _ in range(n)]

    def rec(v: int) -> None:
        while v < n and deg[v] == 3:
            v += 1
        if v == n:
            out.append(Graph(n, list(edges)))
            return
        need = 3 - deg[v]
        cands = [w for w in range(v + 1, n) if deg[w] < 3 and w not in adj[v]]
        for combo in itertools.combinations(cands, need):
            for w in combo:
                deg[v] += 1
                deg[w] += 1
                adj[v].add(w)
                adj[w].add(v)
                edges.append((v, w))
            rec(v + 1)
            for w in combo:
                deg[v] -= 1
                deg[w] -= 1
                adj[v].discard(w)
                adj[w].discard(v)
                edges.pop()

    rec(0)
    return out


# -- brute-force structure oracles -------------------------------------------


def induced_shape(g: Graph, vs: Iterable[int],
                  alive: Optional[set[int]] = None) -> Optional[str]:
    """Classify the induced subgraph on vs as "cycle", "path", or None."""
    vs = set(int(v) for v in vs)
    if alive is not None and not vs <= alive:
        return None
    if not vs:
        return None
    deg = {}
    for v in vs:
        deg[v] = sum(1 for w in g.neighbors(v) if int(w) in vs)
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            y = int(y)
            if y in vs and y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != vs:
        return None
    counts = sorted(deg.values())
    if len(vs) >= 3 and all(d == 2 for d in counts):
        return "cycle"
    if len(vs) == 1 and counts == [0]:
        return "path"
    if len(vs) >= 2 and counts[:2] == [1, 1] and all(d == 2 for d in counts[2:]):
        return "path"
    return None


def _outside(g: Graph, vs: set[int], alive: Optional[set[int]]) -> list[int]:
    pool = range(g.n) if alive is None else sorted(alive)
    return [v for v in pool if v not in vs]


def oracle_removable_in_cycle(g: Graph, cycle: Iterable[int], x: int,
                              alive: Optional[set[int]] = None) -> bool:
    """Definition check: C minus x embeds in an induced cycle/path one larger."""
    cs = set(int(v) for v in cycle)
    rest = cs - {x}
    for a, b in itertools.combinations(_outside(g, cs, alive), 2):
        if induced_shape(g, rest | {a, b}, alive) in ("cycle", "path"):
            return True
    return False


def oracle_saturated_cycle(g: Graph, cycle: Iterable[int],
                           alive: Optional[set[int]] = None) -> bool:
    cyc = [int(v) for v in cycle]
    if induced_shape(g, cyc, alive) != "cycle":
        return False
    return not any(oracle_removable_in_cycle(g, cyc, x, alive) for x in cyc)


def oracle_saturated_path(g: Graph, path: Iterable[int],
                          alive: Optional[set[int]] = None) -> bool:
    ps = [int(v) for v in path]
    pset = set(ps)
    if induced_shape(g, ps, alive) != "path":
        return False
    outside = _outside(g, pset, alive)
    for y in outside:
        if induced_shape(g, pset | {y}, alive) in ("cycle", "path"):
            return False
    ends = {ps[0], ps[-1]}
    for x in ends:
        rest = pset - {x}
        for a in outside:
            if induced_shape(g, rest | {a}, alive) == "cycle":
                return False
        for a, b in itertools.combinations(outside, 2):
            if induced_shape(g, rest | {a, b}, alive) in ("cycle", "path"):
                return False
    return True


def oracle_saturated(g: Graph, kind: str, verts: Iterable[int],
                     alive: Optional[set[int]] = None) -> bool:
    if kind == "cycle":
        return oracle_saturated_cycle(g, verts, alive)
    return oracle_saturated_path(g, verts, alive)


def scan_removables(g: Graph, kind: str, verts: list[int],
                    alive: Optional[set[int]] = None) -> frozenset[int]:
    """From-scratch removable-candidate scan over the whole structure."""
    from cubicbox import _kernels as K

    amask = np.ones(g.n, np.uint8)
    if alive is not None:
        amask[:] = 0
        amask[list(alive)] = 1
    smem = np.zeros(g.n, np.uint8)
    smem[verts] = 1
    return frozenset(
        v for v in verts
        if K._pot_removable(g.indptr, g.indices, amask, smem, v)
    )
