"""Graph data model, text formats, cubic completion and random instances.

Vertices are dense integers 0..n-1.  Adjacency is stored in CSR form
(``indptr``/``indices``) with each neighbor list sorted, which keeps the
hot algorithmic code allocation-free and lets the verifier vectorize.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphFormatError",
    "DegreeError",
    "CubicCompletion",
    "parse_graph",
    "serialize_graph",
    "complete_to_cubic",
    "random_cubic",
    "random_max_degree3",
]


class GraphFormatError(ValueError):
    """Input text could not be parsed as a graph."""


class DegreeError(ValueError):
    """A vertex exceeds the maximum supported degree (3)."""


class Graph:
    """Immutable simple undirected graph with sorted CSR adjacency."""

    __slots__ = ("n", "indptr", "indices", "_edge_keys", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        edge_arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        self._build(n, edge_arr, validate=True)

    @classmethod
    def from_edge_array(cls, n: int, edge_arr: np.ndarray, validate: bool = True) -> "Graph":
        g = cls.__new__(cls)
        g._build(n, np.asarray(edge_arr, dtype=np.int64).reshape(-1, 2), validate)
        return g

    def _build(self, n: int, edge_arr: np.ndarray, validate: bool) -> None:
        if n <= 0:
            raise GraphFormatError("vertex count must be positive")
        if validate and edge_arr.size:
            if edge_arr.min() < 0 or edge_arr.max() >= n:
                raise GraphFormatError("vertex id out of range")
            if (edge_arr[:, 0] == edge_arr[:, 1]).any():
                raise GraphFormatError("self-loop")
        u = np.minimum(edge_arr[:, 0], edge_arr[:, 1])
        v = np.maximum(edge_arr[:, 0], edge_arr[:, 1])
        keys = u * n + v
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        if validate and keys.size > 1 and (keys[1:] == keys[:-1]).any():
            raise GraphFormatError("duplicate edge")
        u, v = u[order], v[order]
        heads = np.concatenate([u, v])
        tails = np.concatenate([v, u]).astype(np.int32)
        deg = np.bincount(heads, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        srt = np.argsort(heads * np.int64(n) + tails, kind="stable")
        self.n = n
        self.indptr = indptr
        self.indices = tails[srt]
        self._edge_keys = keys
        self._degrees = None

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return self._edge_keys.size

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            self._degrees = np.diff(self.indptr)
        return self._degrees

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.size and row[i] == v)

    def has_edges(self, u_arr: np.ndarray, v_arr: np.ndarray) -> np.ndarray:
        """Vectorized edge-membership test."""
        a = np.minimum(u_arr, v_arr).astype(np.int64)
        b = np.maximum(u_arr, v_arr).astype(np.int64)
        q = a * self.n + b
        pos = np.searchsorted(self._edge_keys, q)
        pos = np.minimum(pos, max(self._edge_keys.size - 1, 0))
        if self._edge_keys.size == 0:
            return np.zeros(q.shape, dtype=bool)
        return self._edge_keys[pos] == q

    def edges(self) -> np.ndarray:
        """Edge list as an (m, 2) array with u < v, lexicographically sorted."""
        return np.column_stack([self._edge_keys // self.n, self._edge_keys % self.n])

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        for k in self._edge_keys:
            yield int(k // self.n), int(k % self.n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self._edge_keys, other._edge_keys)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def validate(self) -> None:
        """Re-check the structural invariants (debug aid)."""
        assert self.indptr.shape == (self.n + 1,)
        for v in range(self.n):
            row = self.neighbors(v)
            assert (np.diff(row) > 0).all(), f"unsorted/duplicate neighbors at {v}"
            assert v not in row, f"self-loop at {v}"
            for w in row:
                assert v in self.neighbors(int(w)), f"asymmetric edge {v}-{w}"


@dataclass(frozen=True)
class CubicCompletion:
    """A 3-regular supergraph in which the input is an index-prefix induced subgraph."""

    completed: Graph
    original_count: int


# -- text formats ----------------------------------------------------------


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    """Parse ``text`` in the given format ("edgelist" or "graph6")."""
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "graph6":
        return _parse_graph6(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    """Serialize canonically; ``parse_graph`` of the result reproduces ``g``."""
    if fmt == "edgelist":
        lines = [f"n {g.n}"]
        lines.extend(f"{u} {v}" for u, v in g.iter_edges())
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        return _to_graph6(g)
    raise GraphFormatError(f"unknown format {fmt!r}")


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n <= 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("line 1: missing header 'n <count>'")
    return Graph(n, edges)


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("line 1: empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphFormatError("line 1: invalid graph6 character")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    else:
        raise GraphFormatError("line 1: truncated graph6 size field")
    if n <= 0:
        raise GraphFormatError("line 1: graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError("line 1: graph6 body has wrong length")
    bits = []
    for b in body:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def _to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> k) & 63) + 63) for k in (12, 6, 0))
    else:
        raise GraphFormatError("graph too large for graph6 output")
    adj = np.zeros((n, n), dtype=bool)
    e = g.edges()
    if e.size:
        adj[e[:, 0], e[:, 1]] = True
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if adj[i, j] else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        b = 0
        for bit in bits[k:k + 6]:
            b = (b << 1) | bit
        chars.append(chr(b + 63))
    return head + "".join(chars)


# -- cubic completion ------------------------------------------------------


def complete_to_cubic(h: Graph) -> CubicCompletion:
    """Embed a max-degree-3 graph as an index prefix of a 3-regular graph.

    Deficient vertices are wired to a fresh cycle with one free slot per
    missing degree.  A deficiency of 1 or 2 cannot host a cycle, so disjoint
    4-cycles (each contributing 4 to the deficiency) are appended first.
    """
    if h.max_degree() > 3:
        raise DegreeError("input has a vertex of degree > 3")
    deg = h.degrees()
    deficiency = int(3 * h.n - deg.sum())
    if deficiency == 0:
        return CubicCompletion(h, h.n)

    edges = [tuple(e) for e in h.edges()]
    n = h.n
    slots = [(v, 3 - int(deg[v])) for v in range(h.n) if deg[v] < 3]
    while deficiency < 3:
        cyc = list(range(n, n + 4))
        edges.extend((cyc[i], cyc[(i + 1) % 4]) for i in range(4))
        slots.extend((c, 1) for c in cyc)
        n += 4
        deficiency += 4

    cycle = list(range(n, n + deficiency))
    edges.extend((cycle[i], cycle[(i + 1) % deficiency]) for i in range(deficiency))
    free = iter(cycle)
    for v, need in slots:
        for _ in range(need):
            edges.append((v, next(free)))
    completed = Graph(n + deficiency, edges)
    assert completed.max_degree() == 3 and int(completed.degrees().min()) == 3
    return CubicCompletion(completed, h.n)


# -- random instances ------------------------------------------------------


def random_cubic(n: int, seed: int) -> Graph:
    """Random 3-regular simple graph via the pairing model with rejection."""
    if n < 4 or n % 2:
        raise ValueError("n must be even and at least 4")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), 3)
    while True:
        perm = rng.permutation(stubs)
        u, v = perm[0::2], perm[1::2]
        if (u == v).any():
            continue
        a, b = np.minimum(u, v), np.maximum(u, v)
        keys = a * n + b
        keys.sort()
        if (keys[1:] == keys[:-1]).any():
            continue
        return Graph.from_edge_array(n, np.column_stack([a, b]), validate=False)


def random_max_degree3(n: int, seed: int, fraction: float = 0.2) -> Graph:
    """Random max-degree-3 graph: a random cubic graph minus a random edge subset."""
    if not 0.0 <= fraction <= 1.0:
        raise ValueError("fraction must be in [0, 1]")
    g = random_cubic(n, seed)
    rng = np.random.default_rng(seed + 0x9E3779B9)
    e = g.edges()
    drop = int(round(fraction * len(e)))
    if drop == 0:
        return g
    keep = np.ones(len(e), dtype=bool)
    keep[rng.choice(len(e), size=drop, replace=False)] = False
    return Graph.from_edge_array(n, e[keep], validate=False)
