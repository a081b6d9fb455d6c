"""Graph representation and the basic metric vocabulary.

Distances are plain hop counts.  The all-pairs matrix is a symmetric
``numpy`` int array ``d`` with ``d[u][v]`` the hop distance; every solver in
the package consumes it.  Intervals, slices and projections are the standard
metric notions for unweighted graphs:

* ``interval(d, s, t)``   -- vertices on at least one shortest (s,t)-path,
* ``interval_slice``      -- interval vertices at a fixed distance from s,
* ``projection(d, x, S)`` -- the vertices of S closest to x.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import GraphInputError

# Below this size an all-pairs solve just runs n Python BFS passes; above it
# a level-synchronous sparse-matrix BFS is much faster.
_SPARSE_BFS_CUTOFF = 64


class Graph:
    """Immutable simple connected undirected graph on vertices ``0..n-1``.

    Construction validates simplicity (no self-loops, no duplicate edges)
    and connectivity; invalid input raises :class:`GraphInputError` rather
    than being repaired.
    """

    __slots__ = ("n", "m", "adj")

    def __init__(self, n: int, edges):
        if n < 1:
            raise GraphInputError("graph needs at least one vertex")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if v in neighbor_sets[u]:
                raise GraphInputError(f"duplicate edge ({u}, {v})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        if n > 1:
            row = bfs_distances(self, 0)
            if row.min() < 0:
                missing = int(np.flatnonzero(row < 0)[0])
                raise GraphInputError(
                    f"graph is disconnected (vertex {missing} unreachable from 0)"
                )

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        """Iterate edges once each as (u, v) with u < v."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexPath:
    """An ordered vertex sequence; ``is_shortest`` means its length equals the
    endpoint distance.  ``eccentricity`` is filled in once measured."""

    vertices: tuple[int, ...]
    is_shortest: bool = True
    eccentricity: int | None = None

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class MetricReport:
    diameter: int
    diametral_pair: tuple[int, int]
    eccentricities: tuple[int, ...]


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source`` to every vertex (-1 marks unreachable,
    which a constructed Graph never produces)."""
    dist = np.full(g.n, -1, dtype=np.int32)
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def _all_pairs_sparse(g: Graph) -> np.ndarray:
    # Level-synchronous BFS from all sources at once: one sparse-by-dense
    # product per distance level.  Frontier columns are sources.
    from scipy import sparse

    n = g.n
    rows = [u for u in range(n) for _ in g.adj[u]]
    cols = [w for u in range(n) for w in g.adj[u]]
    # float32 accumulation: neighbor counts stay exact (< 2**24), whereas a
    # small integer dtype could wrap a positive count to zero
    a = sparse.csr_matrix(
        (np.ones(len(rows), dtype=np.float32), (rows, cols)), shape=(n, n)
    )
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=np.float32)
    level = 0
    while frontier.any():
        level += 1
        reached = (a @ frontier) > 0
        fresh = reached & (dist < 0)
        dist[fresh] = level
        frontier = fresh.astype(np.float32)
    return dist


def all_pairs(g: Graph) -> np.ndarray:
    """All-pairs hop distance matrix (n x n, symmetric, zero diagonal)."""
    if g.n <= _SPARSE_BFS_CUTOFF:
        return np.stack([bfs_distances(g, s) for s in range(g.n)])
    return _all_pairs_sparse(g)


def eccentricity_of_set(d: np.ndarray, vertices) -> int:
    """max over all vertices v of the distance from v to the given set."""
    idx = list(vertices)
    if not idx:
        raise ValueError("eccentricity of the empty set is undefined")
    return int(d[idx].min(axis=0).max())


def interval(d: np.ndarray, s: int, t: int) -> np.ndarray:
    """Sorted vertices lying on at least one shortest (s,t)-path."""
    return np.flatnonzero(d[s] + d[t] == d[s][t])


def interval_slice(d: np.ndarray, s: int, t: int, i: int) -> np.ndarray:
    """Interval vertices at distance ``i`` from ``s``."""
    if not 0 <= i <= d[s][t]:
        raise IndexError(f"slice index {i} outside 0..{int(d[s][t])}")
    return np.flatnonzero((d[s] + d[t] == d[s][t]) & (d[s] == i))


def projection(d: np.ndarray, x: int, vertices) -> list[int]:
    """All members of ``vertices`` at minimum distance from ``x``."""
    idx = list(vertices)
    if not idx:
        raise ValueError("projection onto the empty set is undefined")
    dists = d[x][idx]
    best = dists.min()
    return [v for v, dv in zip(idx, dists) if dv == best]


def metric_report(g: Graph, d: np.ndarray) -> MetricReport:
    """Exact diameter, lexicographically smallest diametral pair, and the full
    eccentricity vector."""
    ecc = d.max(axis=1)
    diameter = int(ecc.max())
    u, v = np.argwhere(d == diameter)[0]
    return MetricReport(
        diameter=diameter,
        diametral_pair=(int(u), int(v)),
        eccentricities=tuple(int(e) for e in ecc),
    )


def double_sweep(g: Graph) -> tuple[int, int]:
    """Two BFS sweeps: x is a furthest vertex from vertex 0, y a furthest
    vertex from x.  d(x,y) lower-bounds the diameter (exact on trees)."""
    x = int(np.argmax(bfs_distances(g, 0)))
    y = int(np.argmax(bfs_distances(g, x)))
    return x, y
