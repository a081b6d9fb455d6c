"""Structural analysis used to pick a safe window width gamma.

The window dynamic program is exact whenever gamma is at least the graph's
projection gap, so this module supplies cheap upper bounds for it:

* chordal graphs          -> gamma 0,
* dually chordal graphs   -> gamma 1 (accepted as a user assertion),
* any graph               -> (max layering-partition cluster diameter) - 1,
* delta-hyperbolic graphs -> 4 * delta (exact delta is an O(n^4) scan).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ClassMismatchError
from .graph import Graph

# Exact hyperbolicity is quartic; above this size select_gamma skips it.
HYPERBOLICITY_EXACT_LIMIT = 64


class UnionFind:
    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, u: int, v: int):
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]


@dataclass(frozen=True)
class ChordalityCheck:
    holds: bool
    elimination_order: tuple[int, ...] | None = None
    witness_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class LayeringPartition:
    """BFS layers from ``root`` refined into clusters: two same-layer vertices
    share a cluster iff they are connected without using shallower layers."""

    root: int
    clusters: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GammaEstimate:
    value: int
    method: str  # class-chordal | class-dually-chordal | layering-partition |
    #              hyperbolicity-bound | oracle | user
    note: str | None = None


def lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order via partition refinement."""
    blocks: list[list[int]] = [list(range(g.n))]
    order: list[int] = []
    while blocks:
        block = blocks[0]
        v = block.pop(0)
        if not block:
            blocks.pop(0)
        order.append(v)
        nbrs = set(g.adj[v])
        refined: list[list[int]] = []
        for b in blocks:
            hit = [w for w in b if w in nbrs]
            miss = [w for w in b if w not in nbrs]
            if hit:
                refined.append(hit)
            if miss:
                refined.append(miss)
        blocks = refined
    return order


def _extract_chordless_cycle(g: Graph, v: int, u: int, w: int) -> tuple[int, ...] | None:
    """Chordless cycle through v given non-adjacent u, w in N(v): v plus a
    shortest u-w path avoiding the rest of N[v]."""
    blocked = set(g.adj[v]) | {v}
    blocked.discard(u)
    blocked.discard(w)
    prev = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == w:
            path = []
            while a is not None:
                path.append(a)
                a = prev[a]
            return (v, *reversed(path))
        for b in g.adj[a]:
            if b not in blocked and b not in prev:
                prev[b] = a
                queue.append(b)
    return None


def _chordless_cycle_witness(g: Graph, v: int, u: int, w: int) -> tuple[int, ...]:
    cycle = _extract_chordless_cycle(g, v, u, w)
    if cycle is not None:
        return cycle
    # Fallback: scan every non-adjacent pair with a common neighbor.  A
    # non-chordal graph always yields a witness here (take three consecutive
    # vertices of any induced long cycle).
    neighbor_sets = [set(a) for a in g.adj]
    for c in range(g.n):
        nbrs = g.adj[c]
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if b in neighbor_sets[a]:
                    continue
                cycle = _extract_chordless_cycle(g, c, a, b)
                if cycle is not None:
                    return cycle
    raise AssertionError("no chordless cycle found in a non-chordal graph")


def is_chordal(g: Graph) -> ChordalityCheck:
    """Chordality via lexicographic BFS: the reversed visit order is a
    perfect elimination ordering iff the graph is chordal.  On failure the
    result carries an induced cycle of length >= 4."""
    order = lex_bfs_order(g)
    peo = list(reversed(order))
    pos = {v: i for i, v in enumerate(peo)}
    neighbor_sets = [set(a) for a in g.adj]
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        for w in later:
            if w != u and w not in neighbor_sets[u]:
                return ChordalityCheck(
                    holds=False, witness_cycle=_chordless_cycle_witness(g, v, u, w)
                )
    return ChordalityCheck(holds=True, elimination_order=tuple(peo))


def layering_partition(g: Graph, d: np.ndarray, root: int) -> LayeringPartition:
    """Clusters per layer, computed with a union-find that activates layers
    from the deepest inward: at layer k only edges staying within layers >= k
    have been merged, so components there are exactly the clusters."""
    layer = d[root]
    max_layer = int(layer.max())
    by_layer: list[list[int]] = [[] for _ in range(max_layer + 1)]
    for v in range(g.n):
        by_layer[layer[v]].append(v)
    uf = UnionFind(g.n)
    clusters: list[tuple[int, ...]] = []
    for k in range(max_layer, -1, -1):
        for v in by_layer[k]:
            for w in g.adj[v]:
                if layer[w] >= k:  # edge inside layers >= k
                    uf.union(v, w)
        groups: dict[int, list[int]] = {}
        for v in by_layer[k]:
            groups.setdefault(uf.find(v), []).append(v)
        clusters.extend(tuple(sorted(members)) for members in groups.values())
    clusters.sort(key=lambda c: (int(layer[c[0]]), c))
    return LayeringPartition(root=root, clusters=tuple(clusters))


def gamma_from_layering(g: Graph, d: np.ndarray) -> GammaEstimate:
    """(max cluster diameter over all roots) - 1, floored at 0.  Always an
    upper bound on the projection gap."""
    worst = 0
    for root in range(g.n):
        for cluster in layering_partition(g, d, root).clusters:
            if len(cluster) > 1:
                idx = list(cluster)
                worst = max(worst, int(d[np.ix_(idx, idx)].max()))
    return GammaEstimate(value=max(worst - 1, 0), method="layering-partition")


def hyperbolicity_x2(g: Graph, d: np.ndarray) -> int:
    """Exact Gromov hyperbolicity, doubled so the result stays integral:
    max over 4-tuples of the difference of the two largest distance sums."""
    n = g.n
    if n < 4:
        return 0
    best = 0
    for u in range(n):
        du = d[u]
        for v in range(u + 1, n):
            dv = d[v]
            s1 = int(d[u][v]) + d
            s2 = du[:, None] + dv[None, :]
            s3 = dv[:, None] + du[None, :]
            top = np.maximum(np.maximum(s1, s2), s3)
            low = np.minimum(np.minimum(s1, s2), s3)
            mid = s1 + s2 + s3 - top - low
            best = max(best, int((top - mid).max()))
    return best


def select_gamma(g: Graph, d: np.ndarray, hint: str = "auto") -> GammaEstimate:
    """Pick a gamma >= pg(G).

    ``hint``: "auto" recognizes chordal graphs (gamma 0) and otherwise takes
    the best of the layering-partition bound and 4*delta (when the quartic
    delta scan is affordable); "chordal" is verified before use; "dually-
    chordal" is accepted on the user's word and mapped to gamma 1.
    """
    if hint == "chordal":
        check = is_chordal(g)
        if not check.holds:
            raise ClassMismatchError(
                "graph asserted chordal but a chordless cycle exists",
                witness=check.witness_cycle,
            )
        return GammaEstimate(value=0, method="class-chordal")
    if hint == "dually-chordal":
        return GammaEstimate(
            value=1,
            method="class-dually-chordal",
            note="class asserted by caller, not verified",
        )
    if hint != "auto":
        raise ValueError(f"unknown gamma hint {hint!r}")
    if is_chordal(g).holds:
        return GammaEstimate(value=0, method="class-chordal")
    estimate = gamma_from_layering(g, d)
    if g.n <= HYPERBOLICITY_EXACT_LIMIT:
        by_delta = 2 * hyperbolicity_x2(g, d)  # 4 * delta
        if by_delta < estimate.value:
            return GammaEstimate(value=by_delta, method="hyperbolicity-bound")
    return estimate


def multi_source_bfs(g: Graph, sources) -> np.ndarray:
    """Hop distances from the nearest of ``sources``."""
    dist = np.full(g.n, -1, dtype=np.int32)
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(int(s))
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


__all__ = [
    "ChordalityCheck",
    "GammaEstimate",
    "HYPERBOLICITY_EXACT_LIMIT",
    "LayeringPartition",
    "UnionFind",
    "gamma_from_layering",
    "hyperbolicity_x2",
    "is_chordal",
    "layering_partition",
    "lex_bfs_order",
    "multi_source_bfs",
    "select_gamma",
]
