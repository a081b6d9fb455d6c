"""Exact minimum-eccentricity shortest paths on distance-hereditary graphs.

The pipeline: recognize the class (layered neighborhood check), take a
diametral pair from the exact distance matrix, then extract a best shortest
path between the pair.  The extraction walks the interval slice by slice:
for every outside vertex a *gate* adjacent to its whole interval projection
is propagated inward, gates of the worst-off vertices whose projection sits
inside a single slice are flagged *relevant*, and each slice contributes the
vertex adjacent to the most relevant gates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ClassMismatchError
from .graph import Graph, VertexPath, metric_report
from .results import Certificate, Guarantee, SolveResult
from .structure import layering_partition, multi_source_bfs


@dataclass(frozen=True)
class DistanceHereditaryCheck:
    holds: bool
    # On failure: (root, layer, u, v) where u, v share a cluster of the
    # root's layering partition but differ in down-neighborhood.
    witness: tuple[int, int, int, int] | None = None

    def __bool__(self):
        return self.holds


def is_distance_hereditary(g: Graph, d: np.ndarray) -> DistanceHereditaryCheck:
    """Layered characterization: for every root, vertices sharing a cluster of
    the layering partition must have identical down-neighborhoods."""
    for root in range(g.n):
        layer = d[root]
        for cluster in layering_partition(g, d, root).clusters:
            if len(cluster) < 2 or layer[cluster[0]] == 0:
                continue
            k = int(layer[cluster[0]])
            first = cluster[0]
            down_first = frozenset(w for w in g.adj[first] if layer[w] == k - 1)
            for v in cluster[1:]:
                down_v = frozenset(w for w in g.adj[v] if layer[w] == k - 1)
                if down_v != down_first:
                    return DistanceHereditaryCheck(
                        holds=False, witness=(root, k, first, v)
                    )
    return DistanceHereditaryCheck(holds=True)


def best_st_path(g: Graph, d: np.ndarray, s: int, t: int) -> SolveResult:
    """Shortest (s,t)-path of minimal eccentricity among all shortest
    (s,t)-paths.  Requires a distance-hereditary graph (asserted or
    verified by the caller); raises :class:`ClassMismatchError` if the slice
    structure visibly contradicts that."""
    if s == t:
        raise ValueError("endpoints must be distinct")
    n = g.n
    ds, dt = d[s], d[t]
    dist_st = int(ds[t])
    in_interval = ds + dt == dist_st

    interval_vertices = np.flatnonzero(in_interval)
    to_interval = multi_source_bfs(g, interval_vertices)
    ecc_interval = int(to_interval.max())

    relevant: set[int] = set()
    if ecc_interval > 0:
        shells: list[list[int]] = [[] for _ in range(ecc_interval + 1)]
        for v in range(n):
            if to_interval[v] > 0:
                shells[to_interval[v]].append(v)
        gate = [-1] * n
        for v in shells[1]:
            gate[v] = v
        for i in range(2, ecc_interval + 1):
            for v in shells[i]:
                u = next(w for w in g.adj[v] if to_interval[w] == i - 1)
                gate[v] = gate[u]
        for v in shells[ecc_interval]:
            gv = gate[v]
            touched = {int(ds[w]) for w in g.adj[gv] if in_interval[w]}
            if len(touched) == 1:
                relevant.add(gv)

    slices: list[list[int]] = [[] for _ in range(dist_st + 1)]
    for v in interval_vertices:
        slices[ds[v]].append(int(v))

    path = [s]
    for i in range(1, dist_st):
        best_v, best_count = -1, -1
        for v in slices[i]:  # ascending ids, so ties keep the smallest
            count = sum(1 for w in g.adj[v] if w in relevant)
            if count > best_count:
                best_v, best_count = v, count
        path.append(best_v)
    path.append(t)

    neighbor_sets = [set(a) for a in g.adj]
    for a, b in zip(path, path[1:]):
        if b not in neighbor_sets[a]:
            raise ClassMismatchError(
                "consecutive interval slices are not fully joined; "
                "the graph is not distance-hereditary",
                witness=(a, b),
            )

    ecc = int(d[path].min(axis=0).max())
    return SolveResult(
        path=VertexPath(tuple(path), is_shortest=True, eccentricity=ecc),
        eccentricity=ecc,
        algorithm="dh",
        certificate=Certificate(guarantee=Guarantee(kind="exact")),
    )


def solve_dh(g: Graph, d: np.ndarray, verify: bool = True) -> SolveResult:
    """Global minimum-eccentricity shortest path of a distance-hereditary
    graph: run the per-pair extraction on a diametral pair.

    ``verify=False`` skips recognition for inputs asserted to be in class.
    """
    if verify:
        check = is_distance_hereditary(g, d)
        if not check.holds:
            raise ClassMismatchError(
                "graph is not distance-hereditary", witness=check.witness
            )
    if g.n == 1:
        return SolveResult(
            path=VertexPath((0,), is_shortest=True, eccentricity=0),
            eccentricity=0,
            algorithm="dh",
            certificate=Certificate(
                diametral_pair=(0, 0), guarantee=Guarantee(kind="exact")
            ),
        )
    report = metric_report(g, d)
    x, y = report.diametral_pair
    result = best_st_path(g, d, x, y)
    return SolveResult(
        path=result.path,
        eccentricity=result.eccentricity,
        algorithm="dh",
        certificate=Certificate(
            diametral_pair=(x, y), guarantee=Guarantee(kind="exact")
        ),
    )
