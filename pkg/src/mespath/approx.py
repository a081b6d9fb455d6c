"""Additive approximation via repeated furthest-vertex sweeps.

Sweeping to a furthest vertex strictly increases the eccentricity until the
last two iterates are mutually furthest; any shortest path between them is
within a class-dependent additive bound of the optimum (chordal: +2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, VertexPath, bfs_distances
from .results import Certificate, Guarantee, SolveResult
from .structure import is_chordal


@dataclass(frozen=True)
class FurthestPairTrace:
    """Sweep iterates as (vertex, eccentricity), strictly increasing in
    eccentricity, plus the final mutually furthest pair."""

    iterates: tuple[tuple[int, int], ...]
    pair: tuple[int, int]


def mutually_furthest_pair(g: Graph, start: int = 0) -> FurthestPairTrace:
    """Iterate x -> furthest vertex from x (smallest id on ties) until the
    eccentricities stop growing; then ecc(x) = ecc(y) = d(x, y)."""
    row = bfs_distances(g, start)
    x, ecc_x = start, int(row.max())
    iterates = [(x, ecc_x)]
    while True:
        y = int(np.argmax(row))  # d(x, y) = ecc(x)
        row_y = bfs_distances(g, y)
        ecc_y = int(row_y.max())
        if ecc_y == ecc_x:
            return FurthestPairTrace(iterates=tuple(iterates), pair=(x, y))
        x, ecc_x, row = y, ecc_y, row_y
        iterates.append((x, ecc_x))


def shortest_path_between(g: Graph, d: np.ndarray, x: int, y: int) -> VertexPath:
    """The BFS-tree shortest (x,y)-path where every step picks the
    smallest-id neighbor one layer closer to x."""
    path = [y]
    v = y
    while v != x:
        v = next(w for w in g.adj[v] if d[x][w] == d[x][v] - 1)
        path.append(v)
    path.reverse()
    return VertexPath(tuple(path), is_shortest=True)


def approx_mesp(g: Graph, d: np.ndarray) -> SolveResult:
    """Shortest path between a mutually furthest pair (sweeps started at
    vertex 0).  On chordal graphs its eccentricity is at most optimum + 2;
    other class bounds exist but are not quantified here."""
    trace = mutually_furthest_pair(g, 0)
    x, y = trace.pair
    path = shortest_path_between(g, d, x, y)
    ecc = int(d[list(path.vertices)].min(axis=0).max())
    if is_chordal(g).holds:
        guarantee = Guarantee(kind="additive", bound=2)
    else:
        guarantee = Guarantee(kind="additive", bound=None)
    return SolveResult(
        path=VertexPath(path.vertices, is_shortest=True, eccentricity=ecc),
        eccentricity=ecc,
        algorithm="approx",
        certificate=Certificate(
            mutually_furthest=(x, y),
            guarantee=guarantee,
            sweep=trace.iterates,
        ),
    )
