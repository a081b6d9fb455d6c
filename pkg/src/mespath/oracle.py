"""Desk-scale ground truth by exhaustive enumeration.

Every solver in the package is validated against these routines on small
graphs.  Shortest paths between a pair are enumerated by walking the BFS
layer DAG inside the interval, which is complete by definition of the
interval; enumeration aborts with :class:`BudgetExceededError` once a cap is
hit, never truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .graph import Graph, VertexPath

DEFAULT_MAX_PATHS = 10**6
DEFAULT_MAX_TOTAL = 10**8


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps on exhaustive path enumeration: per (s,t) pair and global."""

    max_paths: int = DEFAULT_MAX_PATHS
    max_total: int = DEFAULT_MAX_TOTAL

    def __post_init__(self):
        if self.max_paths < 1 or self.max_total < 1:
            raise ValueError("budget caps must be positive")


@dataclass(frozen=True)
class OracleResult:
    best_path: VertexPath
    eccentricity: int
    paths_examined: int


class _Meter:
    """Mutable counters enforcing one budget across many enumerations."""

    __slots__ = ("budget", "pair", "total")

    def __init__(self, budget: EnumerationBudget):
        self.budget = budget
        self.pair = 0
        self.total = 0

    def new_pair(self):
        self.pair = 0

    def tick(self):
        self.pair += 1
        self.total += 1
        if self.pair > self.budget.max_paths:
            raise BudgetExceededError("pair", self.budget.max_paths)
        if self.total > self.budget.max_total:
            raise BudgetExceededError("total", self.budget.max_total)


def _iter_shortest_paths(g: Graph, d: np.ndarray, s: int, t: int, meter: _Meter):
    """Yield every shortest (s,t)-path as a vertex tuple, in lexicographic
    DFS order.  Successors of v are its neighbors one layer further from s
    that still lie on a shortest path to t."""
    dst = d[s]
    dt = d[t]
    target = dst[t]
    stack = [s]

    def walk():
        v = stack[-1]
        if v == t:
            meter.tick()
            yield tuple(stack)
            return
        for w in g.adj[v]:
            if dst[w] == dst[v] + 1 and dst[w] + dt[w] == target:
                stack.append(w)
                yield from walk()
                stack.pop()

    yield from walk()


def enumerate_shortest_paths(
    g: Graph, d: np.ndarray, s: int, t: int, budget: EnumerationBudget | None = None
) -> list[VertexPath]:
    """All shortest (s,t)-paths, each of length d(s,t)."""
    if s == t:
        raise ValueError("enumeration requires distinct endpoints")
    meter = _Meter(budget or EnumerationBudget())
    return [
        VertexPath(p, is_shortest=True) for p in _iter_shortest_paths(g, d, s, t, meter)
    ]


def exact_mesp(
    g: Graph, d: np.ndarray, budget: EnumerationBudget | None = None
) -> OracleResult:
    """Global minimum eccentricity over every shortest path of the graph.

    Single vertices count as degenerate shortest paths so the result is total
    on the one-vertex graph; for n >= 2 they never beat an incident edge.
    """
    meter = _Meter(budget or EnumerationBudget())
    best: tuple[int, tuple[int, ...]] | None = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            meter.new_pair()
            for p in _iter_shortest_paths(g, d, s, t, meter):
                ecc = int(d[list(p)].min(axis=0).max())
                if best is None or ecc < best[0]:
                    best = (ecc, p)
    for v in range(g.n):
        ecc = int(d[v].max())
        if best is None or ecc < best[0]:
            best = (ecc, (v,))
    k, path = best
    return OracleResult(
        best_path=VertexPath(path, is_shortest=True, eccentricity=k),
        eccentricity=k,
        paths_examined=meter.total,
    )


def _iter_maximal_paths(g: Graph, d: np.ndarray, s: int, meter: _Meter, max_len=None):
    """Yield forward-maximal shortest paths from s (layer-monotone walks whose
    last vertex has no neighbor one layer further).  ``max_len`` optionally
    prunes to paths of at most that many vertices."""
    dst = d[s]
    stack = [s]

    def walk():
        v = stack[-1]
        ups = [w for w in g.adj[v] if dst[w] == dst[v] + 1]
        if not ups:
            meter.tick()
            yield tuple(stack)
            return
        if max_len is not None and len(stack) == max_len:
            return
        for w in ups:
            stack.append(w)
            yield from walk()
            stack.pop()

    yield from walk()


def exact_source_mesp(
    g: Graph, d: np.ndarray, s: int, budget: EnumerationBudget | None = None
) -> OracleResult:
    """Minimum eccentricity over all forward-maximal shortest paths starting
    at ``s``."""
    meter = _Meter(budget or EnumerationBudget())
    best: tuple[int, tuple[int, ...]] | None = None
    for p in _iter_maximal_paths(g, d, s, meter):
        ecc = int(d[list(p)].min(axis=0).max())
        if best is None or ecc < best[0]:
            best = (ecc, p)
    k, path = best
    return OracleResult(
        best_path=VertexPath(path, is_shortest=True, eccentricity=k),
        eccentricity=k,
        paths_examined=meter.total,
    )


def _path_gap(d: np.ndarray, path: tuple[int, ...], n: int) -> int:
    """Largest skip inside any vertex projection onto ``path``: consecutive
    projection members i < k with nothing between contribute k - i - 1."""
    rows = d[list(path)]
    mins = rows.min(axis=0)
    worst = 0
    for x in range(n):
        positions = np.flatnonzero(rows[:, x] == mins[x])
        if len(positions) > 1:
            worst = max(worst, int(np.diff(positions).max()) - 1)
    return worst


def exact_projection_gap(
    g: Graph, d: np.ndarray, budget: EnumerationBudget | None = None
) -> int:
    """Exact projection gap: the least gamma such that along every shortest
    path, consecutive members of any vertex's projection sit at path-distance
    at most gamma + 1."""
    meter = _Meter(budget or EnumerationBudget())
    gap = 0
    for s in range(g.n):
        for t in range(s + 1, g.n):
            meter.new_pair()
            for p in _iter_shortest_paths(g, d, s, t, meter):
                gap = max(gap, _path_gap(d, p, g.n))
    return gap
