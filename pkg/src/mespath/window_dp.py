"""Per-source minimum-eccentricity shortest path by window dynamic
programming.

A *window* is a (gamma+1)-vertex segment of a shortest path starting at the
source s, represented as a plain vertex tuple; its depth is the BFS layer of
its first vertex.  For every window Q the DP value eps(Q) is the smallest
worst distance, over the vertices already *settled* by Q, of any shortest
path from s that ends with Q.  Windows whose deepest vertex cannot be
extended settle every vertex, so the best value among them is the minimum
eccentricity of all forward-maximal shortest paths from s -- exact whenever
gamma is at least the projection gap of the graph.

The transition from a window to its one-step-shallower predecessors only has
to look at newly settled vertices, which keeps every step a handful of
vectorized operations over the distance matrix.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, VertexPath
from .results import Certificate, SolveResult
from .structure import GammaEstimate


def _up_down(g: Graph, lay: list[int]):
    """Per-vertex neighbor lists one layer deeper (ups) and one layer
    shallower (downs) for the layering ``lay``."""
    ups: list[list[int]] = [[] for _ in range(g.n)]
    downs: list[list[int]] = [[] for _ in range(g.n)]
    for u in range(g.n):
        lu = lay[u]
        for w in g.adj[u]:
            if lay[w] == lu + 1:
                ups[u].append(w)
            elif lay[w] == lu - 1:
                downs[u].append(w)
    return ups, downs


def forward_cone_distances(
    g: Graph, d: np.ndarray, s: int, ups: list[list[int]] | None = None
) -> np.ndarray:
    """Matrix ``r`` with ``r[v][x]`` the distance from x to the set of
    vertices reachable from s by a shortest path through v (v included).

    Computed layer by layer from the deepest inward: the cone of v is v plus
    the union of the cones of its deeper neighbors.
    """
    lay = d[s]
    if ups is None:
        ups, _ = _up_down(g, lay.tolist())
    r = d.copy()
    for v in np.argsort(lay, kind="stable")[::-1].tolist():
        up = ups[v]
        if up:
            r[v] = np.minimum(d[v], r[up].min(axis=0))
    return r


def enumerate_windows(g: Graph, d: np.ndarray, s: int, gamma: int):
    """All windows for source s, grouped by depth: ``result[j]`` lists the
    (gamma+1)-vertex layer-monotone adjacent runs starting at depth j, in
    lexicographic order.  Empty when the source eccentricity is below gamma.
    """
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    lay = d[s].tolist()
    ecc = max(lay)
    by_depth: list[list[tuple[int, ...]]] = [[] for _ in range(ecc - gamma + 1)]
    if not by_depth:
        return by_depth
    ups, _ = _up_down(g, lay)
    prefix: list[int] = []

    def extend(v: int, remaining: int, out: list):
        prefix.append(v)
        if remaining == 0:
            out.append(tuple(prefix))
        else:
            for w in ups[v]:
                extend(w, remaining - 1, out)
        prefix.pop()

    for v in range(g.n):
        if lay[v] <= ecc - gamma:
            extend(v, gamma, by_depth[lay[v]])
    return by_depth


def predecessor_windows(g: Graph, d: np.ndarray, s: int, window: tuple[int, ...]):
    """Windows one depth shallower that a shortest path can traverse directly
    before ``window``: prepend a shallower neighbor of the window's first
    vertex and drop the window's last vertex."""
    lay = d[s]
    depth = int(lay[window[0]])
    if depth < 1:
        return []
    v0 = window[0]
    return [(u,) + window[:-1] for u in g.adj[v0] if lay[u] == depth - 1]


def settled_set(d: np.ndarray, r: np.ndarray, window: tuple[int, ...]):
    """Membership mask and distance vector of the vertices settled by the
    window: those no closer to the window's forward cone than to the window
    itself, so extending past the window cannot help them."""
    dq = d[window[0]] if len(window) == 1 else d[list(window)].min(axis=0)
    return dq <= r[window[-1]], dq


def window_dp(
    g: Graph,
    d: np.ndarray,
    s: int,
    gamma: int,
    use_first_vertex_shortcut: bool = True,
) -> dict[tuple[int, ...], tuple[int, tuple[int, ...] | None]]:
    """DP table mapping each window to ``(eps, predecessor)``.

    Depth-0 windows score the worst settled distance to themselves.  Deeper
    windows take the best predecessor, paying for each newly settled vertex
    the closer of its distances to the two windows; the predecessor pointer
    records the first strict improvement.  ``use_first_vertex_shortcut``
    replaces the predecessor's distance vector by its first vertex's row
    (valid because the windows share the other gamma vertices); the
    unoptimized form is kept for cross-checking.
    """
    lay = d[s].tolist()
    ups, downs = _up_down(g, lay)
    r = forward_cone_distances(g, d, s, ups)
    by_depth = enumerate_windows(g, d, s, gamma)
    cells: dict[tuple[int, ...], tuple[int, tuple[int, ...] | None]] = {}
    prev_state: dict[tuple[int, ...], tuple[np.ndarray, np.ndarray]] = {}
    for depth, windows in enumerate(by_depth):
        state: dict[tuple[int, ...], tuple[np.ndarray, np.ndarray]] = {}
        for q in windows:
            mask, dq = settled_set(d, r, q)
            if depth == 0:
                cells[q] = (int(dq[mask].max()), None)
            else:
                preds = [(u,) + q[:-1] for u in downs[q[0]]]
                pred_masks = np.stack([prev_state[p][0] for p in preds])
                newly_settled = mask[None, :] & ~pred_masks
                if use_first_vertex_shortcut:
                    near = np.minimum(d[[p[0] for p in preds]], dq[None, :])
                else:
                    near = np.stack(
                        [np.minimum(prev_state[p][1], dq) for p in preds]
                    )
                gaps = np.where(newly_settled, near, -1).max(axis=1)
                eps_prev = np.array([cells[p][0] for p in preds])
                scores = np.maximum(gaps, eps_prev)
                best = int(scores.argmin())  # first minimum: earliest pred
                cells[q] = (int(scores[best]), preds[best])
            state[q] = (mask, dq)
        prev_state = state
    return cells


def reconstruct_path(
    cells: dict[tuple[int, ...], tuple[int, tuple[int, ...] | None]],
    window: tuple[int, ...],
) -> tuple[int, ...]:
    """Unroll predecessor pointers from ``window`` back to depth 0: the
    depth-0 window plus the last vertex of every later window on the chain."""
    chain = [window]
    while cells[chain[-1]][1] is not None:
        chain.append(cells[chain[-1]][1])
    chain.reverse()
    path = list(chain[0])
    path.extend(w[-1] for w in chain[1:])
    return tuple(path)


def _short_maximal_paths(g: Graph, s: int, gamma: int, ups: list[list[int]]):
    """Forward-maximal shortest paths from s with fewer than gamma+1
    vertices; longer ones are covered by terminal windows."""
    out: list[tuple[int, ...]] = []
    stack = [s]

    def walk():
        v = stack[-1]
        if not ups[v]:
            out.append(tuple(stack))
            return
        if len(stack) == gamma:
            return
        for w in ups[v]:
            stack.append(w)
            walk()
            stack.pop()

    walk()
    return out


def solve_from_source(g: Graph, d: np.ndarray, s: int, gamma: int) -> SolveResult:
    """Minimum-eccentricity forward-maximal shortest path starting at ``s``,
    exact whenever gamma >= pg(G).

    Maximal paths with fewer than gamma+1 vertices (dead ends near the
    source) cannot host any window, so they are enumerated directly and
    compete with the DP terminals.
    """
    lay = d[s].tolist()
    ups, _ = _up_down(g, lay)
    candidates: list[tuple[int, tuple[int, ...]]] = []

    if max(lay) >= gamma:
        cells = window_dp(g, d, s, gamma)
        best_key = None
        for q, (eps, _) in cells.items():
            if not ups[q[-1]]:  # terminal: the path cannot be extended
                key = (eps, lay[q[0]], q)
                if best_key is None or key < best_key:
                    best_key = key
        _, _, q = best_key
        path = reconstruct_path(cells, q)
        candidates.append((int(d[list(path)].min(axis=0).max()), path))

    if gamma >= 1:
        for p in _short_maximal_paths(g, s, gamma, ups):
            candidates.append((int(d[list(p)].min(axis=0).max()), p))

    ecc, path = min(candidates)
    return SolveResult(
        path=VertexPath(path, is_shortest=True, eccentricity=ecc),
        eccentricity=ecc,
        algorithm="dp",
        certificate=Certificate(source=s),
    )


def solve_global(
    g: Graph, d: np.ndarray, gamma: int | GammaEstimate, threads: int = 1
) -> SolveResult:
    """Best solve_from_source over every source: the global minimum
    eccentricity shortest path when gamma >= pg(G)."""
    if isinstance(gamma, GammaEstimate):
        estimate = gamma
    else:
        estimate = GammaEstimate(value=int(gamma), method="user")
    if estimate.value < 0:
        raise ValueError("gamma must be nonnegative")

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda s: solve_from_source(g, d, s, estimate.value), range(g.n))
            )
    else:
        results = [solve_from_source(g, d, s, estimate.value) for s in range(g.n)]

    best = min(range(g.n), key=lambda s: (results[s].eccentricity, s))
    chosen = results[best]
    return SolveResult(
        path=chosen.path,
        eccentricity=chosen.eccentricity,
        algorithm="dp",
        certificate=Certificate(source=best, gamma=estimate),
    )
