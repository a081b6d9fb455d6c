"""Deterministic graph family generators for tests, demos and the CLI.

Every generator is a pure function of its parameters; the chordal and
distance-hereditary families are correct by construction (clique growth
along an elimination order, and one-vertex pendant/twin extensions).
"""

from __future__ import annotations

import random

from .graph import Graph

DEFAULT_TWIN_MIX = (0.4, 0.3, 0.3)  # pendant, true twin, false twin


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_random_tree(n: int, seed: int = 0) -> Graph:
    """Random tree: vertex i attaches to a uniform earlier vertex."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    rng = random.Random(seed)
    return Graph(n, [(i, rng.randrange(i)) for i in range(1, n)])


def gen_random_chordal(n: int, density: float = 0.5, seed: int = 0) -> Graph:
    """Random connected chordal graph grown vertex by vertex.

    Each new vertex attaches to a random subset of an existing clique, so the
    reverse insertion order is a perfect elimination ordering.  ``density``
    is the per-member keep probability when sampling that subset (at least
    one member is always kept), which is what steers the edge count; the
    exact distribution is otherwise an implementation choice.
    """
    if n < 1:
        raise ValueError("chordal graph needs n >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be within [0, 1]")
    rng = random.Random(seed)
    cliques: list[list[int]] = [[0]]
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        base = rng.choice(cliques)
        sub = [u for u in base if rng.random() < density]
        if not sub:
            sub = [rng.choice(base)]
        edges.extend((u, v) for u in sub)
        cliques.append(sub + [v])
    return Graph(n, edges)


def gen_random_dh(
    n: int, mix: tuple[float, float, float] = DEFAULT_TWIN_MIX, seed: int = 0
) -> Graph:
    """Random connected distance-hereditary graph via one-vertex extensions:
    each new vertex is a pendant, a true twin, or a false twin of a random
    existing vertex, weighted by ``mix``."""
    if n < 1:
        raise ValueError("distance-hereditary graph needs n >= 1")
    if len(mix) != 3 or min(mix) < 0 or sum(mix) <= 0:
        raise ValueError("mix must be three nonnegative weights")
    rng = random.Random(seed)
    neighbors: list[set[int]] = [set() for _ in range(n)]
    ops = ("pendant", "true-twin", "false-twin")
    for v in range(1, n):
        u = rng.randrange(v)
        op = rng.choices(ops, weights=mix)[0] if v > 1 else "pendant"
        if op == "pendant":
            new = {u}
        elif op == "true-twin":
            new = set(neighbors[u]) | {u}
        else:
            new = set(neighbors[u])  # nonempty: u has a neighbor once v > 1
        for w in new:
            neighbors[w].add(v)
        neighbors[v] = new
    edges = [(u, v) for u in range(n) for v in neighbors[u] if u < v]
    return Graph(n, edges)
