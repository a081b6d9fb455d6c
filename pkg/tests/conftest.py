from __future__ import annotations

import pytest

from mespath import Graph, all_pairs


@pytest.fixture
def p4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def c6():
    return Graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def c7():
    return Graph(7, [(i, (i + 1) % 7) for i in range(7)])


@pytest.fixture
def star5():
    # K_{1,4} with center 0
    return Graph(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def house():
    # square 0-1-2-3 with roof vertex 4 over the 0-1 edge
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


def graph_with_matrix(g):
    return g, all_pairs(g)
