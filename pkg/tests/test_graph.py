from __future__ import annotations

import numpy as np
import pytest

from mespath import (
    Graph,
    GraphInputError,
    all_pairs,
    bfs_distances,
    double_sweep,
    eccentricity_of_set,
    gen_random_tree,
    interval,
    interval_slice,
    metric_report,
    projection,
)
from reference import floyd_warshall, random_connected_graph


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphInputError, match="self-loop"):
            Graph(2, [(0, 1), (1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphInputError, match="duplicate"):
            Graph(2, [(0, 1), (1, 0)])

    def test_rejects_disconnected(self):
        with pytest.raises(GraphInputError, match="disconnected"):
            Graph(4, [(0, 1), (2, 3)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphInputError, match="out of range"):
            Graph(2, [(0, 5)])

    def test_adjacency_sorted_and_symmetric(self):
        g = Graph(3, [(2, 0), (0, 1)])
        assert g.adj == ((1, 2), (0,), (0,))
        assert g.m == 2


class TestBfs:
    def test_path_row(self, p4):
        assert bfs_distances(p4, 0).tolist() == [0, 1, 2, 3]

    def test_cycle_row(self, c5):
        assert bfs_distances(c5, 0).tolist() == [0, 1, 2, 2, 1]

    def test_matches_floyd_warshall_on_random_graphs(self):
        for seed in range(50):
            n = 2 + seed % 39  # up to n = 40
            g = random_connected_graph(n, seed)
            expected = floyd_warshall(g)
            d = all_pairs(g)
            assert d.tolist() == expected
            for s in range(g.n):
                assert bfs_distances(g, s).tolist() == expected[s]

    def test_sparse_and_bfs_paths_agree_across_cutoff(self):
        # all_pairs switches implementation at n = 64; check both sides
        from mespath.graph import _all_pairs_sparse

        for n in (50, 80):
            g = random_connected_graph(n, seed=n)
            rows = np.stack([bfs_distances(g, s) for s in range(n)])
            assert (_all_pairs_sparse(g) == rows).all()
            assert (all_pairs(g) == rows).all()


class TestDistanceMatrixInvariants:
    def test_matrix_properties(self):
        for seed in range(10):
            g = random_connected_graph(3 + seed, seed * 5 + 1)
            d = all_pairs(g)
            assert (np.diag(d) == 0).all()
            assert (d == d.T).all()
            # distance 1 exactly on edges
            edge = np.zeros((g.n, g.n), dtype=bool)
            for u, v in g.edges():
                edge[u][v] = edge[v][u] = True
            assert ((d == 1) == edge).all()
            # triangle inequality
            for k in range(g.n):
                assert (d <= d[:, [k]] + d[k][None, :]).all()


class TestKnownGraphs:
    def test_k2(self):
        d = all_pairs(Graph(2, [(0, 1)]))
        assert d.tolist() == [[0, 1], [1, 0]]

    def test_star(self, star5):
        d = all_pairs(star5)
        assert d[1][2] == 2
        assert d[0][3] == 1


class TestEccentricityOfSet:
    def test_full_vertex_set_is_zero(self, c6):
        d = all_pairs(c6)
        assert eccentricity_of_set(d, range(6)) == 0

    def test_single_vertex_on_c6(self, c6):
        assert eccentricity_of_set(all_pairs(c6), [0]) == 3

    def test_c7_diametral_paths(self, c7):
        # every rotation of a 4-vertex arc has eccentricity 2
        d = all_pairs(c7)
        for r in range(7):
            arc = [(r + i) % 7 for i in range(4)]
            assert eccentricity_of_set(d, arc) == 2

    def test_empty_set_rejected(self, c6):
        with pytest.raises(ValueError):
            eccentricity_of_set(all_pairs(c6), [])


class TestInterval:
    def test_c4_antipodal_is_everything(self, c4):
        assert interval(all_pairs(c4), 0, 2).tolist() == [0, 1, 2, 3]

    def test_p4_ends(self, p4):
        assert interval(all_pairs(p4), 0, 3).tolist() == [0, 1, 2, 3]

    def test_definitional_recheck_and_slice_partition(self):
        for seed in range(20):
            g = random_connected_graph(4 + seed % 7, seed + 100)
            d = all_pairs(g)
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    got = set(interval(d, s, t).tolist())
                    expected = {
                        w for w in range(g.n) if d[s][w] + d[w][t] == d[s][t]
                    }
                    assert got == expected
                    assert s in got and t in got
                    # slices partition the interval
                    union: list[int] = []
                    for i in range(int(d[s][t]) + 1):
                        union.extend(interval_slice(d, s, t, i).tolist())
                    assert sorted(union) == sorted(got)

    def test_slice_endpoints(self, c4):
        d = all_pairs(c4)
        assert interval_slice(d, 0, 2, 0).tolist() == [0]
        assert interval_slice(d, 0, 2, 2).tolist() == [2]
        assert interval_slice(d, 0, 2, 1).tolist() == [1, 3]

    def test_slice_out_of_range(self, c4):
        with pytest.raises(IndexError):
            interval_slice(all_pairs(c4), 0, 2, 3)


class TestProjection:
    def test_member_projects_to_itself(self, p4):
        d = all_pairs(p4)
        assert projection(d, 2, [0, 1, 2, 3]) == [2]

    def test_c6_projection_on_diametral_path(self, c6):
        d = all_pairs(c6)
        assert projection(d, 4, [0, 1, 2, 3]) == [3]
        assert projection(d, 5, [0, 1, 2, 3]) == [0]

    def test_definitional_recheck(self):
        for seed in range(15):
            g = random_connected_graph(5 + seed % 6, seed + 42)
            d = all_pairs(g)
            members = list(range(0, g.n, 2))
            for x in range(g.n):
                got = projection(d, x, members)
                best = min(int(d[x][v]) for v in members)
                assert got == [v for v in members if d[x][v] == best]
                assert len({int(d[x][v]) for v in got}) == 1


class TestMetricReport:
    def test_p4(self, p4):
        rep = metric_report(p4, all_pairs(p4))
        assert rep.diameter == 3
        assert rep.diametral_pair == (0, 3)
        assert rep.eccentricities == (3, 2, 2, 3)

    def test_k4(self):
        g = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert metric_report(g, all_pairs(g)).diameter == 1

    def test_diameter_matches_matrix_max(self):
        for seed in range(20):
            g = random_connected_graph(4 + seed % 8, seed)
            d = all_pairs(g)
            rep = metric_report(g, d)
            assert rep.diameter == int(d.max())
            u, v = rep.diametral_pair
            assert d[u][v] == rep.diameter
            assert rep.diameter == max(rep.eccentricities)


class TestDoubleSweep:
    def test_p4_finds_endpoints(self, p4):
        assert set(double_sweep(p4)) == {0, 3}

    def test_exact_on_random_trees(self):
        for seed in range(100):
            g = gen_random_tree(2 + seed % 30, seed)
            d = all_pairs(g)
            x, y = double_sweep(g)
            assert d[x][y] == metric_report(g, d).diameter

    def test_never_exceeds_diameter(self):
        for seed in range(30):
            g = random_connected_graph(4 + seed % 10, seed * 3)
            d = all_pairs(g)
            x, y = double_sweep(g)
            assert d[x][y] <= metric_report(g, d).diameter
