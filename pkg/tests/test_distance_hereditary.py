from __future__ import annotations

import numpy as np
import pytest

from mespath import (
    ClassMismatchError,
    Graph,
    all_pairs,
    best_st_path,
    enumerate_shortest_paths,
    exact_mesp,
    gen_random_dh,
    gen_random_tree,
    interval,
    interval_slice,
    is_distance_hereditary,
    metric_report,
    projection,
    solve_dh,
)
from reference import four_point_condition_holds, random_connected_graph


def path_ecc(d, vertices) -> int:
    return int(d[list(vertices)].min(axis=0).max())


def dh_corpus(count=60, max_n=12):
    for seed in range(count):
        n = 2 + (seed * 7) % (max_n - 1)
        yield gen_random_dh(n, seed=seed * 13 + 5)


class TestRecognition:
    def test_house_is_not_dh(self, house):
        assert not is_distance_hereditary(house, all_pairs(house)).holds

    def test_trees_are_dh(self):
        for seed in range(20):
            g = gen_random_tree(2 + seed, seed)
            assert is_distance_hereditary(g, all_pairs(g)).holds

    def test_c5_no_c4_yes(self, c5, c4):
        assert not is_distance_hereditary(c5, all_pairs(c5)).holds
        assert is_distance_hereditary(c4, all_pairs(c4)).holds

    def test_agrees_with_four_point_oracle(self):
        for seed in range(120):
            g = random_connected_graph(4 + seed % 7, seed * 3 + 2)
            d = all_pairs(g)
            assert is_distance_hereditary(g, d).holds == four_point_condition_holds(
                d, g.n
            )

    def test_witness_names_cluster_violation(self, c5):
        d = all_pairs(c5)
        check = is_distance_hereditary(c5, d)
        root, k, u, v = check.witness
        assert d[root][u] == d[root][v] == k
        down_u = {w for w in c5.adj[u] if d[root][w] == k - 1}
        down_v = {w for w in c5.adj[v] if d[root][w] == k - 1}
        assert down_u != down_v


class TestBestStPath:
    def test_p4_unique_path(self, p4):
        res = best_st_path(p4, all_pairs(p4), 0, 3)
        assert res.path.vertices == (0, 1, 2, 3)
        assert res.eccentricity == 0

    def test_c4_antipodal(self, c4):
        res = best_st_path(c4, all_pairs(c4), 0, 2)
        assert res.eccentricity == 1
        assert res.path.vertices in ((0, 1, 2), (0, 3, 2))

    def test_rejects_equal_endpoints(self, p4):
        with pytest.raises(ValueError):
            best_st_path(p4, all_pairs(p4), 1, 1)

    def test_matches_per_pair_oracle_on_dh_corpus(self):
        for g in dh_corpus():
            d = all_pairs(g)
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    res = best_st_path(g, d, s, t)
                    assert res.path.vertices[0] == s
                    assert res.path.vertices[-1] == t
                    assert len(res.path.vertices) - 1 == d[s][t]
                    oracle_best = min(
                        path_ecc(d, p.vertices)
                        for p in enumerate_shortest_paths(g, d, s, t)
                    )
                    assert res.eccentricity == oracle_best


class TestSolveDh:
    def test_tree_matches_diametral_value(self):
        for seed in range(20):
            g = gen_random_tree(2 + seed, seed + 50)
            d = all_pairs(g)
            assert solve_dh(g, d).eccentricity == exact_mesp(g, d).eccentricity

    def test_k2(self):
        g = Graph(2, [(0, 1)])
        res = solve_dh(g, all_pairs(g))
        assert res.eccentricity == 0
        assert res.path.vertices == (0, 1)

    def test_k1(self):
        g = Graph(1, [])
        res = solve_dh(g, all_pairs(g))
        assert res.path.vertices == (0,)

    def test_cographs_match_oracle(self):
        # P4-free distance-hereditary subclass via repeated twin operations
        for seed in range(30):
            g = gen_random_dh(4 + seed % 7, mix=(0.0, 0.5, 0.5), seed=seed)
            d = all_pairs(g)
            assert solve_dh(g, d).eccentricity == exact_mesp(g, d).eccentricity

    def test_refuses_non_dh_with_witness(self, house):
        d = all_pairs(house)
        with pytest.raises(ClassMismatchError) as err:
            solve_dh(house, d)
        assert err.value.witness is not None

    def test_verify_false_skips_recognition(self):
        g = gen_random_dh(30, seed=0)
        d = all_pairs(g)
        assert solve_dh(g, d, verify=False).eccentricity == solve_dh(g, d).eccentricity


class TestStructuralFacts:
    """Structural facts about distance-hereditary graphs, asserted over the
    generated corpus."""

    def test_gate_property(self):
        # for v outside I(s,t), some neighbor of the projection's side covers
        # the whole projection: there is x with N(x) containing Pr(v, I(s,t))
        # at distance d(v, I) - 1 from v
        for g in dh_corpus(40):
            d = all_pairs(g)
            neighbor_sets = [set(a) for a in g.adj]
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    inter = interval(d, s, t).tolist()
                    for v in range(g.n):
                        if v in inter:
                            continue
                        proj = projection(d, v, inter)
                        dv = int(min(d[v][w] for w in inter))
                        witnesses = [
                            x
                            for x in range(g.n)
                            if d[v][x] == dv - 1
                            and all(p in neighbor_sets[x] for p in proj)
                        ]
                        assert witnesses, (s, t, v)

    def test_slice_join(self):
        for g in dh_corpus(40):
            d = all_pairs(g)
            neighbor_sets = [set(a) for a in g.adj]
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    for i in range(int(d[s][t])):
                        cur = interval_slice(d, s, t, i).tolist()
                        nxt = interval_slice(d, s, t, i + 1).tolist()
                        for a in cur:
                            for b in nxt:
                                assert b in neighbor_sets[a], (s, t, i, a, b)

    def test_projection_diameter_at_most_two(self):
        for g in dh_corpus(40):
            d = all_pairs(g)
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    for p in enumerate_shortest_paths(g, d, s, t):
                        verts = list(p.vertices)
                        for x in range(g.n):
                            proj = projection(d, x, verts)
                            worst = max(
                                int(d[a][b]) for a in proj for b in proj
                            )
                            assert worst <= 2, (s, t, x)

    def test_spanning_projection_domination(self):
        # if Pr(v, I(s,t)) meets two slices, every shortest (s,t)-path is
        # within ecc(I(s,t)) of v
        for g in dh_corpus(30):
            d = all_pairs(g)
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    inter = interval(d, s, t).tolist()
                    ecc_i = int(d[inter].min(axis=0).max())
                    for v in range(g.n):
                        proj = projection(d, v, inter)
                        if len({int(d[s][p]) for p in proj}) < 2:
                            continue
                        for p in enumerate_shortest_paths(g, d, s, t):
                            assert int(d[list(p.vertices)][:, v].min()) <= ecc_i

    def test_diametral_pair_carries_global_optimum(self):
        for g in dh_corpus(60):
            if g.n < 2:
                continue
            d = all_pairs(g)
            x, y = metric_report(g, d).diametral_pair
            best_diam = min(
                path_ecc(d, p.vertices) for p in enumerate_shortest_paths(g, d, x, y)
            )
            assert best_diam == exact_mesp(g, d).eccentricity

    def test_some_optimum_has_mutually_furthest_ends(self):
        for g in dh_corpus(40):
            if g.n < 2:
                continue
            d = all_pairs(g)
            k = exact_mesp(g, d).eccentricity
            ecc = d.max(axis=1)
            found = False
            for s in range(g.n):
                for t in range(s + 1, g.n):
                    if not (ecc[s] == ecc[t] == d[s][t]):
                        continue
                    for p in enumerate_shortest_paths(g, d, s, t):
                        if path_ecc(d, p.vertices) == k:
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
            assert found
