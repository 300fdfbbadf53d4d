import random

import pytest

from monospan.errors import BudgetExceeded
from monospan.generate import gen
from monospan.geometry import Direction, STANDARD_FRAME
from monospan.graphs import GeometricGraph, RootedPointSet
from monospan.oracle import (
    OracleBudget,
    brute_is_2d_monotone,
    brute_min_k_rooted,
    brute_min_k_rooted_enumerated,
    brute_min_xy_spanning,
    sampled_angle_scan,
)
from monospan.rig import rectangle_of_influence_graph
from .conftest import pts


class TestBruteXySpanning:
    def test_two_points(self):
        g = brute_min_xy_spanning(pts((0, 0), (1, 1)))
        assert g.sorted_edges() == [(0, 1)]

    def test_blocked_chain(self):
        g = brute_min_xy_spanning(pts((0, 0), (2, 2), ("1", "1.5")), objective="cost")
        assert set(g.sorted_edges()) == {(0, 2), (1, 2)}

    def test_objectives_agree(self):
        for seed in range(10):
            ps, _ = gen(6, seed=seed)
            by_cost = brute_min_xy_spanning(ps, objective="cost")
            by_edges = brute_min_xy_spanning(ps, objective="edges")
            assert by_cost.edges == by_edges.edges

    def test_matches_rig(self):
        rng = random.Random(3)
        for seed in range(10):
            ps, _ = gen(rng.randrange(3, 8), seed=seed)
            d = Direction(rng.randrange(1, 7), rng.randrange(1, 7))
            oracle = brute_min_xy_spanning(ps, d)
            assert oracle.edges == rectangle_of_influence_graph(ps, d).edges

    def test_budget_enforced(self):
        ps, _ = gen(8, seed=0)
        with pytest.raises(BudgetExceeded):
            brute_min_xy_spanning(ps)


class TestBruteKRooted:
    def test_two_roots_only(self):
        ps = pts((0, 0), (2, 3))
        g = brute_min_k_rooted(RootedPointSet.of(ps, [0, 1]))
        assert g.sorted_edges() == [(0, 1)]

    def test_stacked_chain(self):
        ps = pts((0, 0), ("0.5", 1), ("0.25", 2))
        g = brute_min_k_rooted(RootedPointSet.of(ps, [0]))
        assert len(g.edges) == 2

    def test_branch_and_bound_matches_enumeration(self):
        rng = random.Random(11)
        for seed in range(15):
            n = rng.randrange(3, 6)
            k = rng.randrange(1, n + 1)
            ps, roots = gen(n, k, seed=seed)
            rooted = RootedPointSet.of(ps, roots)
            fast = brute_min_k_rooted(rooted)
            slow = brute_min_k_rooted_enumerated(rooted)
            assert fast.edges == slow.edges


class TestAngleScan:
    def test_two_points_constant(self):
        ps = pts((0, 0), (3, 4))
        _, c, e = sampled_angle_scan(ps, samples=50)
        assert c == pytest.approx(5.0)
        assert e == 1

    def test_scan_never_beats_sweep(self):
        from monospan.sweep import ummsg

        for seed in (0, 5):
            ps, _ = gen(6, seed=seed)
            _, _, sweep_cost = ummsg(ps)
            _, scan_cost, _ = sampled_angle_scan(ps, samples=500)
            assert sweep_cost <= scan_cost + 1e-9 * max(1.0, scan_cost)


class TestBrute2dMonotone:
    def test_complete_graph(self):
        ps, _ = gen(5, seed=2)
        g = GeometricGraph.of(ps, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        assert brute_is_2d_monotone(g)

    def test_edgeless(self):
        ps, _ = gen(3, seed=2)
        assert not brute_is_2d_monotone(GeometricGraph.of(ps, []))

    def test_uniform_implies_2d(self):
        from monospan.graphs import is_uniform_2d_monotone

        rng = random.Random(19)
        for seed in range(8):
            ps, _ = gen(5, seed=500 + seed)
            all_edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
            g = GeometricGraph.of(ps, rng.sample(all_edges, rng.randrange(4, 10)))
            ok, _ = is_uniform_2d_monotone(g)
            if ok:
                assert brute_is_2d_monotone(g)
