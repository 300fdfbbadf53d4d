import math
import random

import pytest

from monospan.errors import TiedY
from monospan.generate import gen
from monospan.geometry import Direction, STANDARD_FRAME
from monospan.graphs import (
    GeometricGraph,
    RootedPointSet,
    cost,
    is_k_rooted_y_monotone,
    is_uniform_2d_monotone,
    is_xy_monotone_connected,
    is_y_monotone_connected,
)
from .conftest import pts


def graph(ps, edges):
    return GeometricGraph.of(ps, edges)


class TestCost:
    def test_empty(self):
        assert cost(graph(pts((0, 0), (1, 1)), [])) == 0.0

    def test_three_four_five(self):
        g = graph(pts((0, 0), (3, 4)), [(0, 1)])
        assert cost(g) == pytest.approx(5.0)

    def test_chain(self):
        g = graph(pts((0, 0), (1, 0), (1, 2)), [(0, 1), (1, 2)])
        assert cost(g) == pytest.approx(3.0)


class TestEdgeValidation:
    def test_self_loop(self):
        with pytest.raises(ValueError):
            graph(pts((0, 0), (1, 1)), [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            graph(pts((0, 0), (1, 1)), [(0, 2)])

    def test_normalization(self):
        g = graph(pts((0, 0), (1, 1)), [(1, 0)])
        assert g.sorted_edges() == [(0, 1)]


class TestYMonotone:
    def test_monotone_chain(self):
        g = graph(pts((0, 0), (1, 2), (0, 3)), [(0, 1), (1, 2)])
        assert is_y_monotone_connected(g)

    def test_detour_fails(self):
        # any (0,0) -> (3,1) path passes (1,2): y-sequence 0, 2, 1
        g = graph(pts((0, 0), (3, 1), (1, 2)), [(0, 2), (1, 2)])
        assert not is_y_monotone_connected(g)

    def test_complete_graph(self):
        ps, _ = gen(6, seed=5)
        g = graph(ps, [(i, j) for i in range(6) for j in range(i + 1, 6)])
        assert is_y_monotone_connected(g)


class TestXyMonotone:
    def test_single_edge(self):
        assert is_xy_monotone_connected(graph(pts((0, 0), (1, 2)), [(0, 1)]))

    def test_chain_through_interior(self):
        g = graph(pts((0, 0), (2, 2), ("1", "1.5")), [(0, 2), (1, 2)])
        assert is_xy_monotone_connected(g)

    def test_obtuse_path_fails(self):
        # pair ((3,1),(1,3)) has no path monotone in both coordinates via (0,0)
        g = graph(pts((0, 0), (3, 1), (1, 3)), [(0, 1), (0, 2)])
        assert not is_xy_monotone_connected(g)

    def test_xy_implies_y(self):
        rng = random.Random(7)
        for seed in range(25):
            ps, _ = gen(rng.randrange(3, 7), seed=seed)
            all_edges = [(i, j) for i in range(len(ps)) for j in range(i + 1, len(ps))]
            g = graph(ps, rng.sample(all_edges, rng.randrange(len(all_edges) + 1)))
            if is_xy_monotone_connected(g):
                assert is_y_monotone_connected(g)

    def test_adding_edges_preserves_truth(self):
        rng = random.Random(13)
        for seed in range(15):
            ps, _ = gen(5, seed=100 + seed)
            all_edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
            chosen = rng.sample(all_edges, rng.randrange(len(all_edges)))
            g = graph(ps, chosen)
            for d in (STANDARD_FRAME, Direction(2, 1)):
                if is_xy_monotone_connected(g, d):
                    extra = rng.choice([e for e in all_edges])
                    g2 = graph(ps, chosen + [extra])
                    assert is_xy_monotone_connected(g2, d)


class TestRootedPointSet:
    def test_roots_sorted_by_y(self):
        ps = pts((0, 5), (1, 1), (2, 3))
        rooted = RootedPointSet.of(ps, [0, 1])
        assert rooted.roots == (1, 0)
        assert rooted.k == 2

    def test_tied_y_rejected(self):
        with pytest.raises(TiedY):
            RootedPointSet.of(pts((0, 1), (2, 1)), [0])

    def test_no_roots_rejected(self):
        with pytest.raises(ValueError):
            RootedPointSet.of(pts((0, 0), (1, 1)), [])


class TestKRootedChecker:
    def test_path_with_extreme_roots(self):
        ps = pts((0, 0), (2, 1), (1, 2), (3, 3))
        rooted = RootedPointSet.of(ps, [0, 3])
        g = graph(ps, [(0, 1), (1, 2), (2, 3)])
        assert is_k_rooted_y_monotone(g, rooted)

    def test_star_from_lower_root(self):
        # clause on the upper root: no neighbor with v in [v(r_{k-1}), v(r_k))
        ps = pts((0, 0), (2, 1), (1, 2), (3, 3))
        rooted = RootedPointSet.of(ps, [0, 3])
        g = graph(ps, [(0, 1), (0, 2), (0, 3)])
        assert not is_k_rooted_y_monotone(g, rooted)

    def test_isolated_vertex_single_root(self):
        ps = pts((0, 0), (2, 1), (1, 2))
        rooted = RootedPointSet.of(ps, [0])
        g = graph(ps, [(0, 1)])
        assert not is_k_rooted_y_monotone(g, rooted)


class TestUniformRecognizer:
    def test_single_edge(self):
        ok, witness = is_uniform_2d_monotone(graph(pts((0, 0), (1, 2)), [(0, 1)]))
        assert ok and witness is not None

    def test_complete_graph(self):
        ps, _ = gen(5, seed=21)
        g = graph(ps, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        ok, _ = is_uniform_2d_monotone(g)
        assert ok

    def test_acute_fork_has_no_witness(self):
        # the angle at (0,0) between (3,1) and (1,3) is acute, so no frame
        # makes (0,0) a between-vertex for that pair
        g = graph(pts((0, 0), (3, 1), (1, 3)), [(0, 1), (0, 2)])
        ok, witness = is_uniform_2d_monotone(g)
        assert not ok and witness is None

    def test_obtuse_fork_has_witness(self):
        # dot((3,1), (-2,3)) < 0: some rotation sees (0,0) between the leaves
        g = graph(pts((0, 0), (3, 1), (-2, 3)), [(0, 1), (0, 2)])
        ok, witness = is_uniform_2d_monotone(g)
        assert ok
        assert is_xy_monotone_connected(g, witness)

    def test_witness_agrees_with_checker(self):
        rng = random.Random(31)
        for seed in range(10):
            ps, _ = gen(5, seed=300 + seed)
            all_edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
            g = graph(ps, rng.sample(all_edges, rng.randrange(4, len(all_edges))))
            ok, witness = is_uniform_2d_monotone(g)
            if ok:
                assert is_xy_monotone_connected(g, witness)
