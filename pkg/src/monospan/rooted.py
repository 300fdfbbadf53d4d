"""Rooted and k-rooted y-monotone spanning constructions.

Exact greedy for a single root, strip decomposition at root levels, and the
union-of-greedies 2-approximation for the general k-rooted problem.
All distance comparisons are exact (squared rational distances); Euclidean
costs are evaluated in floating point only for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RootNotExtreme
from .geometry import Point, PointSet
from .graphs import Edge, GeometricGraph, RootedPointSet


def _sq_dist(p: Point, q: Point) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def _nearest_in_band(ps: PointSet, p: int, candidates: list[int]) -> int:
    """Euclidean-nearest candidate, exact comparison; ties break to smaller index."""
    best = None
    best_d = None
    for q in sorted(candidates):
        d = _sq_dist(ps[p], ps[q])
        if best_d is None or d < best_d:
            best, best_d = q, d
    assert best is not None
    return best


def rooted_y_mmsg(rooted: RootedPointSet) -> GeometricGraph:
    """Exact minimum-cost rooted y-monotone spanning graph for a single root.

    Greedy: every non-root connects to its nearest point whose y lies between
    the root's (inclusive) and its own (exclusive).  Each such band edge is
    independently necessary and independently cheapest, so the union is the
    optimum; it is a tree on n-1 edges.
    """
    if rooted.k != 1:
        raise ValueError("rooted_y_mmsg requires exactly one root")
    ps = rooted.points
    r = rooted.roots[0]
    ry = ps[r].y
    edges: set[Edge] = set()
    for p in range(len(ps)):
        if p == r:
            continue
        py = ps[p].y
        if py > ry:
            band = [q for q in range(len(ps)) if q != p and ry <= ps[q].y < py]
        else:
            band = [q for q in range(len(ps)) if q != p and py < ps[q].y <= ry]
        q = _nearest_in_band(ps, p, band)
        edges.add((p, q) if p < q else (q, p))
    return GeometricGraph(points=ps, edges=frozenset(edges))


def two_rooted_2approx(rooted: RootedPointSet) -> GeometricGraph:
    """Union of the two single-root optima; cost at most twice the 2-rooted optimum.

    Requires the roots to be the strictly lowest and highest points.
    """
    if rooted.k != 2:
        raise ValueError("two_rooted_2approx requires exactly two roots")
    ps = rooted.points
    r1, r2 = rooted.roots
    ys = [p.y for p in ps]
    if ps[r1].y != min(ys) or ps[r2].y != max(ys):
        raise RootNotExtreme("roots must be the lowest and highest points")
    g1 = rooted_y_mmsg(RootedPointSet.of(ps, [r1]))
    g2 = rooted_y_mmsg(RootedPointSet.of(ps, [r2]))
    return GeometricGraph(points=ps, edges=g1.edges | g2.edges)


@dataclass(frozen=True)
class SubProblem:
    """A rooted subproblem on a reindexed subset, with its map back to global indices."""

    rooted: RootedPointSet
    global_indices: tuple[int, ...]

    def lift_edges(self, edges: frozenset[Edge]) -> set[Edge]:
        out = set()
        for i, j in edges:
            gi, gj = self.global_indices[i], self.global_indices[j]
            out.add((gi, gj) if gi < gj else (gj, gi))
        return out


@dataclass(frozen=True)
class StripDecomposition:
    """Split of a k-rooted instance at root levels: below, above, and k-1 strips."""

    below: SubProblem
    above: SubProblem
    strips: tuple[SubProblem, ...]


def _subproblem(ps: PointSet, indices: list[int], roots: list[int]) -> SubProblem:
    indices = sorted(indices)
    remap = {g: i for i, g in enumerate(indices)}
    sub_ps = PointSet(
        Point(ps[g].x, ps[g].y, i) for i, g in enumerate(indices)
    )
    return SubProblem(
        rooted=RootedPointSet.of(sub_ps, [remap[r] for r in roots]),
        global_indices=tuple(indices),
    )


def strip_decompose(rooted: RootedPointSet) -> StripDecomposition:
    """Partition per the band subscripts: closed y-intervals at the root levels."""
    if not 1 < rooted.k < len(rooted.points):
        raise ValueError("strip decomposition requires 1 < k < n")
    ps = rooted.points
    roots = rooted.roots  # sorted by increasing y
    y_lo = ps[roots[0]].y
    y_hi = ps[roots[-1]].y
    below = _subproblem(ps, [p.index for p in ps if p.y <= y_lo], [roots[0]])
    above = _subproblem(ps, [p.index for p in ps if p.y >= y_hi], [roots[-1]])
    strips = []
    for r_lo, r_hi in zip(roots, roots[1:]):
        a, b = ps[r_lo].y, ps[r_hi].y
        strips.append(
            _subproblem(ps, [p.index for p in ps if a <= p.y <= b], [r_lo, r_hi])
        )
    return StripDecomposition(below=below, above=above, strips=tuple(strips))


def _y_sorted_path(rooted: RootedPointSet) -> GeometricGraph:
    ps = rooted.points
    order = sorted(range(len(ps)), key=lambda i: ps[i].y)
    edges = {
        (a, b) if a < b else (b, a) for a, b in zip(order, order[1:])
    }
    return GeometricGraph(points=ps, edges=frozenset(edges))


def k_rooted_2approx(rooted: RootedPointSet) -> GeometricGraph:
    """2-approximate k-rooted y-monotone spanning graph.

    Exact single-root optima outside the root span, union-of-greedies on each
    strip; the edge-set union is k-rooted y-monotone with cost at most twice
    the optimum.  k = 1 falls back to the exact greedy; k = n returns the
    y-sorted path, which is the exact optimum there.
    """
    if rooted.k == 1:
        return rooted_y_mmsg(rooted)
    if rooted.k == len(rooted.points):
        return _y_sorted_path(rooted)
    decomp = strip_decompose(rooted)
    edges: set[Edge] = set()
    edges |= decomp.below.lift_edges(rooted_y_mmsg(decomp.below.rooted).edges)
    edges |= decomp.above.lift_edges(rooted_y_mmsg(decomp.above.rooted).edges)
    for strip in decomp.strips:
        if len(strip.rooted.points) == 2:
            # roots only: the single joining edge is the strip's optimum
            edges |= strip.lift_edges(frozenset({(0, 1)}))
            continue
        edges |= strip.lift_edges(two_rooted_2approx(strip.rooted).edges)
    return GeometricGraph(points=rooted.points, edges=frozenset(edges))
