"""Rectangle-of-influence graph: inclusion counts and the xy-MMSG for a fixed frame.

The counting core works on an exact integer lattice: coordinates are
rescaled to a common integer grid and frames are applied as integer dot
products, so every comparison is exact.  int64 is used when products
provably fit, with Python-int (object dtype) arrays as the overflow
fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TiedCoordinate
from .geometry import Direction, PointSet, closed_rect_contains, euclidean
from .graphs import Edge, GeometricGraph, cost as graph_cost


def _np_coords(ps: PointSet):
    """Lattice coordinates as numpy arrays plus their magnitude bound (cached)."""
    cache = getattr(ps, "_np_coords", None)
    if cache is None:
        xs, ys, _scale = ps.lattice()
        bound = max((abs(c) for c in xs + ys), default=0)
        if bound < 2**62:
            X = np.array(xs, dtype=np.int64)
            Y = np.array(ys, dtype=np.int64)
        else:
            X = np.array(xs, dtype=object)
            Y = np.array(ys, dtype=object)
        cache = (X, Y, bound)
        ps._np_coords = cache  # type: ignore[attr-defined]
    return cache


def frame_arrays(ps: PointSet, d: Direction) -> tuple[np.ndarray, np.ndarray]:
    """(U, V) arrays of all points in frame d, exact integer arithmetic."""
    X, Y, bound = _np_coords(ps)
    dxn, dyn = d.int_vector()
    dbound = max(abs(dxn), abs(dyn))
    if X.dtype == np.int64 and bound * dbound * 2 < 2**62:
        U = X * dyn - Y * dxn
        V = X * dxn + Y * dyn
    else:
        Xo = X.astype(object)
        Yo = Y.astype(object)
        U = Xo * dyn - Yo * dxn
        V = Xo * dxn + Yo * dyn
    return U, V


def _ranks(values: np.ndarray) -> tuple[np.ndarray, int]:
    uniq, inverse = np.unique(values, return_inverse=True)
    return inverse.astype(np.int64), len(uniq)


@dataclass(frozen=True)
class InclusionCounts:
    """Symmetric table of rectangle inclusion counts; zero entries are RIG edges."""

    table: np.ndarray  # (n, n) int64, diagonal unused (zero)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.table[pair[0], pair[1]])

    def zero_pairs(self) -> list[Edge]:
        n = self.table.shape[0]
        iu, ju = np.triu_indices(n, k=1)
        mask = self.table[iu, ju] == 0
        return [(int(i), int(j)) for i, j in zip(iu[mask], ju[mask])]


def inclusion_counts(ps: PointSet, d: Direction, *, check: bool | None = None) -> InclusionCounts:
    """Count, for every pair, the other points inside their closed rectangle in frame d.

    Dominance counting over rank-compressed coordinates: a 2D prefix-sum
    grid answers every closed-rectangle query, O(n^2) total.  Tied u or v
    values (they arise exactly at event directions) are handled by the rank
    compression; only frame-coincident points are rejected.

    check=None runs the O(n^3) naive recount as a self-check when n <= 8.
    """
    n = len(ps)
    U, V = frame_arrays(ps, d)
    ur, nu = _ranks(U)
    vr, nv = _ranks(V)
    if len(np.unique(ur * nv + vr)) != n:
        raise TiedCoordinate("two points coincide in this frame")

    grid = np.zeros((nu + 2, nv + 2), dtype=np.int64)
    np.add.at(grid, (ur + 1, vr + 1), 1)
    pre = grid.cumsum(axis=0).cumsum(axis=1)

    lo_u = np.minimum.outer(ur, ur)
    hi_u = np.maximum.outer(ur, ur)
    lo_v = np.minimum.outer(vr, vr)
    hi_v = np.maximum.outer(vr, vr)
    table = (
        pre[hi_u + 1, hi_v + 1]
        - pre[lo_u, hi_v + 1]
        - pre[hi_u + 1, lo_v]
        + pre[lo_u, lo_v]
        - 2
    )
    np.fill_diagonal(table, 0)

    if check is None:
        check = n <= 8
    if check:
        naive = inclusion_counts_naive(ps, d)
        assert np.array_equal(table, naive.table), "dominance counts disagree with naive recount"
    return InclusionCounts(table=table)


def inclusion_counts_naive(ps: PointSet, d: Direction) -> InclusionCounts:
    """O(n^3) triple loop over the closed-rectangle predicate (oracle-grade)."""
    n = len(ps)
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            c = sum(
                1
                for r in range(n)
                if r != i and r != j and closed_rect_contains(ps[i], ps[j], ps[r], d)
            )
            table[i, j] = table[j, i] = c
    return InclusionCounts(table=table)


def rectangle_of_influence_graph(
    ps: PointSet, d: Direction, *, check: bool | None = None
) -> GeometricGraph:
    """The graph joining exactly the rectangularly visible pairs in frame d.

    By the visibility characterization this is both the minimum-cost and the
    fewest-edges xy-monotone spanning graph for the frame.
    """
    counts = inclusion_counts(ps, d, check=check)
    return GeometricGraph(points=ps, edges=frozenset(counts.zero_pairs()))


def xy_mmsg(ps: PointSet, d: Direction) -> tuple[GeometricGraph, float, int]:
    """rectangle_of_influence_graph plus its cost and edge count."""
    g = rectangle_of_influence_graph(ps, d)
    return g, graph_cost(g), len(g.edges)


def length_matrix(ps: PointSet) -> np.ndarray:
    """Pairwise Euclidean lengths as float64, cached on the point set."""
    cached = getattr(ps, "_length_matrix", None)
    if cached is None:
        n = len(ps)
        xs = np.array([float(p.x) for p in ps])
        ys = np.array([float(p.y) for p in ps])
        cached = np.hypot(xs[:, None] - xs[None, :], ys[:, None] - ys[None, :])
        ps._length_matrix = cached  # type: ignore[attr-defined]
    return cached
