"""Scikit-learn style estimators wrapping the spanning-graph algorithms.

Each estimator takes an (n, 2) array-like of coordinates in fit(); values
may be numbers, Fractions, or decimal / "num/den" strings and are converted
to exact rationals.  Fitted attributes expose the resulting graph.
"""

from __future__ import annotations

from typing import Optional, Sequence

from sklearn.base import BaseEstimator

from .geometry import Direction, PointSet, to_fraction
from .graphs import GeometricGraph, RootedPointSet, cost as graph_cost
from .rig import rectangle_of_influence_graph
from .rooted import k_rooted_2approx
from .sweep import least_edges_uniform, ummsg


def validate_points(X) -> PointSet:
    """Coerce an (n, 2) array-like into a PointSet with exact coordinates."""
    if isinstance(X, PointSet):
        return X
    rows = list(X)
    if not rows:
        raise ValueError("X must contain at least one point")
    coords = []
    for i, row in enumerate(rows):
        pair = list(row)
        if len(pair) != 2:
            raise ValueError(f"row {i} has {len(pair)} values, expected 2")
        coords.append((to_fraction(pair[0]), to_fraction(pair[1])))
    return PointSet.from_coords(coords)


def _as_direction(direction) -> Direction:
    if direction is None:
        return Direction(0, 1)
    if isinstance(direction, Direction):
        return direction
    dx, dy = direction
    return Direction(to_fraction(dx), to_fraction(dy))


def _record(est, graph: GeometricGraph, direction: Optional[Direction]) -> None:
    est.graph_ = graph
    est.edges_ = graph.sorted_edges()
    est.n_edges_ = len(graph.edges)
    est.cost_ = graph_cost(graph)
    est.direction_ = direction


class RectangleOfInfluenceGraph(BaseEstimator):
    """Rectangularly visible pairs of the input points for a fixed frame.

    This is both the minimum-cost and the fewest-edges xy-monotone spanning
    graph of the points in that frame.

    Parameters
    ----------
    direction : (dx, dy) pair or Direction, default None
        The y'-axis of the frame; None means the standard axes.
    """

    def __init__(self, direction=None):
        self.direction = direction

    def fit(self, X, y=None):
        ps = validate_points(X)
        d = _as_direction(self.direction)
        _record(self, rectangle_of_influence_graph(ps, d), d)
        return self


class UniformMonotoneSpanningGraph(BaseEstimator):
    """Best spanning graph over all rotated frames, by cost or by edge count.

    Runs the rotational sweep over every sufficient frame and recomputes the
    winner from scratch; `direction_` is the winning y'-axis.

    Parameters
    ----------
    objective : "cost" or "edges"
    """

    def __init__(self, objective="cost"):
        self.objective = objective

    def fit(self, X, y=None):
        if self.objective not in ("cost", "edges"):
            raise ValueError(f"unknown objective {self.objective!r}")
        ps = validate_points(X)
        if self.objective == "cost":
            d, graph, _ = ummsg(ps)
        else:
            d, graph = least_edges_uniform(ps)
        _record(self, graph, d)
        return self


class KRootedMonotoneSpanner(BaseEstimator):
    """2-approximate k-rooted y-monotone spanning graph (exact for k = 1 and k = n).

    Parameters
    ----------
    roots : sequence of point indices, at least one.
    """

    def __init__(self, roots: Sequence[int] = (0,)):
        self.roots = roots

    def fit(self, X, y=None):
        ps = validate_points(X)
        rooted = RootedPointSet.of(ps, list(self.roots))
        _record(self, k_rooted_2approx(rooted), None)
        return self
