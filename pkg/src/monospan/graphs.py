"""Geometric graphs over point sets and monotone-connectivity decision procedures."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DegenerateInput, TiedCoordinate, TiedY
from .geometry import (
    Direction,
    PointSet,
    STANDARD_FRAME,
    euclidean,
    event_schedule,
    rotated_coords,
)

Edge = tuple[int, int]


def normalize_edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError(f"self-loop at {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class GeometricGraph:
    """An undirected graph over a point set; edges are index pairs (i, j), i < j."""

    points: PointSet
    edges: frozenset[Edge]

    @classmethod
    def of(cls, points: PointSet, edges: Iterable[tuple[int, int]]) -> "GeometricGraph":
        n = len(points)
        es = set()
        for i, j in edges:
            e = normalize_edge(i, j)
            if not (0 <= e[0] and e[1] < n):
                raise ValueError(f"edge {e} out of range for {n} points")
            es.add(e)
        return cls(points=points, edges=frozenset(es))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(len(self.points))]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


def cost(g: GeometricGraph) -> float:
    """Sum of Euclidean edge lengths (floating evaluation of exact coordinates)."""
    return sum(euclidean(g.points[i], g.points[j]) for i, j in g.edges)


def _frame_coords(ps: PointSet, d: Direction, need_u: bool = True):
    """(u, v) lists in frame d; raises TiedCoordinate on any shared u or v."""
    us, vs = [], []
    for p in ps:
        u, v = rotated_coords(p, d)
        us.append(u)
        vs.append(v)
    if len(set(vs)) != len(vs):
        raise TiedCoordinate("two points share a v-coordinate in this frame")
    if need_u and len(set(us)) != len(us):
        raise TiedCoordinate("two points share a u-coordinate in this frame")
    return us, vs


def is_y_monotone_connected(g: GeometricGraph, d: Direction = STANDARD_FRAME) -> bool:
    """Every pair joined by a path monotone in the frame's v-coordinate.

    Orients each edge from its lower-v endpoint upward; every pair (p, q)
    with v_p < v_q must then have q reachable from p.
    """
    n = len(g.points)
    _, vs = _frame_coords(g.points, d, need_u=False)
    up: list[list[int]] = [[] for _ in range(n)]
    for i, j in g.edges:
        lo, hi = (i, j) if vs[i] < vs[j] else (j, i)
        up[lo].append(hi)
    for s in range(n):
        reach = _reachable(up, s)
        for t in range(n):
            if vs[t] > vs[s] and t not in reach:
                return False
    return True


def _reachable(adj: list[list[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_xy_monotone_connected(g: GeometricGraph, d: Direction = STANDARD_FRAME) -> bool:
    """Every pair joined by a path monotone in both u and v of frame d.

    Per pair, BFS over the edges whose u-step and v-step signs both match the
    target's quadrant; all intermediate vertices then lie inside the closed
    rectangle on the pair.
    """
    us, vs = _frame_coords(g.points, d)
    adj = g.adjacency()
    n = len(g.points)
    for p in range(n):
        for q in range(p + 1, n):
            if not _sign_restricted_path(adj, us, vs, p, q):
                return False
    return True


def _sign_restricted_path(adj, us, vs, p, q) -> bool:
    su = 1 if us[q] > us[p] else -1
    sv = 1 if vs[q] > vs[p] else -1
    seen = {p}
    queue = deque([p])
    while queue:
        r = queue.popleft()
        if r == q:
            return True
        for s in adj[r]:
            if s in seen:
                continue
            du = 1 if us[s] > us[r] else -1
            dv = 1 if vs[s] > vs[r] else -1
            if du == su and dv == sv:
                seen.add(s)
                queue.append(s)
    return q in seen


@dataclass(frozen=True)
class RootedPointSet:
    """A point set with k >= 1 designated roots; all y-coordinates distinct."""

    points: PointSet
    roots: tuple[int, ...]

    @classmethod
    def of(cls, points: PointSet, roots: Iterable[int]) -> "RootedPointSet":
        rs = list(roots)
        if not rs:
            raise ValueError("at least one root required")
        if len(set(rs)) != len(rs):
            raise ValueError("duplicate roots")
        n = len(points)
        for r in rs:
            if not 0 <= r < n:
                raise ValueError(f"root index {r} out of range")
        ys = [p.y for p in points]
        if len(set(ys)) != len(ys):
            raise TiedY("rooted point sets require pairwise distinct y-coordinates")
        rs.sort(key=lambda r: points[r].y)
        return cls(points=points, roots=tuple(rs))

    @property
    def k(self) -> int:
        return len(self.roots)


def is_k_rooted_y_monotone(
    g: GeometricGraph, rooted: RootedPointSet, d: Direction = STANDARD_FRAME
) -> bool:
    """Structural characterization of k-rooted y-monotone graphs (y read as v in frame d).

    For a single root: every non-root needs a neighbor whose v lies between
    the root's (inclusive) and its own.  For k >= 2: the six band clauses over
    the roots sorted by v.  Linear in |E| after bucketing by root intervals.
    """
    n = len(g.points)
    _, vs = _frame_coords(g.points, d, need_u=False)
    roots = sorted(rooted.roots, key=lambda r: vs[r])
    adj = g.adjacency()
    root_set = set(roots)

    if len(roots) == 1:
        r = roots[0]
        for p in range(n):
            if p == r:
                continue
            if vs[p] > vs[r]:
                ok = any(vs[r] <= vs[q] < vs[p] for q in adj[p])
            else:
                ok = any(vs[p] < vs[q] <= vs[r] for q in adj[p])
            if not ok:
                return False
        return True

    k = len(roots)
    rv = [vs[r] for r in roots]
    for p in range(n):
        if p in root_set:
            continue
        v = vs[p]
        if v < rv[0]:
            if not any(v < vs[q] <= rv[0] for q in adj[p]):
                return False
        elif v > rv[-1]:
            if not any(rv[-1] <= vs[q] < v for q in adj[p]):
                return False
        else:
            # p lies strictly inside some band (r_i, r_{i+1})
            i = max(idx for idx in range(k) if rv[idx] < v)
            if not any(rv[i] <= vs[q] < v for q in adj[p]):
                return False
            if not any(v < vs[q] <= rv[i + 1] for q in adj[p]):
                return False
    if not any(rv[0] < vs[q] <= rv[1] for q in adj[roots[0]]):
        return False
    if not any(rv[-2] <= vs[q] < rv[-1] for q in adj[roots[-1]]):
        return False
    for i in range(1, k - 1):
        r = roots[i]
        if not any(rv[i - 1] <= vs[q] < rv[i] for q in adj[r]):
            return False
        if not any(rv[i] < vs[q] <= rv[i + 1] for q in adj[r]):
            return False
    return True


def is_uniform_2d_monotone(
    g: GeometricGraph,
) -> tuple[bool, Optional[Direction]]:
    """Whether some rotated frame makes the whole graph xy-monotone-connected.

    Scans the sufficient directions of the vertex set and returns the first
    witness.  Event directions tie a coordinate for their generating pair and
    are skipped; combinatorics are constant strictly between events, so the
    interleaved gap directions cover every open interval.
    """
    if len(g.points) <= 1:
        return (True, STANDARD_FRAME)
    schedule = event_schedule(g.points)
    for d, _pair in schedule.sufficient:
        try:
            if is_xy_monotone_connected(g, d):
                return (True, d)
        except TiedCoordinate:
            continue
    return (False, None)
