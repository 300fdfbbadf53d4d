"""Exact geometric primitives: points, rotated frames, rectangle tests, event directions.

All coordinates are exact rationals and every predicate is a sign test on
exact rational expressions, so event ordering and rectangle membership are
never subject to floating-point error.  Euclidean lengths are the only
floating quantities in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DegenerateInput

RationalLike = Fraction | int | str | float


def to_fraction(value: RationalLike) -> Fraction:
    """Convert a coordinate to an exact Fraction.

    Decimal strings ("1.5") and "num/den" strings parse losslessly; floats
    are taken at their exact binary value.
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """A planar point with exact rational coordinates and a stable index."""

    x: Fraction
    y: Fraction
    index: int

    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Direction:
    """The y'-axis of a rotated Cartesian frame, as an exact rational vector.

    Stored unreduced scale never matters: every predicate is invariant under
    positive rescaling.  The paired x'-axis is the -90 degree rotation
    (dy, -dx).  Vectors are normalized by quarter turns into the canonical
    cone dx > 0, dy >= 0 (or dx == 0, dy > 0, which keeps the standard frame
    (0, 1) intact).
    """

    dx: Fraction
    dy: Fraction

    def __post_init__(self):
        dx, dy = to_fraction(self.dx), to_fraction(self.dy)
        if dx == 0 and dy == 0:
            raise ValueError("direction must be nonzero")
        for _ in range(4):
            if (dx > 0 and dy >= 0) or (dx == 0 and dy > 0):
                break
            dx, dy = -dy, dx  # quarter turn
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)

    def int_vector(self) -> tuple[int, int]:
        """The direction as a coprime integer vector (positive rescale)."""
        scale = self.dx.denominator * self.dy.denominator
        a = int(self.dx * scale)
        b = int(self.dy * scale)
        g = math.gcd(a, b)
        return (a // g, b // g)

    def angle_key(self) -> Fraction | float:
        """Sort key: tan of the angle in [0, pi/2]; the vertical frame maps to +inf."""
        if self.dx == 0:
            return math.inf
        return self.dy / self.dx

    def perp(self) -> tuple[Fraction, Fraction]:
        """The paired x'-axis vector."""
        return (self.dy, -self.dx)


STANDARD_FRAME = Direction(Fraction(0), Fraction(1))


def rotated_coords(p: Point, d: Direction) -> tuple[Fraction, Fraction]:
    """(u, v) of p in frame d: v along the y'-axis, u along the x'-axis.

    Unnormalized by design; only comparisons between points are meaningful.
    """
    u = p.x * d.dy - p.y * d.dx
    v = p.x * d.dx + p.y * d.dy
    return (u, v)


def closed_rect_contains(a: Point, b: Point, r: Point, d: Direction) -> bool:
    """Whether r lies in the closed rectangle with corners a, b in frame d.

    Boundary counts as contained: a point on a rectangle side blocks
    rectangular visibility.
    """
    ua, va = rotated_coords(a, d)
    ub, vb = rotated_coords(b, d)
    ur, vr = rotated_coords(r, d)
    if not (min(ua, ub) <= ur <= max(ua, ub)):
        return False
    return min(va, vb) <= vr <= max(va, vb)


class PointSet:
    """An indexed set of distinct points with exact rational coordinates."""

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        for i, p in enumerate(pts):
            if p.index != i:
                raise ValueError(f"point {i} carries index {p.index}")
        self._points = pts
        self._lattice: Optional[tuple[list[int], list[int], int]] = None

    @classmethod
    def from_coords(cls, coords: Iterable[tuple[RationalLike, RationalLike]]) -> "PointSet":
        return cls(
            Point(to_fraction(x), to_fraction(y), i) for i, (x, y) in enumerate(coords)
        )

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def __iter__(self):
        return iter(self._points)

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def lattice(self) -> tuple[list[int], list[int], int]:
        """Coordinates rescaled onto a common integer grid (exact).

        Returns (xs, ys, scale) with xs[i] == x_i * scale as Python ints.
        """
        if self._lattice is None:
            scale = 1
            for p in self._points:
                scale = scale * p.x.denominator // math.gcd(scale, p.x.denominator)
                scale = scale * p.y.denominator // math.gcd(scale, p.y.denominator)
            xs = [int(p.x * scale) for p in self._points]
            ys = [int(p.y * scale) for p in self._points]
            self._lattice = (xs, ys, scale)
        return self._lattice

    def pairs(self) -> Iterable[tuple[int, int]]:
        n = len(self._points)
        for i in range(n):
            for j in range(i + 1, n):
                yield (i, j)


def euclidean(p: Point, q: Point) -> float:
    return math.hypot(float(p.x - q.x), float(p.y - q.y))


def _event_direction(vx: Fraction, vy: Fraction) -> Direction:
    """Quarter-turn reduce a nonzero segment vector to the dx > 0, dy >= 0 cone."""
    dx, dy = vx, vy
    for _ in range(4):
        if dx > 0 and dy >= 0:
            return Direction(dx, dy)
        dx, dy = -dy, dx
    raise ValueError("zero vector has no direction")


@dataclass(frozen=True)
class EventSchedule:
    """All event directions of a point set plus the interleaved sufficient systems.

    events has one entry per unordered pair, sorted by exact angle; sufficient
    interleaves each event with a direction strictly inside the following
    inter-event gap (rational vector sums, combinatorially equivalent to the
    angle bisector) and closes with one direction strictly below the vertical.
    """

    events: tuple[tuple[Direction, tuple[int, int]], ...]
    sufficient: tuple[tuple[Direction, Optional[tuple[int, int]]], ...]

    def transition_pair(self, cursor: int) -> tuple[int, int]:
        """The generating pair for the step from system `cursor` to `cursor + 1`."""
        nxt = self.sufficient[cursor + 1][1]
        if nxt is not None:
            return nxt
        pair = self.sufficient[cursor][1]
        assert pair is not None
        return pair


def event_schedule(ps: PointSet) -> EventSchedule:
    """Sort the C(n,2) pair directions (quarter-turn reduced) and interleave gaps.

    Raises DegenerateInput when two pairs share an angle class, i.e. the set
    has a collinear triple or a parallel/orthogonal segment pair.
    """
    entries = []
    for i, j in ps.pairs():
        p, q = ps[i], ps[j]
        vx, vy = q.x - p.x, q.y - p.y
        if vx == 0 and vy == 0:
            raise DegenerateInput(f"duplicate points {i} and {j}")
        d = _event_direction(vx, vy)
        entries.append((d.angle_key(), d, (i, j)))
    entries.sort(key=lambda e: e[0])
    for a, b in zip(entries, entries[1:]):
        if a[0] == b[0]:
            raise DegenerateInput(
                f"pairs {a[2]} and {b[2]} generate the same event direction"
            )
    events = tuple((d, pair) for _, d, pair in entries)

    sufficient: list[tuple[Direction, Optional[tuple[int, int]]]] = []
    for idx, (d, pair) in enumerate(events):
        sufficient.append((d, pair))
        if idx + 1 < len(events):
            nd = events[idx + 1][0]
        else:
            nd = STANDARD_FRAME
        mid = Direction(d.dx + nd.dx, d.dy + nd.dy)
        sufficient.append((mid, None))
    return EventSchedule(events=events, sufficient=tuple(sufficient))


@dataclass(frozen=True)
class GeneralPositionReport:
    """Violations found in a point set; empty report means valid."""

    duplicate_points: tuple[tuple[int, int], ...]
    collinear_triples: tuple[tuple[int, int, int], ...]
    conflicting_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def ok(self) -> bool:
        return not (self.duplicate_points or self.collinear_triples or self.conflicting_pairs)

    def describe(self) -> str:
        lines = []
        for i, j in self.duplicate_points:
            lines.append(f"duplicate points: {i}, {j}")
        for t in self.collinear_triples:
            lines.append(f"collinear triple: {t[0]}, {t[1]}, {t[2]}")
        for a, b in self.conflicting_pairs:
            lines.append(f"parallel/orthogonal segments: {a} and {b}")
        return "\n".join(lines) if lines else "ok"


def validate_general_position(ps: PointSet) -> GeneralPositionReport:
    """Report every duplicate point, collinear triple, and parallel/orthogonal pair.

    Equivalent to checking for duplicate quarter-turn-reduced event angles;
    runs in O(n^2 log n).  Violations are data, not failures.
    """
    seen: dict[tuple[Fraction, Fraction], int] = {}
    duplicates = []
    for p in ps:
        key = (p.x, p.y)
        if key in seen:
            duplicates.append((seen[key], p.index))
        else:
            seen[key] = p.index

    by_angle: dict[Fraction, list[tuple[int, int]]] = {}
    for i, j in ps.pairs():
        p, q = ps[i], ps[j]
        vx, vy = q.x - p.x, q.y - p.y
        if vx == 0 and vy == 0:
            continue  # reported as duplicate
        d = _event_direction(vx, vy)
        by_angle.setdefault(d.angle_key(), []).append((i, j))

    collinear = set()
    conflicts = []
    for pairs in by_angle.values():
        if len(pairs) < 2:
            continue
        for a_idx in range(len(pairs)):
            for b_idx in range(a_idx + 1, len(pairs)):
                a, b = pairs[a_idx], pairs[b_idx]
                shared = set(a) & set(b)
                if shared:
                    pa, qa = ps[a[0]], ps[a[1]]
                    pb, qb = ps[b[0]], ps[b[1]]
                    cross = (qa.x - pa.x) * (qb.y - pb.y) - (qa.y - pa.y) * (qb.x - pb.x)
                    if cross == 0:
                        collinear.add(tuple(sorted(set(a) | set(b))))
                        continue
                conflicts.append((a, b))
    return GeneralPositionReport(
        duplicate_points=tuple(duplicates),
        collinear_triples=tuple(sorted(collinear)),
        conflicting_pairs=tuple(conflicts),
    )
