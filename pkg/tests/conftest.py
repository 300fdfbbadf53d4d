"""Shared helpers and frozen fixtures for the test suite."""

from fractions import Fraction

from monospan.geometry import PointSet


def pts(*coords) -> PointSet:
    return PointSet.from_coords([(Fraction(str(x)), Fraction(str(y))) for x, y in coords])


# Six points forming two near-right-angle triples (a, b, c) and (d, e, f),
# indexed 0..5 in that order.  The angle at b (between ba and bc) and the
# angle at e (between ed and ef) are slightly obtuse, so b blocks the pair
# (a, c) and e blocks the pair (d, f) over a narrow wedge of directions
# bounded by the event classes of the adjacent segments.  slope(de) is
# smaller than slope(bc), the cost optimum falls in the bc wedge and the
# edge-count optimum in the de wedge, and the two winning graphs have
# different edge counts.  Found by randomized search; frozen verbatim.
DIVERGENCE_COORDS = (
    ("-1373/192", "72065/8192"),      # a
    ("23805/16384", "95/64"),         # b
    ("100605/16384", "110719/16384"),  # c
    ("76289/8192", "-16765/16384"),   # d
    ("79617/16384", "-38655/16384"),  # e
    ("164675/49152", "245/128"),      # f
)


def divergence_fixture() -> PointSet:
    return PointSet.from_coords(
        [(Fraction(x), Fraction(y)) for x, y in DIVERGENCE_COORDS]
    )
