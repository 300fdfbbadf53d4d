"""Minimum-cost and fewest-edges monotone spanning graphs of planar point sets."""

from .errors import (
    BudgetExceeded,
    CursorExhausted,
    DegenerateInput,
    GenerationFailed,
    MonospanError,
    ParseError,
    RootNotExtreme,
    TiedCoordinate,
    TiedY,
)
from .estimators import (
    KRootedMonotoneSpanner,
    RectangleOfInfluenceGraph,
    UniformMonotoneSpanningGraph,
)
from .generate import gen
from .geometry import (
    Direction,
    EventSchedule,
    Point,
    PointSet,
    closed_rect_contains,
    event_schedule,
    rotated_coords,
    validate_general_position,
)
from .graphs import (
    GeometricGraph,
    RootedPointSet,
    cost,
    is_k_rooted_y_monotone,
    is_uniform_2d_monotone,
    is_xy_monotone_connected,
    is_y_monotone_connected,
)
from .rig import inclusion_counts, rectangle_of_influence_graph, xy_mmsg
from .rooted import k_rooted_2approx, rooted_y_mmsg, strip_decompose, two_rooted_2approx
from .sweep import SweepState, advance, init_sweep, least_edges_uniform, ummsg

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CursorExhausted",
    "DegenerateInput",
    "Direction",
    "EventSchedule",
    "GenerationFailed",
    "GeometricGraph",
    "KRootedMonotoneSpanner",
    "MonospanError",
    "ParseError",
    "Point",
    "PointSet",
    "RectangleOfInfluenceGraph",
    "RootNotExtreme",
    "RootedPointSet",
    "SweepState",
    "TiedCoordinate",
    "TiedY",
    "UniformMonotoneSpanningGraph",
    "advance",
    "closed_rect_contains",
    "cost",
    "event_schedule",
    "gen",
    "inclusion_counts",
    "init_sweep",
    "is_k_rooted_y_monotone",
    "is_uniform_2d_monotone",
    "is_xy_monotone_connected",
    "is_y_monotone_connected",
    "k_rooted_2approx",
    "least_edges_uniform",
    "rectangle_of_influence_graph",
    "rooted_y_mmsg",
    "rotated_coords",
    "strip_decompose",
    "two_rooted_2approx",
    "ummsg",
    "validate_general_position",
    "xy_mmsg",
]
