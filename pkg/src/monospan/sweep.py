"""O(n^3) rotational sweep over the sufficient systems.

Maintains the per-pair inclusion counters and visibility flags across all
2*C(n,2) sufficient frames with O(n) work per transition, tracks the
minimum-cost (or fewest-edges) frame, and recomputes the winning graph
from scratch at the end.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CursorExhausted, DegenerateInput
from .geometry import Direction, EventSchedule, PointSet, event_schedule
from .graphs import GeometricGraph, cost as graph_cost
from .rig import frame_arrays, inclusion_counts, length_matrix, rectangle_of_influence_graph


@dataclass
class SweepState:
    """Mutable sweep cursor state; single-owner, advanced sequentially."""

    counts: np.ndarray  # (n, n) int64, symmetric, diagonal zero
    visible: np.ndarray  # (n, n) bool, visible(p, q) <=> counts(p, q) == 0
    running_cost: float
    running_edges: int
    cursor: int
    frame_u: np.ndarray = field(repr=False)
    frame_v: np.ndarray = field(repr=False)


def init_sweep(ps: PointSet, schedule: EventSchedule | None = None) -> SweepState:
    """State at the first sufficient system (the smallest event direction)."""
    if len(ps) < 2:
        raise DegenerateInput("sweep needs at least two points")
    if schedule is None:
        schedule = event_schedule(ps)
    d0 = schedule.sufficient[0][0]
    counts = inclusion_counts(ps, d0, check=None if len(ps) <= 8 else False).table.copy()
    visible = counts == 0
    np.fill_diagonal(visible, False)
    lengths = length_matrix(ps)
    u, v = frame_arrays(ps, d0)
    return SweepState(
        counts=counts,
        visible=visible,
        running_cost=float(lengths[visible].sum()) / 2.0,
        running_edges=int(visible.sum()) // 2,
        cursor=0,
        frame_u=u,
        frame_v=v,
    )


def _membership(U, V, corner: int, test: int) -> np.ndarray:
    """For every r: is point `test` inside the closed rectangle on (corner, r)?"""
    lo_u = np.minimum(U[corner], U)
    hi_u = np.maximum(U[corner], U)
    lo_v = np.minimum(V[corner], V)
    hi_v = np.maximum(V[corner], V)
    return (lo_u <= U[test]) & (U[test] <= hi_u) & (lo_v <= V[test]) & (V[test] <= hi_v)


def _as_int(mask: np.ndarray) -> np.ndarray:
    return mask.astype(np.int64)


def advance(
    state: SweepState,
    ps: PointSet,
    schedule: EventSchedule,
    *,
    debug: bool = False,
) -> SweepState:
    """Step to the next sufficient system with O(n) counter updates.

    Only pairs involving the transition's generating points can change:
    their memberships are re-evaluated under the old and the new frame and
    the counters adjusted by the difference, flipping visibility, cost and
    edge count whenever a counter crosses zero.
    """
    if state.cursor + 1 >= len(schedule.sufficient):
        raise CursorExhausted(f"cursor {state.cursor} is at the last sufficient system")
    a, b = schedule.transition_pair(state.cursor)
    d_new = schedule.sufficient[state.cursor + 1][0]
    u_old, v_old = state.frame_u, state.frame_v
    u_new, v_new = frame_arrays(ps, d_new)
    counts = state.counts
    n = counts.shape[0]

    for corner, test in ((a, b), (b, a)):
        delta = _as_int(_membership(u_new, v_new, corner, test)) - _as_int(
            _membership(u_old, v_old, corner, test)
        )
        delta[a] = 0
        delta[b] = 0
        counts[corner, :] += delta
        counts[:, corner] += delta

    lo_u = np.minimum(u_new[a], u_new[b])
    hi_u = np.maximum(u_new[a], u_new[b])
    lo_v = np.minimum(v_new[a], v_new[b])
    hi_v = np.maximum(v_new[a], v_new[b])
    inside = (lo_u <= u_new) & (u_new <= hi_u) & (lo_v <= v_new) & (v_new <= hi_v)
    inside[a] = False
    inside[b] = False
    c_ab = int(_as_int(inside).sum())
    counts[a, b] = counts[b, a] = c_ab

    lengths = length_matrix(ps)
    for row in (a, b):
        new_vis = counts[row] == 0
        new_vis[row] = False
        old_vis = state.visible[row].copy()
        added = new_vis & ~old_vis
        removed = old_vis & ~new_vis
        state.running_edges += int(added.sum()) - int(removed.sum())
        state.running_cost += float(lengths[row][added].sum()) - float(
            lengths[row][removed].sum()
        )
        state.visible[row, :] = new_vis
        state.visible[:, row] = new_vis

    state.cursor += 1
    state.frame_u = u_new
    state.frame_v = v_new

    if debug:
        fresh = inclusion_counts(ps, d_new, check=False).table
        assert np.array_equal(counts, fresh), "incremental counts diverged from scratch"
    return state


def _run_sweep(ps: PointSet, objective: str):
    schedule = event_schedule(ps)
    state = init_sweep(ps, schedule)
    if objective == "cost":
        best_key = state.running_cost
    else:
        best_key = state.running_edges
    best_cursor = 0
    total = len(schedule.sufficient)
    while state.cursor + 1 < total:
        advance(state, ps, schedule)
        key = state.running_cost if objective == "cost" else state.running_edges
        if key < best_key:
            best_key = key
            best_cursor = state.cursor
    d = schedule.sufficient[best_cursor][0]
    graph = rectangle_of_influence_graph(ps, d, check=False)
    return d, graph


def ummsg(ps: PointSet) -> tuple[Direction, GeometricGraph, float]:
    """Minimum-cost uniform solution over all frames; winner recomputed from scratch.

    Ties between equally cheap frames break to the smallest cursor index.
    """
    d, graph = _run_sweep(ps, "cost")
    return d, graph, graph_cost(graph)


def least_edges_uniform(ps: PointSet) -> tuple[Direction, GeometricGraph]:
    """Fewest-edges uniform solution over all frames (same sweep, edge objective)."""
    d, graph = _run_sweep(ps, "edges")
    return d, graph
