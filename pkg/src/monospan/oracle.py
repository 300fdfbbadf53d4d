"""Independent brute-force ground truth for small instances.

Feasibility here is always direct path reachability over explicit edge
subsets; none of the structural shortcuts used by the main algorithms
(visibility counting, band characterizations) are consulted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import BudgetExceeded, TiedCoordinate
from .geometry import Direction, PointSet, STANDARD_FRAME, event_schedule, rotated_coords
from .graphs import Edge, GeometricGraph, RootedPointSet
from .rig import inclusion_counts, length_matrix


@dataclass(frozen=True)
class OracleBudget:
    """Enumeration caps; subset enumeration is limited to 7 points (2^21 subsets)."""

    max_points: int = 7
    max_edge_subsets: int = 1 << 22
    samples: int = 10_000


DEFAULT_BUDGET = OracleBudget()


def _frame_uv(ps: PointSet, d: Direction):
    us, vs = [], []
    for p in ps:
        u, v = rotated_coords(p, d)
        us.append(u)
        vs.append(v)
    if len(set(us)) != len(us) or len(set(vs)) != len(vs):
        raise TiedCoordinate("oracle requires distinct rotated coordinates")
    return us, vs


def _edge_list(n: int) -> list[Edge]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


class _XySearch:
    """Sign-restricted reachability over explicit edge subsets (bitmask edges)."""

    def __init__(self, ps: PointSet, d: Direction):
        self.n = len(ps)
        self.us, self.vs = _frame_uv(ps, d)
        self.edges = _edge_list(self.n)
        self.lengths = [
            math.hypot(float(ps[i].x - ps[j].x), float(ps[i].y - ps[j].y))
            for i, j in self.edges
        ]
        # incident[r]: (edge bit, neighbor, u-step sign, v-step sign) for r -> neighbor
        self.incident: list[list[tuple[int, int, int, int]]] = [[] for _ in range(self.n)]
        for idx, (i, j) in enumerate(self.edges):
            su = 1 if self.us[j] > self.us[i] else -1
            sv = 1 if self.vs[j] > self.vs[i] else -1
            self.incident[i].append((1 << idx, j, su, sv))
            self.incident[j].append((1 << idx, i, -su, -sv))

    def pair_connected(self, mask: int, p: int, q: int) -> bool:
        su = 1 if self.us[q] > self.us[p] else -1
        sv = 1 if self.vs[q] > self.vs[p] else -1
        reach = 1 << p
        frontier = [p]
        while frontier:
            r = frontier.pop()
            if r == q:
                return True
            for bit, s, fsu, fsv in self.incident[r]:
                if mask & bit and fsu == su and fsv == sv and not reach >> s & 1:
                    reach |= 1 << s
                    frontier.append(s)
        return bool(reach >> q & 1)

    def feasible(self, mask: int) -> bool:
        for p in range(self.n):
            for q in range(p + 1, self.n):
                if not self.pair_connected(mask, p, q):
                    return False
        return True


def _mask_edges(edges: list[Edge], mask: int) -> frozenset[Edge]:
    return frozenset(e for idx, e in enumerate(edges) if mask >> idx & 1)


def brute_min_xy_spanning(
    ps: PointSet,
    d: Direction = STANDARD_FRAME,
    objective: str = "cost",
    budget: OracleBudget = DEFAULT_BUDGET,
) -> GeometricGraph:
    """Exhaustive minimum xy-monotone-connected spanning graph for a fixed frame.

    Enumerates edge subsets, discarding only subsets provably infeasible by
    monotonicity: an edge whose removal from the complete graph already
    breaks some pair must belong to every feasible subset, so enumeration
    runs over the remaining free edges.  Ties break to the lexicographically
    smallest edge set.
    """
    if objective not in ("cost", "edges"):
        raise ValueError(f"unknown objective {objective!r}")
    n = len(ps)
    if n > budget.max_points:
        raise BudgetExceeded(f"{n} points exceeds oracle cap {budget.max_points}")
    if n < 2:
        return GeometricGraph(points=ps, edges=frozenset())
    search = _XySearch(ps, d)
    m = len(search.edges)
    full = (1 << m) - 1

    mandatory = 0
    for idx in range(m):
        if not search.feasible(full & ~(1 << idx)):
            mandatory |= 1 << idx
    if search.feasible(mandatory):
        # every feasible subset contains all mandatory edges, so this is the
        # unique minimum under both objectives
        return GeometricGraph(points=ps, edges=_mask_edges(search.edges, mandatory))

    free = [idx for idx in range(m) if not mandatory >> idx & 1]
    if 1 << len(free) > budget.max_edge_subsets:
        raise BudgetExceeded(f"2^{len(free)} subsets exceeds the enumeration cap")
    base_cost = sum(search.lengths[idx] for idx in range(m) if mandatory >> idx & 1)

    if objective == "edges":
        for size in range(len(free) + 1):
            for combo in combinations(free, size):
                mask = mandatory
                for idx in combo:
                    mask |= 1 << idx
                if search.feasible(mask):
                    return GeometricGraph(points=ps, edges=_mask_edges(search.edges, mask))
        raise AssertionError("complete graph must be feasible")

    best_mask = None
    best_cost = math.inf
    for sub in range(1 << len(free)):
        mask = mandatory
        extra = 0.0
        for pos, idx in enumerate(free):
            if sub >> pos & 1:
                mask |= 1 << idx
                extra += search.lengths[idx]
        total = base_cost + extra
        if total > best_cost:
            continue
        if total == best_cost and best_mask is not None:
            if sorted(_mask_edges(search.edges, mask)) >= sorted(
                _mask_edges(search.edges, best_mask)
            ):
                continue
        if search.feasible(mask):
            best_mask, best_cost = mask, total
    assert best_mask is not None
    return GeometricGraph(points=ps, edges=_mask_edges(search.edges, best_mask))


class _RootedSearch:
    """Per-root y-monotone reachability over explicit edge subsets."""

    def __init__(self, rooted: RootedPointSet):
        ps = rooted.points
        self.n = len(ps)
        self.ys = [p.y for p in ps]
        self.roots = rooted.roots
        self.edges = _edge_list(self.n)
        self.lengths = [
            math.hypot(float(ps[i].x - ps[j].x), float(ps[i].y - ps[j].y))
            for i, j in self.edges
        ]
        self.oriented = []  # (lower vertex, upper vertex) per edge
        for i, j in self.edges:
            self.oriented.append((i, j) if self.ys[i] < self.ys[j] else (j, i))
        self.all_vertices = (1 << self.n) - 1

    def feasible(self, mask: int) -> bool:
        up = [0] * self.n
        down = [0] * self.n
        m = mask
        while m:
            low_bit = m & -m
            lo, hi = self.oriented[low_bit.bit_length() - 1]
            up[lo] |= 1 << hi
            down[hi] |= 1 << lo
            m ^= low_bit
        for r in self.roots:
            if self._closure(up, r) | self._closure(down, r) != self.all_vertices:
                return False
        return True

    def _closure(self, adj: list[int], start: int) -> int:
        reach = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                nxt |= adj[bit.bit_length() - 1]
                f ^= bit
            frontier = nxt & ~reach
            reach |= nxt
        return reach


def brute_min_k_rooted(
    rooted: RootedPointSet, budget: OracleBudget = DEFAULT_BUDGET
) -> GeometricGraph:
    """Exhaustive minimum-cost k-rooted y-monotone spanning graph.

    Branch and bound over the non-mandatory edges with two sound prunes:
    subsets missing a mandatory edge are infeasible (monotonicity), and a
    branch whose undecided edges cannot restore feasibility is dead.  The
    initial incumbent comes from a greedy add-then-strip pass.  The search is
    exact; tests cross-check it against raw full enumeration at n <= 5.
    """
    n = len(rooted.points)
    if n > budget.max_points:
        raise BudgetExceeded(f"{n} points exceeds oracle cap {budget.max_points}")
    search = _RootedSearch(rooted)
    m = len(search.edges)
    full = (1 << m) - 1

    mandatory = 0
    for idx in range(m):
        if not search.feasible(full & ~(1 << idx)):
            mandatory |= 1 << idx

    free = [idx for idx in range(m) if not mandatory >> idx & 1]
    base_cost = sum(search.lengths[idx] for idx in range(m) if mandatory >> idx & 1)

    # greedy incumbent: add cheap free edges until feasible, then strip
    incumbent = mandatory
    if not search.feasible(incumbent):
        for idx in sorted(free, key=lambda e: search.lengths[e]):
            incumbent |= 1 << idx
            if search.feasible(incumbent):
                break
    for idx in sorted(free, key=lambda e: -search.lengths[e]):
        if incumbent >> idx & 1 and search.feasible(incumbent & ~(1 << idx)):
            incumbent &= ~(1 << idx)
    best_mask = incumbent
    best_cost = base_cost + sum(
        search.lengths[idx] for idx in free if incumbent >> idx & 1
    )

    order = sorted(free, key=lambda e: -search.lengths[e])
    nodes = 0

    def dfs(pos: int, mask: int, cost_so_far: float, undecided: int) -> None:
        nonlocal best_mask, best_cost, nodes
        nodes += 1
        if nodes > budget.max_edge_subsets:
            raise BudgetExceeded("branch-and-bound node cap exceeded")
        if cost_so_far >= best_cost:
            return
        if search.feasible(mask):
            best_mask, best_cost = mask, cost_so_far
            return
        if pos == len(order) or not search.feasible(mask | undecided):
            return
        idx = order[pos]
        rest = undecided & ~(1 << idx)
        dfs(pos + 1, mask, cost_so_far, rest)  # drop the expensive edge first
        dfs(pos + 1, mask | (1 << idx), cost_so_far + search.lengths[idx], rest)

    undecided_all = 0
    for idx in free:
        undecided_all |= 1 << idx
    dfs(0, mandatory, base_cost, undecided_all)
    return GeometricGraph(points=rooted.points, edges=_mask_edges(search.edges, best_mask))


def brute_min_k_rooted_enumerated(
    rooted: RootedPointSet, budget: OracleBudget = DEFAULT_BUDGET
) -> GeometricGraph:
    """Raw full enumeration over all edge subsets; cross-check for the B&B version."""
    n = len(rooted.points)
    if n > budget.max_points:
        raise BudgetExceeded(f"{n} points exceeds oracle cap {budget.max_points}")
    search = _RootedSearch(rooted)
    m = len(search.edges)
    if 1 << m > budget.max_edge_subsets:
        raise BudgetExceeded(f"2^{m} subsets exceeds the enumeration cap")
    best_mask = None
    best_cost = math.inf
    for mask in range(1 << m):
        total = sum(search.lengths[idx] for idx in range(m) if mask >> idx & 1)
        if total > best_cost:
            continue
        if search.feasible(mask):
            if total < best_cost or best_mask is None:
                best_mask, best_cost = mask, total
    assert best_mask is not None
    return GeometricGraph(points=rooted.points, edges=_mask_edges(search.edges, best_mask))


def _sample_directions(samples: int) -> list[Direction]:
    out = []
    for t in range(samples):
        theta = (t + 0.5) * (math.pi / 2) / samples
        dx = Fraction(math.cos(theta)).limit_denominator(10**6)
        dy = Fraction(math.sin(theta)).limit_denominator(10**6)
        if dx == 0 and dy == 0:
            continue
        out.append(Direction(dx, dy))
    return out


def sampled_angle_scan(
    ps: PointSet, samples: int = DEFAULT_BUDGET.samples
) -> tuple[Direction, float, int]:
    """Evaluate the visibility graph at many rational directions plus all sufficient ones.

    Returns the direction achieving the smallest cost, that cost, and the
    smallest edge count seen anywhere in the scan.
    """
    schedule = event_schedule(ps)
    directions = [d for d, _ in schedule.sufficient] + _sample_directions(samples)
    lengths = length_matrix(ps)
    best_d = directions[0]
    best_cost = math.inf
    best_edges = None
    for d in directions:
        table = inclusion_counts(ps, d, check=False).table
        visible = table == 0
        np.fill_diagonal(visible, False)
        c = float(lengths[visible].sum()) / 2.0
        e = int(visible.sum()) // 2
        if c < best_cost:
            best_cost, best_d = c, d
        if best_edges is None or e < best_edges:
            best_edges = e
    return best_d, best_cost, best_edges if best_edges is not None else 0


def brute_is_2d_monotone(g: GeometricGraph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every pair has SOME frame with an xy-monotone connecting path (frames may differ)."""
    n = len(g.points)
    if n > budget.max_points:
        raise BudgetExceeded(f"{n} points exceeds oracle cap {budget.max_points}")
    if n <= 1:
        return True
    schedule = event_schedule(g.points)
    adj = g.adjacency()
    pending = {(p, q) for p in range(n) for q in range(p + 1, n)}
    for d, _ in schedule.sufficient:
        if not pending:
            break
        try:
            us, vs = _frame_uv(g.points, d)
        except TiedCoordinate:
            continue
        for p, q in list(pending):
            if _monotone_path(adj, us, vs, p, q):
                pending.discard((p, q))
    return not pending


def _monotone_path(adj, us, vs, p, q) -> bool:
    su = 1 if us[q] > us[p] else -1
    sv = 1 if vs[q] > vs[p] else -1
    seen = {p}
    frontier = [p]
    while frontier:
        r = frontier.pop()
        if r == q:
            return True
        for s in adj[r]:
            if s in seen:
                continue
            du = 1 if us[s] > us[r] else -1
            dv = 1 if vs[s] > vs[r] else -1
            if du == su and dv == sv:
                seen.add(s)
                frontier.append(s)
    return q in seen
