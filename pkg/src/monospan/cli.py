"""Command-line surface: ingest point sets, run any algorithm, emit results.

Exit codes: 0 success, 1 parse error, 2 degenerate/invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import io
from .errors import (
    BudgetExceeded,
    DegenerateInput,
    GenerationFailed,
    MonospanError,
    ParseError,
    RootNotExtreme,
    TiedCoordinate,
)
from .generate import gen
from .geometry import Direction, PointSet, validate_general_position
from .graphs import (
    GeometricGraph,
    RootedPointSet,
    cost as graph_cost,
    is_k_rooted_y_monotone,
    is_uniform_2d_monotone,
    is_xy_monotone_connected,
    is_y_monotone_connected,
)
from .oracle import (
    OracleBudget,
    brute_min_k_rooted,
    brute_min_xy_spanning,
    sampled_angle_scan,
)
from .rig import rectangle_of_influence_graph, xy_mmsg
from .rooted import k_rooted_2approx, rooted_y_mmsg
from .sweep import least_edges_uniform, ummsg


def _parse_axes(spec: str | None) -> Direction:
    """`deg` (rotation of the frame, 0 = standard axes) or an exact `dx,dy` pair."""
    if spec is None:
        return Direction(0, 1)
    try:
        if "," in spec:
            dx_s, dy_s = spec.split(",", 1)
            return Direction(Fraction(dx_s.strip()), Fraction(dy_s.strip()))
        theta = math.radians(float(spec))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad --axes value {spec!r}: {exc}") from exc
    dx = Fraction(-math.sin(theta)).limit_denominator(10**9)
    dy = Fraction(math.cos(theta)).limit_denominator(10**9)
    return Direction(dx, dy)


def _read_input(args) -> str:
    if args.input and args.input != "-":
        with open(args.input) as fh:
            return fh.read()
    return sys.stdin.read()


def _emit_graph(args, graph: GeometricGraph, direction, roots) -> None:
    if args.format == "edges":
        print(io.edges_text(graph))
    elif args.format == "svg":
        print(io.to_svg(graph.points, graph.edges, roots, direction))
    else:
        print(json.dumps(io.graph_to_json(graph, direction, roots), indent=2))


def _require_valid(ps: PointSet) -> None:
    report = validate_general_position(ps)
    if not report.ok:
        raise DegenerateInput(report.describe())


def _cmd_validate(args) -> int:
    ps, _roots = io.parse_points(_read_input(args))
    report = validate_general_position(ps)
    doc = {
        "valid": report.ok,
        "duplicate_points": [list(d) for d in report.duplicate_points],
        "collinear_triples": [list(t) for t in report.collinear_triples],
        "conflicting_pairs": [[list(a), list(b)] for a, b in report.conflicting_pairs],
    }
    print(json.dumps(doc, indent=2))
    return 0 if report.ok else 2


def _cmd_rig(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    d = _parse_axes(args.axes)
    graph = rectangle_of_influence_graph(ps, d)
    _emit_graph(args, graph, d, roots)
    return 0


def _cmd_xy_mmsg(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    d = _parse_axes(args.axes)
    graph, _cost, _count = xy_mmsg(ps, d)
    _emit_graph(args, graph, d, roots)
    return 0


def _cmd_ummsg(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    d, graph, _cost = ummsg(ps)
    _emit_graph(args, graph, d, roots)
    return 0


def _cmd_least_edges(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    d, graph = least_edges_uniform(ps)
    _emit_graph(args, graph, d, roots)
    return 0


def _cmd_rooted(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    if len(roots) != 1:
        raise DegenerateInput(f"rooted needs exactly one marked root, got {len(roots)}")
    graph = rooted_y_mmsg(RootedPointSet.of(ps, roots))
    _emit_graph(args, graph, None, roots)
    return 0


def _cmd_krooted(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    if not roots:
        raise DegenerateInput("krooted-approx needs at least one marked root")
    graph = k_rooted_2approx(RootedPointSet.of(ps, roots))
    _emit_graph(args, graph, None, roots)
    return 0


def _cmd_check(args) -> int:
    graph, roots = io.parse_graph(_read_input(args))
    d = _parse_axes(args.axes)
    doc: dict = {"edge_count": len(graph.edges), "cost": graph_cost(graph)}
    doc["y_monotone"] = is_y_monotone_connected(graph, d)
    doc["xy_monotone"] = is_xy_monotone_connected(graph, d)
    if roots:
        rooted = RootedPointSet.of(graph.points, roots)
        doc["k_rooted_y_monotone"] = is_k_rooted_y_monotone(graph, rooted, d)
    uniform, witness = is_uniform_2d_monotone(graph)
    doc["uniform_2d_monotone"] = uniform
    if witness is not None:
        doc["witness_direction"] = {
            "dx": io.rational_str(witness.dx),
            "dy": io.rational_str(witness.dy),
        }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_oracle(args) -> int:
    ps, roots = io.parse_points(_read_input(args))
    budget = OracleBudget(max_edge_subsets=args.budget) if args.budget else OracleBudget()
    if args.samples:
        d, best_cost, best_edges = sampled_angle_scan(ps, args.samples)
        print(
            json.dumps(
                {
                    "direction": {"dx": io.rational_str(d.dx), "dy": io.rational_str(d.dy)},
                    "cost": best_cost,
                    "min_edge_count": best_edges,
                },
                indent=2,
            )
        )
        return 0
    if roots:
        graph = brute_min_k_rooted(RootedPointSet.of(ps, roots), budget)
        _emit_graph(args, graph, None, roots)
        return 0
    d = _parse_axes(args.axes)
    graph = brute_min_xy_spanning(ps, d, objective=args.objective, budget=budget)
    _emit_graph(args, graph, d, roots)
    return 0


def _cmd_gen(args) -> int:
    ps, roots = gen(args.n, args.k, args.seed)
    if args.format == "points":
        lines = []
        for p in ps:
            mark = " r" if p.index in set(roots) else ""
            lines.append(f"{io.rational_str(p.x)} {io.rational_str(p.y)}{mark}")
        print("\n".join(lines))
    else:
        print(json.dumps(io.points_to_json(ps, roots), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monospan",
        description="Monotone spanning graphs of planar point sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *, axes=False, fmt=True, inp=True):
        p = sub.add_parser(name)
        if inp:
            p.add_argument("input", nargs="?", help="input file (default: stdin)")
        if axes:
            p.add_argument("--axes", help="frame: degrees or exact dx,dy (default 0 = standard)")
        if fmt:
            p.add_argument("--format", choices=["json", "edges", "svg"], default="json")
        p.set_defaults(fn=fn)
        return p

    add("validate", _cmd_validate, fmt=False)
    add("rig", _cmd_rig, axes=True)
    add("xy-mmsg", _cmd_xy_mmsg, axes=True)
    add("ummsg", _cmd_ummsg)
    add("least-edges", _cmd_least_edges)
    add("rooted", _cmd_rooted)
    add("krooted-approx", _cmd_krooted)
    p = add("check", _cmd_check, axes=True, fmt=False)
    p = add("oracle", _cmd_oracle, axes=True)
    p.add_argument("--objective", choices=["cost", "edges"], default="cost")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p = add("gen", _cmd_gen, inp=False, fmt=False)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "points"], default="json")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (DegenerateInput, TiedCoordinate, RootNotExtreme) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, GenerationFailed, MonospanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
