"""Point-set and graph serialization: text lines, JSON, and SVG output.

Coordinates are serialized as decimal integers or "num/den" strings, never
binary floats, so exact values survive emit-then-ingest round trips.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .errors import ParseError
from .geometry import Direction, PointSet, to_fraction
from .graphs import GeometricGraph, cost as graph_cost


def rational_str(value: Fraction) -> str:
    return str(value)


def _parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coordinate {token!r}: {exc}") from exc


def parse_points(text: str) -> tuple[PointSet, list[int]]:
    """Parse a point set from text lines or JSON; returns (points, root indices).

    Text format: one point per line, `x y [r]`, `#` comments; x and y are
    decimal or num/den strings; a trailing `r` marks a root.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_points_json(stripped)
    coords = []
    roots = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"line {lineno}: expected `x y [r]`, got {raw!r}")
        x = _parse_rational(parts[0])
        y = _parse_rational(parts[1])
        if len(parts) == 3:
            if parts[2] != "r":
                raise ParseError(f"line {lineno}: trailing token must be `r`")
            roots.append(len(coords))
        coords.append((x, y))
    if not coords:
        raise ParseError("no points in input")
    return PointSet.from_coords(coords), roots


def _parse_points_json(text: str) -> tuple[PointSet, list[int]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError("JSON input must be an object with a `points` array")
    coords = []
    roots = []
    for i, entry in enumerate(doc["points"]):
        try:
            x = _parse_rational(str(entry["x"]))
            y = _parse_rational(str(entry["y"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"point {i}: {exc}") from exc
        if entry.get("root"):
            roots.append(i)
        coords.append((x, y))
    if not coords:
        raise ParseError("no points in input")
    return PointSet.from_coords(coords), roots


def parse_graph(text: str) -> tuple[GeometricGraph, list[int]]:
    """Parse a JSON document carrying both points and edges."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(doc, dict) or "points" not in doc or "edges" not in doc:
        raise ParseError("graph JSON needs `points` and `edges`")
    ps, roots = _parse_points_json(json.dumps({"points": doc["points"]}))
    try:
        graph = GeometricGraph.of(ps, [tuple(e) for e in doc["edges"]])
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad edge list: {exc}") from exc
    return graph, roots


def points_to_json(ps: PointSet, roots: list[int] | None = None) -> dict:
    root_set = set(roots or [])
    return {
        "points": [
            {"x": rational_str(p.x), "y": rational_str(p.y), "root": p.index in root_set}
            for p in ps
        ]
    }


def graph_to_json(
    graph: GeometricGraph,
    direction: Optional[Direction] = None,
    roots: list[int] | None = None,
) -> dict:
    doc = points_to_json(graph.points, roots)
    if direction is not None:
        doc["direction"] = {
            "dx": rational_str(direction.dx),
            "dy": rational_str(direction.dy),
        }
    doc["edges"] = [list(e) for e in graph.sorted_edges()]
    doc["cost"] = graph_cost(graph)
    doc["edge_count"] = len(graph.edges)
    return doc


def edges_text(graph: GeometricGraph) -> str:
    return "\n".join(f"{i} {j}" for i, j in graph.sorted_edges())


def to_svg(
    ps: PointSet,
    edges=(),
    roots: list[int] | None = None,
    direction: Optional[Direction] = None,
    size: int = 500,
) -> str:
    """Render points and edges; y-axis flipped for screen coordinates.

    Roots are filled markers; when a direction is given the winning axis pair
    is drawn through the drawing center.
    """
    xs = [float(p.x) for p in ps]
    ys = [float(p.y) for p in ps]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y) or 1.0
    pad = 0.08 * span

    def sx(x: float) -> float:
        return (x - min_x + pad) / (span + 2 * pad) * size

    def sy(y: float) -> float:
        return size - (y - min_y + pad) / (span + 2 * pad) * size

    root_set = set(roots or [])
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    for i, j in sorted(edges):
        parts.append(
            f'<line x1="{sx(xs[i]):.2f}" y1="{sy(ys[i]):.2f}" '
            f'x2="{sx(xs[j]):.2f}" y2="{sy(ys[j]):.2f}" '
            'stroke="#336" stroke-width="1.5"/>'
        )
    if direction is not None:
        cx, cy = size / 2, size / 2
        dx, dy = float(direction.dx), float(direction.dy)
        norm = (dx * dx + dy * dy) ** 0.5
        dx, dy = dx / norm, dy / norm
        half = size * 0.45
        for vx, vy, color in ((dx, dy, "#2a2"), (dy, -dx, "#a22")):
            parts.append(
                f'<line x1="{cx - vx * half:.2f}" y1="{cy + vy * half:.2f}" '
                f'x2="{cx + vx * half:.2f}" y2="{cy - vy * half:.2f}" '
                f'stroke="{color}" stroke-width="0.75" stroke-dasharray="6 4"/>'
            )
    for p in ps:
        filled = p.index in root_set
        parts.append(
            f'<circle cx="{sx(float(p.x)):.2f}" cy="{sy(float(p.y)):.2f}" '
            f'r="{5 if filled else 3.5}" '
            f'fill="{"#c22" if filled else "white"}" stroke="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
