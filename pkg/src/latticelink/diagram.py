"""Link diagrams on the unit grid of the integer plane.

A diagram is a finite set of unit axis-aligned edges in which every vertex
has degree 2 or 4.  At a degree-4 vertex (a crossing) the two collinear
horizontal edges form one strand and the two vertical edges the other; the
crossing records which of the two strands passes over.  All coordinates are
exact integers throughout.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    BadDegree,
    DuplicateEdge,
    MissingCrossingInfo,
    NonUnitEdge,
    ParseError,
    SpuriousCrossingInfo,
)

Point2 = tuple[int, int]
Edge2 = tuple[Point2, Point2]


class OverAxis(Enum):
    """Axis of the strand that passes over at a crossing."""

    H = "H"
    V = "V"

    def flipped(self) -> OverAxis:
        return OverAxis.V if self is OverAxis.H else OverAxis.H


def canonical_edge(a: Point2, b: Point2) -> Edge2:
    """Return the unit grid edge {a, b} with endpoints in lexicographic order.

    Raises NonUnitEdge unless the endpoints differ by exactly one unit step
    along one axis.
    """
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if abs(dx) + abs(dy) != 1:
        raise NonUnitEdge(a, b)
    return (a, b) if a < b else (b, a)


def edge_axis(e: Edge2) -> OverAxis:
    """Axis an edge runs along: H for horizontal, V for vertical."""
    return OverAxis.H if e[0][1] == e[1][1] else OverAxis.V


def canonical_loop(points: Sequence) -> tuple:
    """Rotate and orient a closed point sequence into canonical form.

    The loop is rotated to start at its lexicographically smallest point and
    oriented so the second point is smaller than the last.  Used for both 2D
    strands and 3D link components.
    """
    pts = list(points)
    n = len(pts)
    if n == 0:
        return ()
    i = min(range(n), key=lambda k: pts[k])
    rotated = pts[i:] + pts[:i]
    if n > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


@dataclass(frozen=True)
class LatticeDiagram:
    """A validated diagram: canonical sorted edges plus per-crossing over-axes.

    Instances are immutable; construct them through `validate` (or
    `parse_diagram`) so the degree and crossing invariants hold.
    """

    edges: tuple[Edge2, ...]
    crossings: dict[Point2, OverAxis]

    @cached_property
    def degrees(self) -> dict[Point2, int]:
        deg: Counter[Point2] = Counter()
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return dict(deg)

    @cached_property
    def neighbors(self) -> dict[Point2, tuple[Point2, ...]]:
        nbrs: dict[Point2, list[Point2]] = {}
        for a, b in self.edges:
            nbrs.setdefault(a, []).append(b)
            nbrs.setdefault(b, []).append(a)
        return {v: tuple(sorted(ps)) for v, ps in nbrs.items()}

    @cached_property
    def edge_index(self) -> dict[Edge2, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, a: Point2, b: Point2) -> int:
        """Index of the edge {a, b} in the canonical edge order."""
        return self.edge_index[(a, b) if a < b else (b, a)]

    def vertices(self) -> list[Point2]:
        return sorted(self.degrees)


def validate(
    raw_edges: Iterable[Sequence[Sequence[int]]],
    raw_crossings: Mapping[Point2, OverAxis | str] | None = None,
) -> LatticeDiagram:
    """Build a LatticeDiagram from raw point pairs and crossing data.

    Canonicalizes edge orientation, then checks: no duplicate edges, every
    vertex has degree 2 or 4, and the crossing map covers exactly the
    degree-4 vertices.  Error cases raise the corresponding exception with
    the smallest offending vertex/edge, so failures are deterministic.
    """
    edges = sorted(
        canonical_edge((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
        for a, b in raw_edges
    )
    for prev, cur in zip(edges, edges[1:]):
        if prev == cur:
            raise DuplicateEdge(cur)

    degrees: Counter[Point2] = Counter()
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1
    bad = [v for v, deg in degrees.items() if deg not in (2, 4)]
    if bad:
        v = min(bad)
        raise BadDegree(v, degrees[v])

    # Four distinct unit edges at a vertex necessarily point in the four
    # distinct directions, so degree 4 alone guarantees a proper crossing.
    crossing_vertices = {v for v, deg in degrees.items() if deg == 4}

    axes: dict[Point2, OverAxis] = {}
    for v, axis in (raw_crossings or {}).items():
        axes[(int(v[0]), int(v[1]))] = OverAxis(axis) if not isinstance(axis, OverAxis) else axis

    missing = crossing_vertices - axes.keys()
    if missing:
        raise MissingCrossingInfo(min(missing))
    spurious = axes.keys() - crossing_vertices
    if spurious:
        raise SpuriousCrossingInfo(min(spurious))

    return LatticeDiagram(tuple(edges), {v: axes[v] for v in sorted(crossing_vertices)})


def with_crossing_axes(d: LatticeDiagram, axes: Mapping[Point2, OverAxis]) -> LatticeDiagram:
    """Same edge set as `d`, with the over-axes replaced wholesale."""
    if axes.keys() != d.crossings.keys():
        raise SpuriousCrossingInfo(min(axes.keys() ^ d.crossings.keys()))
    return LatticeDiagram(d.edges, {v: axes[v] for v in sorted(axes)})


def flip_all_crossings(d: LatticeDiagram) -> LatticeDiagram:
    """Mirror the diagram by swapping over and under at every crossing."""
    return LatticeDiagram(d.edges, {v: a.flipped() for v, a in d.crossings.items()})


@dataclass(frozen=True)
class Strand:
    """One closed curve of the diagram.

    The loop lists each visited vertex once per visit; crossings a strand
    passes through twice appear twice.  Consecutive points (cyclically)
    differ by a unit step.
    """

    loop: tuple[Point2, ...]

    def __len__(self) -> int:
        return len(self.loop)

    def edges(self) -> Iterator[Edge2]:
        n = len(self.loop)
        for i in range(n):
            a, b = self.loop[i], self.loop[(i + 1) % n]
            yield (a, b) if a < b else (b, a)


def trace_strands(d: LatticeDiagram) -> list[Strand]:
    """Split the diagram into its closed curves.

    Strands go straight through every crossing and turn only at degree-2
    vertices; every diagram edge ends up in exactly one strand.
    """
    crossings = d.crossings
    neighbors = d.neighbors
    used: set[Edge2] = set()
    strands = []
    for start in d.edges:
        if start in used:
            continue
        points: list[Point2] = []
        prev, cur = start
        while True:
            points.append(prev)
            used.add((prev, cur) if prev < cur else (cur, prev))
            if cur in crossings:
                nxt = (2 * cur[0] - prev[0], 2 * cur[1] - prev[1])
            else:
                a, b = neighbors[cur]
                nxt = b if a == prev else a
            prev, cur = cur, nxt
            if (prev, cur) == start:
                break
        strands.append(Strand(canonical_loop(points)))
    strands.sort(key=lambda s: s.loop)
    return strands


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _as_point(value, what: str) -> Point2:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ParseError(f"{what} must be a pair [x, y], got {value!r}")
    return (_as_int(value[0], what), _as_int(value[1], what))


def parse_diagram(text: str | bytes) -> LatticeDiagram:
    """Parse diagram JSON and validate it.

    Format: {"edges": [[[x1,y1],[x2,y2]], ...],
             "crossings": [{"at": [x,y], "over": "H"|"V"}, ...]}
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, position=exc.pos) from exc
    if not isinstance(obj, dict):
        raise ParseError("top-level value must be an object")
    raw_edges = obj.get("edges")
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be a list of point pairs')
    edges = []
    for item in raw_edges:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError(f"edge entry must be a pair of points, got {item!r}")
        edges.append((_as_point(item[0], "edge endpoint"), _as_point(item[1], "edge endpoint")))
    raw_crossings = obj.get("crossings", [])
    if not isinstance(raw_crossings, list):
        raise ParseError('"crossings" must be a list of {"at", "over"} objects')
    axes: dict[Point2, str] = {}
    for item in raw_crossings:
        if not isinstance(item, dict) or "at" not in item or "over" not in item:
            raise ParseError(f'crossing entry must have "at" and "over", got {item!r}')
        at = _as_point(item["at"], "crossing location")
        over = item["over"]
        if over not in ("H", "V"):
            raise ParseError(f'crossing "over" must be "H" or "V", got {over!r}')
        if at in axes:
            raise ParseError(f"crossing {at} listed more than once")
        axes[at] = over
    return validate(edges, axes)


def serialize_diagram(d: LatticeDiagram) -> str:
    """Deterministic JSON for a diagram: edges sorted, crossings by (x, y)."""
    obj = {
        "edges": [[list(a), list(b)] for a, b in d.edges],
        "crossings": [
            {"at": list(v), "over": d.crossings[v].value} for v in sorted(d.crossings)
        ],
    }
    return json.dumps(obj, separators=(",", ":"))
