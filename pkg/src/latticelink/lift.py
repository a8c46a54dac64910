"""Lifting a diagram to an embedded link in the cubic lattice.

Given a labeling of diagram edges that increases along every over/under
arc, each edge lifts to a horizontal unit segment at its label's height and
each vertex to a vertical run joining the heights of its incident edges.
`verify_realization` checks the result (or any candidate link) against the
definition of realizing a diagram, clause by clause.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .diagram import (
    Edge2,
    LatticeDiagram,
    Point2,
    canonical_loop,
    edge_axis,
    trace_strands,
)
from .digraph import EdgeId, EscherSquare, build_digraph, find_escher_squares, height_function, is_height_function
from .errors import Inconsistent, InvalidLink, MissingVertex, NotAHeightFunction, ParseError

Point3 = tuple[int, int, int]


@dataclass(frozen=True)
class LatticeLink:
    """Closed loops in the cubic lattice, each a cyclic point sequence.

    Consecutive points (including last to first) are expected to differ by a
    unit step; construction does not enforce that, `verify_realization` and
    `parse_link` do.
    """

    components: tuple[tuple[Point3, ...], ...]

    def points(self) -> Iterator[Point3]:
        for comp in self.components:
            yield from comp

    def steps(self) -> Iterator[tuple[Point3, Point3]]:
        for comp in self.components:
            n = len(comp)
            for i in range(n):
                yield comp[i], comp[(i + 1) % n]


def lift(d: LatticeDiagram, h: Mapping[EdgeId, int]) -> LatticeLink:
    """Lift the diagram along the edge heights `h`.

    Walks each strand, placing edge {a, b} as the segment (a, h) to (b, h)
    and inserting a vertical run at each vertex between the heights of the
    incoming and outgoing edges.  Raises NotAHeightFunction unless `h` is
    strictly increasing along every over/under arc, the exact condition for
    the result to be embedded.
    """
    g = build_digraph(d)
    try:
        ok = is_height_function(g, h)
    except MissingVertex as exc:
        raise NotAHeightFunction(f"no height for edge {exc.vertex}") from exc
    if not ok:
        raise NotAHeightFunction("heights do not increase from under edge to over edge")

    components = []
    for strand in trace_strands(d):
        loop = strand.loop
        n = len(loop)
        points: list[Point3] = []
        for i, (x, y) in enumerate(loop):
            z_in = h[d.edge_id(loop[i - 1], loop[i])]
            z_out = h[d.edge_id(loop[i], loop[(i + 1) % n])]
            step = 1 if z_out >= z_in else -1
            points.extend((x, y, z) for z in range(z_in, z_out + step, step))
        components.append(canonical_loop(points))
    components.sort()
    link = LatticeLink(tuple(components))

    # Distinct vertical runs never share a lattice point: runs over distinct
    # base points trivially, the two runs over a crossing because every
    # under height is below every over height.
    all_points = list(link.points())
    assert len(all_points) == len(set(all_points))
    return link


def extract_heights(d: LatticeDiagram, link: LatticeLink) -> dict[EdgeId, int]:
    """Read the height of each diagram edge back off a link.

    The height of edge e is the z-coordinate of the unique horizontal
    segment projecting to e; raises InvalidLink if any edge is covered by
    no segment or more than one.
    """
    found: dict[Edge2, set[int]] = {}
    for (x1, y1, z1), (x2, y2, z2) in link.steps():
        if z1 == z2 and (x1, y1) != (x2, y2):
            a, b = (x1, y1), (x2, y2)
            e = (a, b) if a < b else (b, a)
            found.setdefault(e, set()).add(z1)
    heights: dict[EdgeId, int] = {}
    for i, e in enumerate(d.edges):
        zs = found.get(e)
        if zs is None:
            raise InvalidLink(f"no horizontal segment over edge {e}")
        if len(zs) != 1:
            raise InvalidLink(f"edge {e} covered at multiple heights {sorted(zs)}")
        heights[i] = next(iter(zs))
    return heights


@dataclass(frozen=True)
class ClauseReport:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class RealizationReport:
    """Outcome of checking a link against a diagram, one clause at a time.

    projection: the link projects exactly onto the diagram.
    edge_covering: exactly one horizontal segment lies over each edge.
    vertex_connectivity: the preimage of each plain vertex is connected.
    crossing_separation: the preimage of each crossing has exactly two
        pieces, the higher one attached to the over-axis edges.
    embedding: the link itself is a disjoint union of embedded closed loops.
    """

    projection: ClauseReport
    edge_covering: ClauseReport
    vertex_connectivity: ClauseReport
    crossing_separation: ClauseReport
    embedding: ClauseReport

    def clauses(self) -> tuple[ClauseReport, ...]:
        return (
            self.projection,
            self.edge_covering,
            self.vertex_connectivity,
            self.crossing_separation,
            self.embedding,
        )

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses())


def _merge_spans(spans: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Merge closed integer intervals that overlap or touch."""
    merged: list[tuple[int, int]] = []
    for lo, hi in sorted(spans):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def verify_realization(d: LatticeDiagram, link: LatticeLink) -> RealizationReport:
    """Check whether `link` realizes `d`, reporting each clause separately.

    Works on arbitrary candidate links, not only ones produced by `lift`;
    every clause is evaluated independently so a failure pinpoints what is
    wrong rather than stopping at the first problem.
    """
    # Classify unit steps.  Horizontal steps touch their two endpoint
    # vertices at their z; vertical steps contribute a [z, z+1] span over
    # their base point.
    edge_cover: dict[Edge2, list[int]] = {}
    touches: dict[Point2, list[tuple[int, Edge2]]] = {}
    spans: dict[Point2, list[int]] = {}
    bad_steps: list[tuple[Point3, Point3]] = []
    for p, q in link.steps():
        dx, dy, dz = q[0] - p[0], q[1] - p[1], q[2] - p[2]
        if abs(dx) + abs(dy) + abs(dz) != 1:
            bad_steps.append((p, q))
        elif dz == 0:
            a, b = (p[0], p[1]), (q[0], q[1])
            e = (a, b) if a < b else (b, a)
            edge_cover.setdefault(e, []).append(p[2])
            touches.setdefault(a, []).append((p[2], e))
            touches.setdefault(b, []).append((p[2], e))
        else:
            spans.setdefault((p[0], p[1]), []).append(min(p[2], q[2]))

    diagram_edges = set(d.edges)
    vertex_set = d.degrees.keys()

    extra_edges = sorted(set(edge_cover) - diagram_edges)
    missing_edges = sorted(diagram_edges - set(edge_cover))
    stray_points = sorted(p for p in spans if p not in vertex_set)
    problems = []
    if missing_edges:
        problems.append(f"edges not covered: {missing_edges[:3]}")
    if extra_edges:
        problems.append(f"segments over non-edges: {extra_edges[:3]}")
    if stray_points:
        problems.append(f"vertical runs over non-vertices: {stray_points[:3]}")
    projection = ClauseReport("projection", not problems, "; ".join(problems))

    multi = sorted(e for e in diagram_edges if len(edge_cover.get(e, ())) != 1)
    edge_covering = ClauseReport(
        "edge_covering",
        not multi,
        f"edges not covered exactly once: {multi[:3]}" if multi else "",
    )

    def pieces_over(v: Point2) -> list[tuple[int, int]]:
        here = [(z, z) for z, _ in touches.get(v, ())]
        here += [(z, z + 1) for z in spans.get(v, ())]
        return _merge_spans(here)

    bad_plain = []
    for v in sorted(vertex_set):
        if v in d.crossings:
            continue
        if len(pieces_over(v)) != 1:
            bad_plain.append(v)
    vertex_connectivity = ClauseReport(
        "vertex_connectivity",
        not bad_plain,
        f"disconnected preimage over vertices: {bad_plain[:3]}" if bad_plain else "",
    )

    bad_crossings = []
    for v in sorted(d.crossings):
        parts = pieces_over(v)
        if len(parts) != 2:
            bad_crossings.append((v, f"{len(parts)} pieces"))
            continue
        low, high = parts
        over = d.crossings[v]
        seen_axes = set()
        attached_ok = True
        for z, e in touches.get(v, ()):
            axis = edge_axis(e)
            seen_axes.add(axis)
            lo, hi = high if axis is over else low
            if not lo <= z <= hi:
                attached_ok = False
        if len(seen_axes) != 2:
            bad_crossings.append((v, "missing attached segments"))
        elif not attached_ok:
            bad_crossings.append((v, "over/under pieces swapped"))
    crossing_separation = ClauseReport(
        "crossing_separation",
        not bad_crossings,
        f"bad crossings: {bad_crossings[:3]}" if bad_crossings else "",
    )

    emb_problems = []
    short = [i for i, comp in enumerate(link.components) if len(comp) < 4]
    if short:
        emb_problems.append(f"components with under 4 points: {short[:3]}")
    if bad_steps:
        emb_problems.append(f"non-unit steps: {bad_steps[:3]}")
    all_points = list(link.points())
    if len(all_points) != len(set(all_points)):
        emb_problems.append("repeated lattice points")
    embedding = ClauseReport("embedding", not emb_problems, "; ".join(emb_problems))

    return RealizationReport(
        projection, edge_covering, vertex_connectivity, crossing_separation, embedding
    )


def realize(d: LatticeDiagram) -> LatticeLink | EscherSquare:
    """Lift the diagram if possible, else return an obstructing square.

    Runs both the height-function route and the direct square scan; they
    must agree, and a mismatch raises Inconsistent because it can only come
    from a bug, never from bad input.
    """
    h = height_function(build_digraph(d))
    squares = find_escher_squares(d)
    if h is None and not squares:
        raise Inconsistent("no consistent heights, yet no alternating square found")
    if h is not None and squares:
        raise Inconsistent(f"heights exist despite alternating square at {squares[0].corners}")
    if h is None:
        return squares[0]
    return lift(d, h)


def export_link(link: LatticeLink) -> str:
    """Deterministic JSON for a link; closure of each loop is implicit.

    Components are rotated to a canonical starting point and sorted, so two
    equal links always serialize identically.
    """
    components = sorted(canonical_loop(comp) for comp in link.components)
    obj = {"components": [[list(p) for p in comp] for comp in components]}
    return json.dumps(obj, separators=(",", ":"))


def export_link_lines(link: LatticeLink) -> str:
    """Plain-text export: one "x y z" line per point, blank line between
    components, in the same canonical order as the JSON export."""
    components = sorted(canonical_loop(comp) for comp in link.components)
    blocks = ["\n".join(f"{x} {y} {z}" for x, y, z in comp) for comp in components]
    return "\n\n".join(blocks) + "\n"


def _as_point3(value) -> Point3:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise ParseError(f"link point must be a triple [x, y, z], got {value!r}")
    coords = []
    for c in value:
        if isinstance(c, bool) or not isinstance(c, int):
            raise ParseError(f"link coordinate must be an integer, got {c!r}")
        coords.append(c)
    return (coords[0], coords[1], coords[2])


def parse_link(text: str | bytes, *, require_embedded: bool = True) -> LatticeLink:
    """Parse link JSON: {"components": [[[x,y,z], ...], ...]}.

    Every component must be a closed loop of at least 4 points joined by
    unit steps (the last point connects back to the first).  With
    `require_embedded` the points must also be pairwise distinct; pass
    False to load a self-intersecting candidate for inspection.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, position=exc.pos) from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("components"), list):
        raise ParseError('top-level value must be an object with a "components" list')
    components = []
    for raw in obj["components"]:
        if not isinstance(raw, list):
            raise ParseError(f"component must be a list of points, got {raw!r}")
        comp = tuple(_as_point3(p) for p in raw)
        if len(comp) < 4:
            raise InvalidLink(f"component with {len(comp)} points; a closed loop needs at least 4")
        for i, p in enumerate(comp):
            q = comp[(i + 1) % len(comp)]
            if sum(abs(a - b) for a, b in zip(p, q)) != 1:
                raise InvalidLink(f"points {p} and {q} are not one unit step apart")
        components.append(comp)
    link = LatticeLink(tuple(components))
    if require_embedded:
        seen: set[Point3] = set()
        for p in link.points():
            if p in seen:
                raise InvalidLink(f"lattice point {p} is used more than once")
            seen.add(p)
    return link
