"""Directed graph recording which strand must pass over which.

The digraph has one vertex per diagram edge.  Each crossing contributes four
arcs, one from each of its two under-axis edges to each of its two over-axis
edges.  An integer labeling of diagram edges that is strictly increasing
along every arc is exactly a consistent assignment of heights to edges, so
the diagram lifts to the cubic lattice iff the digraph is acyclic.

The acyclicity obstruction is always local: a cycle exists iff some unit
square has crossings at all four corners whose over-axes alternate around
the square.  `find_escher_squares` detects those squares directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .diagram import Edge2, LatticeDiagram, OverAxis, Point2
from .errors import MissingVertex

EdgeId = int
Arc = tuple[EdgeId, EdgeId]


@dataclass(frozen=True)
class AssociatedDigraph:
    """Digraph on vertices 0..num_vertices-1 with sorted, deduplicated arcs.

    `edge_labels[v]` is the diagram edge behind vertex v, and `provenance`
    maps each arc to the crossing that produced it; both are None for
    digraphs not built from a diagram.
    """

    num_vertices: int
    arcs: tuple[Arc, ...]
    edge_labels: tuple[Edge2, ...] | None = None
    provenance: Mapping[Arc, Point2] | None = None

    def __post_init__(self) -> None:
        arcs = tuple(sorted(set(self.arcs)))
        for u, w in arcs:
            if not (0 <= u < self.num_vertices and 0 <= w < self.num_vertices):
                raise ValueError(f"arc ({u}, {w}) out of range")
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def successors(self) -> tuple[tuple[EdgeId, ...], ...]:
        succ: list[list[EdgeId]] = [[] for _ in range(self.num_vertices)]
        for u, w in self.arcs:
            succ[u].append(w)
        return tuple(tuple(s) for s in succ)

    @cached_property
    def indegrees(self) -> tuple[int, ...]:
        indeg = [0] * self.num_vertices
        for _, w in self.arcs:
            indeg[w] += 1
        return tuple(indeg)


def build_digraph(d: LatticeDiagram) -> AssociatedDigraph:
    """Construct the over/under precedence digraph of a diagram.

    A crossing at (x, y) has exactly the four unit edges toward its four
    neighbors, so the incident edges are written down directly.  Two unit
    edges share at most one point, hence no arc can arise at two different
    crossings and no self-loops occur: there are exactly 4 arcs per crossing.
    """
    eidx = d.edge_index
    arcs: list[Arc] = []
    provenance: dict[Arc, Point2] = {}
    for (x, y), over in d.crossings.items():
        horizontal = (eidx[((x - 1, y), (x, y))], eidx[((x, y), (x + 1, y))])
        vertical = (eidx[((x, y - 1), (x, y))], eidx[((x, y), (x, y + 1))])
        under, above = (vertical, horizontal) if over is OverAxis.H else (horizontal, vertical)
        for ue in under:
            for oe in above:
                arcs.append((ue, oe))
                provenance[(ue, oe)] = (x, y)
    return AssociatedDigraph(
        len(d.edges), tuple(arcs), edge_labels=d.edges, provenance=provenance
    )


def find_cycle(g: AssociatedDigraph) -> list[EdgeId] | None:
    """Return one directed cycle as a vertex list, or None if acyclic.

    Iterative depth-first search; the witness is rotated to start at its
    smallest vertex so equal graphs yield equal witnesses.
    """
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * g.num_vertices
    path: list[EdgeId] = []
    for root in range(g.num_vertices):
        if color[root] != WHITE:
            continue
        color[root] = GRAY
        path.append(root)
        stack = [(root, iter(g.successors[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == WHITE:
                    color[w] = GRAY
                    path.append(w)
                    stack.append((w, iter(g.successors[w])))
                    break
                if color[w] == GRAY:
                    cycle = path[path.index(w):]
                    k = cycle.index(min(cycle))
                    return cycle[k:] + cycle[:k]
            else:
                color[v] = BLACK
                path.pop()
                stack.pop()
    return None


def height_function(g: AssociatedDigraph) -> dict[EdgeId, int] | None:
    """Minimal nonnegative strictly-arc-increasing labeling, or None.

    Processes vertices in topological order, giving every source height 0
    and every other vertex the length of the longest path reaching it from a
    source.  Returns None exactly when the digraph has a cycle.
    """
    n = g.num_vertices
    indeg = list(g.indegrees)
    h = [0] * n
    queue = deque(v for v in range(n) if indeg[v] == 0)
    processed = 0
    while queue:
        v = queue.popleft()
        processed += 1
        hv1 = h[v] + 1
        for w in g.successors[v]:
            if hv1 > h[w]:
                h[w] = hv1
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if processed < n:
        return None
    return dict(enumerate(h))


def is_height_function(g: AssociatedDigraph, h: Mapping[EdgeId, int]) -> bool:
    """True iff `h` assigns an integer to every vertex and is strictly
    increasing along every arc.

    Raises MissingVertex when a vertex has no entry; extra keys are ignored.
    """
    for v in range(g.num_vertices):
        if v not in h:
            raise MissingVertex(v)
        value = h[v]
        if isinstance(value, bool) or not isinstance(value, int):
            return False
    return all(h[u] < h[w] for u, w in g.arcs)


@dataclass(frozen=True)
class EscherSquare:
    """Unit square whose corners are crossings with alternating over-axes.

    Corners are listed counterclockwise from the lower-left:
    (x,y), (x+1,y), (x+1,y+1), (x,y+1).
    """

    corners: tuple[Point2, Point2, Point2, Point2]

    def square_edges(self) -> tuple[Edge2, Edge2, Edge2, Edge2]:
        """Boundary edges in canonical form: bottom, right, top, left."""
        ll, lr, ur, ul = self.corners
        return ((ll, lr), (lr, ur), (ul, ur), (ll, ul))


def find_escher_squares(d: LatticeDiagram) -> list[EscherSquare]:
    """All unit squares with crossings at the corners and alternating axes.

    Scans each crossing as a candidate lower-left corner.  Around a square,
    pairwise-different axes at the four adjacent corner pairs force the
    alternation V,H,V,H or H,V,H,V.
    """
    crossings = d.crossings
    eidx = d.edge_index
    squares = []
    for x, y in sorted(crossings):
        ll, lr, ur, ul = (x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)
        if lr not in crossings or ur not in crossings or ul not in crossings:
            continue
        if (
            crossings[ll] is crossings[lr]
            or crossings[lr] is crossings[ur]
            or crossings[ur] is crossings[ul]
            or crossings[ul] is crossings[ll]
        ):
            continue
        square = EscherSquare((ll, lr, ur, ul))
        # Corner crossings have all four incident unit edges, so the
        # boundary is automatically part of the diagram.
        assert all(e in eidx for e in square.square_edges())
        squares.append(square)
    return squares


def square_cycle(d: LatticeDiagram, square: EscherSquare) -> list[EdgeId]:
    """The square's boundary as a directed cycle of the digraph.

    With the vertical strand on top at the lower-left corner the boundary
    cycles bottom, left, top, right; with the horizontal strand on top it
    runs the other way.  Rotated to start at the smallest vertex, matching
    `find_cycle` witnesses.
    """
    bottom, right, top, left = square.square_edges()
    if d.crossings[square.corners[0]] is OverAxis.V:
        order = (bottom, left, top, right)
    else:
        order = (bottom, right, top, left)
    ids = [d.edge_index[e] for e in order]
    k = ids.index(min(ids))
    return ids[k:] + ids[:k]


def export_dot(g: AssociatedDigraph) -> str:
    """Render the digraph in DOT format with stable node names.

    Vertices carrying diagram edges are named e_x1_y1_x2_y2; bare vertices
    fall back to v<i>.  Arcs are labeled with the crossing they come from
    when that is known.
    """
    names = []
    lines = ["digraph {"]
    for v in range(g.num_vertices):
        if g.edge_labels is not None:
            (x1, y1), (x2, y2) = g.edge_labels[v]
            name = f"e_{x1}_{y1}_{x2}_{y2}"
            label = f"({x1},{y1})-({x2},{y2})"
        else:
            name = f"v{v}"
            label = str(v)
        names.append(name)
        lines.append(f'  "{name}" [label="{label}"];')
    for u, w in g.arcs:
        line = f'  "{names[u]}" -> "{names[w]}"'
        if g.provenance is not None:
            cx, cy = g.provenance[(u, w)]
            line += f' [label="({cx},{cy})"]'
        lines.append(line + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
