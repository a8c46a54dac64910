"""Seeded random diagrams and exhaustive crossing assignments.

Diagrams are built by dropping closed loops onto the grid and rejecting any
placement that does not meet existing loops transversally.  The generator
is driven by a small splittable PRNG with a fixed algorithm, so a seed
yields the same diagram on every platform and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagram import Edge2, LatticeDiagram, OverAxis, Point2, canonical_edge, edge_axis, validate, with_crossing_axes
from .errors import RetriesExhausted, TooManyCrossings

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator: 64-bit state, one multiply-shift per output.

    Chosen over `random.Random` so that seeds mean the same thing in any
    reimplementation; the three constants are the standard ones.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        # Modulo bias is negligible for the tiny ranges used here.
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], both ends included."""
        return lo + self.below(hi - lo + 1)

    def bit(self) -> int:
        return self.next_u64() >> 63

    def split(self) -> "SplitMix64":
        """Independent child generator; advances this one by one draw."""
        return SplitMix64(self.next_u64())


@dataclass(frozen=True)
class GenConfig:
    """Parameters for `random_diagram`.

    bbox bounds all coordinates to [-bbox, bbox].  rectilinear switches the
    loop shape from plain rectangles to boundaries of edge-connected cell
    clusters, which produces corners in both directions.
    """

    seed: int
    n_loops: int = 2
    bbox: int = 4
    max_retries: int = 64
    rectilinear: bool = False

    def __post_init__(self) -> None:
        if self.n_loops < 1:
            raise ValueError("n_loops must be at least 1")
        if self.bbox < 2:
            raise ValueError("bbox must be at least 2")
        if self.max_retries < 1:
            raise ValueError("max_retries must be at least 1")


def _rectangle_edges(rng: SplitMix64, bbox: int) -> set[Edge2]:
    x1 = rng.randint(-bbox, bbox - 1)
    x2 = rng.randint(x1 + 1, bbox)
    y1 = rng.randint(-bbox, bbox - 1)
    y2 = rng.randint(y1 + 1, bbox)
    edges: set[Edge2] = set()
    for x in range(x1, x2):
        edges.add(canonical_edge((x, y1), (x + 1, y1)))
        edges.add(canonical_edge((x, y2), (x + 1, y2)))
    for y in range(y1, y2):
        edges.add(canonical_edge((x1, y), (x1, y + 1)))
        edges.add(canonical_edge((x2, y), (x2, y + 1)))
    return edges


def _polyomino_edges(rng: SplitMix64, bbox: int) -> set[Edge2] | None:
    """Boundary of a random edge-connected cell cluster, or None if the
    boundary pinches at a vertex or encloses a hole."""
    n_cells = rng.randint(1, 2 * bbox)
    cells = {(rng.randint(-bbox, bbox - 1), rng.randint(-bbox, bbox - 1))}
    attempts = 0
    while len(cells) < n_cells and attempts < 8 * n_cells:
        attempts += 1
        bx, by = sorted(cells)[rng.below(len(cells))]
        dx, dy = ((1, 0), (-1, 0), (0, 1), (0, -1))[rng.below(4)]
        cx, cy = bx + dx, by + dy
        if -bbox <= cx < bbox and -bbox <= cy < bbox:
            cells.add((cx, cy))

    edges: set[Edge2] = set()
    for cx, cy in cells:
        for e in (
            canonical_edge((cx, cy), (cx + 1, cy)),
            canonical_edge((cx, cy + 1), (cx + 1, cy + 1)),
            canonical_edge((cx, cy), (cx, cy + 1)),
            canonical_edge((cx + 1, cy), (cx + 1, cy + 1)),
        ):
            # Edges interior to the cluster appear twice and cancel.
            edges.symmetric_difference_update({e})

    degree: dict[Point2, int] = {}
    nbrs: dict[Point2, list[Point2]] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    if any(deg != 2 for deg in degree.values()):
        return None

    # A boundary with a hole splits into several loops; walk one loop and
    # insist it uses every edge.
    start = min(edges)
    prev, cur = start
    count = 0
    while True:
        count += 1
        a, b = nbrs[cur]
        prev, cur = cur, b if a == prev else a
        if (prev, cur) == start:
            break
    if count != len(edges):
        return None
    return edges


def _loop_kinds(loop_edges: set[Edge2]) -> dict[Point2, str]:
    """Classify each loop vertex: straight horizontal or vertical pass, or
    a corner."""
    incident: dict[Point2, set[OverAxis]] = {}
    for e in loop_edges:
        axis = edge_axis(e)
        for v in e:
            incident.setdefault(v, set()).add(axis)
    kinds = {}
    for v, axes in incident.items():
        if len(axes) == 2:
            kinds[v] = "corner"
        else:
            kinds[v] = "h" if OverAxis.H in axes else "v"
    return kinds


def random_diagram(config: GenConfig) -> LatticeDiagram:
    """Generate a seeded random diagram of `config.n_loops` closed loops.

    Candidate loops are rejected unless every contact with already-placed
    loops is a transversal crossing: a shared point where one loop runs
    straight horizontally and the other straight vertically, and where no
    third loop already passes.  Shared edges, touching corners, and
    collinear touches are all rejected.  Raises RetriesExhausted after
    `config.max_retries` rejected candidates.
    """
    rng = SplitMix64(config.seed)
    edges: set[Edge2] = set()
    kind: dict[Point2, str] = {}
    placed = 0
    rejected = 0
    while placed < config.n_loops:
        if config.rectilinear:
            candidate = _polyomino_edges(rng.split(), config.bbox)
        else:
            candidate = _rectangle_edges(rng.split(), config.bbox)

        ok = candidate is not None
        if ok:
            new_kinds = _loop_kinds(candidate)
            ok = not any(e in edges for e in candidate) and all(
                {kind[p], k} == {"h", "v"}
                for p, k in new_kinds.items()
                if p in kind
            )
        if not ok:
            rejected += 1
            if rejected >= config.max_retries:
                raise RetriesExhausted(
                    f"{rejected} rejected loop placements for seed {config.seed}"
                )
            continue

        edges.update(candidate)
        for p, k in new_kinds.items():
            kind[p] = "cross" if p in kind else k
        placed += 1

    axes = {
        p: OverAxis.V if rng.bit() else OverAxis.H
        for p in sorted(q for q, k in kind.items() if k == "cross")
    }
    return validate(sorted(edges), axes)


def enumerate_assignments(d: LatticeDiagram, cap: int = 20) -> Iterator[LatticeDiagram]:
    """All 2^k over-axis assignments of the diagram's k crossings.

    Crossings vary in sorted order with H before V, so the first diagram is
    all-H and the last all-V.  Raises TooManyCrossings beyond `cap` before
    yielding anything.
    """
    keys = sorted(d.crossings)
    if len(keys) > cap:
        raise TooManyCrossings(len(keys), cap)

    def assignments() -> Iterator[LatticeDiagram]:
        k = len(keys)
        for mask in range(1 << k):
            axes = {
                keys[i]: OverAxis.V if (mask >> (k - 1 - i)) & 1 else OverAxis.H
                for i in range(k)
            }
            yield with_crossing_axes(d, axes)

    return assignments()
