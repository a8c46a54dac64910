"""Exception types shared across the package."""

from __future__ import annotations


class LatticeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LatticeError):
    """Input text is not valid diagram/link JSON."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NonUnitEdge(LatticeError):
    """An edge is not a unit-length axis-aligned grid edge."""

    def __init__(self, a, b):
        super().__init__(f"edge {a}-{b} is not a unit axis-aligned grid edge")
        self.endpoints = (a, b)


class DuplicateEdge(LatticeError):
    """The same geometric edge was given more than once."""

    def __init__(self, edge):
        super().__init__(f"edge {edge[0]}-{edge[1]} appears more than once")
        self.edge = edge


class BadDegree(LatticeError):
    """A vertex has degree other than 2 or 4."""

    def __init__(self, vertex, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 2 or 4")
        self.vertex = vertex
        self.degree = degree


class MissingCrossingInfo(LatticeError):
    """A degree-4 vertex has no over-axis assignment."""

    def __init__(self, vertex):
        super().__init__(f"crossing {vertex} has no over-axis assignment")
        self.vertex = vertex


class SpuriousCrossingInfo(LatticeError):
    """Crossing data was given for a vertex that is not a crossing."""

    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has crossing data but is not a degree-4 vertex")
        self.vertex = vertex


class MissingVertex(LatticeError):
    """A vertex labeling does not cover every digraph vertex."""

    def __init__(self, vertex):
        super().__init__(f"no value for digraph vertex {vertex}")
        self.vertex = vertex


class NotAHeightFunction(LatticeError):
    """The given labeling is not strictly increasing along every arc."""


class InvalidLink(LatticeError):
    """A 3D polygon list is not a well-formed lattice link."""


class RetriesExhausted(LatticeError):
    """Rejection sampling hit its retry budget."""


class TooManyCrossings(LatticeError):
    """Assignment enumeration would exceed the crossing cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} crossings exceed the enumeration cap of {cap}")
        self.count = count
        self.cap = cap


class Inconsistent(LatticeError):
    """Internal detectors disagree; indicates a bug, not bad input."""
