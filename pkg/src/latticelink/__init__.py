"""Lattice link diagrams: realizability, lifting, and verification.

A diagram is a set of unit edges in the integer plane with over/under data
at its degree-4 vertices.  The package decides whether such a diagram is
the projection of an embedded link in the cubic lattice, constructs a lift
when one exists, returns an obstructing alternating square when none does,
and verifies candidate links clause by clause.
"""

from .diagram import (
    Edge2,
    LatticeDiagram,
    OverAxis,
    Point2,
    Strand,
    canonical_edge,
    edge_axis,
    flip_all_crossings,
    parse_diagram,
    serialize_diagram,
    trace_strands,
    validate,
    with_crossing_axes,
)
from .digraph import (
    AssociatedDigraph,
    EdgeId,
    EscherSquare,
    build_digraph,
    export_dot,
    find_cycle,
    find_escher_squares,
    height_function,
    is_height_function,
    square_cycle,
)
from .errors import (
    BadDegree,
    DuplicateEdge,
    Inconsistent,
    InvalidLink,
    LatticeError,
    MissingCrossingInfo,
    MissingVertex,
    NonUnitEdge,
    NotAHeightFunction,
    ParseError,
    RetriesExhausted,
    SpuriousCrossingInfo,
    TooManyCrossings,
)
from .gen import GenConfig, SplitMix64, enumerate_assignments, random_diagram
from .lift import (
    ClauseReport,
    LatticeLink,
    Point3,
    RealizationReport,
    export_link,
    export_link_lines,
    extract_heights,
    lift,
    parse_link,
    realize,
    verify_realization,
)
from .render import diagram_to_svg

__version__ = "0.1.0"

__all__ = [
    "AssociatedDigraph",
    "BadDegree",
    "ClauseReport",
    "DuplicateEdge",
    "Edge2",
    "EdgeId",
    "EscherSquare",
    "GenConfig",
    "Inconsistent",
    "InvalidLink",
    "LatticeDiagram",
    "LatticeError",
    "LatticeLink",
    "MissingCrossingInfo",
    "MissingVertex",
    "NonUnitEdge",
    "NotAHeightFunction",
    "OverAxis",
    "ParseError",
    "Point2",
    "Point3",
    "RealizationReport",
    "RetriesExhausted",
    "SplitMix64",
    "SpuriousCrossingInfo",
    "Strand",
    "TooManyCrossings",
    "build_digraph",
    "canonical_edge",
    "diagram_to_svg",
    "edge_axis",
    "enumerate_assignments",
    "export_dot",
    "export_link",
    "export_link_lines",
    "extract_heights",
    "find_cycle",
    "find_escher_squares",
    "flip_all_crossings",
    "height_function",
    "is_height_function",
    "lift",
    "parse_diagram",
    "parse_link",
    "random_diagram",
    "realize",
    "serialize_diagram",
    "square_cycle",
    "trace_strands",
    "validate",
    "verify_realization",
    "with_crossing_axes",
]
