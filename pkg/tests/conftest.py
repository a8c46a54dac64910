import pytest

from latticelink import LatticeDiagram, OverAxis, validate

# Two interlocking rectangles: a tall one on columns x=0,1 and a wide one on
# rows y=0,1.  They cross transversally at the four points of the unit
# square [0,1] x [0,1], making this the smallest fixture where every
# over/under phenomenon shows up.
SOL_EDGES = [
    ((0, -1), (1, -1)),
    ((1, -1), (1, 0)),
    ((1, 0), (1, 1)),
    ((1, 1), (1, 2)),
    ((0, 2), (1, 2)),
    ((0, -1), (0, 0)),
    ((0, 0), (0, 1)),
    ((0, 1), (0, 2)),
    ((-1, 0), (0, 0)),
    ((0, 0), (1, 0)),
    ((1, 0), (2, 0)),
    ((2, 0), (2, 1)),
    ((-1, 1), (0, 1)),
    ((0, 1), (1, 1)),
    ((1, 1), (2, 1)),
    ((-1, 0), (-1, 1)),
]

SOL_CROSSINGS = [(0, 0), (1, 0), (0, 1), (1, 1)]


def sol_with(axes: dict) -> LatticeDiagram:
    return validate(SOL_EDGES, {v: OverAxis(a) for v, a in axes.items()})


@pytest.fixture
def sol_allv() -> LatticeDiagram:
    return sol_with({v: "V" for v in SOL_CROSSINGS})


@pytest.fixture
def sol_checker() -> LatticeDiagram:
    return sol_with({(0, 0): "V", (1, 0): "H", (0, 1): "H", (1, 1): "V"})


@pytest.fixture
def unit_square() -> LatticeDiagram:
    return validate(
        [((0, 0), (1, 0)), ((1, 0), (1, 1)), ((0, 1), (1, 1)), ((0, 0), (0, 1))], {}
    )
