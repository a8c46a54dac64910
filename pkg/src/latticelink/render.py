"""SVG rendering of diagrams with the usual broken-understrand convention."""

from __future__ import annotations

from .diagram import LatticeDiagram, edge_axis

# Total gap across an understrand, in grid units, centered on the crossing.
GAP = 0.3


def _num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else f"{v:g}"


def diagram_to_svg(d: LatticeDiagram, scale: int = 40, margin: int = 1) -> str:
    """Render the diagram as an SVG drawing.

    Each edge becomes exactly one line.  An edge whose axis passes under at
    an endpoint crossing is shortened there by half the gap, so the strand
    on top reads as unbroken.  The y axis is flipped to put larger y higher
    on the page.
    """
    vertices = sorted(d.degrees) or [(0, 0)]
    min_x = min(x for x, _ in vertices)
    max_x = max(x for x, _ in vertices)
    min_y = min(y for _, y in vertices)
    max_y = max(y for _, y in vertices)
    width = (max_x - min_x + 2 * margin) * scale
    height = (max_y - min_y + 2 * margin) * scale

    def px(x: int) -> float:
        return (x - min_x + margin) * scale

    def py(y: int) -> float:
        return (max_y - y + margin) * scale

    trim = GAP / 2 * scale
    stroke = _num(0.075 * scale)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f'<rect width="{_num(width)}" height="{_num(height)}" fill="white"/>',
    ]
    for a, b in d.edges:
        axis = edge_axis((a, b))
        dx, dy = b[0] - a[0], b[1] - a[1]
        trim_a = trim if a in d.crossings and d.crossings[a] is not axis else 0.0
        trim_b = trim if b in d.crossings and d.crossings[b] is not axis else 0.0
        x1 = px(a[0]) + dx * trim_a
        y1 = py(a[1]) - dy * trim_a
        x2 = px(b[0]) - dx * trim_b
        y2 = py(b[1]) + dy * trim_b
        lines.append(
            f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
            f'stroke="black" stroke-width="{stroke}" stroke-linecap="square"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
