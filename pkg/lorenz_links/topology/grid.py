# CHECKPOINT_6_GRID_DIAGRAMS
"""
Diagonal Grid Diagrams
======================
The n×n grid of a shuffle: O-vertices on the diagonal, an X-vertex at
(i, σ(i)) in every column. Vertical edges run O→X and cross over the
horizontal edges, which run X→O.

Coordinates are (column x, height y), both 1-based, y growing upward.
"""

from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from lorenz_links.topology.errors import InvariantError
from lorenz_links.topology.lorenz_core import Shuffle, _build, cycle_count
from lorenz_links.topology.planar import Crossing, PlanarDiagram, crossing_sign
from lorenz_links.utils.logger import get_logger

logger = get_logger("grid")

# SVG layout, in px
CELL = 40
MARGIN = 30
VERTEX_RADIUS = 9
GAP_HALF_WIDTH = 7


class GridDiagram(BaseModel):
    """Diagonal grid diagram; x_heights[i-1] is the height of the X in column i"""

    model_config = ConfigDict(frozen=True)

    n: int
    x_heights: Tuple[int, ...]

    @model_validator(mode="after")
    def validate_grid(self) -> "GridDiagram":
        if len(self.x_heights) != self.n or sorted(self.x_heights) != list(range(1, self.n + 1)):
            raise ValueError("a grid needs exactly one X in every row and column")
        for column, height in enumerate(self.x_heights, start=1):
            if height == column:
                raise ValueError(f"X and O share the cell ({column},{height})")
        return self

    def x_height(self, column: int) -> int:
        return self.x_heights[column - 1]

    def x_column(self, height: int) -> int:
        """Column of the X in row ``height``"""
        return self.x_heights.index(height) + 1

    @property
    def o_heights(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def up_columns(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.x_height(i) > i)

    @property
    def down_columns(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.x_height(i) < i)


def build_grid(sigma: Shuffle) -> GridDiagram:
    return _build(GridDiagram, n=sigma.n, x_heights=sigma.images)


def grid_components(g: GridDiagram) -> int:
    return cycle_count(g.x_heights)


# ============================================
# Crossings
# ============================================

def _between(value: int, a: int, b: int) -> bool:
    return min(a, b) < value < max(a, b)


def _direction(start: int, end: int) -> int:
    return 1 if end > start else -1


def crossing_points(g: GridDiagram) -> List[Tuple[int, int]]:
    """(column, height) of every vertical/horizontal crossing, endpoint touches excluded"""
    points = []
    for m in range(1, g.n + 1):
        for h in range(1, g.n + 1):
            if _between(h, m, g.x_height(m)) and _between(m, g.x_column(h), h):
                points.append((m, h))
    return points


def grid_to_planar(g: GridDiagram) -> PlanarDiagram:
    """
    Walk each component of the grid polygon and wire its crossing passages
    into a planar diagram. Arc j of a component runs from its j-th passage
    to the next one.
    """
    points = set(crossing_points(g))
    slots: Dict[Tuple[int, int], Dict[str, int]] = {}
    order: List[Tuple[int, int]] = []
    visited = set()
    free_loops = 0
    next_arc = 0

    for start in range(1, g.n + 1):
        if start in visited:
            continue
        passages: List[Tuple[Tuple[int, int], str]] = []
        column = start
        while column not in visited:
            visited.add(column)
            height = g.x_height(column)
            # vertical O(column,column) -> X(column,height)
            step = _direction(column, height)
            for y in range(column + step, height, step):
                if (column, y) in points:
                    passages.append(((column, y), "over"))
            # horizontal X(column,height) -> O(height,height)
            step = _direction(column, height)
            for x in range(column + step, height, step):
                if (x, height) in points:
                    passages.append(((x, height), "under"))
            column = height

        if not passages:
            free_loops += 1
            continue
        count = len(passages)
        for j, (location, role) in enumerate(passages):
            if location not in slots:
                slots[location] = {}
                order.append(location)
            slots[location][f"{role}_in"] = next_arc + (j - 1) % count
            slots[location][f"{role}_out"] = next_arc + j
        next_arc += count

    crossings = []
    for m, h in order:
        wiring = slots[(m, h)]
        if len(wiring) != 4:
            raise InvariantError(f"crossing at ({m},{h}) was not visited by both strands")
        over = (0, _direction(m, g.x_height(m)))
        under = (_direction(g.x_column(h), h), 0)
        crossings.append(Crossing(sign=crossing_sign(over, under), location=(m, h), **wiring))

    diagram = PlanarDiagram(crossings=tuple(crossings), free_loops=free_loops)
    logger.debug(f"grid n={g.n}: {len(crossings)} crossings, {free_loops} free loops")
    return diagram


def grid_writhe(g: GridDiagram) -> int:
    return grid_to_planar(g).writhe


# ============================================
# Rendering
# ============================================

def render_ascii(g: GridDiagram) -> str:
    """One line per row, top row first: X, O or '.'"""
    lines = []
    for y in range(g.n, 0, -1):
        row = []
        for x in range(1, g.n + 1):
            if g.x_height(x) == y:
                row.append("X")
            elif x == y:
                row.append("O")
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines)


def _px(x: int) -> int:
    return MARGIN + (x - 1) * CELL


def _py(n: int, y: int) -> int:
    return MARGIN + (n - y) * CELL


def _edge(n: int, kind: str, start: Tuple[int, int], end: Tuple[int, int]) -> str:
    (x1, y1), (x2, y2) = start, end
    # stop short of the vertex marks so the arrow heads stay visible
    dx = (x2 > x1) - (x2 < x1)
    dy = (y2 > y1) - (y2 < y1)
    sx, sy = _px(x1) + dx * VERTEX_RADIUS, _py(n, y1) - dy * VERTEX_RADIUS
    ex, ey = _px(x2) - dx * VERTEX_RADIUS, _py(n, y2) + dy * VERTEX_RADIUS
    return (
        f'<line class="edge {kind}" x1="{sx}" y1="{sy}" x2="{ex}" y2="{ey}" '
        f'stroke="black" stroke-width="2" marker-end="url(#arrow)"/>'
    )


def render_svg(g: GridDiagram) -> str:
    """Standalone SVG: horizontals, then white gaps at crossings, then verticals on top"""
    n = g.n
    size = 2 * MARGIN + (n - 1) * CELL
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" '
        'orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for h in range(1, n + 1):
        parts.append(_edge(n, "horizontal", (g.x_column(h), h), (h, h)))
    for m, h in crossing_points(g):
        parts.append(
            f'<line class="crossing-gap" x1="{_px(m) - GAP_HALF_WIDTH}" y1="{_py(n, h)}" '
            f'x2="{_px(m) + GAP_HALF_WIDTH}" y2="{_py(n, h)}" stroke="white" stroke-width="6"/>'
        )
    for column in range(1, n + 1):
        parts.append(_edge(n, "vertical", (column, column), (column, g.x_height(column))))
    for i in range(1, n + 1):
        parts.append(
            f'<circle class="vertex o-vertex" cx="{_px(i)}" cy="{_py(n, i)}" r="{VERTEX_RADIUS - 2}" '
            f'fill="white" stroke="black" stroke-width="2"/>'
        )
        parts.append(
            f'<text class="vertex x-vertex" x="{_px(i)}" y="{_py(n, g.x_height(i))}" '
            f'text-anchor="middle" dominant-baseline="central" font-family="monospace" '
            f'font-size="16">X</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
