"""
The weighted lattice of a Young diagram.

The diagram lambda = (lambda_1, ..., lambda_m) sits in the fourth quadrant with
its top-left corner at the origin. Lattice point (x, -s) belongs to the grid
when 0 <= s <= m and 0 <= x <= lambda_max(s,1), so every row of boxes
contributes the horizontal line above and below it. Edges join neighbouring
grid points and point east or north. The east edge on the line y = -s has
weight x_{s+1}^{-1}; north edges have weight 1.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from src.errors import DimensionError, DomainError, ParseError
from src.polyring import LaurentPoly, Monomial
from src.shapes import Partition

_POINT_RE = re.compile(r'^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$')


class GridPoint(NamedTuple):
    """Lattice point; y is zero or negative inside a diagram grid."""

    x: int
    y: int

    def shifted(self, dx: int, dy: int) -> "GridPoint":
        return GridPoint(self.x + dx, self.y + dy)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def parse_point(text: str) -> GridPoint:
    """Parse ``(x,y)``."""
    match = _POINT_RE.match(text)
    if not match:
        raise ParseError("Expected a point of the form (x,y)", text, 0)
    return GridPoint(int(match.group(1)), int(match.group(2)))


Path = Tuple[GridPoint, ...]


def format_path(path: Sequence[GridPoint]) -> str:
    return "→".join(str(p) for p in path)


class WeightedGrid:
    """Lattice points and weighted east/north edges of a diagram."""

    def __init__(self, diagram: Partition):
        self.diagram = diagram
        self.rows = len(diagram)
        self._weights = [Monomial(((s + 1, -1),)) for s in range(self.rows + 1)]

    def width(self, s: int) -> int:
        """Largest x on the line y = -s."""
        return self.diagram.row(max(s, 1))

    def contains(self, point: GridPoint) -> bool:
        s = -point.y
        return 0 <= s <= self.rows and 0 <= point.x <= self.width(s)

    def require(self, point: GridPoint) -> None:
        if not self.contains(point):
            raise DomainError(f"Point {point} lies outside the grid of {self.diagram}")

    def points(self) -> List[GridPoint]:
        """All grid points in increasing (x, then y) order."""
        found = [GridPoint(x, -s) for s in range(self.rows + 1) for x in range(self.width(s) + 1)]
        found.sort()
        return found

    @property
    def size(self) -> int:
        return sum(self.width(s) + 1 for s in range(self.rows + 1))

    def east_weight(self, y: int) -> Monomial:
        """Weight x_{s+1}^{-1} of an east edge on the line y = -s."""
        return self._weights[-y]

    def successors(self, point: GridPoint) -> Iterator[GridPoint]:
        for step in (GridPoint(point.x + 1, point.y), GridPoint(point.x, point.y + 1)):
            if self.contains(step):
                yield step

    def step_weight(self, start: GridPoint, end: GridPoint) -> Monomial:
        """
        Raises:
            DomainError: If start -> end is not an edge of the grid
        """
        if not (self.contains(start) and self.contains(end)):
            raise DomainError(f"Step {start}→{end} leaves the grid of {self.diagram}")
        if end == GridPoint(start.x + 1, start.y):
            return self.east_weight(start.y)
        if end == GridPoint(start.x, start.y + 1):
            return Monomial()
        raise DomainError(f"{start}→{end} is not an east or north step")

    def sums_from(self, start: GridPoint, end: GridPoint) -> Dict[GridPoint, LaurentPoly]:
        """
        Weighted path sums from start to every point of the box [start, end].

        Points are visited in increasing (x, then y) order, which follows the
        edge orientation.
        """
        self.require(start)
        sums: Dict[GridPoint, LaurentPoly] = {start: LaurentPoly.one()}
        for x in range(start.x, end.x + 1):
            for y in range(start.y, end.y + 1):
                point = GridPoint(x, y)
                if point == start or not self.contains(point):
                    continue
                total = LaurentPoly.zero()
                west = GridPoint(x - 1, y)
                if west in sums:
                    total = total + sums[west].times_monomial(self.east_weight(y))
                south = GridPoint(x, y - 1)
                if south in sums:
                    total = total + sums[south]
                if total:
                    sums[point] = total
        return sums

    def partition_function(self, start: GridPoint, end: GridPoint) -> LaurentPoly:
        """
        Z(start, end): sum of path weights over monotone paths start -> end.

        Raises:
            DomainError: If either endpoint is outside the grid
        """
        self.require(start)
        self.require(end)
        if start == end:
            return LaurentPoly.one()
        if end.x < start.x or end.y < start.y:
            return LaurentPoly.zero()
        return self.sums_from(start, end).get(end, LaurentPoly.zero())

    def paths(self, start: GridPoint, end: GridPoint) -> List[Path]:
        """All monotone paths start -> end, east steps tried before north."""
        self.require(start)
        self.require(end)
        found: List[Path] = []
        trail = [start]

        def walk(point: GridPoint) -> None:
            if point == end:
                found.append(tuple(trail))
                return
            for step in self.successors(point):
                if step.x <= end.x and step.y <= end.y:
                    trail.append(step)
                    walk(step)
                    trail.pop()

        walk(start)
        return found

    def path_weight(self, path: Sequence[GridPoint]) -> LaurentPoly:
        """Product of the weights of the east steps of a path."""
        mono = Monomial()
        for a, b in zip(path, path[1:]):
            mono = mono * self.step_weight(a, b)
        if len(path) == 1:
            self.require(path[0])
        return LaurentPoly.from_monomial(mono)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightedGrid) and other.diagram == self.diagram

    def __hash__(self) -> int:
        return hash(self.diagram)

    def __repr__(self) -> str:
        return f"WeightedGrid({self.diagram})"


def partition_function(grid: WeightedGrid, start: GridPoint, end: GridPoint) -> LaurentPoly:
    return grid.partition_function(start, end)


def enumerate_paths(grid: WeightedGrid, start: GridPoint, end: GridPoint) -> List[Path]:
    return grid.paths(start, end)


def path_weight(grid: WeightedGrid, path: Sequence[GridPoint]) -> LaurentPoly:
    return grid.path_weight(path)


def subdiagram_path(shape: Partition, sub: Partition) -> Path:
    """
    The path from (0, -m) to (lambda_1, 0) bounding sub from below and right.

    It climbs row by row from the bottom: along the line y = -i it runs east
    to x = mu_i, then one step north; finally it runs east along y = 0.

    Raises:
        DomainError: If sub is not contained in shape
    """
    if not shape.contains(sub):
        raise DomainError(f"{sub} is not a subdiagram of {shape}")
    m = len(shape)
    x = 0
    path = [GridPoint(0, -m)]
    for i in range(m, 0, -1):
        while x < sub.row(i):
            x += 1
            path.append(GridPoint(x, -i))
        path.append(GridPoint(x, -i + 1))
    while x < shape.first:
        x += 1
        path.append(GridPoint(x, 0))
    return tuple(path)


@dataclass(frozen=True)
class PathSystem:
    """An ordered family of paths on one grid."""

    grid: WeightedGrid
    paths: Tuple[Path, ...]

    def __post_init__(self):
        for path in self.paths:
            if not path:
                raise DimensionError("Paths must contain at least one point")
            self.grid.path_weight(path)

    @property
    def starts(self) -> Tuple[GridPoint, ...]:
        return tuple(p[0] for p in self.paths)

    @property
    def ends(self) -> Tuple[GridPoint, ...]:
        return tuple(p[-1] for p in self.paths)

    def weight(self) -> LaurentPoly:
        total = LaurentPoly.one()
        for path in self.paths:
            total = total * self.grid.path_weight(path)
        return total

    def is_noncrossing(self) -> bool:
        seen = set()
        for path in self.paths:
            points = set(path)
            if seen & points:
                return False
            seen |= points
        return True

    def trace(self) -> List[str]:
        return [format_path(p) for p in self.paths]
