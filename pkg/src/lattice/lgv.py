"""Noncrossing path families and the Lindstrom-Gessel-Viennot determinant."""

from itertools import permutations
from typing import List, Optional, Sequence, Set, Tuple

from src.config import config
from src.errors import DimensionError, DomainError
from src.lattice.grid import GridPoint, Path, PathSystem, WeightedGrid
from src.polyring import LaurentPoly, PolyMatrix, determinant
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _check_endpoints(grid: WeightedGrid, starts: Sequence[GridPoint],
                     ends: Sequence[GridPoint]) -> None:
    if len(starts) != len(ends):
        raise DimensionError(f"{len(starts)} start points but {len(ends)} end points")
    for point in list(starts) + list(ends):
        grid.require(point)


def _check_oracle_size(grid: WeightedGrid) -> None:
    if grid.size > config.nc_max_points:
        raise DomainError(
            f"Grid of {grid.diagram} has {grid.size} points; exhaustive path "
            f"enumeration is limited to {config.nc_max_points}"
        )


def _disjoint_paths(grid: WeightedGrid, start: GridPoint, end: GridPoint,
                    blocked: Set[GridPoint]) -> List[Path]:
    if start in blocked or end in blocked:
        return []
    found: List[Path] = []
    trail = [start]

    def walk(point: GridPoint) -> None:
        if point == end:
            found.append(tuple(trail))
            return
        for step in grid.successors(point):
            if step.x <= end.x and step.y <= end.y and step not in blocked:
                trail.append(step)
                walk(step)
                trail.pop()

    walk(start)
    return found


def nc_path_systems(grid: WeightedGrid, starts: Sequence[GridPoint],
                    ends: Sequence[GridPoint]) -> List[PathSystem]:
    """
    Every family of pairwise vertex-disjoint paths, path k from starts[k] to ends[k].

    Exhaustive; only grids up to ``config.nc_max_points`` points are accepted.

    Raises:
        DimensionError: If the endpoint lists differ in length
        DomainError: If an endpoint is outside the grid or the grid is too large
    """
    _check_endpoints(grid, starts, ends)
    _check_oracle_size(grid)
    systems: List[PathSystem] = []
    chosen: List[Path] = []

    def place(k: int, blocked: Set[GridPoint]) -> None:
        if k == len(starts):
            systems.append(PathSystem(grid, tuple(chosen)))
            return
        for path in _disjoint_paths(grid, starts[k], ends[k], blocked):
            chosen.append(path)
            place(k + 1, blocked | set(path))
            chosen.pop()

    place(0, set())
    logger.debug(
        f"Enumerated {len(systems)} noncrossing systems on {grid.diagram}",
        extra={'paths': len(starts), 'grid_points': grid.size}
    )
    return systems


def z_nc(grid: WeightedGrid, starts: Sequence[GridPoint],
         ends: Sequence[GridPoint]) -> LaurentPoly:
    """Weighted count of noncrossing systems (brute force)."""
    total = LaurentPoly.zero()
    for system in nc_path_systems(grid, starts, ends):
        total = total + system.weight()
    return total


def lgv_matrix(grid: WeightedGrid, starts: Sequence[GridPoint],
               ends: Sequence[GridPoint]) -> PolyMatrix:
    """The matrix (Z(starts[i], ends[j]))_{i,j}."""
    _check_endpoints(grid, starts, ends)
    if not ends:
        return PolyMatrix(0, 0, ())
    corner = GridPoint(max(e.x for e in ends), max(e.y for e in ends))
    rows = []
    for start in starts:
        sums = grid.sums_from(start, corner)
        rows.append([sums.get(end, LaurentPoly.zero()) for end in ends])
    return PolyMatrix.from_rows(rows)


def lgv_determinant(grid: WeightedGrid, starts: Sequence[GridPoint],
                    ends: Sequence[GridPoint]) -> LaurentPoly:
    """
    det(Z(starts[i], ends[j])).

    Equals ``z_nc`` when every noncrossing system joins starts[k] to ends[k];
    the caller is responsible for that compatibility.
    """
    return determinant(lgv_matrix(grid, starts, ends))


def all_path_systems(grid: WeightedGrid, starts: Sequence[GridPoint],
                     ends: Sequence[GridPoint]) -> List[Tuple[Tuple[int, ...], PathSystem]]:
    """
    Every family (sigma, paths) with path k running from starts[k] to ends[sigma[k]].

    Crossings are allowed. This is the signed sum the determinant expands into.
    """
    _check_endpoints(grid, starts, ends)
    _check_oracle_size(grid)
    families = []
    for sigma in permutations(range(len(ends))):
        options = [grid.paths(starts[k], ends[sigma[k]]) for k in range(len(starts))]
        if any(not paths for paths in options):
            continue

        def combine(k: int, chosen: List[Path]):
            if k == len(options):
                families.append((sigma, PathSystem(grid, tuple(chosen))))
                return
            for path in options[k]:
                combine(k + 1, chosen + [path])

        combine(0, [])
    return families


def permutation_sign(sigma: Sequence[int]) -> int:
    sign = 1
    for a in range(len(sigma)):
        for b in range(a + 1, len(sigma)):
            if sigma[a] > sigma[b]:
                sign = -sign
    return sign


def tail_swap(system: PathSystem) -> Optional[PathSystem]:
    """
    Exchange the tails of two meeting paths.

    Takes the lowest-index path i that shares a point with another path, the
    first point C along path i that lies on another path, and the lowest-index
    partner j through C; the parts of paths i and j after C are swapped.
    Returns None for a noncrossing system. Applied twice, it returns the
    original system, and it preserves the total weight.
    """
    paths = system.paths
    for i, path in enumerate(paths):
        for position, point in enumerate(path):
            partners = [j for j, other in enumerate(paths) if j != i and point in other]
            if not partners:
                continue
            j = partners[0]
            cut = paths[j].index(point)
            swapped = list(paths)
            swapped[i] = path[:position] + paths[j][cut:]
            swapped[j] = paths[j][:cut] + path[position:]
            return PathSystem(system.grid, tuple(swapped))
    return None
