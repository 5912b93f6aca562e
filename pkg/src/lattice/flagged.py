"""
h-flagged Schur polynomials as determinants of 1-flagged ones.

An h-flagged tableau corresponds to h nested subdiagrams and therefore to h
paths through the diagram grid. The k-th path is shifted by (k-1, -(k-1)) and
lengthened at both ends, which makes the family noncrossing with fixed
endpoints. Two lengthenings are supported:

* ``plain``: h - k steps at each end, on the grid of lambda[h-1, h-1];
* ``staircase``: 2(h - k) steps at each end, on the grid of
  lambda-hat[h-1, h-1].

In both cases the determinant of partition functions times a monomial
prefactor equals the h-flagged Schur polynomial.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from src.errors import DomainError, IdentityMismatchError
from src.lattice.grid import GridPoint, PathSystem, WeightedGrid, subdiagram_path
from src.lattice.lgv import lgv_matrix
from src.polyring import LaurentPoly, Monomial, PolyMatrix, determinant
from src.shapes import Partition, extend, staircase_extend
from src.tableaux import FlaggedTableau, h_flagged_schur, to_nested_subdiagrams
from src.utils.logger import get_logger

logger = get_logger(__name__)


class Variant(str, Enum):
    """How the shifted paths are lengthened."""

    PLAIN = 'plain'
    STAIRCASE = 'staircase'

    @property
    def stretch(self) -> int:
        """Extra steps per unit of h - k."""
        return 1 if self is Variant.PLAIN else 2


def oneflag_prefactor(shape: Partition, offset: int = 0) -> Monomial:
    """x_1^{lambda_1} x_2^{lambda_1} x_3^{lambda_2} ... x_{m+1}^{lambda_m}, variables shifted by offset."""
    pairs = [(1 + offset, shape.first)]
    pairs.extend((r + 1 + offset, part) for r, part in enumerate(shape.parts, start=1))
    return Monomial(pairs)


def one_flagged_via_paths(shape: Partition) -> LaurentPoly:
    """
    The 1-flagged Schur polynomial as prefactor * Z(A, B), where A = (0, -m)
    is the bottom-left and B = (lambda_1, 0) the top-right corner of the grid.
    """
    if shape.is_empty():
        return LaurentPoly.one()
    grid = WeightedGrid(shape)
    z = grid.partition_function(GridPoint(0, -len(shape)), GridPoint(shape.first, 0))
    return z.times_monomial(oneflag_prefactor(shape))


def _validate(shape: Partition, h: int) -> None:
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    if shape.is_empty():
        raise DomainError("The path construction needs a nonempty diagram")


def extended_diagram(shape: Partition, h: int, variant: Variant) -> Partition:
    """The diagram whose grid carries the lengthened paths."""
    if Variant(variant) is Variant.PLAIN:
        return extend(shape, h - 1, h - 1)
    return staircase_extend(shape, h - 1, h - 1)


def lengthened_endpoints(
    shape: Partition, h: int, variant: Variant
) -> Tuple[WeightedGrid, List[GridPoint], List[GridPoint]]:
    """
    The grid and endpoints of the lengthened paths.

    plain:     A_k = (k-1, -m-h+1),      B_k = (lambda_1+h-1, 1-k)
    staircase: A_k = (k-1, -m-2h+k+1),   B_k = (lambda_1+2h-k-1, 1-k)

    Raises:
        DomainError: If h < 1 or the diagram is empty
    """
    _validate(shape, h)
    variant = Variant(variant)
    m, first = len(shape), shape.first
    grid = WeightedGrid(extended_diagram(shape, h, variant))
    if variant is Variant.PLAIN:
        starts = [GridPoint(k - 1, -m - h + 1) for k in range(1, h + 1)]
        ends = [GridPoint(first + h - 1, 1 - k) for k in range(1, h + 1)]
    else:
        starts = [GridPoint(k - 1, -m - 2 * h + k + 1) for k in range(1, h + 1)]
        ends = [GridPoint(first + 2 * h - k - 1, 1 - k) for k in range(1, h + 1)]
    return grid, starts, ends


def lgv_prefactor(shape: Partition, h: int, variant: Variant) -> Monomial:
    """
    Inverse of the weight of all edges, corrected by the lengthening.

    plain:     x_1^{lambda_1+h-1} ... x_h^{lambda_1} * x_{h+1}^{lambda_1} ... x_{h+m}^{lambda_m}
    staircase: x_1^{lambda_1+2(h-1)} ... x_h^{lambda_1} * the same lambda part
    """
    stretch = Variant(variant).stretch
    pairs = [(k, shape.first + stretch * (h - k)) for k in range(1, h + 1)]
    pairs.extend((h + r, part) for r, part in enumerate(shape.parts, start=1))
    return Monomial(pairs)


def flagged_matrix(shape: Partition, h: int, variant: Variant) -> PolyMatrix:
    """(Z(A_a, B_c))_{a,c} for the lengthened endpoints."""
    grid, starts, ends = lengthened_endpoints(shape, h, variant)
    return lgv_matrix(grid, starts, ends)


def h_flagged_via_lgv(shape: Partition, h: int, variant: Variant = Variant.PLAIN) -> LaurentPoly:
    """
    h-flagged Schur polynomial as prefactor * det(Z(A_a, B_c)).

    The empty diagram gives 1.
    """
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    if shape.is_empty():
        return LaurentPoly.one()
    det = determinant(flagged_matrix(shape, h, variant))
    return det.times_monomial(lgv_prefactor(shape, h, variant))


@dataclass(frozen=True)
class OneFlaggedEntry:
    """A matrix entry written as s^(1)_diagram(x_{offset+1}, ...) / denominator."""

    diagram: Partition
    denominator: Monomial
    offset: int

    def evaluate(self) -> LaurentPoly:
        """Compute the entry from the tableau side."""
        numerator = h_flagged_schur(self.diagram, 1).shift_variables(self.offset)
        return numerator.monomial_quotient(self.denominator)

    @property
    def first_variable(self) -> int:
        return self.offset + 1

    def __str__(self) -> str:
        return f"s1{self.diagram}(x{self.offset + 1},...) / {self.denominator}"


def entry_as_one_flagged(shape: Partition, h: int, i: int, j: int,
                         variant: Variant = Variant.PLAIN) -> OneFlaggedEntry:
    """
    Entry (i, j) of the matrix in printed form.

    Rows and columns are numbered from the far end: entry (i, j) is
    Z(A_{h+1-i}, B_{h+1-j}). Cutting the extended grid between those two
    points leaves the grid of lambda[j-1, i-1] (lambda-hat[j-1, i-1] for the
    staircase variant) whose lines are labelled from x_{h+1-j} on, so the
    entry is a 1-flagged Schur polynomial in x_{h+1-j}, x_{h+2-j}, ...
    divided by the corresponding 1-flag prefactor.

    Raises:
        DomainError: If i or j is outside 1..h
    """
    _validate(shape, h)
    if not (1 <= i <= h and 1 <= j <= h):
        raise DomainError(f"Entry ({i},{j}) is outside a {h}x{h} matrix")
    if Variant(variant) is Variant.PLAIN:
        diagram = extend(shape, j - 1, i - 1)
    else:
        diagram = staircase_extend(shape, j - 1, i - 1)
    offset = h - j
    return OneFlaggedEntry(diagram, oneflag_prefactor(diagram, offset), offset)


def printed_matrix(shape: Partition, h: int, variant: Variant = Variant.PLAIN) -> PolyMatrix:
    """The matrix with rows and columns in printed order (both reversed)."""
    internal = flagged_matrix(shape, h, variant)
    return PolyMatrix.build(h, lambda i, j: internal[h - 1 - i, h - 1 - j])


def certify_entries(shape: Partition, h: int,
                    variant: Variant = Variant.PLAIN) -> List[List[OneFlaggedEntry]]:
    """
    Check every printed entry against its 1-flagged closed form.

    Returns:
        The entries, indexed [i-1][j-1]

    Raises:
        IdentityMismatchError: If a closed form disagrees with the partition function
    """
    matrix = printed_matrix(shape, h, variant)
    entries = []
    for i in range(1, h + 1):
        row = []
        for j in range(1, h + 1):
            entry = entry_as_one_flagged(shape, h, i, j, variant)
            value = entry.evaluate()
            if value != matrix[i - 1, j - 1]:
                logger.error(
                    "Matrix entry disagrees with its 1-flagged form",
                    extra={'shape': str(shape), 'h': h, 'entry': [i, j],
                           'variant': Variant(variant).value}
                )
                raise IdentityMismatchError(
                    f"entry ({i},{j}) of {shape}, h={h}, {Variant(variant).value}",
                    str(matrix[i - 1, j - 1]), str(value)
                )
            row.append(entry)
        entries.append(row)
    return entries


def tableau_path_system(tableau: FlaggedTableau, h: int,
                        variant: Variant = Variant.PLAIN) -> PathSystem:
    """
    The noncrossing family of an h-flagged tableau.

    Path k bounds mu_k = {t_ij <= i + k - 1}, is shifted by (k-1, -(k-1)) and
    lengthened by (h-k) steps (2(h-k) for the staircase variant) downward at
    its start and rightward at its end. Its weight times ``lgv_prefactor`` is
    M(T).
    """
    shape = tableau.shape
    grid, _, _ = lengthened_endpoints(shape, h, variant)
    stretch = Variant(variant).stretch
    paths = []
    for k, mu in enumerate(to_nested_subdiagrams(tableau, h), start=1):
        core = [p.shifted(k - 1, -(k - 1)) for p in subdiagram_path(shape, mu)]
        extra = stretch * (h - k)
        head = [core[0].shifted(0, -d) for d in range(extra, 0, -1)]
        tail = [core[-1].shifted(d, 0) for d in range(1, extra + 1)]
        paths.append(tuple(head + core + tail))
    return PathSystem(grid, tuple(paths))
