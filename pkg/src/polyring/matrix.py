"""Square matrices of Laurent polynomials and their exact determinants."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from src.config import config
from src.errors import DimensionError
from src.polyring.laurent import LaurentPoly, PolyLike, exact_divide
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class PolyMatrix:
    """Row-major matrix with LaurentPoly entries."""

    rows: int
    cols: int
    entries: Tuple[LaurentPoly, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"Negative matrix size {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[PolyLike]]) -> "PolyMatrix":
        """
        Build a matrix from nested rows, coercing integers.

        Raises:
            DimensionError: If rows have different lengths
        """
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        flat: List[LaurentPoly] = []
        for k, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionError(f"Row {k} has {len(row)} entries, expected {n_cols}")
            flat.extend(LaurentPoly.coerce(value) for value in row)
        return cls(n_rows, n_cols, tuple(flat))

    @classmethod
    def build(cls, size: int, entry: Callable[[int, int], PolyLike]) -> "PolyMatrix":
        """Square matrix with entry(i, j) at zero-based position (i, j)."""
        return cls.from_rows([[entry(i, j) for j in range(size)] for i in range(size)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[LaurentPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))


def _determinant_by_minors(m: PolyMatrix) -> LaurentPoly:
    """Laplace expansion along successive rows, memoized on the set of used columns."""
    n = m.rows
    memo: Dict[int, LaurentPoly] = {}
    full = (1 << n) - 1

    def expand(used: int) -> LaurentPoly:
        if used == full:
            return LaurentPoly.one()
        if used in memo:
            return memo[used]
        row = bin(used).count("1")
        total = LaurentPoly.zero()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if used & bit:
                continue
            entry = m[row, j]
            if entry:
                minor = expand(used | bit)
                if minor:
                    term = entry * minor
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[used] = total
        return total

    return expand(0)


def _determinant_by_elimination(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination with exact Laurent division."""
    n = m.rows
    work = m.to_rows()
    sign = 1
    previous = LaurentPoly.one()
    for k in range(n - 1):
        if not work[k][k]:
            pivot = next((r for r in range(k + 1, n) if work[r][k]), None)
            if pivot is None:
                return LaurentPoly.zero()
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                work[i][j] = exact_divide(numerator, previous)
        previous = work[k][k]
    result = work[n - 1][n - 1]
    return result if sign > 0 else -result


def determinant(m: PolyMatrix) -> LaurentPoly:
    """
    Exact determinant of a square polynomial matrix.

    Small matrices are expanded by memoized minors; larger ones go through
    Bareiss elimination.

    Args:
        m: Square matrix

    Returns:
        det(m); the empty matrix has determinant 1

    Raises:
        DimensionError: If m is not square
    """
    if not m.is_square:
        raise DimensionError(f"Determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return LaurentPoly.one()
    if m.rows == 1:
        return m[0, 0]
    if m.rows <= config.minors_max_size:
        return _determinant_by_minors(m)
    logger.debug(f"Using elimination for a {m.rows}x{m.rows} determinant")
    return _determinant_by_elimination(m)
