"""
Flagged semistandard tableaux and their bijections.

Text format: rows separated by ``/``, entries separated by spaces, e.g.
``1 1 2 2 3/2 3 3 3/3 4 4 5/5 6``. The empty tableau is ``()``.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.errors import DimensionError, DomainError, ParseError
from src.polyring import LaurentPoly, Monomial
from src.shapes import Flag, Partition

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FlaggedTableau:
    """A semistandard filling: rows weakly increase, columns strictly increase."""

    shape: Partition
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise DimensionError(f"Rows {rows} do not fill shape {self.shape}")
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value < 1:
                    raise DomainError(f"Tableau entries must be positive, got {value}")
                if j and row[j - 1] > value:
                    raise DomainError(f"Row {i + 1} of {self} is not weakly increasing")
                if i and rows[i - 1][j] >= value:
                    raise DomainError(f"Column {j + 1} of {self} is not strictly increasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "FlaggedTableau":
        rows = tuple(tuple(r) for r in rows if len(r))
        return cls(Partition(tuple(len(r) for r in rows)), rows)

    def entry(self, i: int, j: int) -> int:
        """t_ij with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def satisfies_flag(self, flag: Flag) -> bool:
        flag.check_against(self.shape)
        return all(not row or row[-1] <= b for row, b in zip(self.rows, flag))

    def __str__(self) -> str:
        if not self.rows:
            return "()"
        return "/".join(" ".join(str(v) for v in row) for row in self.rows)


def parse_tableau(text: str) -> FlaggedTableau:
    """
    Parse ``1 1 2/2 3`` into a tableau.

    Raises:
        ParseError: On non-integer entries or a filling that is not semistandard
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return FlaggedTableau(Partition(()), ())
    rows = []
    pos = 0
    for chunk in text.split('/'):
        values = []
        for token in chunk.split():
            if not token.isdigit():
                raise ParseError(f"Invalid tableau entry {token!r}", text,
                                 text.find(token, pos))
            values.append(int(token))
        if not values:
            raise ParseError("Empty tableau row", text, pos)
        rows.append(values)
        pos += len(chunk) + 1
    try:
        return FlaggedTableau.from_rows(rows)
    except (DomainError, DimensionError) as e:
        raise ParseError(str(e), text, 0) from e


def enumerate_tableaux(shape: Partition, flag: Flag) -> List[FlaggedTableau]:
    """
    All semistandard tableaux of the given shape with row i bounded by flag b_i.

    Backtracks cell by cell in row reading order; each cell's lower bound comes
    from its left and upper neighbours, and the column below it must still fit
    under the flag. Output is in lexicographic order of the row reading word.

    Args:
        shape: Diagram lambda
        flag: One bound per row

    Returns:
        The tableaux, possibly none

    Raises:
        DimensionError: If the flag length differs from the number of rows
    """
    flag.check_against(shape)
    if shape.is_empty():
        return [FlaggedTableau(shape, ())]

    cells = list(shape.cells())
    heights = {}
    for i, j in cells:
        heights[j] = max(heights.get(j, 0), i)
    grid = [[0] * length for length in shape.parts]
    found: List[FlaggedTableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            found.append(FlaggedTableau(shape, tuple(tuple(r) for r in grid)))
            return
        i, j = cells[k]
        low = 1
        if j > 1:
            low = grid[i - 1][j - 2]
        if i > 1:
            low = max(low, grid[i - 2][j - 1] + 1)
        high = flag[i - 1]
        # the entry at depth d below must still be <= b_{i+d}
        for below in range(i + 1, heights[j] + 1):
            high = min(high, flag[below - 1] - (below - i))
        for value in range(low, high + 1):
            grid[i - 1][j - 1] = value
            fill(k + 1)
        grid[i - 1][j - 1] = 0

    fill(0)
    return found


def weight_monomial(tableau: FlaggedTableau) -> LaurentPoly:
    """M(T): exponent of x_k is the number of entries equal to k."""
    counts = {}
    for row in tableau.rows:
        for value in row:
            counts[value] = counts.get(value, 0) + 1
    return LaurentPoly.from_monomial(Monomial.from_exponents(counts))


def to_plane_partition(tableau: FlaggedTableau, h: int) -> Rows:
    """
    Replace t_ij by h + i - t_ij.

    The result has the same shape, weakly decreases along rows and columns and
    takes values in [0, h].

    Raises:
        DomainError: If some t_ij exceeds h + i
    """
    out = []
    for i, row in enumerate(tableau.rows, start=1):
        if row and row[-1] > h + i:
            raise DomainError(f"Tableau {tableau} is not {h}-flagged in row {i}")
        out.append(tuple(h + i - v for v in row))
    return tuple(out)


def from_plane_partition(entries: Sequence[Sequence[int]], h: int) -> FlaggedTableau:
    """
    Inverse of ``to_plane_partition``.

    Raises:
        DomainError: If entries leave [0, h] or fail to weakly decrease
    """
    rows = [tuple(r) for r in entries]
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if not 0 <= value <= h:
                raise DomainError(f"Plane partition entry {value} outside [0,{h}]")
            if j and row[j - 1] < value:
                raise DomainError(f"Plane partition row {i + 1} is not weakly decreasing")
            if i and (j >= len(rows[i - 1]) or rows[i - 1][j] < value):
                raise DomainError(f"Plane partition column {j + 1} is not weakly decreasing")
    return FlaggedTableau.from_rows(
        [tuple(h + i - v for v in row) for i, row in enumerate(rows, start=1)]
    )


def to_nested_subdiagrams(tableau: FlaggedTableau, h: int) -> Tuple[Partition, ...]:
    """
    The chain mu_1 <= ... <= mu_h <= lambda with mu_l = {(i,j) : t_ij <= i - 1 + l}.

    Raises:
        DomainError: If h < 1 or the tableau is not h-flagged
    """
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    to_plane_partition(tableau, h)
    chain = []
    for level in range(1, h + 1):
        chain.append(Partition.from_row_lengths(
            sum(1 for v in row if v <= i - 1 + level)
            for i, row in enumerate(tableau.rows, start=1)
        ))
    return tuple(chain)


def from_nested_subdiagrams(shape: Partition,
                            chain: Sequence[Partition]) -> FlaggedTableau:
    """
    Inverse of ``to_nested_subdiagrams`` with h = len(chain).

    Cell (i, j) receives i - 1 + l for the first l whose mu_l contains it, and
    h + i when no member of the chain does.

    Raises:
        DomainError: If the chain is not nested inside shape
    """
    h = len(chain)
    previous = Partition(())
    for mu in chain:
        if not mu.contains(previous) or not shape.contains(mu):
            raise DomainError(f"{list(map(str, chain))} is not a chain inside {shape}")
        previous = mu
    rows = []
    for i, length in enumerate(shape.parts, start=1):
        row = []
        for j in range(1, length + 1):
            level = next((l for l, mu in enumerate(chain, start=1) if mu.row(i) >= j), h + 1)
            row.append(i - 1 + level)
        rows.append(tuple(row))
    return FlaggedTableau(shape, tuple(rows))
