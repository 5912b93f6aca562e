"""
Partitions (Young diagrams) and flags.

Partitions never carry trailing zeros; the empty diagram is ``Partition(())``.
Text format is a parenthesized comma list, ``(3,3,1)``; the empty diagram is
``()``.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from src.errors import DimensionError, DomainError, ParseError

_TUPLE_RE = re.compile(r'^\s*\(\s*(.*?)\s*\)\s*$')


def _parse_int_tuple(text: str, what: str) -> Tuple[int, ...]:
    """Parse ``(a,b,c)``; a bare ``a,b,c`` is accepted too."""
    match = _TUPLE_RE.match(text)
    body = match.group(1) if match else text.strip()
    offset = text.find(body) if body else 0
    if not body:
        return ()
    values = []
    pos = offset
    for chunk in body.split(','):
        stripped = chunk.strip()
        if not re.fullmatch(r'-?\d+', stripped):
            raise ParseError(f"Invalid {what} entry {stripped!r}", text, pos)
        values.append(int(stripped))
        pos += len(chunk) + 1
    return tuple(values)


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, 'parts', parts)
        for k, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"Partition parts must be positive, got {parts}")
            if k and parts[k - 1] < p:
                raise DomainError(f"Partition parts must weakly decrease, got {parts}")

    @classmethod
    def from_sequence(cls, values: Iterable[int]) -> "Partition":
        """Sort decreasingly and drop zeros (e.g. a Lehmer code)."""
        return cls(tuple(sorted((v for v in values if v), reverse=True)))

    @classmethod
    def from_row_lengths(cls, values: Iterable[int]) -> "Partition":
        """Drop trailing zeros from an already weakly decreasing sequence."""
        values = list(values)
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        """lambda_1, or 0 for the empty diagram."""
        return self.parts[0] if self.parts else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def row(self, i: int) -> int:
        """Length of row i (1-based); 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """True if other fits inside self row by row."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Cells (i, j), both 1-based, in row reading order."""
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield i, j

    def padded(self, length: int) -> Tuple[int, ...]:
        if length < len(self.parts):
            raise DimensionError(f"Cannot pad {self} to {length} rows")
        return self.parts + (0,) * (length - len(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition{str(self)}"


@dataclass(frozen=True)
class Flag:
    """Weakly increasing positive row bounds b_1 <= ... <= b_m."""

    bounds: Tuple[int, ...] = ()

    def __post_init__(self):
        bounds = tuple(int(b) for b in self.bounds)
        object.__setattr__(self, 'bounds', bounds)
        for k, b in enumerate(bounds):
            if b < 1:
                raise DomainError(f"Flag bounds must be positive, got {bounds}")
            if k and bounds[k - 1] > b:
                raise DomainError(f"Flag bounds must weakly increase, got {bounds}")

    @classmethod
    def h_flag(cls, rows: int, h: int) -> "Flag":
        """The flag (h+1, h+2, ..., h+rows)."""
        return cls(tuple(h + i for i in range(1, rows + 1)))

    @classmethod
    def constant(cls, rows: int, n: int) -> "Flag":
        return cls((n,) * rows)

    def shifted(self, h: int) -> "Flag":
        return Flag(tuple(b + h for b in self.bounds))

    def check_against(self, shape: Partition) -> None:
        """
        Raises:
            DimensionError: If the flag does not have one bound per row
        """
        if len(self.bounds) != len(shape):
            raise DimensionError(
                f"Flag {self} has {len(self.bounds)} bounds but shape {shape} "
                f"has {len(shape)} rows"
            )

    def __len__(self) -> int:
        return len(self.bounds)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bounds)

    def __getitem__(self, index):
        return self.bounds[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bounds) + ")"


def parse_partition(text: str) -> Partition:
    """
    Parse ``(3,3,1)`` into a Partition.

    Raises:
        ParseError: On malformed text or parts that are not weakly decreasing
    """
    values = _parse_int_tuple(text, "partition")
    try:
        return Partition(values)
    except DomainError as e:
        raise ParseError(str(e), text, 0) from e


def parse_flag(text: str) -> Flag:
    """Parse ``(2,3)`` into a Flag."""
    values = _parse_int_tuple(text, "flag")
    try:
        return Flag(values)
    except DomainError as e:
        raise ParseError(str(e), text, 0) from e


def _subdiagram_rows(bounds: Sequence[int], cap: int) -> Iterator[Tuple[int, ...]]:
    if not bounds:
        yield ()
        return
    top = min(bounds[0], cap)
    yield ()
    for first in range(1, top + 1):
        for rest in _subdiagram_rows(bounds[1:], first):
            yield (first,) + rest


def subdiagrams(shape: Partition) -> List[Partition]:
    """
    All diagrams mu with mu_i <= lambda_i for every row.

    Ordered by size, then by rows compared lexicographically with longer
    first rows earlier: (), (1), (2), (1,1), (2,1) for lambda = (2,1).
    """
    found = [Partition(rows) for rows in _subdiagram_rows(shape.parts, shape.first)]
    found.sort(key=lambda mu: (mu.size, tuple(-p for p in mu.parts)))
    return found


def extend(shape: Partition, k: int, l: int) -> Partition:
    """
    lambda[k, l]: add k rows of length lambda_1 on top, then l columns of height
    m + k on the left.

    Raises:
        DomainError: For negative k, l, or an empty diagram with k or l positive
    """
    if k < 0 or l < 0:
        raise DomainError(f"Extension sizes must be nonnegative, got [{k},{l}]")
    if not k and not l:
        return shape
    if shape.is_empty():
        raise DomainError(f"Cannot extend the empty diagram by [{k},{l}]")
    top = shape.first + l
    return Partition((top,) * k + tuple(p + l for p in shape.parts))


def staircase_extend(shape: Partition, k: int, l: int) -> Partition:
    """
    lambda-hat[k, l]: add a staircase of size k on top and one of size l on the
    left, giving
    (lambda_1+k+l, ..., lambda_1+1+l, lambda_1+l, ..., lambda_m+l, l, ..., 1).

    The empty diagram is treated as having lambda_1 = 0.
    """
    if k < 0 or l < 0:
        raise DomainError(f"Extension sizes must be nonnegative, got [{k},{l}]")
    first = shape.first
    top = tuple(first + l + r for r in range(k, 0, -1))
    middle = tuple(p + l for p in shape.parts)
    bottom = tuple(range(l, 0, -1))
    return Partition(top + middle + bottom)


def staircase(n: int) -> Partition:
    """Lambda_n = (n-1, n-2, ..., 1)."""
    if n < 1:
        raise DomainError(f"Staircase size must be at least 1, got {n}")
    return Partition(tuple(range(n - 1, 0, -1)))
