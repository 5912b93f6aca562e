"""
Permutations in one-line notation.

Composition is (u * v)(i) = u(v(i)). Permutations are compared through the
stable embedding S_n -> S_{n+1}: trailing fixed points are ignored by equality
and hashing, so ``(132)`` equals ``(1324)``.

Text format: ``(1,4,3,2)``, or the compact ``(1432)`` when every value is a
single digit.
"""

import re
from itertools import combinations
from itertools import permutations as _itertools_permutations
from typing import Iterator, List, Sequence, Tuple, Union

from src.errors import DomainError, ParseError
from src.shapes import Flag, Partition


class Permutation:
    """A bijection of {1, ..., n}."""

    __slots__ = ('oneline', '_trimmed')

    def __init__(self, oneline: Sequence[int]):
        values = tuple(int(v) for v in oneline)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DomainError(f"{values} is not a permutation of 1..{len(values)}")
        self.oneline = values
        trimmed = list(values)
        while trimmed and trimmed[-1] == len(trimmed):
            trimmed.pop()
        self._trimmed = tuple(trimmed)

    @property
    def n(self) -> int:
        return len(self.oneline)

    @property
    def trimmed(self) -> Tuple[int, ...]:
        """One-line form without trailing fixed points."""
        return self._trimmed

    def embed(self, n: int) -> "Permutation":
        """The same permutation viewed in S_n."""
        if n < len(self._trimmed):
            raise DomainError(f"{self} does not fit in S_{n}")
        return Permutation(self._trimmed + tuple(range(len(self._trimmed) + 1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1] if 1 <= i <= len(self.oneline) else i

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.oneline)

    def __iter__(self) -> Iterator[int]:
        return iter(self.oneline)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._trimmed == other._trimmed

    def __hash__(self) -> int:
        return hash(self._trimmed)

    def sort_key(self) -> Tuple[int, ...]:
        return self.oneline

    def __str__(self) -> str:
        if all(v < 10 for v in self.oneline):
            return "(" + "".join(str(v) for v in self.oneline) + ")"
        return "(" + ",".join(str(v) for v in self.oneline) + ")"

    def __repr__(self) -> str:
        return f"Permutation{self}"

    def __getstate__(self):
        return self.oneline

    def __setstate__(self, state):
        self.__init__(state)


def parse_permutation(text: str) -> Permutation:
    """
    Parse ``(1,4,3,2)``, ``(1432)`` or ``1432``.

    Raises:
        ParseError: On malformed text or a sequence that is not a permutation
    """
    body = text.strip()
    if body.startswith('(') and body.endswith(')'):
        body = body[1:-1]
    body = body.strip()
    if not body:
        raise ParseError("Empty permutation", text, 0)
    if ',' in body:
        values = []
        for chunk in body.split(','):
            if not re.fullmatch(r'\s*\d+\s*', chunk):
                raise ParseError(f"Invalid permutation entry {chunk.strip()!r}", text,
                                 text.find(chunk))
            values.append(int(chunk))
    else:
        bad = re.search(r'\D', body)
        if bad:
            raise ParseError(f"Invalid character {bad.group()!r}", text, text.find(body) + bad.start())
        values = [int(c) for c in body]
    try:
        return Permutation(values)
    except DomainError as e:
        raise ParseError(str(e), text, 0) from e


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def w0(n: int) -> Permutation:
    """The longest element (n, n-1, ..., 1)."""
    return Permutation(range(n, 0, -1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u * v)(i) = u(v(i))."""
    n = max(u.n, v.n)
    return Permutation([u(v(i)) for i in range(1, n + 1)])


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, value in enumerate(w.oneline, start=1):
        out[value - 1] = i
    return Permutation(out)


def times_simple(w: Permutation, i: int) -> Permutation:
    """w * s_i: swap the entries in positions i and i+1."""
    values = list(w.embed(max(w.n, i + 1)).oneline)
    values[i - 1], values[i] = values[i], values[i - 1]
    return Permutation(values)


def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for values in _itertools_permutations(range(1, n + 1)):
        yield Permutation(values)


def length(w: Permutation) -> int:
    """Number of inversions."""
    values = w.oneline
    return sum(1 for a, b in combinations(range(len(values)), 2) if values[a] > values[b])


def lehmer_code(w: Permutation) -> Tuple[int, ...]:
    """c_i = #{j > i : w(j) < w(i)}, one entry per position of w."""
    values = w.oneline
    return tuple(
        sum(1 for later in values[i + 1:] if later < value)
        for i, value in enumerate(values)
    )


def descents(w: Permutation) -> List[int]:
    """Positions i with w(i) > w(i+1)."""
    values = w.oneline
    return [i for i in range(1, len(values)) if values[i - 1] > values[i]]


def ascents(w: Permutation) -> List[int]:
    """Positions i < n with w(i) < w(i+1)."""
    values = w.oneline
    return [i for i in range(1, len(values)) if values[i - 1] < values[i]]


PatternLike = Union[str, Sequence[int], Permutation]


def _pattern_values(pattern: PatternLike) -> Tuple[int, ...]:
    if isinstance(pattern, Permutation):
        return pattern.oneline
    if isinstance(pattern, str):
        return parse_permutation(pattern).oneline
    return Permutation(pattern).oneline


def avoids_pattern(w: Permutation, pattern: PatternLike) -> bool:
    """True if no subsequence of w is order-isomorphic to pattern."""
    target = _pattern_values(pattern)
    k = len(target)
    values = w.oneline
    for positions in combinations(range(len(values)), k):
        picked = [values[p] for p in positions]
        ranks = sorted(picked)
        if all(ranks.index(picked[t]) + 1 == target[t] for t in range(k)):
            return False
    return True


def is_vexillary(w: Permutation) -> bool:
    return avoids_pattern(w, (2, 1, 4, 3))


def is_dominant(w: Permutation) -> bool:
    return avoids_pattern(w, (1, 3, 2))


def inversion_flag(w: Permutation) -> Flag:
    """
    min(I_i) - 1 over the nonempty inversion sets I_i = {j > i : w(j) < w(i)},
    sorted increasingly. This is the flag of a vexillary permutation.
    """
    values = w.oneline
    bounds = []
    for i, value in enumerate(values, start=1):
        smaller = [j for j in range(i + 1, len(values) + 1) if values[j - 1] < value]
        if smaller:
            bounds.append(min(smaller) - 1)
    return Flag(tuple(sorted(bounds)))


def code_flag(w: Permutation) -> Flag:
    """
    Flag read off the Lehmer code: each nonzero c_i contributes
    min{j >= i : c_{j+1} < c_i}, with c_{n+1} = 0, sorted increasingly.

    Agrees with inversion_flag on vexillary permutations.
    """
    code = lehmer_code(w)
    bounds = []
    for i, c in enumerate(code):
        if not c:
            continue
        j = i
        while j + 1 < len(code) and code[j + 1] >= c:
            j += 1
        bounds.append(j + 1)
    return Flag(tuple(sorted(bounds)))


def vexillary_shape_and_flag(w: Permutation) -> Tuple[Partition, Flag]:
    """
    Shape and flag of a vexillary permutation.

    The shape is the Lehmer code sorted decreasingly and the flag is
    inversion_flag(w).

    Raises:
        DomainError: If w contains the pattern 2143
    """
    if not is_vexillary(w):
        raise DomainError(f"{w} is not vexillary")
    return Partition.from_sequence(lehmer_code(w)), inversion_flag(w)


def shift(w: Permutation, h: int) -> Permutation:
    """1^h x w: fix 1..h and send i to w(i-h) + h beyond that."""
    if h < 0:
        raise DomainError(f"Shift must be nonnegative, got {h}")
    return Permutation(tuple(range(1, h + 1)) + tuple(v + h for v in w.oneline))


def _extend_top(values: Tuple[int, ...]) -> Tuple[int, ...]:
    first = values[0]
    rest = tuple(v + 1 if v > first else v for v in values[1:])
    return (first + 1, first) + rest


def _extend_left(values: Tuple[int, ...]) -> Tuple[int, ...]:
    out = []
    for v in values:
        if v == 1:
            out.extend((2, 1))
        else:
            out.append(v + 1)
    return tuple(out)


def extend_dominant(w: Permutation, k: int, l: int) -> Permutation:
    """
    Extension of a dominant permutation mirroring staircase_extend on its code.

    The top rule doubles the first entry w(1) into w(1)+1, w(1); the left rule
    replaces the value 1 by 2, 1. Every other value that is at least the
    doubled one moves up by one. The two rules commute.

    Raises:
        DomainError: If w is not dominant or k, l are negative
    """
    if k < 0 or l < 0:
        raise DomainError(f"Extension sizes must be nonnegative, got [{k},{l}]")
    if not is_dominant(w):
        raise DomainError(f"{w} is not dominant")
    values = w.oneline or (1,)
    for _ in range(k):
        values = _extend_top(values)
    for _ in range(l):
        values = _extend_left(values)
    return Permutation(values)


def code_partition(w: Permutation) -> Partition:
    """The Lehmer code sorted into a partition."""
    return Partition.from_sequence(lehmer_code(w))


def richardson_blocks(w: Permutation) -> List[Tuple[int, int]]:
    """
    Decompose w into decreasing blocks of consecutive values.

    Returns:
        (offset, size) for each block, in order

    Raises:
        DomainError: If w is not Richardson
    """
    values = w.oneline
    blocks = []
    i = 0
    while i < len(values):
        top = values[i]
        expected = tuple(range(top, i, -1))
        if top <= i or values[i:top] != expected:
            raise DomainError(f"{w} is not a Richardson permutation")
        blocks.append((i, top - i))
        i = top
    return blocks


def is_richardson(w: Permutation) -> bool:
    """True if w is a concatenation of decreasing runs of consecutive values."""
    try:
        richardson_blocks(w)
    except DomainError:
        return False
    return True
