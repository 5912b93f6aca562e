"""Schubert polynomials, the vexillary correspondence and shifted determinants."""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Dict, List, Optional, Sequence, Tuple

from src.config import config
from src.errors import BudgetExceededError, DomainError, IdentityMismatchError
from src.lattice import Variant, flagged_matrix, lgv_prefactor, oneflag_prefactor
from src.perms import (
    Permutation,
    ascents,
    code_partition,
    compose,
    descents,
    extend_dominant,
    identity,
    is_dominant,
    richardson_blocks,
    shift,
    times_simple,
    vexillary_shape_and_flag,
    w0,
)
from src.polyring import LaurentPoly, Monomial, PolyMatrix, determinant
from src.schubert.divided import divided_difference
from src.shapes import staircase_extend
from src.tableaux import flagged_schur
from src.utils.logger import get_logger

logger = get_logger(__name__)

STRATEGIES = ('smallest', 'largest')


@dataclass(frozen=True)
class ReducedWord:
    """Letters i_1, ..., i_k with target = s_{i_1} s_{i_2} ... s_{i_k}."""

    letters: Tuple[int, ...]
    n: int

    def product(self) -> Permutation:
        result = identity(self.n)
        for letter in self.letters:
            result = times_simple(result, letter)
        return result

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.letters) or "e"


def reduced_word(u: Permutation, strategy: str = 'smallest') -> ReducedWord:
    """
    A reduced word for u.

    Peels simple transpositions off the right: while u has a descent i
    (the smallest or the largest one, per strategy), record i and replace u by
    u * s_i. The recorded letters, reversed, spell u.

    Raises:
        DomainError: For an unknown strategy
    """
    if strategy not in STRATEGIES:
        raise DomainError(f"Unknown reduced word strategy {strategy!r}; use one of {STRATEGIES}")
    peeled = []
    current = u
    while True:
        found = descents(current)
        if not found:
            break
        letter = found[0] if strategy == 'smallest' else found[-1]
        peeled.append(letter)
        current = times_simple(current, letter)
    return ReducedWord(tuple(reversed(peeled)), u.n)


def staircase_monomial(n: int) -> LaurentPoly:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    return LaurentPoly.from_monomial(Monomial.from_vector(range(n - 1, 0, -1)))


def schubert_from_word(word: ReducedWord, n: int) -> LaurentPoly:
    """Apply the divided differences of word to the staircase monomial, first letter first."""
    poly = staircase_monomial(n)
    for letter in word.letters:
        poly = divided_difference(poly, letter)
    return poly


def schubert_poly(w: Permutation, strategy: str = 'smallest') -> LaurentPoly:
    """
    The Schubert polynomial of w.

    With n the size of w without trailing fixed points and w_0 w = s_{i_1} ... s_{i_k},
    this is d_{i_k} ... d_{i_1} applied to x_1^{n-1} ... x_{n-1}.
    """
    if strategy == 'smallest':
        return _schubert_cached(w)
    return _schubert_uncached(w, strategy)


def _schubert_uncached(w: Permutation, strategy: str) -> LaurentPoly:
    n = max(len(w.trimmed), 1)
    w = w.embed(n)
    word = reduced_word(compose(w0(n), w), strategy)
    return schubert_from_word(word, n)


@lru_cache(maxsize=2048)
def _schubert_cached(w: Permutation) -> LaurentPoly:
    return _schubert_uncached(w, 'smallest')


def wachs_check(w: Permutation) -> bool:
    """
    True if the Schubert polynomial of a vexillary w equals the flagged Schur
    polynomial of its shape and flag.

    Raises:
        DomainError: If w is not vexillary
    """
    shape, flag = vexillary_shape_and_flag(w)
    return schubert_poly(w) == flagged_schur(shape, flag)


def richardson_factorization(w: Permutation) -> List[Permutation]:
    """
    The factors 1^offset x w_0(size) of a Richardson permutation.

    Blocks of size one contribute nothing and are left out; the product of the
    factors' Schubert polynomials is the Schubert polynomial of w.

    Raises:
        DomainError: If w is not Richardson
    """
    return [shift(w0(size), offset) for offset, size in richardson_blocks(w) if size > 1]


def richardson_product(w: Permutation) -> LaurentPoly:
    """Product of the Schubert polynomials of the Richardson factors of w."""
    return reduce(lambda acc, factor: acc * schubert_poly(factor),
                  richardson_factorization(w), LaurentPoly.one())


# -- shifted dominant permutations -----------------------------------------

def _dominant_entry(w: Permutation, h: int, a: int, c: int) -> Tuple[LaurentPoly, Monomial]:
    """Entry (a, c) as Schubert polynomial over its variable window, and its denominator."""
    extended = extend_dominant(w, h - c, h - a)
    diagram = staircase_extend(code_partition(w), h - c, h - a)
    numerator = schubert_poly(shift(extended, 1)).shift_variables(c - 1)
    return numerator, oneflag_prefactor(diagram, c - 1)


def mainschubert_matrix(w: Permutation, h: int) -> PolyMatrix:
    """
    The h x h matrix whose (a, c) entry is the Schubert polynomial of
    1 x w-hat[h-c, h-a] in x_c, x_{c+1}, ... divided by its 1-flag monomial.

    Every entry is checked against the partition function of the staircase
    path construction for the code of w.

    Raises:
        DomainError: If w is not dominant or h < 1
        IdentityMismatchError: If an entry disagrees with its partition function
    """
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    if not is_dominant(w):
        raise DomainError(f"{w} is not dominant")
    shape = code_partition(w)
    lattice = flagged_matrix(shape, h, Variant.STAIRCASE)
    rows = []
    for a in range(1, h + 1):
        row = []
        for c in range(1, h + 1):
            numerator, denominator = _dominant_entry(w, h, a, c)
            entry = numerator.monomial_quotient(denominator)
            if entry != lattice[a - 1, c - 1]:
                logger.error(
                    "Schubert entry disagrees with the path count",
                    extra={'permutation': str(w), 'h': h, 'entry': [a, c]}
                )
                raise IdentityMismatchError(
                    f"entry ({a},{c}) for {w}, h={h}", str(entry), str(lattice[a - 1, c - 1])
                )
            row.append(entry)
        rows.append(row)
    return PolyMatrix.from_rows(rows)


def mainschubert_determinant(w: Permutation, h: int) -> LaurentPoly:
    """
    Schubert polynomial of 1^h x w for dominant w, as a determinant of
    Schubert polynomials of shifted extensions of w.

    Raises:
        DomainError: If w is not dominant or h < 1
        IdentityMismatchError: If an entry fails its certification
    """
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")
    if not is_dominant(w):
        raise DomainError(f"{w} is not dominant")
    shape = code_partition(w)
    if shape.is_empty():
        return LaurentPoly.one()
    det = determinant(mainschubert_matrix(w, h))
    return det.times_monomial(lgv_prefactor(shape, h, Variant.STAIRCASE))


# -- all of S_n ---------------------------------------------------------------

def check_size_budget(n: int, budget_override: bool = False, what: str = "Schubert sweep") -> None:
    """
    Raises:
        DomainError: If n < 1
        BudgetExceededError: If n is beyond the allowed range
    """
    if n < 1:
        raise DomainError(f"{what} needs n >= 1, got {n}")
    limit = config.search_stretch_n if budget_override else config.search_max_n
    limit = min(limit, config.schubert_max_n)
    if n > limit:
        hint = "" if budget_override or n > config.schubert_max_n else "; pass --budget-override"
        raise BudgetExceededError(f"{what} over S_{n} exceeds the limit n <= {limit}{hint}")


def _expand_chunk(parents: Sequence[Tuple[Tuple[int, ...], LaurentPoly]]
                  ) -> List[Tuple[Tuple[int, ...], LaurentPoly]]:
    """Children of each parent along the canonical edges (worker entry point)."""
    children = []
    for oneline, poly in parents:
        parent = Permutation(oneline)
        for i in descents(parent):
            child = times_simple(parent, i)
            if ascents(child)[0] == i:
                children.append((child.oneline, divided_difference(poly, i)))
    return children


def all_schubert_values_at_one(n: int, threads: Optional[int] = None,
                               budget_override: bool = False) -> Dict[Permutation, int]:
    """
    Schubert polynomial values at x = (1, ..., 1) for every w in S_n.

    Walks weak order down from w_0 one length at a time. Each permutation other
    than w_0 is reached exactly once, from its canonical parent c * s_i with
    i the smallest ascent of c, by one divided difference. Only the current
    level's polynomials are kept. With threads > 1, each level is split into
    chunks for a process pool; the result does not depend on the schedule.

    Raises:
        DomainError: If n < 1
        BudgetExceededError: If n is beyond the configured limits
    """
    check_size_budget(n, budget_override)
    threads = threads or config.threads
    started = time.monotonic()
    top = w0(n)
    level = [(top.oneline, staircase_monomial(n))]
    values: Dict[Permutation, int] = {}
    depth = 0
    executor = ProcessPoolExecutor(max_workers=threads) if threads > 1 and n > 3 else None
    try:
        while level:
            for oneline, poly in level:
                values[Permutation(oneline)] = poly.value_at_ones()
            chunk = config.level_chunk_size
            chunks = [level[k:k + chunk] for k in range(0, len(level), chunk)]
            if executor is not None and len(chunks) > 1:
                results = executor.map(_expand_chunk, chunks)
            else:
                results = map(_expand_chunk, chunks)
            level = [child for batch in results for child in batch]
            depth += 1
            logger.debug(f"Weak order level {depth} of S_{n}: {len(level)} permutations")
    finally:
        if executor is not None:
            executor.shutdown()
    logger.info(
        f"Computed Schubert values for S_{n}",
        extra={'permutations': len(values), 'threads': threads,
               'elapsed_ms': int((time.monotonic() - started) * 1000)}
    )
    return values
