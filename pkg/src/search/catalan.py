"""Catalan numbers, q-Catalan numbers and Catalan-Hankel determinants."""

from math import comb

from src.config import config
from src.errors import BudgetExceededError, DomainError, IdentityMismatchError
from src.perms import Permutation, richardson_blocks, shift, w0
from src.polyring import LaurentPoly, PolyMatrix, determinant, principal_specialization
from src.reports.models import CatalanReport, CatalanRow
from src.schubert import schubert_poly
from src.shapes import staircase, subdiagrams

# subdiagram counting is used up to this n, the closed form beyond it
ENUMERATION_LIMIT = 8


def catalan(n: int) -> int:
    """
    The n-th Catalan number as the number of subdiagrams of (n-1, ..., 1).

    Raises:
        DomainError: If n < 1
        IdentityMismatchError: If counting and binom(2n, n)/(n+1) disagree
    """
    if n < 1:
        raise DomainError(f"Catalan numbers are indexed from 1 here, got {n}")
    closed = comb(2 * n, n) // (n + 1)
    if n > ENUMERATION_LIMIT:
        return closed
    counted = len(subdiagrams(staircase(n)))
    if counted != closed:
        raise IdentityMismatchError(f"Cat({n})", str(counted), str(closed))
    return counted


def q_catalan(n: int) -> LaurentPoly:
    """Sum of q^{n(n-1)/2 - |mu|} over subdiagrams mu of the staircase, q written as x1."""
    if n < 1:
        raise DomainError(f"q-Catalan numbers are indexed from 1, got {n}")
    top = n * (n - 1) // 2
    total = LaurentPoly.zero()
    for mu in subdiagrams(staircase(n)):
        total = total + LaurentPoly.var(1, top - mu.size)
    return total


def woo_sides(n: int):
    """
    Both sides of the principal specialization identity for 1 x w_0(n).

    Returns:
        (specialized Schubert polynomial, q^{binom(n,3)} * q-Catalan(n))

    Raises:
        BudgetExceededError: If S_{n+1} is beyond the Schubert limit
    """
    if n + 1 > config.schubert_max_n:
        raise BudgetExceededError(
            f"1 x w0({n}) lies in S_{n + 1}, beyond the limit S_{config.schubert_max_n}"
        )
    left = principal_specialization(schubert_poly(shift(w0(n), 1)))
    right = LaurentPoly.var(1, comb(n, 3)) * q_catalan(n)
    return left, right


def woo_check(n: int) -> bool:
    """True if the principal specialization of 1 x w_0(n) is q^{binom(n,3)} Cat_q(n)."""
    left, right = woo_sides(n)
    return left == right


def catalan_hankel(n: int, h: int) -> int:
    """det(Cat(n + i + j - 2))_{1 <= i, j <= h}; the empty determinant (h = 0) is 1."""
    if h < 0:
        raise DomainError(f"Hankel size must be nonnegative, got {h}")
    matrix = PolyMatrix.build(h, lambda i, j: catalan(n + i + j))
    return determinant(matrix).constant_value()


def richardson_value(w: Permutation) -> int:
    """
    Schubert value at all-ones of a Richardson permutation, as a product of
    Catalan-Hankel determinants over its blocks.

    Raises:
        DomainError: If w is not Richardson
    """
    value = 1
    for offset, size in richardson_blocks(w):
        value *= catalan_hankel(size, offset)
    return value


def catalan_table(n_max: int, h_max: int) -> CatalanReport:
    """Catalan, q-Catalan and Catalan-Hankel values for n = 1..n_max, h = 1..h_max."""
    if n_max < 1 or h_max < 0:
        raise DomainError(f"Invalid table bounds n_max={n_max}, h_max={h_max}")
    rows = [
        CatalanRow(
            n=n,
            catalan=catalan(n),
            q_catalan=str(q_catalan(n)).replace('x1', 'q'),
            hankel={h: catalan_hankel(n, h) for h in range(1, h_max + 1)},
        )
        for n in range(1, n_max + 1)
    ]
    return CatalanReport(rows=rows, h_max=h_max)
