"""Flagged Schur polynomials by tableau enumeration and by Jacobi-Trudi."""

from functools import lru_cache

from src.errors import DomainError
from src.polyring import LaurentPoly, PolyMatrix, determinant
from src.shapes import Flag, Partition
from src.tableaux.tableau import enumerate_tableaux, weight_monomial


def flagged_schur(shape: Partition, flag: Flag) -> LaurentPoly:
    """
    Sum of M(T) over all tableaux of the given shape and flag.

    Returns 1 for the empty shape and 0 when no tableau exists.

    Raises:
        DimensionError: If the flag length differs from the number of rows
    """
    total = LaurentPoly.zero()
    for tableau in enumerate_tableaux(shape, flag):
        total = total + weight_monomial(tableau)
    return total


def h_flagged_schur(shape: Partition, h: int) -> LaurentPoly:
    """Flagged Schur polynomial for the flag b_i = h + i."""
    if h < 0:
        raise DomainError(f"h must be nonnegative, got {h}")
    return flagged_schur(shape, Flag.h_flag(len(shape), h))


def schur_polynomial(shape: Partition, n: int) -> LaurentPoly:
    """Ordinary Schur polynomial in x1..xn (constant flag n)."""
    return flagged_schur(shape, Flag.constant(len(shape), n))


@lru_cache(maxsize=4096)
def complete_homogeneous(d: int, k: int) -> LaurentPoly:
    """
    h_d(x1, ..., xk), with h_0 = 1 and h_d = 0 for d < 0.

    Uses h_d(k) = h_d(k-1) + x_k * h_{d-1}(k).
    """
    if d < 0:
        return LaurentPoly.zero()
    if d == 0:
        return LaurentPoly.one()
    if k <= 0:
        return LaurentPoly.zero()
    return complete_homogeneous(d, k - 1) + LaurentPoly.var(k) * complete_homogeneous(d - 1, k)


def jacobi_trudi(shape: Partition, flag: Flag) -> LaurentPoly:
    """det(h_{lambda_i - i + j}(b_i)) over 1 <= i, j <= m."""
    flag.check_against(shape)
    matrix = PolyMatrix.build(
        len(shape),
        lambda i, j: complete_homogeneous(shape[i] - i + j, flag[i]),
    )
    return determinant(matrix)
