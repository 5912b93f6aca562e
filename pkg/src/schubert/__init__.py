"""Divided differences and Schubert polynomials."""

from src.schubert.divided import divided_difference
from src.schubert.schubert import (
    STRATEGIES,
    ReducedWord,
    all_schubert_values_at_one,
    check_size_budget,
    mainschubert_determinant,
    mainschubert_matrix,
    reduced_word,
    richardson_factorization,
    richardson_product,
    schubert_from_word,
    schubert_poly,
    staircase_monomial,
    wachs_check,
)

__all__ = [
    'STRATEGIES', 'ReducedWord', 'all_schubert_values_at_one', 'check_size_budget',
    'divided_difference', 'mainschubert_determinant', 'mainschubert_matrix', 'reduced_word',
    'richardson_factorization', 'richardson_product', 'schubert_from_word', 'schubert_poly',
    'staircase_monomial', 'wachs_check',
]
