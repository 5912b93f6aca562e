"""Exact integer Laurent polynomial arithmetic."""

from src.polyring.laurent import (
    LaurentPoly,
    Monomial,
    add,
    exact_divide,
    monomial_quotient,
    mul,
    parse_poly,
    principal_specialization,
    substitute,
    var,
)
from src.polyring.matrix import PolyMatrix, determinant

__all__ = [
    'LaurentPoly', 'Monomial', 'PolyMatrix', 'add', 'determinant', 'exact_divide',
    'monomial_quotient', 'mul', 'parse_poly', 'principal_specialization',
    'substitute', 'var',
]
