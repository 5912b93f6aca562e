"""Flagged tableaux and flagged Schur polynomials."""

from src.tableaux.schur import (
    complete_homogeneous,
    flagged_schur,
    h_flagged_schur,
    jacobi_trudi,
    schur_polynomial,
)
from src.tableaux.tableau import (
    FlaggedTableau,
    enumerate_tableaux,
    from_nested_subdiagrams,
    from_plane_partition,
    parse_tableau,
    to_nested_subdiagrams,
    to_plane_partition,
    weight_monomial,
)

__all__ = [
    'FlaggedTableau', 'complete_homogeneous', 'enumerate_tableaux', 'flagged_schur',
    'from_nested_subdiagrams', 'from_plane_partition', 'h_flagged_schur', 'jacobi_trudi',
    'parse_tableau', 'schur_polynomial', 'to_nested_subdiagrams', 'to_plane_partition',
    'weight_monomial',
]
