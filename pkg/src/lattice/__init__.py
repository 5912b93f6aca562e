"""Weighted diagram grids, lattice paths and determinantal identities."""

from src.lattice.flagged import (
    OneFlaggedEntry,
    Variant,
    certify_entries,
    entry_as_one_flagged,
    flagged_matrix,
    h_flagged_via_lgv,
    lengthened_endpoints,
    lgv_prefactor,
    one_flagged_via_paths,
    oneflag_prefactor,
    printed_matrix,
    tableau_path_system,
)
from src.lattice.grid import (
    GridPoint,
    PathSystem,
    WeightedGrid,
    enumerate_paths,
    format_path,
    parse_point,
    partition_function,
    path_weight,
    subdiagram_path,
)
from src.lattice.lgv import (
    all_path_systems,
    lgv_determinant,
    lgv_matrix,
    nc_path_systems,
    permutation_sign,
    tail_swap,
    z_nc,
)

__all__ = [
    'GridPoint', 'OneFlaggedEntry', 'PathSystem', 'Variant', 'WeightedGrid',
    'all_path_systems', 'certify_entries', 'entry_as_one_flagged', 'enumerate_paths',
    'flagged_matrix', 'format_path', 'h_flagged_via_lgv', 'lengthened_endpoints',
    'lgv_determinant', 'lgv_matrix', 'lgv_prefactor', 'nc_path_systems',
    'one_flagged_via_paths', 'oneflag_prefactor', 'parse_point', 'partition_function',
    'path_weight', 'permutation_sign', 'printed_matrix', 'subdiagram_path',
    'tableau_path_system', 'tail_swap', 'z_nc',
]
