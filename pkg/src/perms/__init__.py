"""Permutations, codes, patterns and dominant extensions."""

from src.perms.permutation import (
    Permutation,
    ascents,
    avoids_pattern,
    code_flag,
    code_partition,
    compose,
    descents,
    extend_dominant,
    identity,
    inverse,
    inversion_flag,
    is_dominant,
    is_richardson,
    is_vexillary,
    lehmer_code,
    length,
    parse_permutation,
    permutations,
    richardson_blocks,
    shift,
    times_simple,
    vexillary_shape_and_flag,
    w0,
)

__all__ = [
    'Permutation', 'ascents', 'avoids_pattern', 'code_flag', 'code_partition', 'compose',
    'descents', 'extend_dominant', 'identity', 'inverse', 'inversion_flag', 'is_dominant',
    'is_richardson', 'is_vexillary', 'lehmer_code', 'length', 'parse_permutation',
    'permutations', 'richardson_blocks', 'shift', 'times_simple', 'vexillary_shape_and_flag',
    'w0',
]
