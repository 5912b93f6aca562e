"""Young diagrams, flags, subdiagrams and diagram extensions."""

from src.shapes.partition import (
    Flag,
    Partition,
    extend,
    parse_partition,
    staircase,
    staircase_extend,
    subdiagrams,
)

__all__ = [
    'Flag', 'Partition', 'extend', 'parse_partition', 'staircase',
    'staircase_extend', 'subdiagrams',
]
