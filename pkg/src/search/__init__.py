"""Catalan numbers and the maximizer search."""

from src.search.catalan import (
    catalan,
    catalan_hankel,
    catalan_table,
    q_catalan,
    richardson_value,
    woo_check,
    woo_sides,
)
from src.search.max_search import MaxSearch, max_search

__all__ = [
    'MaxSearch', 'catalan', 'catalan_hankel', 'catalan_table', 'max_search', 'q_catalan',
    'richardson_value', 'woo_check', 'woo_sides',
]
