"""Partitions, flags, subdiagrams and extensions."""

from math import comb

import pytest
from hypothesis import given, strategies as st

from src.errors import DimensionError, DomainError, ParseError
from src.shapes import (
    Flag,
    Partition,
    extend,
    parse_partition,
    staircase,
    staircase_extend,
    subdiagrams,
)
from src.shapes.partition import parse_flag

partitions = st.lists(st.integers(1, 4), max_size=3).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True)))
)


class TestPartition:
    def test_parse_and_render(self):
        shape = parse_partition("(3,3,1)")
        assert shape.parts == (3, 3, 1)
        assert str(shape) == "(3,3,1)"
        assert shape.size == 7
        assert shape.first == 3

    def test_empty(self):
        empty = parse_partition("()")
        assert empty.is_empty()
        assert str(empty) == "()"
        assert empty.first == 0

    def test_row_past_the_end(self):
        assert Partition((2, 1)).row(3) == 0

    def test_from_sequence_drops_zeros(self):
        assert Partition.from_sequence([0, 1, 0, 3]) == Partition((3, 1))

    @pytest.mark.parametrize("text", ["(1,2)", "(2,a)", "(0)", "(2,-1)"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            parse_partition(text)

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_partition("(2,x)")
        assert info.value.position == 3

    def test_constructor_validates(self):
        with pytest.raises(DomainError):
            Partition((1, 2))


class TestFlag:
    def test_h_flag(self):
        assert Flag.h_flag(3, 2).bounds == (3, 4, 5)

    def test_must_increase(self):
        with pytest.raises(DomainError):
            Flag((3, 2))
        with pytest.raises(ParseError):
            parse_flag("(3,2)")

    def test_length_must_match_shape(self):
        with pytest.raises(DimensionError):
            Flag((2,)).check_against(Partition((2, 1)))


class TestSubdiagrams:
    def test_empty(self):
        assert subdiagrams(Partition(())) == [Partition(())]

    def test_single_box(self):
        assert subdiagrams(Partition((1,))) == [Partition(()), Partition((1,))]

    def test_order(self):
        found = [str(mu) for mu in subdiagrams(Partition((2, 1)))]
        assert found == ["()", "(1)", "(2)", "(1,1)", "(2,1)"]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_staircase_counts_are_catalan(self, n):
        assert len(subdiagrams(staircase(n))) == comb(2 * n, n) // (n + 1)

    @given(partitions)
    def test_all_contained_and_distinct(self, shape):
        found = subdiagrams(shape)
        assert len(set(found)) == len(found)
        assert all(shape.contains(mu) for mu in found)
        assert found[0].is_empty() and found[-1] == shape


class TestExtensions:
    def test_extend_top(self):
        assert extend(Partition((2, 1)), 1, 0) == Partition((2, 2, 1))

    def test_extend_left(self):
        assert extend(Partition((2, 1)), 0, 1) == Partition((3, 2))

    def test_extend_empty_is_an_error(self):
        with pytest.raises(DomainError):
            extend(Partition(()), 1, 0)
        assert extend(Partition(()), 0, 0) == Partition(())

    def test_extend_negative(self):
        with pytest.raises(DomainError):
            extend(Partition((1,)), -1, 0)

    def test_staircase_extend_example(self):
        assert staircase_extend(Partition((3, 3, 1)), 2, 3) == Partition((8, 7, 6, 6, 4, 3, 2, 1))

    def test_staircase_extend_top(self):
        assert staircase_extend(Partition((2, 1)), 1, 0) == Partition((3, 2, 1))

    def test_staircase(self):
        assert staircase(1) == Partition(())
        assert staircase(3) == Partition((2, 1))
        with pytest.raises(DomainError):
            staircase(0)

    @given(st.integers(1, 5), st.integers(0, 3))
    def test_staircase_extends_to_staircase(self, n, k):
        assert staircase_extend(staircase(n), k, k) == staircase(n + 2 * k)

    @given(partitions.filter(lambda p: not p.is_empty()), st.integers(0, 3), st.integers(0, 3))
    def test_extend_sizes(self, shape, k, l):
        extended = extend(shape, k, l)
        assert len(extended) == len(shape) + k
        assert extended.size == shape.size + k * shape.first + l * (len(shape) + k)

    @given(partitions.filter(lambda p: not p.is_empty()),
           st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    def test_extend_composes(self, shape, k1, l1, k2, l2):
        assert extend(extend(shape, k1, l1), k2, l2) == extend(shape, k1 + k2, l1 + l2)

    @given(partitions, st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    def test_staircase_extend_composes(self, shape, k1, l1, k2, l2):
        twice = staircase_extend(staircase_extend(shape, k1, l1), k2, l2)
        assert twice == staircase_extend(shape, k1 + k2, l1 + l2)
