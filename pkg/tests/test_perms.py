"""Permutations, codes, patterns and dominant extensions."""

import pytest
from hypothesis import given, strategies as st

from src.errors import DomainError, ParseError
from src.perms import (
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
from src.shapes import Flag, Partition, staircase_extend

P = parse_permutation
perms_5 = st.permutations(range(1, 6)).map(Permutation)


class TestText:
    @pytest.mark.parametrize("text", ["(1432)", "(1,4,3,2)", "1432", " ( 1, 4, 3, 2 ) "])
    def test_parse_forms(self, text):
        assert P(text).oneline == (1, 4, 3, 2)

    def test_render(self):
        assert str(P("1432")) == "(1432)"
        assert str(P("(1,4,3,2,10,9,8,7,6,5)")) == "(1,4,3,2,10,9,8,7,6,5)"

    @pytest.mark.parametrize("text", ["", "()", "(1,1)", "(13)", "(1a2)", "(1,,2)"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            P(text)

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as info:
            P("(1a2)")
        assert info.value.position == 2


class TestBasics:
    def test_stable_equality(self):
        assert P("132") == P("1324")
        assert hash(P("132")) == hash(P("1324"))
        assert P("132") != P("213")

    def test_compose_and_inverse(self):
        w = P("42135")
        assert compose(w, inverse(w)) == identity(5)
        assert (w * identity(5)) == w

    def test_times_simple_swaps_positions(self):
        assert times_simple(P("1234"), 2) == P("1324")
        assert times_simple(P("21"), 3) == P("2143")

    def test_permutations_lex_order(self):
        assert [str(w) for w in permutations(3)] == [
            "(123)", "(132)", "(213)", "(231)", "(312)", "(321)"
        ]

    def test_length(self):
        assert length(identity(4)) == 0
        assert length(w0(4)) == 6
        assert length(P("1342")) == 2

    def test_lehmer_code(self):
        assert lehmer_code(identity(3)) == (0, 0, 0)
        assert lehmer_code(P("42135")) == (3, 1, 0, 0, 0)
        assert lehmer_code(w0(4)) == (3, 2, 1, 0)

    def test_descents_and_ascents(self):
        assert descents(P("42135")) == [1, 2]
        assert ascents(P("42135")) == [3, 4]

    @given(perms_5)
    def test_length_is_code_sum(self, w):
        assert length(w) == sum(lehmer_code(w))

    @given(perms_5, st.integers(1, 4))
    def test_simple_transposition_changes_length_by_one(self, w, i):
        expected = length(w) - 1 if i in descents(w) else length(w) + 1
        assert length(times_simple(w, i)) == expected


class TestPatterns:
    def test_identity_avoids_both(self):
        assert is_vexillary(identity(5)) and is_dominant(identity(5))

    def test_pattern_itself(self):
        assert not avoids_pattern(P("2143"), "2143")
        assert not is_vexillary(P("2143"))

    def test_dominant_example(self):
        assert is_dominant(P("42135"))
        assert not is_dominant(P("132"))

    def test_counts_in_s4(self):
        # 132-avoiders are Catalan, 2143 is the only non-vexillary element of S_4
        assert sum(1 for w in permutations(4) if is_dominant(w)) == 14
        assert sum(1 for w in permutations(4) if not is_vexillary(w)) == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_dominant_implies_vexillary(self, n):
        dominant = [w for w in permutations(n) if is_dominant(w)]
        assert all(is_vexillary(w) for w in dominant)
        assert len(dominant) == [1, 2, 5, 14, 42, 132][n - 1]

    @given(perms_5)
    def test_dominant_code_is_a_partition(self, w):
        if is_dominant(w):
            code = [c for c in lehmer_code(w) if c]
            assert code == sorted(code, reverse=True)


class TestVexillary:
    @pytest.mark.parametrize("text, shape, flag", [
        ("132", (1,), (2,)),
        ("1432", (2, 1), (2, 3)),
        ("321", (2, 1), (1, 2)),
        ("2413", (2, 1), (2, 2)),
        ("3142", (2, 1), (1, 3)),
    ])
    def test_shape_and_flag(self, text, shape, flag):
        assert vexillary_shape_and_flag(P(text)) == (Partition(shape), Flag(flag))

    def test_inversion_flag(self):
        assert inversion_flag(P("1432")) == Flag((2, 3))
        assert inversion_flag(P("2413")) == Flag((2, 2))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_inversion_and_code_flags_agree(self, n):
        for w in permutations(n):
            if is_vexillary(w):
                assert inversion_flag(w) == code_flag(w), w

    @pytest.mark.slow
    def test_inversion_and_code_flags_agree_in_s6(self):
        for w in permutations(6):
            if is_vexillary(w):
                assert inversion_flag(w) == code_flag(w), w

    def test_non_vexillary(self):
        with pytest.raises(DomainError):
            vexillary_shape_and_flag(P("2143"))

    @given(perms_5, st.integers(0, 3))
    def test_shift_adds_h_to_the_flag(self, w, h):
        if is_vexillary(w) and length(w):
            shape, flag = vexillary_shape_and_flag(w)
            assert vexillary_shape_and_flag(shift(w, h)) == (shape, flag.shifted(h))

    @pytest.mark.parametrize("h", [1, 2])
    def test_shift_over_every_vexillary_permutation(self, h):
        for w in permutations(5):
            if is_vexillary(w) and length(w):
                shape, flag = vexillary_shape_and_flag(w)
                assert vexillary_shape_and_flag(shift(w, h)) == (shape, flag.shifted(h)), w


class TestShift:
    def test_examples(self):
        assert shift(P("321"), 0) == P("321")
        assert shift(P("321"), 1) == P("1432")
        assert shift(P("321"), 2) == P("12543")

    def test_negative(self):
        with pytest.raises(DomainError):
            shift(P("21"), -1)


class TestExtendDominant:
    def test_top(self):
        assert extend_dominant(P("42135"), 1, 0) == P("542136")

    def test_left(self):
        assert extend_dominant(P("42135"), 0, 1) == P("532146")

    def test_longest_element(self):
        assert extend_dominant(w0(3), 1, 1) == w0(5)
        assert lehmer_code(extend_dominant(w0(3), 1, 1)) == (4, 3, 2, 1, 0)

    def test_requires_dominant(self):
        with pytest.raises(DomainError):
            extend_dominant(P("132"), 1, 0)

    @given(perms_5, st.integers(0, 2), st.integers(0, 2))
    def test_code_follows_staircase_extension(self, w, k, l):
        if is_dominant(w):
            extended = extend_dominant(w, k, l)
            assert is_dominant(extended)
            assert code_partition(extended) == staircase_extend(code_partition(w), k, l)

    @given(perms_5)
    def test_rules_commute(self, w):
        if is_dominant(w):
            once = extend_dominant(extend_dominant(w, 0, 1), 1, 0)
            assert once == extend_dominant(w, 1, 1)


class TestRichardson:
    def test_identity(self):
        assert is_richardson(identity(4))

    def test_blocks(self):
        assert richardson_blocks(P("21543")) == [(0, 2), (2, 3)]
        assert is_richardson(P("21543"))

    def test_not_richardson(self):
        assert not is_richardson(P("1342"))
        with pytest.raises(DomainError):
            richardson_blocks(P("1342"))

    def test_published_maximizers(self):
        for text in ["12543", "15432", "126543", "216543", "1327654"]:
            assert is_richardson(P(text))
