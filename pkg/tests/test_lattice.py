"""Diagram grids, partition functions and the determinantal identities."""

import pytest

from src.errors import DimensionError, DomainError, ParseError
from src.lattice import (
    GridPoint,
    PathSystem,
    Variant,
    WeightedGrid,
    all_path_systems,
    certify_entries,
    entry_as_one_flagged,
    enumerate_paths,
    format_path,
    h_flagged_via_lgv,
    lengthened_endpoints,
    lgv_determinant,
    lgv_prefactor,
    nc_path_systems,
    one_flagged_via_paths,
    parse_point,
    partition_function,
    path_weight,
    permutation_sign,
    printed_matrix,
    subdiagram_path,
    tableau_path_system,
    tail_swap,
    z_nc,
)
from src.polyring import LaurentPoly, Monomial, parse_poly, var
from src.shapes import Flag, Partition, subdiagrams
from src.tableaux import enumerate_tableaux, h_flagged_schur, parse_tableau, weight_monomial

UNIT = WeightedGrid(Partition((1,)))
EXAMPLE = Partition((5, 3, 2, 2))


class TestGrid:
    def test_points(self):
        assert UNIT.size == 4
        assert UNIT.points() == [GridPoint(0, -1), GridPoint(0, 0), GridPoint(1, -1), GridPoint(1, 0)]

    def test_row_widths_follow_the_diagram(self):
        grid = WeightedGrid(Partition((3, 1)))
        assert grid.contains(GridPoint(3, -1))
        assert not grid.contains(GridPoint(2, -2))
        assert grid.contains(GridPoint(1, -2))

    def test_point_text(self):
        assert parse_point(" (2,-3) ") == GridPoint(2, -3)
        assert str(GridPoint(2, -3)) == "(2,-3)"
        with pytest.raises(ParseError):
            parse_point("2,-3")

    def test_format_path(self):
        path = (GridPoint(0, -1), GridPoint(1, -1), GridPoint(1, 0))
        assert format_path(path) == "(0,-1)→(1,-1)→(1,0)"


class TestPartitionFunction:
    def test_trivial_path(self):
        a = GridPoint(0, -1)
        assert partition_function(UNIT, a, a) == 1

    def test_unit_square(self):
        z = partition_function(UNIT, GridPoint(0, -1), GridPoint(1, 0))
        assert z == var(1, -1) + var(2, -1)

    def test_unreachable(self):
        assert partition_function(UNIT, GridPoint(1, 0), GridPoint(0, -1)) == 0

    def test_outside_grid(self):
        with pytest.raises(DomainError):
            partition_function(UNIT, GridPoint(0, -2), GridPoint(1, 0))

    def test_matches_path_enumeration(self):
        grid = WeightedGrid(Partition((3, 2, 2)))
        start, end = GridPoint(0, -3), GridPoint(3, 0)
        total = LaurentPoly.zero()
        for path in enumerate_paths(grid, start, end):
            total = total + path_weight(grid, path)
        assert total == partition_function(grid, start, end)
        assert len(enumerate_paths(grid, start, end)) == len(subdiagrams(Partition((3, 2, 2))))

    def test_subdiagram_path_weight(self):
        grid = WeightedGrid(EXAMPLE)
        path = subdiagram_path(EXAMPLE, Partition((3, 2, 2)))
        assert path[0] == GridPoint(0, -4) and path[-1] == GridPoint(5, 0)
        assert path_weight(grid, path) == parse_poly("x1^-2*x2^-1*x4^-2")

    def test_subdiagram_path_needs_containment(self):
        with pytest.raises(DomainError):
            subdiagram_path(Partition((2, 1)), Partition((3,)))

    def test_bad_step(self):
        with pytest.raises(DomainError):
            PathSystem(UNIT, ((GridPoint(0, -1), GridPoint(1, 0)),))


class TestOneFlagged:
    def test_empty(self):
        assert one_flagged_via_paths(Partition(())) == 1

    def test_single_box(self):
        assert one_flagged_via_paths(Partition((1,))) == var(1) + var(2)

    def test_example(self, five_term):
        assert one_flagged_via_paths(Partition((2, 1))) == five_term

    def test_summand_of_a_tableau(self):
        grid = WeightedGrid(EXAMPLE)
        path = subdiagram_path(EXAMPLE, Partition((3, 2, 2)))
        summand = path_weight(grid, path).times_monomial(
            Monomial.from_exponents({1: 5, 2: 5, 3: 3, 4: 2, 5: 2})
        )
        assert summand == weight_monomial(parse_tableau("1 1 1 2 2/2 2 3/3 3/5 5"))

    @pytest.mark.parametrize("parts", [(1, 1), (3,), (2, 2), (3, 1, 1), (3, 3, 2)])
    def test_matches_tableaux(self, parts):
        shape = Partition(parts)
        assert one_flagged_via_paths(shape) == h_flagged_schur(shape, 1)


class TestNoncrossing:
    def test_two_vertical_paths(self):
        systems = nc_path_systems(UNIT, [GridPoint(0, -1), GridPoint(1, -1)],
                                  [GridPoint(0, 0), GridPoint(1, 0)])
        assert len(systems) == 1
        assert systems[0].trace() == ["(0,-1)→(0,0)", "(1,-1)→(1,0)"]

    def test_single_path_is_partition_function(self):
        a, b = [GridPoint(0, -1)], [GridPoint(1, 0)]
        assert z_nc(UNIT, a, b) == partition_function(UNIT, a[0], b[0])
        assert lgv_determinant(UNIT, a, b) == partition_function(UNIT, a[0], b[0])

    def test_no_disjoint_system(self):
        starts = [GridPoint(0, -1), GridPoint(0, 0)]
        ends = [GridPoint(1, 0), GridPoint(1, -1)]
        assert z_nc(UNIT, starts, ends) == 0

    def test_endpoint_count_mismatch(self):
        with pytest.raises(DimensionError):
            z_nc(UNIT, [GridPoint(0, -1)], [])

    def test_oracle_size_limit(self):
        grid = WeightedGrid(Partition((8, 8, 8, 8)))
        with pytest.raises(DomainError):
            nc_path_systems(grid, [GridPoint(0, -4)], [GridPoint(8, 0)])

    @pytest.mark.parametrize("variant", list(Variant))
    def test_lgv_example(self, variant):
        grid, starts, ends = lengthened_endpoints(Partition((2, 1)), 2, variant)
        assert z_nc(grid, starts, ends) == lgv_determinant(grid, starts, ends)


class TestTailSwap:
    def setup_method(self):
        self.grid, self.starts, self.ends = lengthened_endpoints(
            Partition((2, 1)), 2, Variant.PLAIN
        )
        self.families = all_path_systems(self.grid, self.starts, self.ends)

    def test_signed_sum_is_the_determinant(self):
        total = LaurentPoly.zero()
        for sigma, system in self.families:
            total = total + system.weight() * permutation_sign(sigma)
        assert total == lgv_determinant(self.grid, self.starts, self.ends)

    def test_involution_on_crossing_families(self):
        crossing = [system for _, system in self.families if not system.is_noncrossing()]
        assert crossing
        for system in crossing:
            image = tail_swap(system)
            assert image is not None
            assert tail_swap(image) == system
            assert image.weight() == system.weight()
            assert image.starts == system.starts
            assert sorted(image.ends) == sorted(system.ends)
            assert image.ends != system.ends

    def test_noncrossing_is_fixed(self):
        for _, system in self.families:
            if system.is_noncrossing():
                assert tail_swap(system) is None

    @pytest.mark.parametrize("shape", [s for s in subdiagrams(Partition((2, 2))) if not s.is_empty()],
                             ids=str)
    def test_involution_inside_two_by_two(self, shape):
        grid, starts, ends = lengthened_endpoints(shape, 2, Variant.PLAIN)
        for _, system in all_path_systems(grid, starts, ends):
            image = tail_swap(system)
            if system.is_noncrossing():
                assert image is None
                continue
            assert tail_swap(image) == system
            assert image.weight() == system.weight()
            assert sorted(image.ends) == sorted(system.ends)


class TestFlaggedDeterminant:
    @pytest.mark.parametrize("variant", list(Variant))
    def test_one_flagged_case(self, variant):
        shape = Partition((2, 1))
        assert h_flagged_via_lgv(shape, 1, variant) == one_flagged_via_paths(shape)

    @pytest.mark.parametrize("variant", list(Variant))
    def test_example_h2(self, variant):
        shape = Partition((2, 1))
        result = h_flagged_via_lgv(shape, 2, variant)
        assert result == h_flagged_schur(shape, 2)
        assert result.max_variable() <= 4

    @pytest.mark.parametrize("parts, h", [((1,), 3), ((2, 2), 2), ((3, 1), 3), ((2, 1, 1), 2)])
    @pytest.mark.parametrize("variant", list(Variant))
    def test_matches_tableaux(self, parts, h, variant):
        shape = Partition(parts)
        assert h_flagged_via_lgv(shape, h, variant) == h_flagged_schur(shape, h)

    def test_empty_shape(self):
        assert h_flagged_via_lgv(Partition(()), 2) == 1

    def test_h_must_be_positive(self):
        with pytest.raises(DomainError):
            h_flagged_via_lgv(Partition((1,)), 0)

    def test_prefactor(self):
        assert lgv_prefactor(Partition((2, 1)), 2, Variant.PLAIN) == \
            Monomial.from_exponents({1: 3, 2: 2, 3: 2, 4: 1})
        assert lgv_prefactor(Partition((2, 1)), 2, Variant.STAIRCASE) == \
            Monomial.from_exponents({1: 4, 2: 2, 3: 2, 4: 1})


class TestPrintedEntries:
    def test_entry_11(self, five_term):
        entry = entry_as_one_flagged(Partition((2, 1)), 2, 1, 1)
        assert entry.diagram == Partition((2, 1))
        assert entry.denominator == Monomial.from_exponents({2: 2, 3: 2, 4: 1})
        assert entry.first_variable == 2
        expected = five_term.shift_variables(1).monomial_quotient(entry.denominator)
        assert printed_matrix(Partition((2, 1)), 2)[0, 0] == expected

    def test_entry_22(self):
        entry = entry_as_one_flagged(Partition((2, 1)), 2, 2, 2)
        assert entry.diagram == Partition((3, 3, 2))
        assert entry.denominator == Monomial.from_exponents({1: 3, 2: 3, 3: 3, 4: 2})
        assert entry.first_variable == 1

    def test_entry_21(self):
        entry = entry_as_one_flagged(Partition((2, 1)), 2, 2, 1)
        assert entry.diagram == Partition((3, 2))
        assert entry.denominator == Monomial.from_exponents({2: 3, 3: 3, 4: 2})

    def test_entry_out_of_range(self):
        with pytest.raises(DomainError):
            entry_as_one_flagged(Partition((2, 1)), 2, 3, 1)

    @pytest.mark.parametrize("parts, h", [((2, 1), 2), ((2, 1), 3), ((3, 2, 2), 2), ((1,), 3)])
    @pytest.mark.parametrize("variant", list(Variant))
    def test_certified(self, parts, h, variant):
        entries = certify_entries(Partition(parts), h, variant)
        assert len(entries) == h and all(len(row) == h for row in entries)


class TestTableauPaths:
    @pytest.mark.parametrize("variant", list(Variant))
    @pytest.mark.parametrize("parts, h", [((2, 1), 2), ((2, 2), 2), ((1, 1), 3)])
    def test_weights_and_endpoints(self, parts, h, variant):
        shape = Partition(parts)
        _, starts, ends = lengthened_endpoints(shape, h, variant)
        prefactor = lgv_prefactor(shape, h, variant)
        tableaux = enumerate_tableaux(shape, Flag.h_flag(len(shape), h))
        for t in tableaux:
            system = tableau_path_system(t, h, variant)
            assert system.is_noncrossing()
            assert list(system.starts) == starts and list(system.ends) == ends
            assert system.weight().times_monomial(prefactor) == weight_monomial(t)
        systems = {tableau_path_system(t, h, variant).paths for t in tableaux}
        assert len(systems) == len(tableaux)
