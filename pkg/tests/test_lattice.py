"""Tests for cells, regions and the family constructors."""

from __future__ import annotations

from fractions import Fraction

import pytest

from rhombil.engine import count_tilings
from rhombil.exceptions import (
    AxisNotCutSet,
    BadParameters,
    Indivisible,
    NotSymmetric,
    ParameterOrder,
    ParityMismatch,
)
from rhombil.lattice import (
    Cell,
    Orientation,
    Region,
    boundary_runs,
    build_H,
    build_K,
    build_P,
    build_Pprime,
    build_Q,
    build_region,
    build_S,
    ciucu_split,
    down,
    fill,
    hexagon_layout,
    pair,
    region_split_check,
    symmetry_axis,
    trace,
    up,
)
from rhombil.schemas import RegionDocument, RegionSpec


def cells(*names: str) -> frozenset[Cell]:
    """``cells("U00", "D01")`` for single-digit rows and columns."""
    result = set()
    for name in names:
        maker = up if name[0] == "U" else down
        result.add(maker(int(name[1]), int(name[2])))
    return frozenset(result)


class TestCell:
    @pytest.mark.parametrize(
        ("row", "col", "orientation"),
        [(0, 0, Orientation.UP), (0, 1, Orientation.DOWN), (1, 0, Orientation.DOWN), (3, 5, Orientation.UP)],
    )
    def test_orientation_follows_parity(self, row: int, col: int, orientation: Orientation) -> None:
        assert Cell.at(row, col).orientation is orientation

    def test_neighbours(self) -> None:
        assert set(up(0, 0).neighbours()) == {down(0, -1), down(0, 1), down(1, 0)}
        assert set(down(1, 0).neighbours()) == {up(1, -1), up(1, 1), up(0, 0)}

    def test_wrong_orientation_is_rejected(self) -> None:
        with pytest.raises(BadParameters):
            up(0, 1)
        with pytest.raises(BadParameters):
            down(0, 0)

    def test_str(self) -> None:
        assert str(up(0, 2)) == "U(0,2)"

    def test_mirror(self) -> None:
        assert up(1, 1).mirrored(2) == up(1, 3)


class TestRegion:
    def test_unit_weights_are_dropped(self) -> None:
        region = Region(cells("U00", "D01"), {pair(up(0, 0), down(0, 1)): Fraction(1)})
        assert region.weights == {}

    def test_weight_must_be_a_lozenge(self) -> None:
        with pytest.raises(BadParameters, match="not a lozenge"):
            Region(cells("U00", "D10", "U02", "D03"), {pair(up(0, 0), down(0, 3)): Fraction(1, 2)})

    def test_weight_must_be_inside(self) -> None:
        with pytest.raises(BadParameters, match="not inside"):
            Region(cells("U00"), {pair(up(0, 0), down(0, 1)): Fraction(1, 2)})

    def test_restrict_drops_outside_weights(self) -> None:
        region = build_Pprime(1, 1, 1)
        smaller = region.without([down(1, 0)])
        assert smaller.weights == {}
        assert len(smaller) == 5

    def test_document_round_trip(self) -> None:
        region = build_Pprime(1, 1, 1)
        document = RegionDocument.model_validate_json(region.to_document().model_dump_json())
        restored = Region.from_document(document)
        assert restored == region
        assert restored.family == "Pp"

    def test_document_rejects_misoriented_cell(self) -> None:
        document = RegionDocument(cells=[(0, 0, "D")])
        with pytest.raises(BadParameters, match="wrong orientation"):
            Region.from_document(document)


class TestPolygons:
    def test_trace_must_close(self) -> None:
        with pytest.raises(BadParameters, match="does not close"):
            trace([("E", 2), ("SE", 1)])

    def test_trace_rejects_negative_side(self) -> None:
        with pytest.raises(BadParameters, match="negative"):
            trace([("E", -1)])

    def test_unit_triangle(self) -> None:
        assert fill(trace([("E", 1), ("SW", 1), ("NW", 1)])) == cells("D01")


class TestHalvedHexagon:
    def test_cells_of_smallest_case(self) -> None:
        region = build_P(1, 1, 1)
        assert region.cells == cells("U00", "D01", "U02", "D10", "U11", "D12")
        assert region.balanced

    def test_weighted_variant_marks_the_staircase(self) -> None:
        region = build_Pprime(1, 1, 1)
        assert region.weights == {pair(up(0, 0), down(1, 0)): Fraction(1, 2)}

    def test_a_above_b(self) -> None:
        with pytest.raises(ParameterOrder):
            build_P(2, 1, 1)


class TestTrapezoids:
    def test_Q_cells(self) -> None:
        assert build_Q((1, 1)).cells == cells("U00", "D01", "U02", "D10", "U11", "D12")

    def test_K_cells(self) -> None:
        assert build_K((1, 1)).cells == cells("U00", "D01")

    def test_K_needs_even_entries(self) -> None:
        with pytest.raises(BadParameters, match="E"):
            build_K((1, 0))


class TestDefectedHexagons:
    def test_boundary_of_even_level_layout(self) -> None:
        layout = hexagon_layout(1, 1, 1, 1, (1, 1))
        runs = boundary_runs(fill(layout.outline))
        assert runs == [("E", 2), ("SE", 4), ("SW", 4), ("W", 2)] + [("NW", 1), ("NE", 1)] * 4

    def test_even_level_carries_holes(self) -> None:
        assert hexagon_layout(1, 0, 1, 1, (1, 1)).level == 4

    @pytest.mark.parametrize(("m", "holes"), [(2, (0, 0)), (4, (0, 0)), (8, (1, 0))])
    def test_odd_level_domain(self, m: int, holes: tuple[int, ...]) -> None:
        with pytest.raises(BadParameters, match="odd-level"):
            build_H(m, 0, 0, 0, holes)

    @pytest.mark.parametrize(
        ("m", "x", "y", "z", "holes", "message"),
        [
            (6, 0, 1, 0, (1, 0), "H6 needs z\\+E >= 1"),
            (7, 0, 0, 1, (0, 1), "H7 needs y\\+O >= 1"),
            (8, 0, 2, 0, (0, 1), "H8 needs a1 >= 1"),
        ],
    )
    def test_trimmed_families_need_material_on_the_trimmed_side(
        self, m: int, x: int, y: int, z: int, holes: tuple[int, ...], message: str
    ) -> None:
        with pytest.raises(BadParameters, match=message):
            build_H(m, x, y, z, holes)

    @pytest.mark.parametrize(("m", "holes"), [(6, (0, 1)), (7, (1, 0)), (8, (1, 0))])
    def test_smallest_admissible_trimmed_points(self, m: int, holes: tuple[int, ...]) -> None:
        region = build_H(m, 0, 1, 1, holes)
        assert region.balanced

    def test_unknown_family(self) -> None:
        with pytest.raises(BadParameters):
            build_H(9, 0, 0, 0, (1, 1))

    def test_bottom_row_removed_leaves_empty_region(self) -> None:
        region = build_H(6, 0, 0, 1, (0, 0))
        assert len(region) == 0
        assert count_tilings(region) == 1

    def test_build_region_dispatch(self) -> None:
        spec = RegionSpec(family="H1", x=0, y=1, z=1, holes=(1, 1))
        assert build_region(spec) == build_H(1, 0, 1, 1, (1, 1))


class TestSymmetricHexagon:
    def test_smallest_even_case(self) -> None:
        region = build_S(0, 1, 0, (2,))
        assert len(region) == 10
        assert region.ups == region.downs == 5

    def test_parity_mismatch(self) -> None:
        with pytest.raises(ParityMismatch):
            build_S(1, 1, 0, (2,))

    def test_level_above_hexagon_has_no_tilings(self) -> None:
        region = build_S(0, 0, 2, (1,))
        assert not region.balanced
        assert count_tilings(region) == 0

    def test_level_above_hexagon_still_checks_parity(self) -> None:
        with pytest.raises(ParityMismatch):
            build_S(0, 0, 3, (1,))

    def test_non_positive_holes(self) -> None:
        with pytest.raises(BadParameters):
            build_S(0, 1, 0, (0,))


class TestCiucuSplit:
    def test_halved_hexagon_splits_into_forced_halves(self) -> None:
        split = ciucu_split(build_P(1, 1, 1))
        assert split.axis == 1
        assert split.k == 1
        assert split.plus.cells == cells("U00", "D10")
        assert split.minus.cells == cells("D01", "U02", "U11", "D12")
        assert 2**split.k * count_tilings(split.plus) * count_tilings(split.minus) == 2

    def test_symmetric_hexagon_halves(self) -> None:
        region = build_S(0, 1, 0, (2,))
        split = ciucu_split(region)
        assert split.k == 1
        halves = sorted([count_tilings(split.plus), count_tilings(split.minus)])
        assert halves == [Fraction(1, 2), Fraction(1)]
        assert 2**split.k * halves[0] * halves[1] == count_tilings(region)

    def test_asymmetric_region(self) -> None:
        with pytest.raises(NotSymmetric):
            symmetry_axis(Region(cells("U00", "D01")))

    def test_odd_axis_count(self) -> None:
        with pytest.raises(AxisNotCutSet):
            ciucu_split(Region(cells("U00")))


class TestRegionSplit:
    def test_cut_along_hole_row(self) -> None:
        region = build_H(1, 0, 0, 1, (1, 1))
        upper, lower = region_split_check(region, 2)
        assert upper.cells == cells("D01", "U02", "D12", "U13")
        assert count_tilings(upper) == 1
        assert count_tilings(upper) * count_tilings(lower) == count_tilings(region)

    def test_unbalanced_upper_part(self) -> None:
        with pytest.raises(Indivisible):
            region_split_check(build_H(1, 0, 1, 1, (1, 1)), 4)

    def test_polyline_cut_matches_line_cut(self) -> None:
        region = build_H(1, 0, 0, 1, (1, 1))
        upper, _ = region_split_check(region, [(2, -1), (2, 9)])
        assert upper.cells == cells("D01", "U02", "D12", "U13")
