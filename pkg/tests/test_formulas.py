"""Tests for the closed-form tiling products."""

from __future__ import annotations

from fractions import Fraction

import pytest

from rhombil.combinat import HoleSeq
from rhombil.conventions import DEFAULT_CONVENTIONS
from rhombil.engine import count_tilings
from rhombil.exceptions import BadParameters, OddLength, ParameterOrder, ParityMismatch
from rhombil.formulas import (
    evaluate_formula,
    formula_H,
    formula_H1,
    formula_H2,
    formula_H3,
    formula_H5,
    formula_H6,
    formula_K,
    formula_Kprime,
    formula_P,
    formula_Pprime,
    formula_Q,
    formula_Qprime,
    formula_S,
    normalize_holes,
    symmetric_factorization,
    symmetric_in_range,
)
from rhombil.lattice import build_H, build_S
from rhombil.schemas import RegionSpec


class TestHalvedHexagon:
    @pytest.mark.parametrize(
        ("a", "b", "c", "expected"),
        [
            (1, 1, 1, 2),
            (1, 2, 1, 3),
            (2, 2, 1, 5),
            (3, 3, 1, 14),
            (1, 3, 1, 4),
            (0, 3, 2, 1),
        ],
    )
    def test_formula_P(self, a: int, b: int, c: int, expected: int) -> None:
        assert formula_P(a, b, c) == expected

    def test_formula_Pprime(self) -> None:
        assert formula_Pprime(1, 1, 1) == Fraction(3, 2)

    def test_a_above_b_is_rejected(self) -> None:
        with pytest.raises(ParameterOrder, match="a <= b"):
            formula_P(2, 1, 0)


class TestTrapezoids:
    @pytest.mark.parametrize(
        ("t", "expected"),
        [
            ((0, 0), 1),
            ((0, 1), 1),
            ((1, 1), 2),
            ((1, 2), 5),
            ((0, 1, 1, 1), 4),
            ((0, 1, 0, 1), 1),
            ((1, 1, 1, 1), 16),
            ((1, 1, 0, 1), 5),
            ((1, 1, 0, 0), 2),
        ],
    )
    def test_formula_Q(self, t: tuple[int, ...], expected: int) -> None:
        assert formula_Q(t) == expected

    @pytest.mark.parametrize(
        ("func", "t", "expected"),
        [
            (formula_Qprime, (1, 0, 0, 1), Fraction(3, 2)),
            (formula_Qprime, (0, 1, 0, 0), Fraction(1, 2)),
            (formula_Qprime, (1, 0), Fraction(1)),
            (formula_K, (1, 0, 0, 1), Fraction(1)),
            (formula_K, (1, 1), Fraction(1)),
            (formula_Kprime, (1, 1), Fraction(1)),
            (formula_Kprime, (0, 1, 1, 0), Fraction(1)),
        ],
    )
    def test_weighted_and_shifted_trapezoids(self, func, t: tuple[int, ...], expected: Fraction) -> None:
        assert func(t) == expected

    def test_odd_sequence_drops_leading_zero(self) -> None:
        assert formula_Q((0, 1, 2)) == formula_Q((1, 2))

    def test_odd_sequence_rejected_when_asked(self) -> None:
        conventions = DEFAULT_CONVENTIONS.with_switch("odd_length", "reject")
        with pytest.raises(OddLength):
            formula_Q((1, 2, 3), conventions)


class TestDefectedHexagons:
    @pytest.mark.parametrize(
        ("func", "x", "y", "z", "holes", "expected"),
        [
            (formula_H1, 0, 0, 0, (1, 1), Fraction(2)),
            (formula_H1, 0, 1, 1, (1, 1), Fraction(20)),
            (formula_H3, 0, 0, 0, (1, 1), Fraction(3, 2)),
            (formula_H2, 0, 1, 0, (1,), Fraction(1)),
            (formula_H3, 0, 1, 0, (1,), Fraction(1, 2)),
            (formula_H5, 0, 0, 0, (0, 0), Fraction(1)),
            (formula_H6, 0, 0, 1, (0, 0), Fraction(1)),
        ],
    )
    def test_known_values(self, func, x: int, y: int, z: int, holes: tuple[int, ...], expected: Fraction) -> None:
        assert func(x, y, z, holes) == expected

    def test_odd_hole_array_reads_as_trailing_zero(self) -> None:
        assert formula_H1(1, 1, 1, (1, 1, 1)) == formula_H1(1, 1, 1, (1, 1, 1, 0))

    def test_many_hole_product_collapses_to_two_hole(self) -> None:
        assert formula_H("H1", 1, 1, 1, (1, 1), general=True) == formula_H("H1", 1, 1, 1, (1, 1))

    def test_unknown_family(self) -> None:
        with pytest.raises(BadParameters, match="unknown family"):
            formula_H("H9", 0, 0, 0, (1, 1))

    def test_negative_sides(self) -> None:
        with pytest.raises(BadParameters):
            formula_H("H1", -1, 0, 0, (1, 1))


class TestAgainstCounter:
    @pytest.mark.parametrize(
        ("family", "x", "y", "z", "holes", "expected"),
        [
            ("H2", 0, 1, 0, (1, 1), Fraction(3)),
            ("H2", 1, 1, 1, (1, 1), None),
            ("H4", 0, 1, 0, (1, 1), Fraction(2)),
            ("H4", 1, 1, 1, (1, 1), None),
            ("H6", 0, 1, 0, (0, 1), Fraction(3, 2)),
            ("H7", 0, 1, 0, (1, 1), Fraction(9, 2)),
            ("H8", 0, 1, 0, (1, 1), Fraction(2)),
            ("H8", 0, 0, 1, (1, 1), Fraction(3, 2)),
            ("H1", 1, 0, 1, (1, 1, 1, 1), Fraction(2048)),
        ],
    )
    def test_formula_equals_count(
        self, family: str, x: int, y: int, z: int, holes: tuple[int, ...], expected: Fraction | None
    ) -> None:
        counted = count_tilings(build_H(int(family[1:]), x, y, z, holes))
        assert formula_H(family, x, y, z, holes) == counted
        if expected is not None:
            assert counted == expected

    def test_four_holes_with_unequal_sides(self) -> None:
        assert formula_H("H1", 1, 2, 1, (1, 1, 1, 1)) == 3870720


class TestSymmetricAgainstCounter:
    @pytest.mark.parametrize(
        ("x", "y", "z", "holes", "expected"),
        [
            (0, 1, 0, (1,), 1),
            (2, 1, 0, (1,), 8),
            (1, 1, 1, (1,), 2),
            (1, 1, 1, (1, 1), 0),
            (0, 1, 2, (2, 1), None),
        ],
    )
    def test_formula_equals_count(self, x: int, y: int, z: int, holes: tuple[int, ...], expected: int | None) -> None:
        counted = count_tilings(build_S(x, y, z, holes))
        assert formula_S(x, y, z, holes) == counted
        if expected is not None:
            assert counted == expected

    def test_odd_first_hole_pairs_h5_with_h8(self) -> None:
        factors = symmetric_factorization(0, 1, 0, (1,))
        assert factors.case == 3
        assert (factors.first.family, factors.second.family) == ("H5", "H8")
        assert (factors.first.value, factors.second.value) == (Fraction(1, 2), Fraction(1))
        assert factors.value == 1

    def test_lower_half_with_no_rows_weighs_one(self) -> None:
        factors = symmetric_factorization(2, 1, 0, (1,))
        assert factors.second.z + HoleSeq(factors.second.holes).E == 0
        assert factors.second.value == 2
        assert factors.value == 8


@pytest.mark.parametrize(
    ("holes", "expected"),
    [((), (0, 0)), ((1,), (1, 0)), ((1, 2), (1, 2)), ((2, 0, 1), (2, 0, 1, 0))],
)
def test_normalize_holes(holes: tuple[int, ...], expected: tuple[int, ...]) -> None:
    assert normalize_holes(holes) == expected


class TestSymmetricHexagon:
    def test_known_values(self) -> None:
        assert formula_S(0, 1, 0, (2,)) == 1
        assert formula_S(0, 0, 0, (1,)) == 1

    def test_factorization_of_smallest_even_case(self) -> None:
        factors = symmetric_factorization(0, 1, 0, (2,))
        assert factors.case == 1
        assert factors.exponent == 1
        assert (factors.first.family, factors.second.family) == ("H2", "H3")
        assert (factors.first.value, factors.second.value) == (Fraction(1), Fraction(1, 2))
        assert factors.value == 1

    def test_outside_window_is_zero(self) -> None:
        assert not symmetric_in_range(0, 1, 4, (1,))
        assert formula_S(0, 1, 4, (1,)) == 0

    def test_parity_mismatch(self) -> None:
        with pytest.raises(ParityMismatch):
            formula_S(1, 1, 0, (2,))

    def test_holes_must_be_positive(self) -> None:
        with pytest.raises(BadParameters):
            formula_S(0, 1, 0, (0, 1))


@pytest.mark.parametrize(
    ("spec", "expected"),
    [
        (RegionSpec(family="P", a=1, b=1, c=1), Fraction(2)),
        (RegionSpec(family="Pp", a=1, b=1, c=1), Fraction(3, 2)),
        (RegionSpec(family="Q", holes=(1, 2)), Fraction(5)),
        (RegionSpec(family="H1", x=0, y=1, z=1, holes=(1, 1)), Fraction(20)),
        (RegionSpec(family="S", x=0, y=1, z=0, holes=(2,)), Fraction(1)),
    ],
)
def test_evaluate_formula_dispatch(spec: RegionSpec, expected: Fraction) -> None:
    result = evaluate_formula(spec)
    assert result.value == expected
    assert result.family == spec.family
    assert result.params == spec.params()
