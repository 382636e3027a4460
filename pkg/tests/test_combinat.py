"""Tests for the exact product primitives."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rhombil.combinat import (
    HoleSeq,
    even_length,
    hyperfactorial,
    hyperfactorial2,
    pochhammer,
    seq_E,
    seq_e,
    seq_O,
    seq_o,
    seq_s,
    skip_pochhammer,
    trapezoid_T,
    trapezoid_V,
)
from rhombil.exceptions import IndexOutOfRange, NegativeArgument, OddLength, ZeroDenominator

small = st.integers(min_value=1, max_value=12)
lengths = st.integers(min_value=0, max_value=8)


@pytest.mark.parametrize(
    ("x", "n", "expected"),
    [
        (3, 0, Fraction(1)),
        (3, 2, Fraction(12)),
        (1, 4, Fraction(24)),
        (Fraction(1, 2), 2, Fraction(3, 4)),
        (3, -2, Fraction(1, 2)),
        (5, -1, Fraction(1, 4)),
    ],
)
def test_pochhammer_values(x: Fraction | int, n: int, expected: Fraction) -> None:
    assert pochhammer(x, n) == expected


def test_pochhammer_negative_zero_factor() -> None:
    with pytest.raises(ZeroDenominator):
        pochhammer(1, -1)


@pytest.mark.parametrize(
    ("x", "n", "expected"),
    [
        (1, 3, Fraction(15)),
        (2, 2, Fraction(8)),
        (5, -1, Fraction(1, 3)),
        (7, -2, Fraction(1, 15)),
    ],
)
def test_skip_pochhammer_values(x: int, n: int, expected: Fraction) -> None:
    assert skip_pochhammer(x, n) == expected


def test_skip_pochhammer_negative_zero_factor() -> None:
    with pytest.raises(ZeroDenominator):
        skip_pochhammer(2, -1)


@given(x=small, n=lengths)
def test_pochhammer_steps_by_one_factor(x: int, n: int) -> None:
    assert pochhammer(x, n + 1) == pochhammer(x, n) * (x + n)


@given(x=small, n=st.integers(min_value=1, max_value=6))
def test_pochhammer_negative_is_reciprocal(x: int, n: int) -> None:
    """``(x)_{-n}`` equals ``1/(x-n)_n`` wherever the latter is non-zero."""
    if x - n <= 0 and x - 1 >= 0:
        return
    assert pochhammer(x, -n) == 1 / pochhammer(x - n, n)


@given(x=small, n=lengths)
def test_skip_pochhammer_steps_by_two(x: int, n: int) -> None:
    assert skip_pochhammer(x, n + 1) == skip_pochhammer(x, n) * (x + 2 * n)


def test_trapezoid_products() -> None:
    assert trapezoid_T(1, 2, 1) == 2
    assert trapezoid_T(1, 4, 2) == 144
    assert trapezoid_V(1, 2, 1) == 3
    assert trapezoid_T(4, 3, 0) == 1


def test_trapezoid_products_reject_negative_m() -> None:
    with pytest.raises(NegativeArgument):
        trapezoid_T(1, 2, -1)
    with pytest.raises(NegativeArgument):
        trapezoid_V(1, 2, -1)


@given(x=st.integers(min_value=2, max_value=9), m=st.integers(min_value=0, max_value=3), extra=st.integers(0, 4))
def test_trapezoid_T_shift_ratio(x: int, m: int, extra: int) -> None:
    n = 2 * m + extra
    assert trapezoid_T(x, n, m) / trapezoid_T(x - 1, n, m) == pochhammer(x + n - m, m) / pochhammer(x - 1, m)


class TestHyperfactorials:
    def test_hyperfactorial_values(self) -> None:
        values = [hyperfactorial(n) for n in range(9)]
        assert values == [1, 1, 1, 2, 12, 288, 34560, 24883200, 125411328000]

    def test_skipping_hyperfactorial_strict(self) -> None:
        values = [hyperfactorial2(n) for n in range(10)]
        assert values == [1, 1, 1, 1, 2, 6, 48, 720, 34560, 3628800]

    def test_skipping_hyperfactorial_printed_reading(self) -> None:
        """The printed reading only differs for odd ``n``."""
        assert hyperfactorial2(5, "printed") == 12
        assert hyperfactorial2(6, "printed") == hyperfactorial2(6)

    @given(n=st.integers(min_value=0, max_value=20))
    def test_hyperfactorial_ratio_is_factorial(self, n: int) -> None:
        ratio = hyperfactorial(n + 1) / hyperfactorial(n)
        assert ratio == pochhammer(1, n)

    def test_negative_arguments(self) -> None:
        with pytest.raises(NegativeArgument):
            hyperfactorial(-1)
        with pytest.raises(NegativeArgument):
            hyperfactorial2(-2)


class TestHoleSeq:
    def test_accessors(self) -> None:
        seq = HoleSeq.of(1, 2, 3)
        assert len(seq) == 3
        assert seq.O == 4
        assert seq.E == 2
        assert seq.s(2) == 3
        assert seq.o(2) == 3
        assert seq.e(1) == 2
        assert seq[4] == 0

    def test_free_function_aliases(self) -> None:
        seq = HoleSeq.of(2, 0, 1, 5)
        assert seq_O(seq) == 3
        assert seq_E(seq) == 5
        assert seq_s(seq, 3) == 3

    def test_free_functions_accept_plain_sequences(self) -> None:
        entries = (2, 0, 1, 5)
        assert seq_O(entries) == 3
        assert seq_E([2, 0, 1, 5]) == 5
        assert seq_s(entries, 3) == 3
        assert seq_o(entries, 2) == 1
        assert seq_e(entries, 2) == 5

    def test_free_functions_validate_plain_sequences(self) -> None:
        with pytest.raises(NegativeArgument):
            seq_O((1, -2))

    def test_partial_sum_past_end(self) -> None:
        with pytest.raises(IndexOutOfRange):
            HoleSeq.of(1, 2, 3).s(4)

    def test_rejects_negative_entries(self) -> None:
        with pytest.raises(NegativeArgument):
            HoleSeq((-1,))

    @given(entries=st.lists(st.integers(min_value=0, max_value=9), max_size=8))
    def test_full_sum_is_odd_plus_even(self, entries: list[int]) -> None:
        seq = HoleSeq(tuple(entries))
        assert seq.O + seq.E == sum(entries)
        if entries:
            assert seq.s(len(entries)) == seq.O + seq.E


@pytest.mark.parametrize(
    ("entries", "expected"),
    [
        ((1, 2), (1, 2)),
        ((0, 1, 2), (1, 2)),
        ((1, 2, 3), (1, 2, 3, 0)),
        ((), ()),
    ],
)
def test_even_length_default_rule(entries: tuple[int, ...], expected: tuple[int, ...]) -> None:
    assert even_length(entries) == expected


def test_even_length_reject_rule() -> None:
    with pytest.raises(OddLength):
        even_length((1, 2, 3), rule="reject")
