"""Exact product primitives shared by every tiling formula.

All values are :class:`fractions.Fraction`; integers are accepted wherever a
rational is and are promoted on the way in.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Union

from rhombil.exceptions import IndexOutOfRange, NegativeArgument, OddLength, ZeroDenominator

ExactRational = Fraction
Rational = Union[int, Fraction]
HyperfactorialReading = Literal["strict_skip", "printed"]

ONE = Fraction(1)


def _reciprocal(factors: Iterable[Rational], what: str) -> Fraction:
    denominator = Fraction(math.prod(Fraction(f) for f in factors))
    if denominator == 0:
        raise ZeroDenominator(f"{what} has a zero factor in its denominator")
    return 1 / denominator


def pochhammer(x: Rational, n: int) -> Fraction:
    """Rising factorial ``(x)_n`` with the reciprocal extension to ``n < 0``.

    Raises:
        ZeroDenominator: if ``n < 0`` and one of ``x-1, ..., x+n`` is zero.
    """
    x = Fraction(x)
    if n > 0:
        return Fraction(math.prod(x + i for i in range(n)))
    if n == 0:
        return ONE
    return _reciprocal((x - j for j in range(1, -n + 1)), f"({x})_{n}")


def skip_pochhammer(x: Rational, n: int) -> Fraction:
    """Step-two rising factorial ``[x]_n = x(x+2)...(x+2n-2)``.

    For ``n < 0`` this is ``1/((x-2)(x-4)...(x+2n))``.
    """
    x = Fraction(x)
    if n > 0:
        return Fraction(math.prod(x + 2 * i for i in range(n)))
    if n == 0:
        return ONE
    return _reciprocal((x - 2 * j for j in range(1, -n + 1)), f"[{x}]_{n}")


def trapezoid_T(x: Rational, n: int, m: int) -> Fraction:
    """Return ``prod_{i=0}^{m-1} (x+i)_{n-2i}``."""
    if m < 0:
        raise NegativeArgument(f"T({x}, {n}, {m}): m must be non-negative")
    x = Fraction(x)
    value = ONE
    for i in range(m):
        value *= pochhammer(x + i, n - 2 * i)
    return value


def trapezoid_V(x: Rational, n: int, m: int) -> Fraction:
    """Return ``prod_{i=0}^{m-1} [x+2i]_{n-2i}``."""
    if m < 0:
        raise NegativeArgument(f"V({x}, {n}, {m}): m must be non-negative")
    x = Fraction(x)
    value = ONE
    for i in range(m):
        value *= skip_pochhammer(x + 2 * i, n - 2 * i)
    return value


@lru_cache(maxsize=None)
def _hyperfactorial(n: int) -> int:
    return math.prod(math.factorial(i) for i in range(n))


def hyperfactorial(n: int) -> Fraction:
    """``H(n) = 0! 1! ... (n-1)!``."""
    if n < 0:
        raise NegativeArgument(f"H({n}) is undefined for negative n")
    return Fraction(_hyperfactorial(n))


def hyperfactorial2(n: int, reading: HyperfactorialReading = "strict_skip") -> Fraction:
    """Skipping hyperfactorial ``H_2(n)``.

    Even ``n`` gives ``0! 2! 4! ... (n-2)!``. For odd ``n`` the ``strict_skip``
    reading gives ``1! 3! ... (n-2)!`` and ``printed`` gives ``1! 2! 3! ... (n-2)!``.
    Only ``strict_skip`` agrees with tiling counts of the trapezoids.
    """
    if n < 0:
        raise NegativeArgument(f"H2({n}) is undefined for negative n")
    if n % 2 == 0:
        indices: Iterable[int] = range(0, n - 1, 2)
    elif reading == "strict_skip":
        indices = range(1, n - 1, 2)
    else:
        indices = range(1, n - 1)
    return Fraction(math.prod(math.factorial(i) for i in indices))


@dataclass(frozen=True)
class HoleSeq:
    """A finite sequence of non-negative integers with 1-based accessors.

    Attributes:
        entries: The sequence ``(a_1, ..., a_k)``.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        negative = [a for a in self.entries if a < 0]
        if negative:
            raise NegativeArgument(f"hole sequence entries must be non-negative, got {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> HoleSeq:
        return cls(tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, k: int) -> int:
        """1-based access; indices past the end read as 0."""
        if k < 1:
            raise IndexOutOfRange(f"index {k} is below 1")
        return self.entries[k - 1] if k <= len(self.entries) else 0

    @property
    def O(self) -> int:  # noqa: N802
        return sum(self.entries[0::2])

    @property
    def E(self) -> int:  # noqa: N802
        return sum(self.entries[1::2])

    def s(self, k: int) -> int:
        if k > len(self.entries):
            raise IndexOutOfRange(f"s_{k} needs k <= {len(self.entries)}")
        if k < 0:
            raise IndexOutOfRange(f"s_{k} needs k >= 0")
        return sum(self.entries[:k])

    def o(self, k: int) -> int:
        return sum(self.entries[2 * k - 2 :: 2]) if k >= 1 else self.O

    def e(self, k: int) -> int:
        return sum(self.entries[2 * k - 1 :: 2]) if k >= 1 else self.E

    def padded(self) -> HoleSeq:
        """Append a trailing zero to odd-length sequences."""
        return self if len(self.entries) % 2 == 0 else HoleSeq(self.entries + (0,))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)


def _as_seq(a: HoleSeq | Sequence[int]) -> HoleSeq:
    return a if isinstance(a, HoleSeq) else HoleSeq(tuple(a))


def seq_O(a: HoleSeq | Sequence[int]) -> int:  # noqa: N802
    """Sum of odd-indexed entries ``a_1 + a_3 + ...``."""
    return _as_seq(a).O


def seq_E(a: HoleSeq | Sequence[int]) -> int:  # noqa: N802
    """Sum of even-indexed entries ``a_2 + a_4 + ...``."""
    return _as_seq(a).E


def seq_s(a: HoleSeq | Sequence[int], k: int) -> int:
    """Prefix sum ``a_1 + ... + a_k``."""
    return _as_seq(a).s(k)


def seq_o(a: HoleSeq | Sequence[int], k: int) -> int:
    """Tail sum ``sum_{i >= k} a_{2i-1}``."""
    return _as_seq(a).o(k)


def seq_e(a: HoleSeq | Sequence[int], k: int) -> int:
    """Tail sum ``sum_{i >= k} a_{2i}``."""
    return _as_seq(a).e(k)


def even_length(entries: tuple[int, ...], rule: str = "drop_leading_zero") -> tuple[int, ...]:
    """Make a trapezoid sequence even-length.

    ``drop_leading_zero`` drops a leading 0 and otherwise appends one,
    ``append_zero`` always appends, ``reject`` raises.

    Raises:
        OddLength: for an odd-length sequence under ``reject``.
    """
    if len(entries) % 2 == 0:
        return entries
    if rule == "reject":
        raise OddLength(f"trapezoid sequence {entries} has odd length")
    if rule == "drop_leading_zero" and entries and entries[0] == 0:
        return entries[1:]
    return entries + (0,)
