"""Closed-form tiling numbers, evaluated factor by factor in exact arithmetic.

Each evaluator follows the printed product literally. Internally the halved
hexagon products accept any integer triple (empty ranges give 1) because the
defected-hexagon formulas call them with subscripts that leave ``a <= b``.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from rhombil.combinat import (
    ONE,
    HoleSeq,
    even_length,
    hyperfactorial,
    hyperfactorial2,
    trapezoid_T,
    trapezoid_V,
)
from rhombil.conventions import DEFAULT_CONVENTIONS, Conventions
from rhombil.exceptions import (
    ArithmeticDomainError,
    BadParameters,
    FormulaSingular,
    OddLength,
    ParameterOrder,
    ParityMismatch,
    ZeroDenominator,
)
from rhombil.schemas import RegionSpec

HoleInput = Union[HoleSeq, Sequence[int]]

H_FAMILIES = ("H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8")
TRAPEZOID_FAMILIES = ("Q", "Qp", "K", "Kp")

# Additive constant in the last two trapezoid ratios of the many-hole formulas.
_GENERAL_SHIFT = {"H1": 2, "H5": 2, "H2": 1, "H3": 1, "H6": 1, "H7": 1, "H4": 0, "H8": 0}


@dataclass(frozen=True)
class FormulaResult:
    """A formula value tagged with what produced it.

    Attributes:
        value: The exact (weighted) tiling number.
        family: Family tag, e.g. ``"H3"``.
        params: The parameters the formula was evaluated at.
    """

    value: Fraction
    family: str
    params: dict[str, object]


@contextmanager
def _singular(label: str) -> Iterator[None]:
    try:
        yield
    except (ArithmeticDomainError, ZeroDivisionError) as exc:
        raise FormulaSingular(label, f"{label} is singular: {exc}") from exc


def _entries(t: HoleInput) -> tuple[int, ...]:
    return tuple(t.entries) if isinstance(t, HoleSeq) else tuple(int(v) for v in t)


# --- halved hexagons ---------------------------------------------------------


def _proctor(a: int, b: int, c: int) -> Fraction:
    value = ONE
    for i in range(1, a + 1):
        for j in range(1, b - a + 2):
            value *= Fraction(c + i + j - 1, i + j - 1)
        for j in range(b - a + 2, b - a + i + 1):
            if i + j - 1 == 0:
                raise ZeroDenominator(f"P_{{{a},{b},{c}}} divides by i+j-1 = 0")
            value *= Fraction(2 * c + i + j - 1, i + j - 1)
    return value


def _proctor_prime(a: int, b: int, c: int, limit: str = "a") -> Fraction:
    # a < 0 is the empty region, weight 1
    value = Fraction(1, 2**a) if a >= 0 else ONE
    upper = a if limit == "a" else b
    for i in range(1, upper + 1):
        den = c + b - a + i
        if den == 0:
            raise ZeroDenominator(f"P'_{{{a},{b},{c}}} divides by c+b-a+i = 0")
        value *= Fraction(2 * c + b - a + i, den)
    return value * _proctor(a, b, c)


def _check_hexagon(a: int, b: int, c: int) -> None:
    if min(a, b, c) < 0:
        raise BadParameters(f"halved hexagon needs non-negative a, b, c; got ({a}, {b}, {c})")
    if a > b:
        raise ParameterOrder(f"halved hexagon needs a <= b; got a={a}, b={b}")


def formula_P(a: int, b: int, c: int) -> Fraction:
    """Tiling number of the halved hexagon ``P_{a,b,c}``.

    Raises:
        ParameterOrder: if ``a > b``.
    """
    _check_hexagon(a, b, c)
    return _proctor(a, b, c)


def formula_Pprime(a: int, b: int, c: int, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    """Weighted tiling number of ``P'_{a,b,c}`` (staircase lozenges weigh 1/2)."""
    _check_hexagon(a, b, c)
    with _singular(f"P'_{{{a},{b},{c}}}"):
        return _proctor_prime(a, b, c, conventions.pprime_limit)


# --- trapezoids with holes on the base ---------------------------------------


def _trapezoid(kind: str, t: tuple[int, ...], conventions: Conventions) -> Fraction:
    t = even_length(t, conventions.odd_length)
    seq = HoleSeq(t)
    half = len(t) // 2
    s = [seq.s(k) for k in range(len(t) + 1)]
    big_e = seq.E
    H = hyperfactorial  # noqa: N806

    def H2(n: int) -> Fraction:  # noqa: N802
        return hyperfactorial2(n, conventions.hyperfactorial2_reading)

    value = ONE
    if kind == "Q":
        for i in range(1, half + 1):
            value *= Fraction(math.factorial(s[2 * i]), math.factorial(s[2 * i - 1]))
        value /= H2(2 * big_e + 1)
        for i in range(1, half + 1):
            value *= H2(2 * s[2 * i] + 1) * H(2 * s[2 * i - 1] + 2) / H2(2 * s[2 * i - 1] + 3)
        shift = 1
    elif kind == "Qp":
        value = Fraction(1, 2**big_e) / H2(2 * big_e + 1)
        for i in range(1, half + 1):
            value *= H2(2 * s[2 * i] + 1) * H(2 * s[2 * i - 1]) / H2(2 * s[2 * i - 1] + 1)
        shift = 0
    elif kind == "K":
        value = 1 / H2(2 * big_e)
        for i in range(1, half + 1):
            value *= H2(2 * s[2 * i]) * H(2 * s[2 * i - 1] + 1) / H2(2 * s[2 * i - 1] + 2)
        shift = 0
    else:
        value = 1 / H2(2 * big_e)
        for i in range(1, half + 1):
            value *= H2(2 * s[2 * i] - 1) * H(2 * s[2 * i - 1]) / H2(2 * s[2 * i - 1] + 1)
        shift = -1

    for i in range(1, 2 * half + 1):
        for j in range(i + 1, 2 * half + 1):
            if (j - i) % 2:
                value *= H(s[j] - s[i]) / H(s[j] + s[i] + shift)
            else:
                value *= H(s[j] + s[i] + shift) / H(s[j] - s[i])
    return value


def _public_trapezoid(kind: str, t: HoleInput, conventions: Conventions) -> Fraction:
    entries = _entries(t)
    HoleSeq(entries)
    if len(entries) % 2 and conventions.odd_length == "reject":
        raise OddLength(f"{kind}{entries} has odd length")
    with _singular(f"{kind}{entries}"):
        return _trapezoid(kind, entries, conventions)


def formula_Q(t: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    """Tiling number of the trapezoid ``Q(t)``."""
    return _public_trapezoid("Q", t, conventions)


def formula_Qprime(t: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    """Weighted tiling number of ``Q'(t)``."""
    return _public_trapezoid("Qp", t, conventions)


def formula_K(t: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    """Tiling number of the half-bump trapezoid ``K(t)``."""
    return _public_trapezoid("K", t, conventions)


def formula_Kprime(t: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    """Weighted tiling number of ``K'(t)``."""
    return _public_trapezoid("Kp", t, conventions)


# --- defected halved hexagons ------------------------------------------------


class _Kit:
    """Family-independent factor evaluators bound to one set of conventions."""

    def __init__(self, conventions: Conventions) -> None:
        self.conventions = conventions

    def P(self, a: int, b: int, c: int) -> Fraction:  # noqa: N802
        return _proctor(a, b, c)

    def Pp(self, a: int, b: int, c: int) -> Fraction:  # noqa: N802
        return _proctor_prime(a, b, c, self.conventions.pprime_limit)

    def Q(self, *t: int) -> Fraction:  # noqa: N802
        return _trapezoid("Q", tuple(t), self.conventions)

    def Qp(self, *t: int) -> Fraction:  # noqa: N802
        return _trapezoid("Qp", tuple(t), self.conventions)

    def K(self, *t: int) -> Fraction:  # noqa: N802
        return _trapezoid("K", tuple(t), self.conventions)

    def Kp(self, *t: int) -> Fraction:  # noqa: N802
        return _trapezoid("Kp", tuple(t), self.conventions)


def _ratio(num: Sequence[Fraction], den: Sequence[Fraction]) -> Fraction:
    return math.prod(num, start=ONE) / math.prod(den, start=ONE)


def _two_hole(family: str, x: int, y: int, z: int, a: int, b: int, kit: _Kit) -> Fraction:
    T, V = trapezoid_T, trapezoid_V  # noqa: N806
    P, Pp = kit.P, kit.Pp  # noqa: N806
    if family == "H1":
        head = P(y, y + 2 * a, b) * P(z + b, z + b, a) * kit.Q(a, b, x, y + z) / P(y + z + b, y + z + b, a)
        return head * _ratio(
            [T(x + b + 1, y + a - 1, a), T(x + z + a + b + 2, y + a - 1, a), T(2 * a + b + 2, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + a - 1, a), T(z + a + b + 2, y + a - 1, a), T(x + 2 * a + b + 2, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H2":
        head = P(y, y + 2 * a - 1, b) * P(z + b - 1, z + b - 1, a) * kit.K(a, b, x, y + z) / P(y + z + b - 1, y + z + b - 1, a)
        return head * _ratio(
            [T(x + b + 1, y + a - 1, a), T(x + z + a + b + 1, y + a - 1, a), T(2 * a + b + 1, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + a - 1, a), T(z + a + b + 1, y + a - 1, a), T(x + 2 * a + b + 1, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H3":
        head = Pp(y, y + 2 * a, b) * Pp(z + b, z + b, a) * kit.Qp(0, a, b, x, y + z) / Pp(y + z + b, y + z + b, a)
        return head * _ratio(
            [T(x + b + 1, y + a - 1, a), T(x + z + a + b + 1, y + a - 1, a), T(2 * a + b + 1, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + a - 1, a), T(z + a + b + 1, y + a - 1, a), T(x + 2 * a + b + 1, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H4":
        head = Pp(y, y + 2 * a - 1, b) * Pp(z + b - 1, z + b - 1, a) * kit.Kp(a, b, x, y + z) / Pp(y + z + b - 1, y + z + b - 1, a)
        return head * _ratio(
            [T(x + b + 1, y + a - 1, a), T(x + z + a + b, y + a - 1, a), T(2 * a + b, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + a - 1, a), T(z + a + b, y + a - 1, a), T(x + 2 * a + b, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H5":
        head = Pp(y, y + 2 * a + 1, b) * P(z + b, z + b, a) * kit.Q(a, b, x, y + z) / P(y + z + b, y + z + b, a)
        head *= V(2 * a + 2 * b + 3, y + z - 1, y) / V(2 * x + 2 * a + 2 * b + 3, y + z - 1, y)
        return head * _ratio(
            [T(x + b + 1, y + z + 2 * a, y), T(2 * a + b + 2, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + z + 2 * a, y), T(x + 2 * a + b + 2, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H6":
        head = Pp(y, y + 2 * a, b) * P(z + b - 1, z + b - 1, a) * kit.K(a, b, x, y + z) / P(y + z + b - 1, y + z + b - 1, a)
        head *= V(2 * a + 2 * b + 3, y + z - 2, y) / V(2 * x + 2 * a + 2 * b + 3, y + z - 2, y)
        return head * _ratio(
            [T(x + b + 1, y + z + 2 * a - 1, y), T(2 * a + b + 1, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + z + 2 * a - 1, y), T(x + 2 * a + b + 1, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H7":
        head = P(y, y + 2 * a - 1, b) * Pp(z + b, z + b, a) * kit.Qp(a, b, x, y + z) / Pp(y + z + b, y + z + b, a)
        head *= V(2 * a + 2 * b + 1, y + z, y) / V(2 * x + 2 * a + 2 * b + 1, y + z, y)
        return head * _ratio(
            [T(x + b + 1, y + z + 2 * a - 1, y), T(2 * a + b + 1, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + z + 2 * a - 1, y), T(x + 2 * a + b + 1, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    if family == "H8":
        second = z if kit.conventions.h8_subscript == "symmetric" else y
        head = P(y, y + 2 * a - 2, b) * Pp(z + b - 1, second + b - 1, a) * kit.Kp(a, b, x, y + z)
        head /= Pp(y + z + b - 1, y + z + b - 1, a)
        head *= V(2 * a + 2 * b + 1, y + z - 1, y) / V(2 * x + 2 * a + 2 * b + 1, y + z - 1, y)
        return head * _ratio(
            [T(x + b + 1, y + z + 2 * a - 2, y), T(2 * a + b, y + b - 1, b), T(z + 1, y + b - 1, b)],
            [T(b + 1, y + z + 2 * a - 2, y), T(x + 2 * a + b, y + b - 1, b), T(x + z + 1, y + b - 1, b)],
        )
    raise BadParameters(f"unknown family {family!r}")


def _pieces(family: str, x: int, y: int, z: int, a: tuple[int, ...], kit: _Kit) -> Fraction:
    seq = HoleSeq(a)
    big_o, big_e = seq.O, seq.E
    P, Pp = kit.P, kit.Pp  # noqa: N806
    head = (0, *a, y)
    tail = (*a[:-1], a[-1] + z)
    two = Fraction(2)
    if family == "H1":
        return kit.Q(*head) * kit.Q(*tail) / (P(y, y + 2 * big_o, big_e) * P(z + big_e, z + big_e, big_o))
    if family == "H2":
        return kit.K(*head) * kit.K(*tail) / (P(y, y + 2 * big_o - 1, big_e) * P(z + big_e - 1, z + big_e - 1, big_o))
    if family == "H3":
        if kit.conventions.h3_general == "analog":
            top = kit.Qp(*head) * kit.Qp(*tail)
        else:
            top = kit.Qp(*a, z) * kit.Qp(0, *tail)
        return two ** a[0] * top / (Pp(y, y + 2 * big_o, big_e) * Pp(z + big_e, z + big_e, big_o))
    if family == "H4":
        top = kit.Kp(*head) * kit.Kp(*tail)
        return two ** (a[0] - 1) * top / (Pp(y, y + 2 * big_o - 1, big_e) * Pp(z + big_e - 1, z + big_e - 1, big_o))
    if family == "H5":
        top = kit.Kp(0, a[0] + 1, *a[1:], y) * kit.Q(*tail)
        return two ** a[0] * top / (Pp(y, y + 2 * big_o + 1, big_e) * P(z + big_e, z + big_e, big_o))
    if family == "H6":
        top = kit.Qp(*head) * kit.K(*tail)
        return two ** a[0] * top / (Pp(y, y + 2 * big_o, big_e) * P(z + big_e - 1, z + big_e - 1, big_o))
    if family == "H7":
        top = kit.K(*head) * kit.Qp(*tail)
        return top / (P(y, y + 2 * big_o - 1, big_e) * Pp(z + big_e, z + big_e, big_o))
    if family == "H8":
        second = z if kit.conventions.h8_subscript == "symmetric" else y
        top = kit.Q(0, a[0] - 1, *a[1:], y) * kit.Kp(*tail)
        return top / (P(y, y + 2 * big_o - 2, big_e) * Pp(z + big_e - 1, second + big_e - 1, big_o))
    raise BadParameters(f"unknown family {family!r}")


def _trapezoid_ratios(family: str, x: int, y: int, z: int, a: tuple[int, ...]) -> Fraction:
    seq = HoleSeq(a)
    k = len(a) // 2
    shift = _GENERAL_SHIFT[family]
    s_last = seq.s(2 * k)
    value = ONE
    T = trapezoid_T  # noqa: N806
    for i in range(2, k + 1):
        o_i, e_i = seq.o(i), seq.e(i)
        n = seq[2 * i - 2] + o_i - 1
        tail = seq.s(2 * i - 3) + s_last + shift
        value *= T(x + z + e_i + 1, n, o_i) / T(x + y + e_i + 1, n, o_i)
        value *= T(y + e_i + 1, n, o_i) / T(z + e_i + 1, n, o_i)
        value *= T(x + y + tail, n, o_i) / T(x + z + tail, n, o_i)
        value *= T(z + tail, n, o_i) / T(y + tail, n, o_i)
    return value


def normalize_holes(a: HoleInput) -> tuple[int, ...]:
    """Pad a hole sequence to even length; the empty array reads as ``(0, 0)``."""
    entries = _entries(a)
    HoleSeq(entries)
    if not entries:
        return (0, 0)
    return entries if len(entries) % 2 == 0 else entries + (0,)


def _evaluate_h(
    family: str,
    x: int,
    y: int,
    z: int,
    a: HoleInput,
    conventions: Conventions,
    *,
    general: bool = False,
) -> Fraction:
    entries = normalize_holes(a)
    kit = _Kit(conventions)
    if len(entries) == 2 and not general:
        return _two_hole(family, x, y, z, entries[0], entries[1], kit)
    seq = HoleSeq(entries)
    value = _two_hole(family, x, y, z, seq.O, seq.E, kit)
    value *= _pieces(family, x, y, z, entries, kit)
    return value * _trapezoid_ratios(family, x, y, z, entries)


def formula_H(
    family: str,
    x: int,
    y: int,
    z: int,
    a: HoleInput,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    *,
    general: bool = False,
) -> Fraction:
    """Tiling number of the defected halved hexagon ``H^(m)_{x,y,z}(a)``.

    Two-hole sequences use the dedicated two-hole product; longer ones use the
    many-hole product built on top of it. Odd-length sequences get a trailing
    zero hole and the empty sequence is read as ``(0, 0)``.

    Args:
        family: One of ``H1`` ... ``H8``.
        x: First side parameter.
        y: Second side parameter.
        z: Third side parameter.
        a: Hole sizes from west to east.
        conventions: Reading switches for ambiguous factors.
        general: Force the many-hole product even for two holes.

    Raises:
        BadParameters: for an unknown family or negative side parameters.
        FormulaSingular: when a factor is undefined at this point.
    """
    if family not in H_FAMILIES:
        raise BadParameters(f"unknown family {family!r}")
    if min(x, y, z) < 0:
        raise BadParameters(f"{family} needs non-negative x, y, z; got ({x}, {y}, {z})")
    label = f"{family}_{{{x},{y},{z}}}({','.join(map(str, _entries(a)))})"
    with _singular(label):
        return _evaluate_h(family, x, y, z, a, conventions, general=general)


def formula_H1(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H1", x, y, z, a, conventions)


def formula_H2(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H2", x, y, z, a, conventions)


def formula_H3(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H3", x, y, z, a, conventions)


def formula_H4(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H4", x, y, z, a, conventions)


def formula_H5(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H5", x, y, z, a, conventions)


def formula_H6(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H6", x, y, z, a, conventions)


def formula_H7(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H7", x, y, z, a, conventions)


def formula_H8(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    return formula_H("H8", x, y, z, a, conventions)


# --- symmetric hexagon -------------------------------------------------------


@dataclass(frozen=True)
class HalfFactor:
    """One of the two defected halved hexagons a symmetric hexagon factors into.

    Attributes:
        family: ``H2``, ``H3``, ``H5`` or ``H8``.
        x: First side parameter (may be negative at the ends of the range).
        y: Second side parameter.
        z: Third side parameter.
        holes: Hole sizes of the half.
        value: Its formula value.
    """

    family: str
    x: int
    y: int
    z: int
    holes: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class SymmetricFactorization:
    """Decomposition of the symmetric hexagon count ``2^k * M(first) * M(second)``.

    Attributes:
        exponent: ``y + a_2 + ... + a_n``.
        first: The ``H2``/``H5`` half.
        second: The ``H3``/``H8`` half.
        case: Parity case 1..4 (x even/odd crossed with a_1 even/odd).
    """

    exponent: int
    first: HalfFactor
    second: HalfFactor
    case: int

    @property
    def value(self) -> Fraction:
        return Fraction(2) ** self.exponent * self.first.value * self.second.value


def _check_symmetric(x: int, y: int, z: int, a: tuple[int, ...]) -> None:
    if min(x, y, z) < 0:
        raise BadParameters(f"S needs non-negative x, y, z; got ({x}, {y}, {z})")
    if not a or min(a) <= 0:
        raise BadParameters(f"S needs a non-empty sequence of positive holes; got {a}")
    if (x - z) % 2:
        raise ParityMismatch(f"S needs x and z of equal parity; got x={x}, z={z}")


def symmetric_in_range(x: int, y: int, z: int, a: HoleInput) -> bool:
    """Whether ``z`` lies in the window ``2E-1 <= z <= 2y+2E+1`` where S is tileable."""
    big_e = HoleSeq(_entries(a)).E
    return 2 * big_e - 1 <= z <= 2 * y + 2 * big_e + 1


def symmetric_factorization(
    x: int,
    y: int,
    z: int,
    a: HoleInput,
    conventions: Conventions = DEFAULT_CONVENTIONS,
) -> SymmetricFactorization:
    """Split ``S_{x,y,z}(a)`` into its two halved-hexagon factors.

    Raises:
        ParityMismatch: if ``x`` and ``z`` differ in parity.
        BadParameters: if the window ``2E-1 <= z <= 2y+2E+1`` is left or holes
            are not positive.
    """
    entries = _entries(a)
    _check_symmetric(x, y, z, entries)
    if not symmetric_in_range(x, y, z, entries):
        raise BadParameters(f"z={z} is outside the tileable window for S")
    seq = HoleSeq(entries)
    big_e = seq.E
    a1, rest = entries[0], entries[1:]
    exponent = y + sum(rest)
    lift = big_e if conventions.s_x_mapping == "printed" else 0

    if x % 2 == 0:
        first_params = second_params = (x // 2 + lift, y - z // 2 + big_e, z // 2 - big_e)
    elif a1 % 2 == 0:
        first_params = ((x - 1) // 2 + lift, y - (z - 1) // 2 + big_e, (z - 1) // 2 - big_e + 1)
        second_params = ((x + 1) // 2 + lift, y - (z - 1) // 2 + big_e - 1, (z - 1) // 2 - big_e)
    else:
        first_params = ((x + 1) // 2 + lift, y - (z - 1) // 2 + big_e - 1, (z - 1) // 2 - big_e)
        second_params = ((x - 1) // 2 + lift, y - (z - 1) // 2 + big_e, (z - 1) // 2 - big_e + 1)

    if a1 % 2 == 0:
        families = ("H2", "H3")
        first_holes = second_holes = (a1 // 2, *rest)
        case = 1 if x % 2 == 0 else 2
    else:
        families = ("H5", "H8")
        first_holes, second_holes = ((a1 - 1) // 2, *rest), ((a1 + 1) // 2, *rest)
        case = 3 if x % 2 == 0 else 4

    halves = []
    for family, params, holes in zip(families, (first_params, second_params), (first_holes, second_holes)):
        label = f"{family}_{{{params[0]},{params[1]},{params[2]}}}({','.join(map(str, holes))})"
        with _singular(label):
            value = _evaluate_h(family, *params, holes, conventions)
        halves.append(HalfFactor(family, *params, holes=tuple(holes), value=value))
    return SymmetricFactorization(exponent=exponent, first=halves[0], second=halves[1], case=case)


def formula_S(x: int, y: int, z: int, a: HoleInput, conventions: Conventions = DEFAULT_CONVENTIONS) -> Fraction:  # noqa: N802
    """Tiling number of the symmetric hexagon ``S_{x,y,z}(a)`` with an axis hole array.

    Returns 0 outside the window ``2E-1 <= z <= 2y+2E+1``.

    Raises:
        ParityMismatch: if ``x`` and ``z`` differ in parity.
    """
    entries = _entries(a)
    _check_symmetric(x, y, z, entries)
    if not symmetric_in_range(x, y, z, entries):
        return Fraction(0)
    return symmetric_factorization(x, y, z, entries, conventions).value


# --- dispatch ----------------------------------------------------------------


def evaluate_formula(spec: RegionSpec, conventions: Conventions = DEFAULT_CONVENTIONS) -> FormulaResult:
    """Evaluate the closed form named by ``spec``."""
    family = spec.family
    holes = tuple(spec.holes)
    if family == "P":
        value = formula_P(spec.a, spec.b, spec.c)
    elif family == "Pp":
        value = formula_Pprime(spec.a, spec.b, spec.c, conventions)
    elif family in TRAPEZOID_FAMILIES:
        value = _public_trapezoid(family, holes, conventions)
    elif family in H_FAMILIES:
        value = formula_H(family, spec.x, spec.y, spec.z, holes, conventions)
    else:
        value = formula_S(spec.x, spec.y, spec.z, holes, conventions)
    return FormulaResult(value=value, family=family, params=spec.params())
