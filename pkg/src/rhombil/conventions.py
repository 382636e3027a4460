"""Reading switches for the places where the printed formulas are ambiguous.

Every switch has a default that the tiling counter confirms;
``rhombil calibrate`` re-runs that check. Index slips with a single correct
reading are fixed in the evaluators and have no switch.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Literal

OddLengthRule = Literal["drop_leading_zero", "append_zero", "reject"]


@dataclass(frozen=True)
class Conventions:
    """Resolved readings used by the formula evaluators and the region builders.

    Attributes:
        hyperfactorial2_reading: Odd case of ``H_2``: ``strict_skip`` (1!3!5!...)
            or ``printed`` (1!2!3!...).
        pprime_limit: Upper limit of the leading product in the weighted halved
            hexagon formula, ``a`` or ``b``.
        odd_length: How an odd-length trapezoid sequence is made even.
            ``drop_leading_zero`` drops a leading 0 and otherwise appends one.
        h8_subscript: Middle ``P'`` factor of the two-hole mixed formula:
            ``symmetric`` uses ``z+b-1`` twice, ``printed`` uses ``z+b-1, y+b-1``.
        hole_anchor: Odd-level hole arrays start at the outer (``X=-1``) or the
            inner (``X=+1``) zigzag vertex.
        h3_general: Trapezoid factors of the weighted many-hole formula:
            ``analog`` mirrors the unweighted one, ``printed`` keeps the text.
        s_x_mapping: First parameter of the halves of the symmetric hexagon:
            ``hexagon`` uses ``x/2``, ``printed`` uses ``x/2 + E``.
    """

    hyperfactorial2_reading: Literal["strict_skip", "printed"] = "strict_skip"
    pprime_limit: Literal["a", "b"] = "a"
    odd_length: OddLengthRule = "drop_leading_zero"
    h8_subscript: Literal["symmetric", "printed"] = "symmetric"
    hole_anchor: Literal["outer", "inner"] = "outer"
    h3_general: Literal["analog", "printed"] = "analog"
    s_x_mapping: Literal["hexagon", "printed"] = "hexagon"

    def with_switch(self, name: str, value: str) -> Conventions:
        return replace(self, **{name: value})

    def as_dict(self) -> dict[str, str]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT_CONVENTIONS = Conventions()

SWITCH_VARIANTS: dict[str, tuple[str, ...]] = {
    "hyperfactorial2_reading": ("strict_skip", "printed"),
    "pprime_limit": ("a", "b"),
    "odd_length": ("drop_leading_zero", "append_zero"),
    "h8_subscript": ("symmetric", "printed"),
    "hole_anchor": ("outer", "inner"),
    "h3_general": ("analog", "printed"),
    "s_x_mapping": ("hexagon", "printed"),
}
