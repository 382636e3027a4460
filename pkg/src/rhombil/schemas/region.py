"""Region parameters and serialized region models."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Family = Literal["P", "Pp", "Q", "Qp", "K", "Kp", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "S"]

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "P": ("a", "b", "c"),
    "Pp": ("a", "b", "c"),
    "Q": ("holes",),
    "Qp": ("holes",),
    "K": ("holes",),
    "Kp": ("holes",),
    "S": ("x", "y", "z", "holes"),
    **{f"H{m}": ("x", "y", "z", "holes") for m in range(1, 9)},
}


class RegionSpec(BaseModel):
    """A family tag plus the integer parameters that pick one region.

    Attributes:
        family: ``P``, ``Pp`` (weighted), ``Q``, ``Qp``, ``K``, ``Kp``,
            ``H1`` ... ``H8`` or ``S``.
        a: Halved hexagon parameter (``P`` families).
        b: Halved hexagon parameter (``P`` families).
        c: Halved hexagon parameter (``P`` families).
        x: Side parameter (``H`` families and ``S``).
        y: Side parameter (``H`` families and ``S``).
        z: Side parameter (``H`` families and ``S``).
        holes: Trapezoid sequence ``t`` or hole sizes ``a``.
    """

    model_config = ConfigDict(frozen=True)

    family: Family
    a: int | None = Field(default=None, ge=0)
    b: int | None = Field(default=None, ge=0)
    c: int | None = Field(default=None, ge=0)
    x: int | None = Field(default=None, ge=0)
    y: int | None = Field(default=None, ge=0)
    z: int | None = Field(default=None, ge=0)
    holes: tuple[int, ...] = ()

    @field_validator("holes")
    @classmethod
    def _non_negative_holes(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(v < 0 for v in value):
            raise ValueError(f"hole sizes must be non-negative, got {value}")
        return value

    @model_validator(mode="after")
    def _required_params(self) -> RegionSpec:
        missing = [name for name in FAMILY_PARAMS[self.family] if name != "holes" and getattr(self, name) is None]
        if missing:
            raise ValueError(f"family {self.family} needs {', '.join('--' + m for m in missing)}")
        return self

    def params(self) -> dict[str, Any]:
        """Return only the parameters meaningful for this family."""
        return {name: (list(self.holes) if name == "holes" else getattr(self, name)) for name in FAMILY_PARAMS[self.family]}

    def label(self) -> str:
        holes = ",".join(str(h) for h in self.holes)
        if self.family in ("P", "Pp"):
            return f"{self.family}_{{{self.a},{self.b},{self.c}}}"
        if self.family in ("Q", "Qp", "K", "Kp"):
            return f"{self.family}({holes})"
        return f"{self.family}_{{{self.x},{self.y},{self.z}}}({holes})"


class RegionDocument(BaseModel):
    """Serialized region: explicit cells plus non-unit lozenge weights.

    Field order is fixed so that dumps diff cleanly.

    Attributes:
        family: Family tag, or ``"custom"`` for hand-made regions.
        params: Family parameters as produced by :meth:`RegionSpec.params`.
        cells: ``[row, col, "U"|"D"]`` triples, sorted.
        weights: ``[cellA, cellB, num, den]`` entries, sorted.
    """

    family: str = "custom"
    params: dict[str, Any] = Field(default_factory=dict)
    cells: list[tuple[int, int, Literal["U", "D"]]] = Field(default_factory=list)
    weights: list[tuple[tuple[int, int, Literal["U", "D"]], tuple[int, int, Literal["U", "D"]], int, int]] = Field(
        default_factory=list
    )
