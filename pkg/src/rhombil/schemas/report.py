"""Report models emitted by the counters and the verification harness."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from rhombil.schemas.region import Family

VerdictStatus = Literal["pass", "fail", "singular", "resource", "skipped"]


class ExactValue(BaseModel):
    """An exact rational in lowest terms.

    Attributes:
        num: Numerator.
        den: Positive denominator.
    """

    num: int
    den: int = Field(default=1, ge=1)

    @classmethod
    def of(cls, value: Fraction | int) -> ExactValue:
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


class CountReport(BaseModel):
    """Result of one count or formula evaluation.

    Attributes:
        family: Family tag.
        params: Family parameters.
        value: The reported value (oracle count for ``count``, closed form for ``formula``).
        cells: Number of unit triangles in the region, when one was built.
        formula: Closed-form value when both sides were computed.
        oracle: Tiling-counter value when both sides were computed.
        agree: Whether ``formula == oracle`` exactly.
        elapsed_ms: Wall time, only present with ``--timings``.
    """

    family: str
    params: dict[str, Any] = Field(default_factory=dict)
    value: ExactValue
    cells: int | None = None
    formula: ExactValue | None = None
    oracle: ExactValue | None = None
    agree: bool | None = None
    elapsed_ms: float | None = None


class VerdictRecord(BaseModel):
    """Outcome of checking one identity at one grid point.

    Attributes:
        suite: Harness suite that produced the record.
        identity: Name of the checked identity.
        family: Family the point belongs to.
        point: Grid point parameters.
        formula: Left-hand (closed form) value.
        oracle: Right-hand (counter or second expression) value.
        status: ``pass``, ``fail``, ``singular``, ``resource`` or ``skipped``.
        delta: ``formula - oracle`` when both exist.
        detail: Free-form explanation for non-pass records.
        elapsed_ms: Wall time, only kept with ``--timings``.
    """

    suite: str
    identity: str
    family: str
    point: dict[str, Any] = Field(default_factory=dict)
    formula: ExactValue | None = None
    oracle: ExactValue | None = None
    status: VerdictStatus
    delta: ExactValue | None = None
    detail: str | None = None
    elapsed_ms: float | None = None

    @model_validator(mode="after")
    def _pass_iff_zero_delta(self) -> VerdictRecord:
        if self.status == "pass" and (self.delta is None or self.delta.num != 0):
            raise ValueError("a passing verdict needs delta == 0")
        if self.status == "fail" and self.delta is not None and self.delta.num == 0:
            raise ValueError("a failing verdict cannot have delta == 0")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def sort_key(self) -> tuple[str, str, str, str]:
        return (self.suite, self.identity, self.family, repr(sorted(self.point.items())))


class GridSpec(BaseModel):
    """A finite parameter grid for one family.

    Attributes:
        family: Family tag.
        max_param: Upper bound for ``a, b, c`` or ``x, y, z``.
        min_param: Lower bound for ``x, y, z`` (1 for recurrences).
        hole_lengths: Admissible hole sequence lengths.
        max_entry: Upper bound for each hole entry.
        positive_holes: Require entries >= 1 (symmetric hexagon).
        skip_singular: Record singular points as skipped instead of failing.
    """

    family: Family
    max_param: int = Field(default=2, ge=0)
    min_param: int = Field(default=0, ge=0)
    hole_lengths: tuple[int, ...] = (2,)
    max_entry: int = Field(default=2, ge=0)
    positive_holes: bool = False
    skip_singular: bool = True


class SwitchOutcome(BaseModel):
    """Calibration result for one convention switch.

    Attributes:
        switch: Switch name.
        variants: Every variant that was tried.
        passing: Variants that matched the counter at every calibration point.
        chosen: The single passing variant, if exactly one passed.
        points: Number of calibration regions compared per variant.
    """

    switch: str
    variants: list[str]
    passing: list[str]
    chosen: str | None = None
    points: int = 0


class CalibrationReport(BaseModel):
    """Which reading of each ambiguous factor agrees with the tiling counter."""

    outcomes: list[SwitchOutcome] = Field(default_factory=list)

    @property
    def resolved(self) -> bool:
        return all(o.chosen is not None for o in self.outcomes)

    def choices(self) -> dict[str, str | None]:
        return {o.switch: o.chosen for o in self.outcomes}
