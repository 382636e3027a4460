"""Shared schemas for rhombil."""

from rhombil.schemas.region import FAMILY_PARAMS, Family, RegionDocument, RegionSpec
from rhombil.schemas.report import (
    CalibrationReport,
    CountReport,
    ExactValue,
    GridSpec,
    SwitchOutcome,
    VerdictRecord,
)

__all__ = [
    "FAMILY_PARAMS",
    "CalibrationReport",
    "CountReport",
    "ExactValue",
    "Family",
    "GridSpec",
    "RegionDocument",
    "RegionSpec",
    "SwitchOutcome",
    "VerdictRecord",
]
