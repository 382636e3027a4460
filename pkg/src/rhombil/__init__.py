"""rhombil: exact lozenge tiling counts of halved hexagons with triangular holes."""

from rhombil.engine import count_tilings, count_tilings_reference, kuo_corner_delete, reduce_forced
from rhombil.exceptions import (
    CalibrationError,
    EngineError,
    FormulaError,
    GeometryError,
    ResourceLimit,
    RhombilError,
)
from rhombil.formulas import (
    evaluate_formula,
    formula_H,
    formula_K,
    formula_Kprime,
    formula_P,
    formula_Pprime,
    formula_Q,
    formula_Qprime,
    formula_S,
)
from rhombil.lattice import Cell, Region, build_region, ciucu_split, region_split_check
from rhombil.render import render_region
from rhombil.schemas import CountReport, GridSpec, RegionDocument, RegionSpec, VerdictRecord

__all__ = [
    "CalibrationError",
    "Cell",
    "CountReport",
    "EngineError",
    "FormulaError",
    "GeometryError",
    "GridSpec",
    "Region",
    "RegionDocument",
    "RegionSpec",
    "ResourceLimit",
    "RhombilError",
    "VerdictRecord",
    "build_region",
    "ciucu_split",
    "count_tilings",
    "count_tilings_reference",
    "evaluate_formula",
    "formula_H",
    "formula_K",
    "formula_Kprime",
    "formula_P",
    "formula_Pprime",
    "formula_Q",
    "formula_Qprime",
    "formula_S",
    "kuo_corner_delete",
    "reduce_forced",
    "region_split_check",
    "render_region",
]
