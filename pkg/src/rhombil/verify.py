"""Identity-checking harness.

Every check compares two exact rationals and emits a :class:`VerdictRecord`.
Grid points are independent; with ``jobs > 1`` they are spread over a
process pool and the records are sorted afterwards, so the output does not
depend on the pool size.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from multiprocessing import Pool
from typing import Any, TypeVar

from rhombil.combinat import HoleSeq, pochhammer, skip_pochhammer, trapezoid_T, trapezoid_V
from rhombil.config import RHOMBIL_CLAIM_SAMPLES, RHOMBIL_SEED
from rhombil.conventions import DEFAULT_CONVENTIONS, SWITCH_VARIANTS, Conventions
from rhombil.engine import count_tilings, kuo_check
from rhombil.exceptions import (
    AmbiguousCalibration,
    ArithmeticDomainError,
    BadParameters,
    ClassViolation,
    EngineError,
    FormulaSingular,
    GeometryError,
    Indivisible,
    MissingCell,
    NoVariantPasses,
    ResourceLimit,
)
from rhombil.formulas import (
    H_FAMILIES,
    evaluate_formula,
    formula_H,
    formula_Kprime,
    formula_P,
    formula_Q,
    normalize_holes,
    symmetric_factorization,
    symmetric_in_range,
)
from rhombil.lattice import build_H, build_region, build_S, ciucu_split, hexagon_layout, region_split_check, symmetric_layout
from rhombil.schemas import (
    CalibrationReport,
    ExactValue,
    GridSpec,
    RegionSpec,
    SwitchOutcome,
    VerdictRecord,
)
from rhombil.utils.logging_config import get_logger

# Initialize logger for this module
logger = get_logger(__name__)

SUITES = ("family", "kuo", "ciucu", "claims")
FAMILY_ORDER = ("P", "Pp", "Q", "Qp", "K", "Kp", *H_FAMILIES, "S")
ENGINE_KUO_FAMILIES = ("H1", "H5")
MIN_COVERAGE = 20

T = TypeVar("T")


# --- records -------------------------------------------------------------------


def _ms(started: float) -> float:
    return round((time.perf_counter() - started) * 1000, 3)


def compare(
    suite: str,
    identity: str,
    family: str,
    point: dict[str, Any],
    formula: Fraction | int,
    oracle: Fraction | int,
    *,
    detail: str | None = None,
    elapsed_ms: float | None = None,
) -> VerdictRecord:
    """Exact comparison; the record passes iff ``formula - oracle == 0``."""
    delta = Fraction(formula) - Fraction(oracle)
    return VerdictRecord(
        suite=suite,
        identity=identity,
        family=family,
        point=point,
        formula=ExactValue.of(formula),
        oracle=ExactValue.of(oracle),
        status="pass" if delta == 0 else "fail",
        delta=ExactValue.of(delta),
        detail=detail,
        elapsed_ms=elapsed_ms,
    )


def _status(suite: str, identity: str, family: str, point: dict[str, Any], status: str, detail: str) -> VerdictRecord:
    return VerdictRecord(suite=suite, identity=identity, family=family, point=point, status=status, detail=detail)


def _guarded(
    suite: str, identity: str, family: str, point: dict[str, Any], check: Callable[[], VerdictRecord]
) -> VerdictRecord:
    """Run one check, turning known failure modes into non-pass records."""
    try:
        return check()
    except (FormulaSingular, ArithmeticDomainError, ZeroDivisionError) as exc:
        return _status(suite, identity, family, point, "singular", str(exc))
    except ResourceLimit as exc:
        return _status(suite, identity, family, point, "resource", str(exc))
    except (GeometryError, MissingCell, ClassViolation) as exc:
        return _status(suite, identity, family, point, "skipped", str(exc))


def _run(task: Callable[[T], list[VerdictRecord]], items: Iterable[T], jobs: int) -> list[VerdictRecord]:
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with Pool(processes=jobs) as pool:
            chunks = pool.map(task, items)
    else:
        chunks = [task(item) for item in items]
    return sorted((record for chunk in chunks for record in chunk), key=VerdictRecord.sort_key)


# --- grids ---------------------------------------------------------------------


def _hole_sequences(grid: GridSpec) -> list[tuple[int, ...]]:
    low = 1 if grid.positive_holes else 0
    sequences = []
    for length in grid.hole_lengths:
        sequences.extend(itertools.product(range(low, grid.max_entry + 1), repeat=length))
    return sequences


def _inadmissible(spec: RegionSpec) -> str | None:
    """Why ``spec`` lies outside its family's domain, or ``None`` if it does not."""
    try:
        if spec.family in H_FAMILIES:
            hexagon_layout(int(spec.family[1:]), spec.x, spec.y, spec.z, spec.holes)
        elif spec.family == "S":
            symmetric_layout(spec.x, spec.y, spec.z, spec.holes)
        elif spec.family in ("K", "Kp") and HoleSeq(spec.holes).E < 1:
            return f"{spec.family} needs E(t) >= 1"
    except (BadParameters, GeometryError, ArithmeticDomainError) as exc:
        return str(exc)
    return None


def grid_candidates(grid: GridSpec) -> list[tuple[RegionSpec, str | None]]:
    """Every parameter point of ``grid`` in a fixed order, with the reason it is inadmissible."""
    family = grid.family
    top = grid.max_param
    if family in ("P", "Pp"):
        return [
            (RegionSpec(family=family, a=a, b=b, c=c), None)
            for b in range(top + 1)
            for a in range(b + 1)
            for c in range(top + 1)
        ]
    holes = _hole_sequences(grid)
    if family in ("Q", "Qp", "K", "Kp"):
        candidates = [RegionSpec(family=family, holes=t) for t in holes]
        return [(spec, _inadmissible(spec)) for spec in candidates]
    points: list[tuple[RegionSpec, str | None]] = []
    sides = range(grid.min_param, top + 1)
    for x, y in itertools.product(sides, repeat=2):
        for a in holes:
            if family == "S":
                seq = HoleSeq(a)
                height = 2 * y + 2 * seq.O - a[0] + 2 * seq.E
                heights: Iterable[int] = range(x % 2, height + 1, 2)
            else:
                heights = sides
            for z in heights:
                spec = RegionSpec(family=family, x=x, y=y, z=z, holes=a)
                points.append((spec, _inadmissible(spec)))
    return points


def grid_points(grid: GridSpec) -> list[RegionSpec]:
    """Enumerate the admissible parameter points of ``grid`` in a fixed order."""
    return [spec for spec, reason in grid_candidates(grid) if reason is None]


def skipped_records(
    suite: str, identity: str, candidates: Iterable[tuple[RegionSpec, str | None]]
) -> list[VerdictRecord]:
    """One ``skipped`` record for every candidate outside its family's domain."""
    return [
        _status(suite, identity, spec.family, spec.params(), "skipped", reason)
        for spec, reason in candidates
        if reason is not None
    ]


def default_family_grids(max_param: int) -> list[GridSpec]:
    """Grids of the ``family`` suite for the ``--max`` bound."""
    entry = min(max_param, 2)
    grids = [GridSpec(family="P", max_param=max_param + 1), GridSpec(family="Pp", max_param=max_param + 1)]
    for family in ("Q", "Qp", "K", "Kp"):
        grids.append(GridSpec(family=family, hole_lengths=(2, 4), max_entry=entry))
    for family in H_FAMILIES:
        grids.append(GridSpec(family=family, max_param=max_param, hole_lengths=(2,), max_entry=entry))
        grids.append(GridSpec(family=family, max_param=min(max_param, 1), hole_lengths=(4,), max_entry=1))
    grids.append(GridSpec(family="S", max_param=max_param, hole_lengths=(1, 2), max_entry=entry, positive_holes=True))
    return grids


# --- family suite --------------------------------------------------------------


def _family_task(item: tuple[RegionSpec, Conventions, bool]) -> list[VerdictRecord]:
    spec, conventions, timings = item
    point = spec.params()

    def check() -> VerdictRecord:
        started = time.perf_counter()
        formula = evaluate_formula(spec, conventions).value
        oracle = count_tilings(build_region(spec, conventions))
        return compare(
            "family", "formula-vs-count", spec.family, point, formula, oracle, elapsed_ms=_ms(started) if timings else None
        )

    return [_guarded("family", "formula-vs-count", spec.family, point, check)]


def verify_family(
    grid: GridSpec,
    *,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    jobs: int = 1,
    timings: bool = False,
) -> list[VerdictRecord]:
    """Compare the closed form with the tiling count at every grid point.

    Points outside the family's domain come back as ``skipped`` records.
    """
    candidates = grid_candidates(grid)
    points = [spec for spec, reason in candidates if reason is None]
    skipped = skipped_records("family", "formula-vs-count", candidates)
    logger.info("Verifying family", family=grid.family, points=len(points), skipped=len(skipped))
    records = _run(_family_task, [(spec, conventions, timings) for spec in points], jobs)
    return sorted(records + skipped, key=VerdictRecord.sort_key)


def coverage_records(records: Sequence[VerdictRecord], minimum: int = MIN_COVERAGE) -> list[VerdictRecord]:
    """One record per family: at least ``minimum`` points were actually compared."""
    compared = Counter(r.family for r in records if r.identity == "formula-vs-count" and r.status in ("pass", "fail"))
    return [
        compare("family", "coverage", family, {}, compared[family], max(compared[family], minimum))
        for family in FAMILY_ORDER
    ]


def verify_padding(max_param: int, conventions: Conventions = DEFAULT_CONVENTIONS) -> list[VerdictRecord]:
    """An odd hole array reads the same as the array with a trailing zero hole."""
    records = []
    entries = range(min(max_param, 2) + 1)
    for x, y, z in itertools.product(range(max_param + 1), repeat=3):
        for a in itertools.product(entries, repeat=3):
            point = {"x": x, "y": y, "z": z, "holes": list(a)}
            records.append(
                _guarded(
                    "family",
                    "odd-padding",
                    "H1",
                    point,
                    lambda: compare(
                        "family",
                        "odd-padding",
                        "H1",
                        point,
                        formula_H("H1", x, y, z, a, conventions),
                        formula_H("H1", x, y, z, (*a, 0), conventions),
                    ),
                )
            )
    return records


def verify_collapse(max_param: int, conventions: Conventions = DEFAULT_CONVENTIONS) -> list[VerdictRecord]:
    """The many-hole products reduce to the two-hole products for two holes.

    Only points inside the family's domain are compared; the rest are skipped.
    """
    records = []
    entries = range(min(max_param, 2) + 1)
    for family in H_FAMILIES:
        for x, y, z in itertools.product(range(max_param + 1), repeat=3):
            for a in itertools.product(entries, repeat=2):
                point = {"x": x, "y": y, "z": z, "holes": list(a)}
                reason = _inadmissible(RegionSpec(family=family, x=x, y=y, z=z, holes=a))
                if reason is not None:
                    records.append(_status("family", "two-hole-collapse", family, point, "skipped", reason))
                    continue
                records.append(
                    _guarded(
                        "family",
                        "two-hole-collapse",
                        family,
                        point,
                        lambda: compare(
                            "family",
                            "two-hole-collapse",
                            family,
                            point,
                            formula_H(family, x, y, z, a, conventions, general=True),
                            formula_H(family, x, y, z, a, conventions),
                        ),
                    )
                )
    return records


def run_family_suite(
    max_param: int,
    *,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    jobs: int = 1,
    timings: bool = False,
) -> list[VerdictRecord]:
    records: list[VerdictRecord] = []
    for grid in default_family_grids(max_param):
        records.extend(verify_family(grid, conventions=conventions, jobs=jobs, timings=timings))
    if max_param >= 2:
        records.extend(coverage_records(records))
    records.extend(verify_padding(max_param, conventions))
    records.extend(verify_collapse(min(max_param, 2), conventions))
    return sorted(records, key=VerdictRecord.sort_key)


# --- condensation suite --------------------------------------------------------


def _recurrence_sides(h: Callable[[int, int, int], Fraction], x: int, y: int, z: int) -> tuple[Fraction, Fraction]:
    left = h(x, y, z) * h(x, y - 1, z - 1)
    right = h(x, y - 1, z) * h(x, y, z - 1) + h(x + 1, y - 1, z - 1) * h(x - 1, y, z)
    return left, right


def _term_closed_forms(family: str, x: int, y: int, z: int, a: int, b: int) -> tuple[Fraction, Fraction]:
    if family == "H1":
        den = (2 * x + 2 * y + 2 * z + 2 * a + 2 * b - 1) * (x + y + z + 2 * a + 2 * b)
        first = Fraction((2 * x + y + z + 2 * a + 2 * b) * (2 * y + 2 * z + 2 * a + 2 * b - 1), den)
        return first, Fraction(x * (2 * x + 2 * a + 2 * b + 1), den)
    den = (x + y + z + a + b) * (x + y + z + 2 * a + 2 * b)
    first = Fraction((y + z + a + b) * (2 * x + y + z + 2 * a + 2 * b), den)
    return first, Fraction(x * (x + a + b), den)


def _outside_term(family: str, x: int, y: int, z: int, a: tuple[int, ...], conventions: Conventions) -> str | None:
    """First recurrence term that leaves the family's domain, as a reason string."""
    m = int(family[1:])
    terms = ((x, y, z), (x, y - 1, z - 1), (x, y - 1, z), (x, y, z - 1), (x + 1, y - 1, z - 1), (x - 1, y, z))
    for term in terms:
        try:
            hexagon_layout(m, *term, a, conventions)
        except BadParameters as exc:
            return f"term {family}{term} is outside the domain: {exc}"
    return None


def _kuo_task(item: tuple[str, RegionSpec, Conventions, bool]) -> list[VerdictRecord]:
    family, spec, conventions, timings = item
    x, y, z, a = spec.x, spec.y, spec.z, tuple(spec.holes)
    point = spec.params()
    outside = _outside_term(family, x, y, z, a, conventions)
    if outside is not None:
        return [_status("kuo", "recurrence", family, point, "skipped", outside)]

    def h(x_: int, y_: int, z_: int) -> Fraction:
        return formula_H(family, x_, y_, z_, a, conventions)

    def recurrence() -> VerdictRecord:
        started = time.perf_counter()
        left, right = _recurrence_sides(h, x, y, z)
        return compare("kuo", "recurrence", family, point, left, right, elapsed_ms=_ms(started) if timings else None)

    records = [_guarded("kuo", "recurrence", family, point, recurrence)]

    if family in ENGINE_KUO_FAMILIES:
        def condensation() -> VerdictRecord:
            started = time.perf_counter()
            check = kuo_check(build_H(int(family[1:]), x, y, z, a, conventions))
            return compare(
                "kuo", "condensation", family, point, check.left, check.right, elapsed_ms=_ms(started) if timings else None
            )

        engine = _guarded("kuo", "condensation", family, point, condensation)
        records.append(engine)
        if records[0].failed and engine.passed:
            records[0] = records[0].model_copy(
                update={"detail": "condensation holds on the region but the closed form breaks the recurrence"}
            )
        elif engine.failed:
            records[-1] = engine.model_copy(update={"detail": "condensation fails on the region; suspect the counter"})

        holes = normalize_holes(a)
        if len(holes) == 2:
            def first_term() -> VerdictRecord:
                ratio = h(x, y - 1, z) / h(x, y - 1, z - 1) * h(x, y, z - 1) / h(x, y, z)
                return compare("kuo", "recurrence-first-term", family, point, ratio, _term_closed_forms(family, x, y, z, *holes)[0])

            def second_term() -> VerdictRecord:
                ratio = h(x + 1, y - 1, z - 1) / h(x, y - 1, z - 1) * h(x - 1, y, z) / h(x, y, z)
                return compare("kuo", "recurrence-second-term", family, point, ratio, _term_closed_forms(family, x, y, z, *holes)[1])

            records.append(_guarded("kuo", "recurrence-first-term", family, point, first_term))
            records.append(_guarded("kuo", "recurrence-second-term", family, point, second_term))
    return records


def verify_kuo(
    family: str,
    grid: GridSpec,
    *,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    jobs: int = 1,
    timings: bool = False,
) -> list[VerdictRecord]:
    """Check the condensation recurrence for ``family`` on every point with ``x, y, z >= 1``.

    The closed form is checked against the recurrence; for the families in
    :data:`ENGINE_KUO_FAMILIES` the counter also checks the raw condensation
    identity on the region with its eastern corners removed, which triages a
    failing recurrence to the formulas or to the counter. A point is skipped
    when any of the six terms of the recurrence lies outside the domain.
    """
    if family not in H_FAMILIES:
        raise BadParameters(f"condensation recurrences exist for H1..H8, not {family!r}")
    shifted = grid.model_copy(update={"family": family, "min_param": max(1, grid.min_param)})
    points = [spec for spec, _ in grid_candidates(shifted)]
    logger.info("Verifying condensation", family=family, points=len(points))
    return _run(_kuo_task, [(family, spec, conventions, timings) for spec in points], jobs)


def _base_products(family: str, x: int, y: int, z: int, a: tuple[int, ...], conventions: Conventions) -> Fraction:
    Q = lambda *t: formula_Q(t, conventions)  # noqa: E731, N806
    if family == "H1":
        if x == 0:
            return Q(0, *a, y) * Q(*a[:-1], a[-1] + z)
        if y == 0:
            return Q(0, *a[:-1]) * Q(*a, x, z)
        return Q(0, *a[:-1], a[-1] + x, y) * Q(*a)
    Kp = lambda *t: formula_Kprime(t, conventions)  # noqa: E731, N806
    lead = Fraction(2) ** a[0]
    if x == 0:
        return lead * Kp(0, a[0] + 1, *a[1:], y) * Q(*a[:-1], a[-1] + z)
    if y == 0:
        return lead * Kp(0, a[0] + 1, *a[1:-1]) * Q(*a, x, z)
    return lead * Kp(0, a[0] + 1, *a[1:-1], a[-1] + x, y) * Q(*a)


def _base_sequences(max_param: int) -> list[tuple[int, ...]]:
    """Hole arrays of two, three and four positive entries; longer arrays stay at 1."""
    top = min(max_param, 2)
    sequences: list[tuple[int, ...]] = list(itertools.product(range(1, top + 1), repeat=2))
    for length in (3, 4):
        sequences.extend(itertools.product(range(1, min(top, 1) + 1), repeat=length))
    return sequences


def verify_base_cases(
    max_param: int, conventions: Conventions = DEFAULT_CONVENTIONS, *, with_counts: bool = True
) -> list[VerdictRecord]:
    """Boundary cases ``x = 0``, ``y = 0``, ``z = 0`` of ``H1`` and ``H5`` as trapezoid products.

    Odd hole arrays are padded with a zero hole before they are split. With
    ``with_counts`` the ``H1`` regions with ``x = 0`` are also cut along the
    hole row and the two parts counted separately whenever the cut is
    admissible.
    """
    records = []
    for family in ENGINE_KUO_FAMILIES:
        for x, y, z in itertools.product(range(max_param + 1), repeat=3):
            if 0 not in (x, y, z):
                continue
            for a in _base_sequences(max_param):
                point = {"x": x, "y": y, "z": z, "holes": list(a)}
                records.append(
                    _guarded(
                        "kuo",
                        "base-case",
                        family,
                        point,
                        lambda: compare(
                            "kuo",
                            "base-case",
                            family,
                            point,
                            formula_H(family, x, y, z, a, conventions),
                            _base_products(family, x, y, z, normalize_holes(a), conventions),
                        ),
                    )
                )
                if with_counts and family == "H1" and x == 0:
                    records.append(_guarded("kuo", "split-multiplicativity", family, point, lambda: _split_record(y, z, a, conventions)))
    return records


def _split_record(y: int, z: int, a: tuple[int, ...], conventions: Conventions) -> VerdictRecord:
    point = {"x": 0, "y": y, "z": z, "holes": list(a)}
    region = build_H(1, 0, y, z, a, conventions)
    level = hexagon_layout(1, 0, y, z, a, conventions).level
    try:
        upper, lower = region_split_check(region, level)
    except Indivisible as exc:
        return _status("kuo", "split-multiplicativity", "H1", point, "skipped", f"cut at line {level}: {exc}")
    return compare(
        "kuo", "split-multiplicativity", "H1", point, count_tilings(upper) * count_tilings(lower), count_tilings(region)
    )


def run_kuo_suite(
    max_param: int,
    *,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    jobs: int = 1,
    timings: bool = False,
) -> list[VerdictRecord]:
    entry = min(max_param, 2)
    records: list[VerdictRecord] = []
    for family in H_FAMILIES:
        grid = GridSpec(family=family, max_param=max(max_param, 1), min_param=1, max_entry=entry)
        records.extend(verify_kuo(family, grid, conventions=conventions, jobs=jobs, timings=timings))
    records.extend(verify_base_cases(max_param, conventions))
    return sorted(records, key=VerdictRecord.sort_key)


# --- symmetric hexagon suite ---------------------------------------------------


def _ciucu_task(item: tuple[RegionSpec, Conventions, bool]) -> list[VerdictRecord]:
    spec, conventions, timings = item
    x, y, z, a = spec.x, spec.y, spec.z, tuple(spec.holes)
    point = spec.params()
    started = time.perf_counter()
    try:
        region = build_S(x, y, z, a)
        split = ciucu_split(region)
        whole, plus, minus = count_tilings(region), count_tilings(split.plus), count_tilings(split.minus)
    except ResourceLimit as exc:
        return [_status("ciucu", "factorization", "S", point, "resource", str(exc))]
    except (GeometryError, EngineError) as exc:
        return [_status("ciucu", "factorization", "S", point, "skipped", str(exc))]
    elapsed = _ms(started) if timings else None
    records = [
        compare("ciucu", "factorization", "S", point, 2**split.k * plus * minus, whole, elapsed_ms=elapsed),
        compare("ciucu", "exponent", "S", point, y + sum(a[1:]), split.k),
    ]

    def halves() -> list[VerdictRecord]:
        factors = symmetric_factorization(x, y, z, a, conventions)
        expected = sorted([factors.first.value, factors.second.value])
        counted = sorted([plus, minus])
        detail = f"case {factors.case}: {factors.first.family} x {factors.second.family}"
        return [
            compare("ciucu", "half-smaller", "S", point, expected[0], counted[0], detail=detail),
            compare("ciucu", "half-larger", "S", point, expected[1], counted[1], detail=detail),
        ]

    try:
        records.extend(halves())
    except (FormulaSingular, ArithmeticDomainError, ZeroDivisionError) as exc:
        records.append(_status("ciucu", "halves", "S", point, "singular", str(exc)))
    return records


def verify_ciucu(
    grid: GridSpec,
    *,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    jobs: int = 1,
    timings: bool = False,
) -> list[VerdictRecord]:
    """Cut each tileable symmetric hexagon on the grid along its axis and compare the halves."""
    shifted = grid.model_copy(update={"family": "S", "positive_holes": True})
    points = [spec for spec in grid_points(shifted) if symmetric_in_range(spec.x, spec.y, spec.z, spec.holes)]
    logger.info("Verifying axis factorization", points=len(points))
    return _run(_ciucu_task, [(spec, conventions, timings) for spec in points], jobs)


# --- claims --------------------------------------------------------------------


def _factorial_ratio(top: Sequence[int], bottom: Sequence[int]) -> Fraction:
    return Fraction(
        math.prod(math.factorial(n) for n in top),
        math.prod(math.factorial(n) for n in bottom),
    )


def _claim_p(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    x, a = rng.randint(1, 6), rng.randint(0, 6)
    expected = Fraction(a + x, x) * _factorial_ratio([2 * a + 2 * x - 1, x], [2 * a + x, 2 * x - 1])
    return {"x": x, "a": a}, formula_P(x, x, a) / formula_P(x - 1, x - 1, a), expected


def _claim_t_shift(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    m = rng.randint(0, 3)
    n, x = rng.randint(2 * m, 2 * m + 4), rng.randint(2, 9)
    return {"x": x, "n": n, "m": m}, trapezoid_T(x, n, m) / trapezoid_T(x - 1, n, m), pochhammer(x + n - m, m) / pochhammer(x - 1, m)


def _claim_q_last(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    t = tuple(rng.randint(0, 3) for _ in range(2 * rng.randint(1, 2)))
    seq = HoleSeq(t)
    half = len(t) // 2
    s = seq.s(len(t))
    expected = Fraction(s + 1) * _factorial_ratio([2 * s + 1], [2 * seq.E + 1])
    for i in range(1, half + 1):
        expected *= _factorial_ratio([s - seq.s(2 * i - 1)], [s + seq.s(2 * i - 1) + 1])
    for i in range(1, half):
        expected *= _factorial_ratio([s + seq.s(2 * i) + 1], [s - seq.s(2 * i)])
    bumped = (*t[:-1], t[-1] + 1)
    return {"t": list(t)}, formula_Q(bumped, conventions) / formula_Q(t, conventions), expected


def _claim_q_third(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    t = (rng.randint(0, 3), rng.randint(0, 3), rng.randint(1, 3), rng.randint(0, 3))
    seq = HoleSeq(t)
    s1, s2, s3, s4 = (seq.s(k) for k in range(1, 5))
    expected = Fraction(s4, s3) * _factorial_ratio(
        [2 * s4 - 1, 2 * s3, s4 - s1 - 1, s3 - s2 - 1, s4 + s2, s3 + s1],
        [s4 - s2 - 1, s3 - s1 - 1, s4 + s1, s3 + s2, s4 + s3 - 1, s4 + s3],
    )
    lowered = (t[0], t[1], t[2] - 1, t[3])
    return {"t": list(t)}, formula_Q(t, conventions) / formula_Q(lowered, conventions), expected


def _claim_v_length(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    m = rng.randint(0, 3)
    n, x = rng.randint(2 * m + 1, 2 * m + 5), rng.randint(1, 9)
    return {"x": x, "n": n, "m": m}, trapezoid_V(x, n, m) / trapezoid_V(x, n - 1, m), skip_pochhammer(x + 2 * n - 2 * m, m)


def _claim_v_shift(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    m = rng.randint(0, 3)
    n, x = rng.randint(2 * m, 2 * m + 4), 2 * rng.randint(1, 5) + 1
    expected = skip_pochhammer(x + 2 * n - 2 * m, m) / skip_pochhammer(x - 2, m)
    return {"x": x, "n": n, "m": m}, trapezoid_V(x, n, m) / trapezoid_V(x - 2, n, m), expected


def _claim_t_length(rng: random.Random, conventions: Conventions) -> tuple[dict[str, Any], Fraction, Fraction]:
    m = rng.randint(0, 3)
    n, x = rng.randint(2 * m + 1, 2 * m + 5), rng.randint(1, 9)
    return {"x": x, "n": n, "m": m}, trapezoid_T(x, n, m) / trapezoid_T(x, n - 1, m), pochhammer(x + n - m, m)


CLAIMS: dict[str, Callable[[random.Random, Conventions], tuple[dict[str, Any], Fraction, Fraction]]] = {
    "halved-hexagon-diagonal-ratio": _claim_p,
    "trapezoid-T-shift": _claim_t_shift,
    "trapezoid-Q-last-entry": _claim_q_last,
    "trapezoid-Q-third-entry": _claim_q_third,
    "trapezoid-V-length": _claim_v_length,
    "trapezoid-V-shift": _claim_v_shift,
    "trapezoid-T-length": _claim_t_length,
}


def verify_claims(
    samples: int = RHOMBIL_CLAIM_SAMPLES,
    seed: int = RHOMBIL_SEED,
    conventions: Conventions = DEFAULT_CONVENTIONS,
) -> list[VerdictRecord]:
    """Check each ratio identity on ``samples`` seeded random inputs.

    Raises:
        BadParameters: if ``samples`` is not positive.
    """
    if samples <= 0:
        raise BadParameters(f"samples must be positive, got {samples}")
    records = []
    for offset, (name, claim) in enumerate(CLAIMS.items()):
        rng = random.Random(seed * len(CLAIMS) + offset)
        for index in range(samples):
            try:
                point, left, right = claim(rng, conventions)
            except (FormulaSingular, ArithmeticDomainError, ZeroDivisionError) as exc:
                records.append(_status("claims", name, "-", {"sample": index}, "singular", str(exc)))
                continue
            records.append(compare("claims", name, "-", {"sample": index, **point}, left, right))
    return records


# --- calibration ---------------------------------------------------------------


CALIBRATION_POINTS: dict[str, tuple[RegionSpec, ...]] = {
    "hyperfactorial2_reading": (
        RegionSpec(family="Q", holes=(1, 2)),
        RegionSpec(family="Q", holes=(2, 1)),
        RegionSpec(family="Q", holes=(0, 1, 1, 1)),
        RegionSpec(family="K", holes=(1, 2)),
        RegionSpec(family="K", holes=(2, 2)),
    ),
    "pprime_limit": (
        RegionSpec(family="Pp", a=0, b=2, c=1),
        RegionSpec(family="Pp", a=1, b=2, c=1),
        RegionSpec(family="Pp", a=1, b=3, c=0),
        RegionSpec(family="Pp", a=2, b=3, c=1),
    ),
    "odd_length": (
        RegionSpec(family="H3", x=0, y=0, z=0, holes=(1, 1)),
        RegionSpec(family="H3", x=1, y=0, z=0, holes=(1, 1)),
        RegionSpec(family="H3", x=0, y=1, z=0, holes=(1, 1)),
    ),
    "h8_subscript": (
        RegionSpec(family="H8", x=0, y=1, z=0, holes=(1, 1)),
        RegionSpec(family="H8", x=1, y=0, z=1, holes=(1, 1)),
        RegionSpec(family="H8", x=0, y=2, z=1, holes=(1, 0)),
    ),
    "hole_anchor": (
        RegionSpec(family="H2", x=0, y=1, z=0, holes=(1, 1)),
        RegionSpec(family="H2", x=1, y=1, z=1, holes=(1, 1)),
        RegionSpec(family="H2", x=0, y=1, z=1, holes=(2, 1)),
    ),
    "h3_general": (
        RegionSpec(family="H3", x=0, y=0, z=0, holes=(1, 1, 1, 1)),
        RegionSpec(family="H3", x=1, y=0, z=0, holes=(1, 0, 1, 1)),
        RegionSpec(family="H3", x=0, y=1, z=1, holes=(1, 1, 1, 0)),
    ),
    "s_x_mapping": (
        RegionSpec(family="S", x=0, y=1, z=2, holes=(2, 1)),
        RegionSpec(family="S", x=1, y=1, z=1, holes=(1, 1)),
        RegionSpec(family="S", x=2, y=0, z=2, holes=(2, 1)),
    ),
}


def _variant_matches(spec: RegionSpec, conventions: Conventions) -> bool:
    try:
        return evaluate_formula(spec, conventions).value == count_tilings(build_region(spec, conventions))
    except (FormulaSingular, ArithmeticDomainError, ZeroDivisionError, GeometryError, EngineError) as exc:
        logger.debug("Variant disagrees with the counter", spec=spec.label(), error=str(exc))
        return False


def calibrate_geometry(
    base: Conventions = DEFAULT_CONVENTIONS,
    *,
    strict: bool = False,
) -> CalibrationReport:
    """Try every variant of every reading switch against the tiling counter.

    Raises:
        NoVariantPasses: with ``strict`` when a switch has no passing variant.
        AmbiguousCalibration: with ``strict`` when several variants pass.
    """
    outcomes = []
    for switch, variants in SWITCH_VARIANTS.items():
        points = CALIBRATION_POINTS[switch]
        passing = [
            variant
            for variant in variants
            if all(_variant_matches(spec, base.with_switch(switch, variant)) for spec in points)
        ]
        outcome = SwitchOutcome(
            switch=switch,
            variants=list(variants),
            passing=passing,
            chosen=passing[0] if len(passing) == 1 else None,
            points=len(points),
        )
        logger.info("Calibrated switch", switch=switch, passing=passing)
        if strict and not passing:
            raise NoVariantPasses(f"no variant of {switch} matches the counter")
        if strict and len(passing) > 1:
            raise AmbiguousCalibration(f"variants {passing} of {switch} all match the counter")
        outcomes.append(outcome)
    return CalibrationReport(outcomes=outcomes)


# --- suites and output ---------------------------------------------------------


def run_suite(
    suite: str,
    *,
    max_param: int,
    samples: int = RHOMBIL_CLAIM_SAMPLES,
    seed: int = RHOMBIL_SEED,
    conventions: Conventions = DEFAULT_CONVENTIONS,
    jobs: int = 1,
    timings: bool = False,
) -> list[VerdictRecord]:
    """Run ``family``, ``kuo``, ``ciucu``, ``claims`` or ``all``."""
    names = SUITES if suite == "all" else (suite,)
    records: list[VerdictRecord] = []
    for name in names:
        if name == "family":
            records.extend(run_family_suite(max_param, conventions=conventions, jobs=jobs, timings=timings))
        elif name == "kuo":
            records.extend(run_kuo_suite(max_param, conventions=conventions, jobs=jobs, timings=timings))
        elif name == "ciucu":
            grid = GridSpec(family="S", max_param=max_param, hole_lengths=(1, 2), max_entry=min(max_param, 2) or 1)
            records.extend(verify_ciucu(grid, conventions=conventions, jobs=jobs, timings=timings))
        elif name == "claims":
            records.extend(verify_claims(samples, seed, conventions))
        else:
            raise BadParameters(f"unknown suite {name!r}")
    return records


def to_json_lines(records: Iterable[VerdictRecord]) -> str:
    lines = [json.dumps(r.model_dump(mode="json", exclude_none=True), sort_keys=False) for r in records]
    return "\n".join(lines) + ("\n" if lines else "")


def summarize(records: Sequence[VerdictRecord]) -> str:
    """Human-readable table: one row per suite and identity."""
    statuses = ("pass", "fail", "singular", "resource", "skipped")
    rows: dict[tuple[str, str], Counter[str]] = {}
    for record in records:
        rows.setdefault((record.suite, record.identity), Counter())[record.status] += 1
    header = f"{'suite':<8} {'identity':<32} " + " ".join(f"{s:>8}" for s in statuses)
    lines = [header, "-" * len(header)]
    for (suite, identity), counts in sorted(rows.items()):
        lines.append(f"{suite:<8} {identity:<32} " + " ".join(f"{counts[s]:>8}" for s in statuses))
    failures = sum(1 for r in records if r.failed)
    lines.append(f"{len(records)} checks, {failures} failures")
    return "\n".join(lines) + "\n"
