"""Triangular-lattice geometry and the region constructors.

Coordinates: lattice lines are numbered ``h = 0, 1, ...`` from the top and a
lattice point is ``(h, X)`` with ``X`` in half units, ``X = h (mod 2)``. The
unit triangle in row ``r`` whose apex or top edge is centred on ``X = c`` is
``Cell(r, c)``; it points up when ``c = r (mod 2)`` and down otherwise.

Every family is a closed lattice polygon filled with cells, minus the cells of
its triangular holes, plus optional 1/2 weights on western vertical lozenges.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, NamedTuple, Union

from rhombil.combinat import HoleSeq, even_length
from rhombil.conventions import DEFAULT_CONVENTIONS, Conventions
from rhombil.exceptions import (
    AxisNotCutSet,
    BadParameters,
    Indivisible,
    NotSymmetric,
    ParameterOrder,
    ParityMismatch,
)
from rhombil.schemas import RegionDocument, RegionSpec
from rhombil.utils.logging_config import get_logger

# Initialize logger for this module
logger = get_logger(__name__)

HALF = Fraction(1, 2)

Point = tuple[int, int]
Polygon = tuple[Point, ...]
Cutline = Union[int, Sequence[Point]]

_STEPS: dict[str, Point] = {
    "E": (0, 2),
    "W": (0, -2),
    "SE": (1, 1),
    "SW": (1, -1),
    "NE": (-1, 1),
    "NW": (-1, -1),
}
_STEP_NAMES = {delta: name for name, delta in _STEPS.items()}


class Orientation(str, Enum):
    UP = "U"
    DOWN = "D"


class Cell(NamedTuple):
    """One unit triangle.

    Attributes:
        row: Row index, 0 at the top edge.
        col: Half-unit abscissa of the apex (up) or of the top edge midpoint (down).
        orientation: ``U`` or ``D``; fixed by the parity of ``row + col``.
    """

    row: int
    col: int
    orientation: Orientation

    @classmethod
    def at(cls, row: int, col: int) -> Cell:
        orientation = Orientation.UP if (row - col) % 2 == 0 else Orientation.DOWN
        return cls(row, col, orientation)

    @property
    def is_up(self) -> bool:
        return self.orientation is Orientation.UP

    def neighbours(self) -> tuple[Cell, Cell, Cell]:
        """The three cells sharing an edge with this one."""
        r, c = self.row, self.col
        if self.is_up:
            return (
                Cell(r, c - 1, Orientation.DOWN),
                Cell(r, c + 1, Orientation.DOWN),
                Cell(r + 1, c, Orientation.DOWN),
            )
        return (
            Cell(r, c - 1, Orientation.UP),
            Cell(r, c + 1, Orientation.UP),
            Cell(r - 1, c, Orientation.UP),
        )

    def centroid(self) -> tuple[Fraction, Fraction]:
        """``(X, h)`` of the centroid."""
        offset = Fraction(2, 3) if self.is_up else Fraction(1, 3)
        return Fraction(self.col), self.row + offset

    def corners(self) -> tuple[Point, Point, Point]:
        r, c = self.row, self.col
        if self.is_up:
            return (r, c), (r + 1, c + 1), (r + 1, c - 1)
        return (r, c - 1), (r, c + 1), (r + 1, c)

    def edges(self) -> tuple[frozenset[Point], ...]:
        a, b, c = self.corners()
        return frozenset((a, b)), frozenset((b, c)), frozenset((c, a))

    def mirrored(self, axis: int) -> Cell:
        return Cell(self.row, 2 * axis - self.col, self.orientation)

    def __str__(self) -> str:
        return f"{self.orientation.value}({self.row},{self.col})"


def up(row: int, col: int) -> Cell:
    if (row - col) % 2:
        raise BadParameters(f"no up-pointing cell at ({row}, {col})")
    return Cell(row, col, Orientation.UP)


def down(row: int, col: int) -> Cell:
    if (row - col) % 2 == 0:
        raise BadParameters(f"no down-pointing cell at ({row}, {col})")
    return Cell(row, col, Orientation.DOWN)


def adjacent(a: Cell, b: Cell) -> bool:
    return b in a.neighbours()


def pair(a: Cell, b: Cell) -> frozenset[Cell]:
    return frozenset((a, b))


@dataclass(frozen=True)
class Region:
    """An immutable weighted cell set.

    Attributes:
        cells: The unit triangles of the region.
        weights: Non-unit lozenge weights keyed by adjacent cell pair.
        family: Family tag, ``custom`` for hand-made regions.
        params: Parameters of the family constructor.
    """

    cells: frozenset[Cell]
    weights: Mapping[frozenset[Cell], Fraction] = field(default_factory=dict)
    family: str = field(default="custom", compare=False)
    params: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", frozenset(self.cells))
        cleaned: dict[frozenset[Cell], Fraction] = {}
        for key, value in self.weights.items():
            a, b = tuple(key)
            if a not in self.cells or b not in self.cells:
                raise BadParameters(f"weighted pair {a}-{b} is not inside the region")
            if not adjacent(a, b):
                raise BadParameters(f"weighted pair {a}-{b} is not a lozenge")
            value = Fraction(value)
            if value <= 0:
                raise BadParameters(f"lozenge weights must be positive, got {value}")
            if value != 1:
                cleaned[frozenset(key)] = value
        object.__setattr__(self, "weights", cleaned)

    def __hash__(self) -> int:
        return hash((self.cells, frozenset(self.weights.items())))

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    @property
    def ups(self) -> int:
        return sum(1 for cell in self.cells if cell.is_up)

    @property
    def downs(self) -> int:
        return len(self.cells) - self.ups

    @property
    def balanced(self) -> bool:
        return self.ups == self.downs

    def weight(self, a: Cell, b: Cell) -> Fraction:
        return self.weights.get(pair(a, b), Fraction(1))

    def neighbours(self, cell: Cell) -> list[Cell]:
        return [n for n in cell.neighbours() if n in self.cells]

    def edges(self) -> Iterator[tuple[Cell, Cell, Fraction]]:
        """Yield ``(up, down, weight)`` for every lozenge position, sorted."""
        for cell in sorted(c for c in self.cells if c.is_up):
            for other in self.neighbours(cell):
                yield cell, other, self.weight(cell, other)

    def restrict(self, cells: Iterable[Cell], *, family: str | None = None) -> Region:
        """Induced sub-region; weights touching dropped cells disappear."""
        keep = frozenset(cells) & self.cells
        weights = {key: w for key, w in self.weights.items() if key <= keep}
        return Region(keep, weights, family=family or self.family, params=self.params)

    def without(self, cells: Iterable[Cell]) -> Region:
        return self.restrict(self.cells - frozenset(cells))

    def with_weight(self, a: Cell, b: Cell, value: Fraction | int) -> Region:
        weights = dict(self.weights)
        weights[pair(a, b)] = Fraction(value)
        return Region(self.cells, weights, family=self.family, params=self.params)

    def to_document(self) -> RegionDocument:
        weights = []
        for key in sorted(self.weights, key=lambda k: sorted(k)):
            a, b = sorted(key)
            value = self.weights[key]
            weights.append(
                (
                    (a.row, a.col, a.orientation.value),
                    (b.row, b.col, b.orientation.value),
                    value.numerator,
                    value.denominator,
                )
            )
        return RegionDocument(
            family=self.family,
            params=dict(self.params),
            cells=[(c.row, c.col, c.orientation.value) for c in sorted(self.cells)],
            weights=weights,
        )

    @classmethod
    def from_document(cls, document: RegionDocument) -> Region:
        def _cell(raw: tuple[int, int, str]) -> Cell:
            row, col, orient = raw
            cell = Cell(row, col, Orientation(orient))
            if cell != Cell.at(row, col):
                raise BadParameters(f"cell {list(raw)} has the wrong orientation for its position")
            return cell

        cells = frozenset(_cell(raw) for raw in document.cells)
        weights = {pair(_cell(a), _cell(b)): Fraction(num, den) for a, b, num, den in document.weights}
        return cls(cells, weights, family=document.family, params=document.params)


# --- polygons ------------------------------------------------------------------


def trace(moves: Iterable[tuple[str, int]], start: Point = (0, 0)) -> Polygon:
    """Walk a closed lattice path and return its vertices.

    Raises:
        BadParameters: if a side length is negative or the path does not close.
    """
    h, x = start
    points = [start]
    for name, length in moves:
        if length < 0:
            raise BadParameters(f"side {name} has negative length {length}")
        dh, dx = _STEPS[name]
        for _ in range(length):
            h, x = h + dh, x + dx
            points.append((h, x))
    if (h, x) != start:
        raise BadParameters(f"boundary does not close: ended at {(h, x)}")
    return tuple(points[:-1]) if len(points) > 1 else tuple(points)


def zigzag(pairs: int, first: str = "NW", second: str = "NE") -> list[tuple[str, int]]:
    return [(first, 1), (second, 1)] * pairs


def up_triangle(apex: Point, side: int) -> Polygon:
    h, x = apex
    return (h, x), (h + side, x + side), (h + side, x - side)


def down_triangle(top_left: Point, side: int) -> Polygon:
    h, x = top_left
    return (h, x), (h, x + 2 * side), (h + side, x + side)


def inside(point: tuple[Fraction, Fraction], polygon: Polygon) -> bool:
    """Even-odd test for a point ``(X, h)`` strictly off the polygon boundary."""
    px, ph = point
    result = False
    for (h1, x1), (h2, x2) in zip(polygon, polygon[1:] + polygon[:1]):
        if (h1 > ph) != (h2 > ph):
            crossing = x1 + (ph - h1) * Fraction(x2 - x1, h2 - h1)
            if px < crossing:
                result = not result
    return result


def fill(outline: Polygon, holes: Iterable[Polygon] = ()) -> frozenset[Cell]:
    """Cells whose centroid lies inside ``outline`` and outside every hole."""
    holes = [hole for hole in holes if len(set(hole)) == 3]
    rows = [h for h, _ in outline]
    cols = [x for _, x in outline]
    cells = set()
    for r in range(min(rows), max(rows)):
        for c in range(min(cols) - 1, max(cols) + 2):
            cell = Cell.at(r, c)
            centre = cell.centroid()
            if inside(centre, outline) and not any(inside(centre, hole) for hole in holes):
                cells.add(cell)
    return frozenset(cells)


def boundary_runs(cells: Iterable[Cell]) -> list[tuple[str, int]]:
    """Measure the outer boundary of a simply connected cell set.

    The walk starts at the topmost-leftmost lattice point, leaves it eastward
    and returns ``(direction, length)`` runs in unit lengths.
    """
    counts: dict[frozenset[Point], int] = {}
    for cell in cells:
        for edge in cell.edges():
            counts[edge] = counts.get(edge, 0) + 1
    boundary = [tuple(edge) for edge, n in counts.items() if n == 1]
    if not boundary:
        return []
    around: dict[Point, list[Point]] = {}
    for a, b in boundary:
        around.setdefault(a, []).append(b)
        around.setdefault(b, []).append(a)
    start = min(around)
    current = start
    following = max(around[start], key=lambda p: (p[0] == start[0], p[1]))
    previous = None
    steps: list[str] = []
    while True:
        steps.append(_STEP_NAMES[(following[0] - current[0], following[1] - current[1])])
        previous, current = current, following
        if current == start:
            break
        following = next(p for p in around[current] if p != previous)
    runs: list[tuple[str, int]] = []
    for step in steps:
        if runs and runs[-1][0] == step:
            runs[-1] = (step, runs[-1][1] + 1)
        else:
            runs.append((step, 1))
    return runs


# --- weights -------------------------------------------------------------------


def western_pairs(cells: frozenset[Cell], keep: Callable[[int], bool] = lambda row: True) -> dict[frozenset[Cell], Fraction]:
    """Half weights on the vertical lozenges along the standard western zigzag."""
    weights = {}
    for r in sorted({cell.row for cell in cells}):
        if r % 2 or not keep(r):
            continue
        top, bottom = Cell(r, 0, Orientation.UP), Cell(r + 1, 0, Orientation.DOWN)
        if top in cells and bottom in cells:
            weights[pair(top, bottom)] = HALF
    return weights


def western_cells(cells: frozenset[Cell]) -> frozenset[Cell]:
    """Cells touching the standard western zigzag."""
    return frozenset(c for c in cells if c.col == 0 and c.is_up == (c.row % 2 == 0))


def _region(family: str, params: dict[str, Any], cells: frozenset[Cell], weights: Mapping | None = None) -> Region:
    region = Region(cells, weights or {}, family=family, params=params)
    logger.debug("Built region", family=family, params=params, cells=len(cells), weights=len(region.weights))
    return region


# --- halved hexagons -----------------------------------------------------------


def _hexagon_outline(a: int, b: int, c: int) -> Polygon:
    if min(a, b, c) < 0:
        raise BadParameters(f"halved hexagon needs non-negative a, b, c; got ({a}, {b}, {c})")
    if a > b:
        raise ParameterOrder(f"halved hexagon needs a <= b; got a={a}, b={b}")
    return trace([("E", c), ("SE", b), ("SW", a), ("W", c), ("NW", b - a), *zigzag(a)])


def build_P(a: int, b: int, c: int) -> Region:  # noqa: N802
    """Halved hexagon with a maximal staircase cut off its western side.

    Raises:
        ParameterOrder: if ``a > b``.
    """
    cells = fill(_hexagon_outline(a, b, c))
    return _region("P", {"a": a, "b": b, "c": c}, cells)


def build_Pprime(a: int, b: int, c: int) -> Region:  # noqa: N802
    """``build_P`` with every staircase lozenge weighted 1/2."""
    cells = fill(_hexagon_outline(a, b, c))
    return _region("Pp", {"a": a, "b": b, "c": c}, cells, western_pairs(cells))


# --- trapezoids ----------------------------------------------------------------


def _trapezoid_cells(kind: str, t: Sequence[int], conventions: Conventions) -> frozenset[Cell]:
    entries = even_length(tuple(HoleSeq(tuple(t)).entries), conventions.odd_length)
    seq = HoleSeq(entries)
    big_o, big_e = seq.O, seq.E
    if kind in ("Q", "Qp"):
        base = 2 * big_e
        outline = trace([("E", big_o), ("SE", 2 * big_e), ("W", big_o + big_e), *zigzag(big_e)])
        offset = 0
    else:
        if big_e < 1:
            raise BadParameters(f"{kind}{entries} needs E(t) >= 1")
        base = 2 * big_e - 1
        outline = trace(
            [("E", big_o), ("SE", 2 * big_e - 1), ("W", big_o + big_e), ("NE", 1), *zigzag(big_e - 1)]
        )
        offset = -1
    holes = []
    for i in range(1, len(entries) // 2 + 1):
        side = seq[2 * i]
        left = offset + 2 * seq.s(2 * i - 1)
        holes.append(up_triangle((base - side, left + side), side))
    return fill(outline, holes)


def _trapezoid(kind: str, t: Sequence[int], conventions: Conventions) -> Region:
    cells = _trapezoid_cells(kind, t, conventions)
    weights = western_pairs(cells) if kind in ("Qp", "Kp") else None
    return _region(kind, {"holes": list(t)}, cells, weights)


def build_Q(t: Sequence[int], conventions: Conventions = DEFAULT_CONVENTIONS) -> Region:  # noqa: N802
    """Trapezoid of sides ``O(t), 2E(t), E(t)+O(t)`` with up triangles removed from its base.

    Raises:
        OddLength: for an odd-length ``t`` when odd lengths are rejected.
    """
    return _trapezoid("Q", t, conventions)


def build_Qprime(t: Sequence[int], conventions: Conventions = DEFAULT_CONVENTIONS) -> Region:  # noqa: N802
    return _trapezoid("Qp", t, conventions)


def build_K(t: Sequence[int], conventions: Conventions = DEFAULT_CONVENTIONS) -> Region:  # noqa: N802
    """Like ``build_Q`` but one row shorter, ending in a half bump."""
    return _trapezoid("K", t, conventions)


def build_Kprime(t: Sequence[int], conventions: Conventions = DEFAULT_CONVENTIONS) -> Region:  # noqa: N802
    return _trapezoid("Kp", t, conventions)


# --- defected halved hexagons --------------------------------------------------


@dataclass(frozen=True)
class HexagonLayout:
    """Outline and hole polygons of one defected halved hexagon.

    Attributes:
        outline: Closed boundary polygon.
        holes: Hole triangles, west to east.
        level: Lattice line carrying the hole array.
        height: Number of cell rows.
    """

    outline: Polygon
    holes: tuple[Polygon, ...]
    level: int
    height: int


def _hole_array(level: int, start: int, sizes: Sequence[int], sign: int = 1) -> list[Polygon]:
    """Alternating down/up triangles along ``level`` starting at ``start``."""
    holes = []
    x0 = start
    for index, side in enumerate(sizes):
        left = x0 if sign > 0 else x0 - 2 * side
        if index % 2 == 0:
            holes.append(down_triangle((level, left), side))
        else:
            holes.append(up_triangle((level - side, left + side), side))
        x0 += sign * 2 * side
    return holes


def _odd_level_layout(x: int, y: int, z: int, a: tuple[int, ...], conventions: Conventions) -> HexagonLayout:
    seq = HoleSeq(a)
    big_o, big_e = seq.O, seq.E
    if z + big_e < 1 or y + big_o < 1:
        raise BadParameters(f"odd-level array needs z+E >= 1 and y+O >= 1; got x={x}, y={y}, z={z}, a={a}")
    steps = y + z - 1 + big_e + big_o
    outline = trace(
        [("E", x + big_e), ("SE", y + z - 1 + 2 * big_o), ("SW", y + z - 1 + 2 * big_e), ("W", x + big_o), *zigzag(steps)]
    )
    level = 2 * y + 2 * big_o - 1
    apex = -1 if conventions.hole_anchor == "outer" else 1
    holes = [up_triangle((level - 2 * a[0], apex), 2 * a[0])]
    holes += _hole_array(level, apex + 2 * a[0], a[1:])
    return HexagonLayout(outline, tuple(holes), level, 2 * steps)


def _even_level_layout(x: int, y: int, z: int, a: tuple[int, ...]) -> HexagonLayout:
    seq = HoleSeq(a)
    big_o, big_e = seq.O, seq.E
    steps = y + z + big_e + big_o
    outline = trace(
        [("E", x + big_e), ("SE", y + z + 2 * big_o), ("SW", y + z + 2 * big_e), ("W", x + big_o), *zigzag(steps)]
    )
    level = 2 * y + 2 * big_o
    holes = [up_triangle((level - 2 * a[0], 0), 2 * a[0])]
    holes += _hole_array(level, 2 * a[0], a[1:])
    return HexagonLayout(outline, tuple(holes), level, 2 * steps)


def _shifted_layout(x: int, y: int, z: int, a: tuple[int, ...]) -> HexagonLayout:
    """Boundary whose western zigzag is shifted one half unit east below the array."""
    seq = HoleSeq(a)
    big_o, big_e = seq.O, seq.E
    p = y + z + 2 * big_o + 1
    q = y + z + 2 * big_e
    level = 2 * y + 2 * big_o + 1
    outline = trace(
        [
            ("E", x + big_e),
            ("SE", p),
            ("SW", q),
            ("W", x + big_o),
            *zigzag(z + big_e),
            ("W", 1),
            *zigzag(y + big_o, "NE", "NW"),
            ("NE", 1),
        ]
    )
    side = 2 * a[0] + 1
    holes = [up_triangle((level - side, 0), side)]
    holes += _hole_array(level, side, a[1:])
    return HexagonLayout(outline, tuple(holes), level, p + q)


def hexagon_layout(m: int, x: int, y: int, z: int, a: Sequence[int], conventions: Conventions = DEFAULT_CONVENTIONS) -> HexagonLayout:
    """Outline and holes of the unweighted base shape of family ``H{m}``."""
    entries = tuple(HoleSeq(tuple(a)).entries) or (0, 0)
    if len(entries) % 2:
        entries += (0,)
    if min(x, y, z) < 0:
        raise BadParameters(f"H{m} needs non-negative x, y, z; got ({x}, {y}, {z})")
    seq = HoleSeq(entries)
    # rows trimmed by H6/H7/H8 must not be the only material on their side
    if m == 6 and z + seq.E < 1:
        raise BadParameters(f"H6 needs z+E >= 1; got z={z}, a={entries}")
    if m == 7 and y + seq.O < 1:
        raise BadParameters(f"H7 needs y+O >= 1; got y={y}, a={entries}")
    if m == 8 and entries[0] < 1:
        raise BadParameters(f"H8 needs a1 >= 1; got a={entries}")
    if m in (1, 3, 6, 7):
        return _even_level_layout(x, y, z, entries)
    if m in (2, 4, 8):
        return _odd_level_layout(x, y, z, entries, conventions)
    if m == 5:
        return _shifted_layout(x, y, z, entries)
    raise BadParameters(f"unknown family H{m}")


def build_H(  # noqa: N802
    m: int,
    x: int,
    y: int,
    z: int,
    a: Sequence[int],
    conventions: Conventions = DEFAULT_CONVENTIONS,
) -> Region:
    """Defected halved hexagon ``H^(m)_{x,y,z}(a)``.

    ``H1``/``H2`` carry the hole array on an even/odd line; ``H3``/``H4`` add
    1/2 weights along the whole western zigzag. ``H5`` shifts the zigzag below
    the array. ``H6`` drops the bottom row and the western cells below the
    array, ``H7``/``H8`` drop the top row and the western cells above it; their
    weights stay on the surviving side only.

    Raises:
        BadParameters: outside the family's domain.
    """
    layout = hexagon_layout(m, x, y, z, a, conventions)
    cells = fill(layout.outline, layout.holes)
    level = layout.level
    weights: dict[frozenset[Cell], Fraction] = {}
    if m in (3, 4):
        weights = western_pairs(cells)
    elif m == 5:
        weights = western_pairs(cells, lambda r: r + 2 <= level)
    elif m == 6:
        bottom = {c for c in cells if c.row == layout.height - 1}
        below = {c for c in western_cells(cells) if c.row >= level}
        cells = cells - bottom - below
        weights = western_pairs(cells, lambda r: r + 2 <= level)
    elif m in (7, 8):
        top = {c for c in cells if c.row == 0}
        above = {c for c in western_cells(cells) if c.row < level}
        cells = cells - top - above
        weights = western_pairs(cells, lambda r: r >= level)
    return _region(f"H{m}", {"x": x, "y": y, "z": z, "holes": list(a)}, cells, weights)


# --- symmetric hexagon ---------------------------------------------------------


def _symmetric_height(y: int, entries: tuple[int, ...]) -> int:
    seq = HoleSeq(entries)
    return 2 * y + 2 * seq.O - entries[0] + 2 * seq.E


def symmetric_layout(x: int, y: int, z: int, a: Sequence[int]) -> HexagonLayout:
    """Hexagon with a mirror-symmetric triangle array centred on its axis."""
    entries = tuple(a)
    if not entries or min(entries) <= 0:
        raise BadParameters(f"S needs a non-empty sequence of positive holes; got {entries}")
    if min(x, y, z) < 0:
        raise BadParameters(f"S needs non-negative x, y, z; got ({x}, {y}, {z})")
    if (x - z) % 2:
        raise ParityMismatch(f"S needs x and z of equal parity; got x={x}, z={z}")
    seq = HoleSeq(entries)
    big_o, big_e = seq.O, seq.E
    a1 = entries[0]
    p = y + 2 * big_o - a1
    q = y + 2 * big_e
    if z > p + q:
        raise BadParameters(f"S level z={z} lies above the hexagon of height {p + q}")
    outline = trace([("E", x + 2 * big_e), ("SE", p), ("SW", q), ("W", x + 2 * big_o - a1), ("NW", q), ("NE", p)])
    axis = x + 2 * big_e
    level = p + q - z
    holes = [up_triangle((level - a1, axis), a1)]
    holes += _hole_array(level, axis + a1, entries[1:])
    holes += _hole_array(level, axis - a1, entries[1:], sign=-1)
    return HexagonLayout(outline, tuple(holes), level, p + q)


def build_S(x: int, y: int, z: int, a: Sequence[int]) -> Region:  # noqa: N802
    """Symmetric hexagon with a triangle array on its axis, ``z`` lines above the bottom.

    A level above the hexagon leaves no room for the array. The region is then
    a lone up cell, so it has no tilings, like every other level outside the
    tileable window.

    Raises:
        ParityMismatch: if ``x`` and ``z`` differ in parity.
        BadParameters: for non-positive holes or negative sides.
    """
    params = {"x": x, "y": y, "z": z, "holes": list(a)}
    entries = tuple(a)
    if entries and min(entries) > 0 and min(x, y, z) >= 0 and (x - z) % 2 == 0:
        height = _symmetric_height(y, entries)
        if z > height:
            logger.debug("Array lies above the hexagon", z=z, height=height)
            return _region("S", params, frozenset({up(0, 0)}))
    layout = symmetric_layout(x, y, z, a)
    return _region("S", params, fill(layout.outline, layout.holes))


def build_region(spec: RegionSpec, conventions: Conventions = DEFAULT_CONVENTIONS) -> Region:
    """Dispatch a :class:`RegionSpec` to its constructor."""
    family = spec.family
    holes = tuple(spec.holes)
    if family == "P":
        return build_P(spec.a, spec.b, spec.c)
    if family == "Pp":
        return build_Pprime(spec.a, spec.b, spec.c)
    if family in ("Q", "Qp", "K", "Kp"):
        return _trapezoid(family, holes, conventions)
    if family == "S":
        return build_S(spec.x, spec.y, spec.z, holes)
    return build_H(int(family[1:]), spec.x, spec.y, spec.z, holes, conventions)


# --- splitting -----------------------------------------------------------------


@dataclass(frozen=True)
class CiucuSplit:
    """The two halves of a symmetric region cut along its axis.

    Attributes:
        plus: Western half with its share of the axis cells.
        minus: Eastern half with the remaining axis cells.
        k: Half the number of axis cells.
        axis: Column of the symmetry axis.
    """

    plus: Region
    minus: Region
    k: int
    axis: int


def symmetry_axis(region: Region) -> int:
    """Column of the vertical mirror axis.

    Raises:
        NotSymmetric: if the cells or weights are not mirror symmetric.
    """
    if not region.cells:
        raise NotSymmetric("an empty region has no axis")
    cols = [cell.col for cell in region.cells]
    total = min(cols) + max(cols)
    if total % 2:
        raise NotSymmetric(f"column span {min(cols)}..{max(cols)} has no lattice axis")
    axis = total // 2
    for cell in region.cells:
        if cell.mirrored(axis) not in region.cells:
            raise NotSymmetric(f"{cell} has no mirror image about column {axis}")
    for key, value in region.weights.items():
        a, b = tuple(key)
        if region.weight(a.mirrored(axis), b.mirrored(axis)) != value:
            raise NotSymmetric(f"weight of {a}-{b} is not mirrored about column {axis}")
    return axis


def ciucu_split(region: Region) -> CiucuSplit:
    """Cut a symmetric region along its axis into two weighted halves.

    Axis cells are labelled ``a1, b1, a2, b2, ...`` from the top and ``a1``
    fixes the black class. Black ``a_i`` and white ``b_j`` keep only their
    eastern edges and join the eastern half; every other axis cell joins the
    western half. Lozenges lying along the axis weigh half.

    Raises:
        NotSymmetric: if the region is not mirror symmetric.
        AxisNotCutSet: if the axis cells do not separate the two halves.
    """
    axis = symmetry_axis(region)
    on_axis = sorted((c for c in region.cells if c.col == axis), key=lambda c: (c.row, c.orientation.value))
    if len(on_axis) % 2:
        raise AxisNotCutSet(f"{len(on_axis)} cells lie on the axis; need an even number")
    black = on_axis[0].orientation if on_axis else Orientation.UP
    east_axis = {
        cell for index, cell in enumerate(on_axis) if (index % 2 == 0) == (cell.orientation is black)
    }
    west = {c for c in region.cells if c.col < axis} | (set(on_axis) - east_axis)
    east = {c for c in region.cells if c.col > axis} | east_axis
    for a, b, _ in region.edges():
        if a.col == axis and b.col == axis and (a in west) != (b in west):
            raise AxisNotCutSet(f"axis lozenge {a}-{b} straddles the cut")
        if a.col != axis and b.col != axis and (a.col < axis) != (b.col < axis):
            raise AxisNotCutSet(f"lozenge {a}-{b} crosses the axis")

    def _half(cells: set[Cell], family: str) -> Region:
        part = region.restrict(cells, family=family)
        weights = dict(part.weights)
        for a, b, w in part.edges():
            if a.col == axis and b.col == axis:
                weights[pair(a, b)] = w * HALF
        return Region(part.cells, weights, family=family, params=region.params)

    split = CiucuSplit(_half(west, "G+"), _half(east, "G-"), len(on_axis) // 2, axis)
    logger.debug("Split along axis", axis=axis, k=split.k, plus=len(split.plus), minus=len(split.minus))
    return split


def _cut_height(cutline: Sequence[Point], x: Fraction) -> Fraction:
    points = sorted(cutline, key=lambda p: p[1])
    if x <= points[0][1]:
        return Fraction(points[0][0])
    for (h1, x1), (h2, x2) in zip(points, points[1:]):
        if x1 <= x <= x2:
            return h1 + (x - x1) * Fraction(h2 - h1, x2 - x1) if x2 != x1 else Fraction(min(h1, h2))
    return Fraction(points[-1][0])


def region_split_check(region: Region, cutline: Cutline) -> tuple[Region, Region]:
    """Split a region along a cut into an upper and a lower part.

    ``cutline`` is a lattice line index or an x-monotone polyline of ``(h, X)``
    points. The upper part must be balanced and all of its cells touching the
    lower part must share one orientation; then the tiling count factorises.

    Raises:
        Indivisible: if either condition fails.
    """
    if isinstance(cutline, int):
        upper = {c for c in region.cells if c.row < cutline}
    else:
        if not cutline:
            raise Indivisible("empty cut polyline")
        upper = set()
        for cell in region.cells:
            x, h = cell.centroid()
            if h < _cut_height(cutline, x):
                upper.add(cell)
    lower = region.cells - upper
    touching = {c for c in upper if any(n in lower for n in c.neighbours())}
    if len({c.orientation for c in touching}) > 1:
        raise Indivisible("cells along the cut have both orientations on the upper side")
    top = region.restrict(upper)
    if not top.balanced:
        raise Indivisible(f"upper part is unbalanced: {top.ups} up vs {top.downs} down")
    return top, region.restrict(lower)
