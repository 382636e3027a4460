"""Exact weighted perfect-matching counters on the dual graph of a region.

``count_tilings`` is a frontier (broken-profile) dynamic program: cells are
visited in a sweep order and the state is the set of later cells already
claimed by an earlier lozenge, stored as a bitmask relative to the current
position. ``count_tilings_reference`` is a plain recursion kept as a second,
independent oracle for small regions.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, NamedTuple

from rhombil.combinat import ONE
from rhombil.config import RHOMBIL_REFERENCE_CELL_CAP, state_cap
from rhombil.exceptions import ClassViolation, MissingCell, ResourceLimit, TooLarge
from rhombil.lattice import Cell, Region
from rhombil.utils.logging_config import get_logger

# Initialize logger for this module
logger = get_logger(__name__)

ZERO = Fraction(0)

SweepAxis = Literal["vertical", "horizontal"]


@dataclass(frozen=True)
class DualGraph:
    """Dual graph of a region laid out along one sweep order.

    Attributes:
        order: Cells in sweep order.
        forward: For each position, ``(offset, weight)`` of neighbours later in the order.
        width: Largest offset of any edge (the frontier bandwidth).
        axis: Sweep direction that produced ``order``.
    """

    order: tuple[Cell, ...]
    forward: tuple[tuple[tuple[int, Fraction], ...], ...]
    width: int
    axis: SweepAxis

    @classmethod
    def build(cls, region: Region, axis: SweepAxis) -> DualGraph:
        if axis == "vertical":
            order = tuple(sorted(region.cells, key=lambda c: (c.col, c.row)))
        else:
            order = tuple(sorted(region.cells, key=lambda c: (c.row, c.col)))
        index = {cell: i for i, cell in enumerate(order)}
        forward = []
        width = 0
        for i, cell in enumerate(order):
            later = []
            for other in region.neighbours(cell):
                j = index[other]
                if j > i:
                    later.append((j - i, region.weight(cell, other)))
                    width = max(width, j - i)
            forward.append(tuple(sorted(later)))
        return cls(order, tuple(forward), width, axis)

    @property
    def edge_count(self) -> int:
        return sum(len(edges) for edges in self.forward)


def dual_graph(region: Region) -> DualGraph:
    """Pick the sweep with the smaller bandwidth; ties go to the vertical sweep."""
    vertical = DualGraph.build(region, "vertical")
    horizontal = DualGraph.build(region, "horizontal")
    return horizontal if horizontal.width < vertical.width else vertical


def count_tilings(region: Region, *, cap: int | None = None) -> Fraction:
    """Weighted number of lozenge tilings of ``region``.

    Returns 1 for the empty region and 0 whenever no perfect matching exists.

    Raises:
        ResourceLimit: when the live state count exceeds ``cap``
            (``RHOMBIL_STATE_CAP`` by default).
    """
    if not region.balanced:
        return ZERO
    if not region.cells:
        return ONE
    limit = state_cap() if cap is None else cap
    graph = dual_graph(region)
    started = time.perf_counter()
    states: dict[int, Fraction] = {0: ONE}
    peak = 1
    for forward in graph.forward:
        following: defaultdict[int, Fraction] = defaultdict(Fraction)
        for state, value in states.items():
            if state & 1:
                following[state >> 1] += value
                continue
            for offset, weight in forward:
                if not (state >> offset) & 1:
                    following[(state | (1 << offset)) >> 1] += value * weight
        states = following
        peak = max(peak, len(states))
        if len(states) > limit:
            raise ResourceLimit(graph.width, len(states), limit)
        if not states:
            break
    result = states.get(0, ZERO)
    logger.debug(
        "Counted tilings",
        family=region.family,
        cells=len(region),
        axis=graph.axis,
        width=graph.width,
        peak_states=peak,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    return result


def count_tilings_reference(region: Region, *, cell_cap: int = RHOMBIL_REFERENCE_CELL_CAP) -> Fraction:
    """Brute-force count: match the lowest unmatched cell in every possible way.

    Raises:
        TooLarge: if the region has more than ``cell_cap`` cells.
    """
    if len(region) > cell_cap:
        raise TooLarge(f"reference counter is limited to {cell_cap} cells, region has {len(region)}")

    @lru_cache(maxsize=None)
    def _count(unmatched: frozenset[Cell]) -> Fraction:
        if not unmatched:
            return ONE
        first = min(unmatched)
        total = ZERO
        for other in first.neighbours():
            if other in unmatched:
                total += region.weight(first, other) * _count(unmatched - {first, other})
        return total

    return _count(region.cells)


def reduce_forced(region: Region) -> tuple[Region, Fraction]:
    """Remove forced lozenges until every cell has at least two partners.

    Returns the reduced region and the product of the removed lozenge weights;
    the factor is 0 as soon as some cell has no partner at all.
    """
    cells = set(region.cells)
    factor = ONE
    changed = True
    while changed:
        changed = False
        for cell in sorted(cells):
            if cell not in cells:
                continue
            partners = [n for n in cell.neighbours() if n in cells]
            if not partners:
                logger.debug("Isolated cell, no tilings", cell=str(cell))
                return region.restrict(cells), ZERO
            if len(partners) == 1:
                factor *= region.weight(cell, partners[0])
                cells -= {cell, partners[0]}
                changed = True
    return region.restrict(cells), factor


class KuoQuad(NamedTuple):
    """Four cells on the outer face in cyclic order; ``u, w`` up and ``v, s`` down."""

    u: Cell
    v: Cell
    w: Cell
    s: Cell


def east_corners(region: Region) -> KuoQuad:
    """Topmost and bottommost eastern cells of each orientation.

    Raises:
        MissingCell: if the region lacks cells of either orientation.
    """
    ups = [c for c in region.cells if c.is_up]
    downs = [c for c in region.cells if not c.is_up]
    if not ups or not downs:
        raise MissingCell("region needs cells of both orientations for a corner quadruple")
    return KuoQuad(
        u=min(ups, key=lambda c: (c.row, -c.col)),
        v=min(downs, key=lambda c: (c.row, -c.col)),
        w=min(ups, key=lambda c: (-c.row, -c.col)),
        s=min(downs, key=lambda c: (-c.row, -c.col)),
    )


def kuo_corner_delete(region: Region, quad: KuoQuad, names: str | tuple[str, ...] = "uvws") -> Region:
    """Remove the named corners (``"uvws"``, ``"uv"``, ``"ws"``, ...).

    Raises:
        MissingCell: if a named cell is not in the region.
        ClassViolation: if the quadruple or the removed set mixes classes wrongly.
    """
    if not (quad.u.is_up and quad.w.is_up and not quad.v.is_up and not quad.s.is_up):
        raise ClassViolation("u, w must point up and v, s must point down")
    chosen = [getattr(quad, name) for name in names]
    for name, cell in zip(names, chosen):
        if cell not in region:
            raise MissingCell(f"corner {name}={cell} is not in the region")
    ups = sum(1 for c in chosen if c.is_up)
    if 2 * ups != len(chosen):
        raise ClassViolation(f"removing {''.join(names)} leaves the region unbalanced")
    return region.without(chosen)


@dataclass(frozen=True)
class KuoCheck:
    """Counts entering the condensation identity for one quadruple."""

    full: Fraction
    uvws: Fraction
    uv: Fraction
    ws: Fraction
    us: Fraction
    vw: Fraction

    @property
    def left(self) -> Fraction:
        return self.full * self.uvws

    @property
    def right(self) -> Fraction:
        return self.uv * self.ws + self.us * self.vw

    @property
    def holds(self) -> bool:
        return self.left == self.right


def kuo_check(region: Region, quad: KuoQuad | None = None) -> KuoCheck:
    """Evaluate ``M(G) M(G-uvws) = M(G-uv) M(G-ws) + M(G-us) M(G-vw)`` by counting."""
    quad = quad or east_corners(region)
    counts = {
        names: count_tilings(kuo_corner_delete(region, quad, names) if names else region)
        for names in ("", "uvws", "uv", "ws", "us", "vw")
    }
    return KuoCheck(
        full=counts[""],
        uvws=counts["uvws"],
        uv=counts["uv"],
        ws=counts["ws"],
        us=counts["us"],
        vw=counts["vw"],
    )
