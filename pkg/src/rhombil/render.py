"""Deterministic ASCII and SVG drawings of regions."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Literal

from rhombil.lattice import Cell, Region

RenderFormat = Literal["ascii", "svg"]

_HALF_UNIT = 10.0
_ROW_HEIGHT = _HALF_UNIT * math.sqrt(3)
_MARGIN = 10.0

_CELL_STYLE = {
    "up": {"fill": "#f4d35e", "stroke": "#333333", "stroke-width": "0.5"},
    "down": {"fill": "#5aa9e6", "stroke": "#333333", "stroke-width": "0.5"},
}
_WEIGHT_STYLE = {"fill": "#000000", "fill-opacity": "0.25", "stroke": "none"}


def describe(region: Region) -> str:
    params = ",".join(f"{k}={v}" for k, v in region.params.items())
    return f"{region.family}({params}): {len(region)} cells, {region.ups} up, {region.downs} down, {len(region.weights)} weighted"


def _weight_line(region: Region) -> str:
    if not region.weights:
        return "# weights: none"
    entries = []
    for key in sorted(region.weights, key=lambda k: sorted(k)):
        a, b = sorted(key)
        entries.append(f"{a}-{b}={region.weights[key]}")
    return "# weights: " + ", ".join(entries)


def render_ascii(region: Region) -> str:
    """Two text lines per cell row: glyphs, then the vertical lozenge links below them.

    ``^``/``v`` are cells, ``.`` marks a missing cell inside the row span,
    ``|`` joins an up cell to the down cell below it and ``:`` does so for a
    weighted lozenge.
    """
    lines = [f"# {describe(region)}"]
    if not region.cells:
        return "\n".join(lines) + "\n"
    cols = [c.col for c in region.cells]
    low, high = min(cols), max(cols)
    lines.append(f"# cols {low}..{high}")
    rows = sorted({c.row for c in region.cells})
    for r in range(rows[0], rows[-1] + 1):
        present = sorted(c.col for c in region.cells if c.row == r)
        glyphs, links = [], []
        for col in range(low, high + 1):
            cell = Cell.at(r, col)
            if cell in region:
                glyphs.append("^" if cell.is_up else "v")
            elif present and present[0] < col < present[-1]:
                glyphs.append(".")
            else:
                glyphs.append(" ")
            below = Cell.at(r + 1, col)
            if cell.is_up and cell in region and below in region:
                links.append(":" if region.weight(cell, below) != 1 else "|")
            else:
                links.append(" ")
        lines.append("".join(glyphs).rstrip())
        lines.append("".join(links).rstrip())
    lines.append(_weight_line(region))
    lines.append("# legend: ^ up, v down, . hole, | lozenge, : weighted lozenge")
    return "\n".join(lines) + "\n"


def _xy(point: tuple[int, int], low: int) -> str:
    h, x = point
    return f"{_MARGIN + (x - low) * _HALF_UNIT:.3f},{_MARGIN + h * _ROW_HEIGHT:.3f}"


def _lozenge_outline(a: Cell, b: Cell) -> list[tuple[int, int]]:
    corners_a, corners_b = set(a.corners()), set(b.corners())
    shared = sorted(corners_a & corners_b)
    (only_a,) = corners_a - corners_b
    (only_b,) = corners_b - corners_a
    return [only_a, shared[0], only_b, shared[1]]


def render_svg(region: Region) -> str:
    """Well-formed SVG: one polygon per cell and a shaded rhombus per weighted lozenge."""
    root = ET.Element("svg", attrib={"xmlns": "http://www.w3.org/2000/svg", "version": "1.1"})
    root.append(ET.Comment(f" {describe(region)} "))
    if not region.cells:
        root.set("width", f"{2 * _MARGIN:.0f}")
        root.set("height", f"{2 * _MARGIN:.0f}")
    else:
        points = [p for cell in region.cells for p in cell.corners()]
        low = min(x for _, x in points)
        width = (max(x for _, x in points) - low) * _HALF_UNIT + 2 * _MARGIN
        height = max(h for h, _ in points) * _ROW_HEIGHT + 2 * _MARGIN
        root.set("width", f"{width:.3f}")
        root.set("height", f"{height:.3f}")
        cells = ET.SubElement(root, "g", attrib={"id": "cells"})
        for cell in sorted(region.cells):
            kind = "up" if cell.is_up else "down"
            ET.SubElement(
                cells,
                "polygon",
                attrib={
                    "class": kind,
                    "data-cell": str(cell),
                    "points": " ".join(_xy(p, low) for p in cell.corners()),
                    **_CELL_STYLE[kind],
                },
            )
        if region.weights:
            shading = ET.SubElement(root, "g", attrib={"id": "weights"})
            for key in sorted(region.weights, key=lambda k: sorted(k)):
                a, b = sorted(key)
                ET.SubElement(
                    shading,
                    "polygon",
                    attrib={
                        "class": "weighted",
                        "data-weight": str(region.weights[key]),
                        "points": " ".join(_xy(p, low) for p in _lozenge_outline(a, b)),
                        **_WEIGHT_STYLE,
                    },
                )
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"


def render_region(region: Region, fmt: RenderFormat = "ascii") -> str:
    """Draw ``region`` as ``ascii`` or ``svg`` text."""
    if fmt == "svg":
        return render_svg(region)
    return render_ascii(region)
