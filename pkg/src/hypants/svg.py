"""SVG horoball diagrams seen from infinity."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Sequence

from .horoball import CuspLattice, Horoball, ball_sort_key

PIXELS_PER_UNIT = 200.0
MARGIN = 0.25


def _num(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def diagram(balls: Sequence[Horoball], lattice: CuspLattice) -> ET.Element:
    """Top-down view: each finite ball is a circle of radius diameter/2 at its
    center, inside the outline of the fundamental parallelogram."""
    if not balls:
        raise ValueError("nothing to draw")
    balls = sorted(balls, key=ball_sort_key)
    finite = [B for B in balls if not B.infinite]
    corners = [0j, lattice.t1, lattice.t1 + lattice.t2, lattice.t2]

    xs = [z.real for z in corners] + [B.center.re + s * B.size / 2 for B in finite for s in (-1, 1)]
    ys = [-z.imag for z in corners] + [-B.center.im + s * B.size / 2 for B in finite for s in (-1, 1)]
    x0, x1 = min(xs) - MARGIN, max(xs) + MARGIN
    y0, y1 = min(ys) - MARGIN, max(ys) + MARGIN + 0.25  # room for the legend

    root = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "version": "1.1",
        "width": _num((x1 - x0) * PIXELS_PER_UNIT),
        "height": _num((y1 - y0) * PIXELS_PER_UNIT),
        "viewBox": " ".join(_num(v) for v in (x0, y0, x1 - x0, y1 - y0)),
    })
    points = " ".join(f"{_num(z.real)},{_num(-z.imag)}" for z in corners)
    ET.SubElement(root, "polygon", {"id": "lattice", "points": points, "fill": "none",
                                    "stroke": "#555555", "stroke-width": "0.01"})

    group = ET.SubElement(root, "g", {"id": "horoballs"})
    for i, B in enumerate(finite):
        ET.SubElement(group, "circle", {
            "id": f"ball-{i:04d}",
            "class": "horoball",
            "cx": _num(B.center.re), "cy": _num(-B.center.im),
            "r": _num(B.size / 2),
            "data-diameter": _num(B.size),
            "fill": "none", "stroke": "#1f4e9c", "stroke-width": "0.005",
        })

    top = [B for B in balls if B.infinite]
    legend = "boundary plane of H_inf at height " + (_num(top[0].size) if top else "1")
    text = ET.SubElement(root, "text", {"id": "legend", "x": _num(x0 + 0.05),
                                        "y": _num(y1 - 0.08), "font-size": "0.08"})
    text.text = legend
    return root


def render_diagram(balls: Sequence[Horoball], lattice: CuspLattice, path=None) -> str:
    """Serialize the diagram; also write it to ``path`` when given."""
    root = diagram(balls, lattice)
    ET.indent(root)
    text = ET.tostring(root, encoding="unicode") + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
