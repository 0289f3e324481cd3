"""Static SVG rendering of an alternating circular drawing of K_{m,n}."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Dict, Tuple

from .model import ArcProfile, Color, CompleteBipartiteSpec, profile_to_drawing

SVG_NS = "http://www.w3.org/2000/svg"
FILL = {Color.PINK: "#e75480", Color.BLACK: "#000000"}


def layout(spec: CompleteBipartiteSpec, profile: ArcProfile) -> Tuple[Dict[int, Tuple[float, float]], list]:
    """Unit-circle coordinates per vertex plus the angles of arc boundary ticks.

    Every arc opens with one empty slot for its tick, so empty arcs still show
    up as a pair of adjacent ticks.
    """
    drawing = profile_to_drawing(spec, profile)
    slots = len(drawing) + len(drawing.arcs)
    step = 2 * math.pi / slots
    coords: Dict[int, Tuple[float, float]] = {}
    ticks = []
    slot = 0
    for arc in drawing.arcs:
        ticks.append(slot * step)
        slot += 1
        for v in arc.vertices:
            theta = slot * step
            coords[v] = (math.cos(theta), math.sin(theta))
            slot += 1
    return coords, ticks


def render_svg(spec: CompleteBipartiteSpec, profile: ArcProfile, K: int, crossings: int,
               size: int = 480) -> str:
    coords, ticks = layout(spec, profile)
    half = size / 2
    radius = size * 0.38

    def px(x: float, y: float) -> Tuple[str, str]:
        # y flipped so angles run counterclockwise on screen
        return f"{half + radius * x:.4f}", f"{half - radius * y:.4f}"

    root = ET.Element(
        "svg",
        {"xmlns": SVG_NS, "version": "1.1", "width": str(size), "height": str(size),
         "viewBox": f"0 0 {size} {size}"},
    )
    caption = f"K_{{{spec.m},{spec.n}}}, K={K}, crossings={crossings}"
    ET.SubElement(root, "title").text = caption
    ET.SubElement(root, "circle", {"cx": str(half), "cy": str(half), "r": f"{radius:.4f}",
                                   "fill": "none", "stroke": "#bbbbbb"})

    ticks_g = ET.SubElement(root, "g", {"class": "arc-boundaries", "stroke": "#444444"})
    for theta in ticks:
        x0, y0 = px(0.93 * math.cos(theta), 0.93 * math.sin(theta))
        x1, y1 = px(1.07 * math.cos(theta), 1.07 * math.sin(theta))
        ET.SubElement(ticks_g, "path", {"d": f"M {x0} {y0} L {x1} {y1}"})

    chords = ET.SubElement(root, "g", {"class": "chords", "stroke": "#3060a0",
                                       "stroke-width": "1"})
    for u in spec.pink_ids():
        for v in spec.black_ids():
            x1, y1 = px(*coords[u])
            x2, y2 = px(*coords[v])
            ET.SubElement(chords, "line", {"x1": x1, "y1": y1, "x2": x2, "y2": y2,
                                           "data-u": str(u), "data-v": str(v)})

    dots = ET.SubElement(root, "g", {"class": "vertices"})
    for v, (x, y) in sorted(coords.items()):
        cx, cy = px(x, y)
        color = spec.color_of(v)
        ET.SubElement(dots, "circle", {"cx": cx, "cy": cy, "r": "6", "fill": FILL[color],
                                       "data-id": str(v), "data-color": color.value})

    label = ET.SubElement(root, "text", {"x": str(half), "y": "24", "text-anchor": "middle",
                                         "font-family": "sans-serif", "font-size": "16"})
    label.text = caption
    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
