"""Deterministic SVG rendering of WMSD-space panels.

Layers, back to front: color-mapped scalar field, region boundary,
isoline curves, labeled alternative markers. Identical inputs yield
byte-identical output; numbers are formatted with fixed precision and
nothing depends on dict iteration order or timestamps.

Color maps value 0 to blue and 1 to red. For relative-closeness style
fields the map is a blue-white-red diverging ramp anchored at 0.5;
other fields use a monotone blue-to-red ramp.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainViolation
from .geometry import ScalarField
from .model import WmsdPoint

_BLUE = (33, 102, 172)
_WHITE = (247, 247, 247)
_RED = (178, 24, 43)

WIDTH = 720
HEIGHT = 480
MARGIN = 40


def _lerp(c0, c1, t):
    return tuple(int(round(a + (b - a) * t)) for a, b in zip(c0, c1))


def color_for(value: float, diverging: bool) -> str:
    """Hex color for a value in [0, 1]; values outside are clamped."""
    v = min(max(float(value), 0.0), 1.0)
    if diverging:
        if v < 0.5:
            rgb = _lerp(_BLUE, _WHITE, v / 0.5)
        else:
            rgb = _lerp(_WHITE, _RED, (v - 0.5) / 0.5)
    else:
        rgb = _lerp(_BLUE, _RED, v)
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def emit_svg(field: ScalarField | None = None,
             boundary: list[WmsdPoint] | None = None,
             points: list[tuple[str, WmsdPoint]] | None = None,
             isolines: list[list[WmsdPoint]] | None = None,
             *, diverging: bool = False, clipped: bool = True,
             window: tuple[float, float, float, float] | None = None) -> str:
    """Compose an SVG panel from the given layers.

    window defaults to the field's window; without a field it must be
    given. clipped hides field cells outside the attainable region.
    """
    if window is None:
        if field is None:
            raise DomainViolation("need a field or an explicit window")
        window = field.window
    wm_lo, wm_hi, wsd_lo, wsd_hi = (float(x) for x in window)
    if not (wm_lo < wm_hi and wsd_lo < wsd_hi):
        raise DomainViolation("window must have positive extent")

    span_x = wm_hi - wm_lo
    span_y = wsd_hi - wsd_lo
    plot_w = WIDTH - 2 * MARGIN
    plot_h = HEIGHT - 2 * MARGIN

    def px(wm: float) -> float:
        return MARGIN + (wm - wm_lo) / span_x * plot_w

    def py(wsd: float) -> float:
        return HEIGHT - MARGIN - (wsd - wsd_lo) / span_y * plot_h

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">')
    out.append(
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" '
        'fill="#ffffff"/>')

    if field is not None:
        cw = plot_w / field.nx
        ch = plot_h / field.ny
        xs, ys = field.cell_centers()
        out.append('<g shape-rendering="crispEdges">')
        for i in range(field.ny):
            for j in range(field.nx):
                if clipped and not field.mask[i, j]:
                    continue
                x = px(xs[j]) - cw / 2.0
                y = py(ys[i]) - ch / 2.0
                fill = color_for(field.values[i, j], diverging)
                out.append(
                    f'<rect x="{x:.2f}" y="{y:.2f}" width="{cw:.2f}" '
                    f'height="{ch:.2f}" fill="{fill}"/>')
        out.append('</g>')

    for line in (isolines or []):
        if not line:
            continue
        coords = " ".join(f"{px(p.wm):.2f},{py(p.wsd):.2f}" for p in line)
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="#333333" '
            'stroke-width="1" stroke-dasharray="4 3"/>')

    if boundary:
        coords = " ".join(
            f"{px(p.wm):.2f},{py(p.wsd):.2f}" for p in boundary)
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="#000000" '
            'stroke-width="1.5"/>')

    for ident, p in (points or []):
        x, y = px(p.wm), py(p.wsd)
        out.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="#000000"/>')
        out.append(
            f'<text x="{x + 5:.2f}" y="{y - 5:.2f}" font-family="sans-serif"'
            f' font-size="11" fill="#000000">{_escape(ident)}</text>')

    out.append(
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" '
        f'height="{plot_h}" fill="none" stroke="#888888" '
        'stroke-width="0.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))
