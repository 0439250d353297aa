"""Self-contained SVG heatmaps (one ``<rect>`` per cell, inline styles only)."""

from __future__ import annotations

from html import escape
from typing import Sequence

import numpy as np

# viridis control points; numeric fields are interpolated linearly between them
RAMP = ((0x44, 0x01, 0x54), (0x3B, 0x52, 0x8B), (0x21, 0x91, 0x8C), (0x5E, 0xC9, 0x62), (0xFD, 0xE7, 0x25))

KIND_COLORS = {
    "IndifferencePoint": "#fde725",
    "ForcedCompletion": "#440154",
    "FullShare": "#21918c",
    "NoInteraction": "#3b528b",
    "ExpertOnly": "#5ec962",
}

PLOT = 480
MARGIN_L, MARGIN_T, MARGIN_B, LEGEND_W = 56, 28, 44, 170


def ramp_color(t: float) -> str:
    t = min(max(t, 0.0), 1.0) * (len(RAMP) - 1)
    i = min(int(t), len(RAMP) - 2)
    f = t - i
    rgb = (round(a + (b - a) * f) for a, b in zip(RAMP[i], RAMP[i + 1]))
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _n(v: float) -> str:
    return format(v, ".4f").rstrip("0").rstrip(".")


def heatmap_svg(
    values: np.ndarray,
    x_values: Sequence[float],
    y_values: Sequence[float],
    x_label: str,
    y_label: str,
    title: str = "",
    discrete: bool = False,
) -> str:
    """Render ``values[i, j]`` at column ``i`` (x axis) and row ``j`` (y axis,
    increasing upwards)."""
    nx, ny = values.shape
    cw, ch = PLOT / nx, PLOT / ny
    width = MARGIN_L + PLOT + LEGEND_W
    height = MARGIN_T + PLOT + MARGIN_B

    if discrete:
        labels = [k for k in KIND_COLORS if k in set(values.ravel())]
        colors = np.vectorize(KIND_COLORS.get, otypes=[object])(values)
    else:
        lo, hi = float(np.min(values)), float(np.max(values))
        span = hi - lo if hi > lo else 1.0
        colors = np.vectorize(lambda v: ramp_color((v - lo) / span), otypes=[object])(values)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f"<title>{escape(title)}</title>",
        "<desc>Each cell is evaluated at its centre; region boundaries are accurate to half a cell.</desc>",
        f'<rect x="0" y="0" width="{width}" height="{height}" style="fill:#ffffff"/>',
        f'<g shape-rendering="crispEdges" transform="translate({MARGIN_L},{MARGIN_T})">',
    ]
    for i in range(nx):
        for j in range(ny):
            y = PLOT - (j + 1) * ch
            out.append(
                f'<rect class="cell" x="{_n(i * cw)}" y="{_n(y)}" width="{_n(cw)}" height="{_n(ch)}" '
                f'style="fill:{colors[i, j]}"/>'
            )
    out.append("</g>")

    x0, x1 = float(x_values[0]), float(x_values[-1])
    y0, y1 = float(y_values[0]), float(y_values[-1])
    bottom = MARGIN_T + PLOT
    out += [
        f'<text x="{MARGIN_L}" y="{bottom + 16}">{x0:.3g}</text>',
        f'<text x="{MARGIN_L + PLOT}" y="{bottom + 16}" text-anchor="end">{x1:.3g}</text>',
        f'<text x="{MARGIN_L + PLOT / 2:g}" y="{bottom + 34}" text-anchor="middle">{escape(x_label)}</text>',
        f'<text x="{MARGIN_L - 4}" y="{bottom}" text-anchor="end">{y0:.3g}</text>',
        f'<text x="{MARGIN_L - 4}" y="{MARGIN_T + 10}" text-anchor="end">{y1:.3g}</text>',
        f'<text x="14" y="{MARGIN_T + PLOT / 2:g}" text-anchor="middle" '
        f'transform="rotate(-90 14 {MARGIN_T + PLOT / 2:g})">{escape(y_label)}</text>',
        f'<text x="{MARGIN_L + PLOT / 2:g}" y="18" text-anchor="middle">{escape(title)}</text>',
    ]

    lx = MARGIN_L + PLOT + 16
    if discrete:
        for k, label in enumerate(labels):
            y = MARGIN_T + 20 * k
            out.append(f'<rect class="legend" x="{lx}" y="{y}" width="14" height="14" style="fill:{KIND_COLORS[label]}"/>')
            out.append(f'<text x="{lx + 20}" y="{y + 11}">{label}</text>')
    else:
        steps = 32
        for k in range(steps):
            y = MARGIN_T + PLOT * (steps - 1 - k) / steps
            out.append(
                f'<rect class="legend" x="{lx}" y="{_n(y)}" width="14" height="{_n(PLOT / steps)}" '
                f'style="fill:{ramp_color(k / (steps - 1))}"/>'
            )
        out.append(f'<text x="{lx + 20}" y="{MARGIN_T + 10}">{hi:.4g}</text>')
        out.append(f'<text x="{lx + 20}" y="{bottom}">{lo:.4g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
