"""Tiny deterministic SVG writer for sweep curves.

Pure string assembly, no plotting dependency: identical curves yield
byte-identical documents.  Each sweep renders as up to three series (the
model's empirical P(E), the quantum law sin^2 delta, and the volume law
2|delta|/pi where defined) with circle markers at every point and a
polyline whenever a series has at least two points.  The x axis is
annotated at multiples of pi/8.
"""

from __future__ import annotations

import math
from fractions import Fraction

WIDTH = 640
HEIGHT = 420
MARGIN_LEFT = 70
MARGIN_RIGHT = 24
MARGIN_TOP = 24
MARGIN_BOTTOM = 56

PLOT_W = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_H = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

SERIES_COLORS = ("#1f77b4", "#d62728", "#2ca02c")


def pi_eighth_label(k: int) -> str:
    """Label for the angle k * pi/8, reduced: 0, π/8, π/4, 3π/8, π/2, ..."""
    if k == 0:
        return "0"
    frac = Fraction(k, 8)
    n, d = frac.numerator, frac.denominator
    head = "π" if n == 1 else ("-π" if n == -1 else f"{n}π")
    return head if d == 1 else f"{head}/{d}"


def render_sweep_svg(curve) -> str:
    """Render a harness.SweepCurve (duck-typed: .model, .points) to SVG text."""
    points = curve.points
    if not points:
        raise ValueError("cannot plot an empty sweep")
    deltas = [p.delta for p in points]
    d_lo, d_hi = min(deltas), max(deltas)
    if d_hi == d_lo:
        # degenerate single-x domain; pad so the point sits mid-plot
        d_lo -= math.pi / 8.0
        d_hi += math.pi / 8.0

    def x_pix(d: float) -> float:
        return MARGIN_LEFT + (d - d_lo) / (d_hi - d_lo) * PLOT_W

    def y_pix(p: float) -> float:
        return MARGIN_TOP + (1.0 - p) * PLOT_H

    series = [
        (curve.model, [(p.delta, p.p_model) for p in points]),
        ("sin²δ", [(p.delta, p.p_born) for p in points]),
        ("2|δ|/π", [(p.delta, p.p_volume) for p in points if p.p_volume is not None]),
    ]

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]

    # axes
    x0, x1 = MARGIN_LEFT, MARGIN_LEFT + PLOT_W
    y0, y1 = MARGIN_TOP + PLOT_H, MARGIN_TOP
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')

    # x ticks at multiples of pi/8 inside the domain
    step = math.pi / 8.0
    k_lo = math.ceil(d_lo / step - 1e-9)
    k_hi = math.floor(d_hi / step + 1e-9)
    for k in range(k_lo, k_hi + 1):
        xx = x_pix(k * step)
        out.append(f'<line x1="{xx:.2f}" y1="{y0}" x2="{xx:.2f}" y2="{y0 + 6}" stroke="black"/>')
        out.append(
            f'<text x="{xx:.2f}" y="{y0 + 22}" font-size="13" text-anchor="middle">'
            f"{pi_eighth_label(k)}</text>"
        )
    out.append(
        f'<text x="{(x0 + x1) / 2:.2f}" y="{HEIGHT - 10}" font-size="14" '
        f'text-anchor="middle">δ</text>'
    )

    # y ticks every 0.25
    for j in range(5):
        p = j / 4.0
        yy = y_pix(p)
        out.append(f'<line x1="{x0 - 6}" y1="{yy:.2f}" x2="{x0}" y2="{yy:.2f}" stroke="black"/>')
        out.append(
            f'<text x="{x0 - 10}" y="{yy + 4:.2f}" font-size="13" text-anchor="end">{p:.2f}</text>'
        )
    out.append(
        f'<text x="18" y="{(y0 + y1) / 2:.2f}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 18 {(y0 + y1) / 2:.2f})">P(E)</text>'
    )

    # series: polyline when there is a line to draw, circles always
    for (name, pts), color in zip(series, SERIES_COLORS):
        if len(pts) >= 2:
            coords = " ".join(f"{x_pix(d):.2f},{y_pix(p):.2f}" for d, p in pts)
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>')
        for d, p in pts:
            out.append(f'<circle cx="{x_pix(d):.2f}" cy="{y_pix(p):.2f}" r="3" fill="{color}"/>')

    # legend, top-left inside the plot
    for row, ((name, _), color) in enumerate(zip(series, SERIES_COLORS)):
        ly = MARGIN_TOP + 14 + 18 * row
        out.append(f'<rect x="{x0 + 10}" y="{ly - 9}" width="18" height="4" fill="{color}"/>')
        out.append(f'<text x="{x0 + 34}" y="{ly}" font-size="13">{name}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
