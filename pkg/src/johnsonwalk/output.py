"""CSV and SVG emission for simulation results.

CSV is the interchange format: UTF-8, header row, LF line endings, floats
printed with 17 significant digits so parsing the file back reproduces the
exact float64 values.  The SVG writer draws a small standalone line chart
(fixed 800x500 canvas) for eyeballing success curves and overlap sweeps
without a plotting stack.
"""

from __future__ import annotations

import csv
import sys
from typing import IO, Iterable, Optional, Sequence

import numpy as np

CANVAS_WIDTH = 800
CANVAS_HEIGHT = 500
_MARGIN_LEFT = 70.0
_MARGIN_RIGHT = 25.0
_MARGIN_TOP = 25.0
_MARGIN_BOTTOM = 55.0
_SERIES_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                  "#ff7f0e", "#8c564b")


def _format_value(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _write_rows(handle: IO[str], header: Sequence[str],
                rows: Iterable[Sequence]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_format_value(value) for value in row])


def write_csv(path: Optional[str], header: Sequence[str],
              rows: Iterable[Sequence]) -> None:
    """Write one header row plus data rows; path None means stdout.

    An empty ``rows`` iterable produces a header-only file, which keeps
    downstream concatenation and diffing predictable.
    """
    if path is None:
        _write_rows(sys.stdout, header, rows)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        _write_rows(handle, header, rows)


def _padded(lo: float, hi: float) -> tuple[float, float]:
    if hi > lo:
        return lo, hi
    pad = 0.5 * max(1.0, abs(lo))
    return lo - pad, hi + pad


def render_svg(path: Optional[str],
               series: Sequence[tuple[np.ndarray, np.ndarray]],
               x_label: str = "", y_label: str = "") -> None:
    """Render (x, y) series as a standalone SVG line chart.

    Each series becomes one polyline (one circle marker when it has a
    single point).  Axes carry five tick labels per direction; degenerate
    data ranges are padded so a flat series still renders.  Empty input is
    a domain error, not an empty picture.
    """
    cleaned = []
    for xs, ys in series:
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        if xs.shape != ys.shape or xs.ndim != 1:
            raise ValueError("each series needs matching 1-d x and y arrays")
        if xs.size == 0:
            raise ValueError("cannot render an empty series")
        cleaned.append((xs, ys))
    if not cleaned:
        raise ValueError("cannot render an empty chart")

    x_lo, x_hi = _padded(min(float(xs.min()) for xs, _ in cleaned),
                         max(float(xs.max()) for xs, _ in cleaned))
    y_lo, y_hi = _padded(min(float(ys.min()) for _, ys in cleaned),
                         max(float(ys.max()) for _, ys in cleaned))
    plot_w = CANVAS_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = CANVAS_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM
    base_y = CANVAS_HEIGHT - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return base_y - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_WIDTH}" '
        f'height="{CANVAS_HEIGHT}" viewBox="0 0 {CANVAS_WIDTH} {CANVAS_HEIGHT}">',
        f'<rect width="{CANVAS_WIDTH}" height="{CANVAS_HEIGHT}" fill="white"/>',
        f'<line x1="{_MARGIN_LEFT}" y1="{base_y}" x2="{CANVAS_WIDTH - _MARGIN_RIGHT}" '
        f'y2="{base_y}" stroke="black"/>',
        f'<line x1="{_MARGIN_LEFT}" y1="{_MARGIN_TOP}" x2="{_MARGIN_LEFT}" '
        f'y2="{base_y}" stroke="black"/>',
    ]
    for i in range(5):
        frac = i / 4.0
        xt = x_lo + frac * (x_hi - x_lo)
        xp = px(xt)
        parts.append(f'<line x1="{xp:.2f}" y1="{base_y}" x2="{xp:.2f}" '
                     f'y2="{base_y + 5}" stroke="black"/>')
        parts.append(f'<text x="{xp:.2f}" y="{base_y + 20}" font-size="12" '
                     f'text-anchor="middle">{format(xt, ".4g")}</text>')
        yt = y_lo + frac * (y_hi - y_lo)
        yp = py(yt)
        parts.append(f'<line x1="{_MARGIN_LEFT - 5}" y1="{yp:.2f}" '
                     f'x2="{_MARGIN_LEFT}" y2="{yp:.2f}" stroke="black"/>')
        parts.append(f'<text x="{_MARGIN_LEFT - 8}" y="{yp + 4:.2f}" font-size="12" '
                     f'text-anchor="end">{format(yt, ".4g")}</text>')
    if x_label:
        parts.append(f'<text x="{(_MARGIN_LEFT + CANVAS_WIDTH - _MARGIN_RIGHT) / 2:.2f}" '
                     f'y="{CANVAS_HEIGHT - 12}" font-size="14" '
                     f'text-anchor="middle">{x_label}</text>')
    if y_label:
        parts.append(f'<text transform="rotate(-90)" x="{-(CANVAS_HEIGHT / 2):.2f}" '
                     f'y="18" font-size="14" text-anchor="middle">{y_label}</text>')
    for idx, (xs, ys) in enumerate(cleaned):
        color = _SERIES_COLORS[idx % len(_SERIES_COLORS)]
        if xs.size == 1:
            parts.append(f'<circle cx="{px(xs[0]):.2f}" cy="{py(ys[0]):.2f}" '
                         f'r="4" fill="{color}"/>')
            continue
        points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        parts.append(f'<polyline fill="none" stroke="{color}" '
                     f'stroke-width="1.5" points="{points}"/>')
    parts.append("</svg>")
    document = "\n".join(parts) + "\n"

    if path is None:
        sys.stdout.write(document)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(document)
