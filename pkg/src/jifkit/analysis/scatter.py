"""Scatter-pair export: (journal, x, y) point series plus CSV/SVG
serializers for pairwise indicator comparisons."""

from __future__ import annotations

import csv
import io as _io
from typing import Sequence

from ..errors import EmptyColumnError
from .table import IndicatorTable, format_sig

#: One point: (journal id, x value, y value).
ScatterPoint = tuple[str, float, float]


def scatter_export(table: IndicatorTable, x: str, y: str) -> tuple[ScatterPoint, ...]:
    """Points for the journals where both indicator cells are present,
    in table row order."""
    x_index = table.column_index(x)
    y_index = table.column_index(y)
    points: list[ScatterPoint] = []
    for journal, row in zip(table.journals, table.values):
        x_value, y_value = row[x_index], row[y_index]
        if x_value is None or y_value is None:
            continue
        points.append((journal, x_value, y_value))
    return tuple(points)


def points_to_csv(points: Sequence[ScatterPoint], *, full_precision: bool = False) -> str:
    """CSV with header ``journal,x,y``."""
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["journal", "x", "y"])
    for journal, x_value, y_value in points:
        if full_precision:
            writer.writerow([journal, repr(x_value), repr(y_value)])
        else:
            writer.writerow([journal, format_sig(x_value), format_sig(y_value)])
    return buffer.getvalue()


_WIDTH, _HEIGHT = 640, 480
_MARGIN = 60


def _scale(values: Sequence[float]) -> tuple[float, float]:
    low, high = min(values), max(values)
    if low == high:
        # Degenerate span: center the points on the axis.
        pad = 1.0 if low == 0 else abs(low) * 0.5
        return low - pad, high + pad
    pad = (high - low) * 0.05
    return low - pad, high + pad


def points_to_svg(points: Sequence[ScatterPoint], x_label: str, y_label: str) -> str:
    """Minimal SVG scatter: fixed viewport, linear axes, one marker per
    point, axis labels from the indicator names."""
    if not points:
        raise EmptyColumnError("cannot plot an empty point series")
    xs = [p[1] for p in points]
    ys = [p[2] for p in points]
    x_low, x_high = _scale(xs)
    y_low, y_high = _scale(ys)
    plot_width = _WIDTH - 2 * _MARGIN
    plot_height = _HEIGHT - 2 * _MARGIN

    def px(value: float) -> float:
        return _MARGIN + (value - x_low) / (x_high - x_low) * plot_width

    def py(value: float) -> float:
        return _HEIGHT - _MARGIN - (value - y_low) / (y_high - y_low) * plot_height

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'  <rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'  <line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'  <line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'  <text x="{_WIDTH // 2}" y="{_HEIGHT - _MARGIN // 4}" '
        f'text-anchor="middle" font-size="14">{_escape(x_label)}</text>',
        f'  <text x="{_MARGIN // 4}" y="{_HEIGHT // 2}" text-anchor="middle" '
        f'font-size="14" transform="rotate(-90 {_MARGIN // 4} {_HEIGHT // 2})">'
        f'{_escape(y_label)}</text>',
        f'  <text x="{_MARGIN}" y="{_HEIGHT - _MARGIN + 18}" text-anchor="middle" '
        f'font-size="11">{format_sig(x_low)}</text>',
        f'  <text x="{_WIDTH - _MARGIN}" y="{_HEIGHT - _MARGIN + 18}" '
        f'text-anchor="middle" font-size="11">{format_sig(x_high)}</text>',
        f'  <text x="{_MARGIN - 8}" y="{_HEIGHT - _MARGIN}" text-anchor="end" '
        f'font-size="11">{format_sig(y_low)}</text>',
        f'  <text x="{_MARGIN - 8}" y="{_MARGIN + 4}" text-anchor="end" '
        f'font-size="11">{format_sig(y_high)}</text>',
    ]
    for journal, x_value, y_value in points:
        parts.append(
            f'  <circle cx="{px(x_value):.2f}" cy="{py(y_value):.2f}" r="3" '
            f'fill="steelblue"><title>{_escape(journal)}</title></circle>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        .replace('"', "&quot;")
    )
