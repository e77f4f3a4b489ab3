"""Dependency-free SVG 1.1 line charts with mean +/- deviation bands.

Output is a pure function of the input series: fixed palette, fixed
float formatting, no timestamps, so identical data yields identical
bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
)

_MARGIN_LEFT = 72
_MARGIN_RIGHT = 150
_MARGIN_TOP = 46
_MARGIN_BOTTOM = 58


@dataclass(frozen=True)
class Series:
    label: str
    xs: tuple
    ys: tuple
    band: tuple | None = None  # +/- half-width per point (e.g. stddev)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:.6g}"


def render_line_chart(series, title: str, x_label: str, y_label: str,
                      width: int = 720, height: int = 460) -> str:
    series = list(series)
    if not series:
        raise ValueError("at least one series required")
    xs_all = [x for s in series for x in s.xs]
    ys_low, ys_high = [], []
    for s in series:
        band = s.band if s.band is not None else [0.0] * len(s.ys)
        ys_low.extend(y - b for y, b in zip(s.ys, band))
        ys_high.extend(y + b for y, b in zip(s.ys, band))
    x_min, x_max = min(xs_all), max(xs_all)
    y_min, y_max = min(ys_low), max(ys_high)
    if x_max == x_min:
        x_min, x_max = x_min - 1.0, x_max + 1.0
    if y_max == y_min:
        y_min, y_max = y_min - 1.0, y_max + 1.0
    pad = 0.05 * (y_max - y_min)
    y_min -= pad
    y_max += pad
    plot_w = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = height - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w

    def py(y: float) -> float:
        return _MARGIN_TOP + plot_h - (y - y_min) / (y_max - y_min) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
    ]
    # axes, grid lines, tick labels
    n_ticks = 5
    for i in range(n_ticks + 1):
        fx = x_min + (x_max - x_min) * i / n_ticks
        X = px(fx)
        out.append(
            f'<line x1="{_fmt(X)}" y1="{_MARGIN_TOP}" x2="{_fmt(X)}" '
            f'y2="{_MARGIN_TOP + plot_h}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(X)}" y="{_MARGIN_TOP + plot_h + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{_tick_label(fx)}</text>'
        )
        fy = y_min + (y_max - y_min) * i / n_ticks
        Y = py(fy)
        out.append(
            f'<line x1="{_MARGIN_LEFT}" y1="{_fmt(Y)}" x2="{_MARGIN_LEFT + plot_w}" '
            f'y2="{_fmt(Y)}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_MARGIN_LEFT - 8}" y="{_fmt(Y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_tick_label(fy)}</text>'
        )
    out.append(
        f'<rect x="{_MARGIN_LEFT}" y="{_MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#333333" stroke-width="1"/>'
    )
    out.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:.0f}" y="{height - 14}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{x_label}</text>'
    )
    out.append(
        f'<text x="18" y="{_MARGIN_TOP + plot_h / 2:.0f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {_MARGIN_TOP + plot_h / 2:.0f})">{y_label}</text>'
    )
    # bands first so every line stays visible
    for idx, s in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        if s.band is not None and any(b > 0 for b in s.band):
            upper = [(px(x), py(y + b)) for x, y, b in zip(s.xs, s.ys, s.band)]
            lower = [(px(x), py(y - b)) for x, y, b in zip(s.xs, s.ys, s.band)]
            pts = " ".join(f"{_fmt(X)},{_fmt(Y)}" for X, Y in upper + lower[::-1])
            out.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="0.15" stroke="none"/>')
    for idx, s in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in zip(s.xs, s.ys))
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        for x, y in zip(s.xs, s.ys):
            out.append(
                f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="2.5" fill="{color}"/>'
            )
    # legend
    lx = _MARGIN_LEFT + plot_w + 14
    for idx, s in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        ly = _MARGIN_TOP + 10 + idx * 20
        out.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{lx + 28}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="12">{s.label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
