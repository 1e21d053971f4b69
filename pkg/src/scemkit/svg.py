"""Minimal deterministic SVG line plots."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 512, 384
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 64, 96, 32, 40
N_TICKS = 5
COLORS = {
    "exact": "#000000",
    "mmae": "#d62728",
    "scem": "#1f77b4",
    "scemw": "#2ca02c",
}
FALLBACK_COLORS = ("#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


@dataclass(frozen=True)
class Frame:
    """Linear map from data coordinates to pixels."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    width: int = WIDTH
    height: int = HEIGHT

    @property
    def left(self) -> float:
        return MARGIN_LEFT

    @property
    def right(self) -> float:
        return self.width - MARGIN_RIGHT

    @property
    def top(self) -> float:
        return MARGIN_TOP

    @property
    def bottom(self) -> float:
        return self.height - MARGIN_BOTTOM

    def px(self, x, y):
        sx = self.left + (np.asarray(x) - self.x_min) / (self.x_max - self.x_min) * (self.right - self.left)
        sy = self.bottom - (np.asarray(y) - self.y_min) / (self.y_max - self.y_min) * (self.bottom - self.top)
        return sx, sy

    def data(self, sx, sy):
        x = self.x_min + (np.asarray(sx) - self.left) / (self.right - self.left) * (self.x_max - self.x_min)
        y = self.y_min + (self.bottom - np.asarray(sy)) / (self.bottom - self.top) * (self.y_max - self.y_min)
        return x, y

    @property
    def pixel_height(self) -> float:
        """Data units per vertical pixel."""
        return (self.y_max - self.y_min) / (self.bottom - self.top)


def frame_for(x, series: dict) -> Frame:
    ys = np.concatenate([np.asarray(v, dtype=float) for v in series.values()])
    lo, hi = float(ys.min()), float(ys.max())
    if hi - lo < 1e-12:
        lo, hi = lo - 0.5, hi + 0.5
    pad = 0.05 * (hi - lo)
    return Frame(float(x[0]), float(x[-1]), lo - pad, hi + pad)


def _num(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    text = f"{v:.3g}"
    return "0" if text == "-0" else text


def render(x, series: dict, title: str) -> str:
    """One polyline per entry of ``series`` (name -> y values over ``x``)."""
    if not series:
        raise ValueError("nothing to plot: method set is empty")
    x = np.asarray(x, dtype=float)
    frame = frame_for(x, series)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{frame.width}" height="{frame.height}" '
        f'viewBox="0 0 {frame.width} {frame.height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{frame.width}" height="{frame.height}" fill="#ffffff"/>',
        f'<text x="{_num((frame.left + frame.right) / 2)}" y="{_num(frame.top / 2 + 5)}" '
        f'text-anchor="middle" font-size="13">{escape(title)}</text>',
        f'<g id="axes" stroke="#000000" stroke-width="1" fill="none">'
        f'<rect x="{_num(frame.left)}" y="{_num(frame.top)}" '
        f'width="{_num(frame.right - frame.left)}" height="{_num(frame.bottom - frame.top)}"/></g>',
    ]
    ticks = ['<g id="ticks" fill="#000000">']
    for i in range(N_TICKS):
        t = i / (N_TICKS - 1)
        xv = frame.x_min + t * (frame.x_max - frame.x_min)
        yv = frame.y_min + t * (frame.y_max - frame.y_min)
        sx, _ = frame.px(xv, frame.y_min)
        _, sy = frame.px(frame.x_min, yv)
        ticks.append(
            f'<line x1="{_num(sx)}" y1="{_num(frame.bottom)}" x2="{_num(sx)}" '
            f'y2="{_num(frame.bottom + 4)}" stroke="#000000"/>'
            f'<text x="{_num(sx)}" y="{_num(frame.bottom + 16)}" text-anchor="middle">{_tick_label(xv)}</text>'
        )
        ticks.append(
            f'<line x1="{_num(frame.left - 4)}" y1="{_num(sy)}" x2="{_num(frame.left)}" '
            f'y2="{_num(sy)}" stroke="#000000"/>'
            f'<text x="{_num(frame.left - 6)}" y="{_num(sy + 4)}" text-anchor="end">{_tick_label(yv)}</text>'
        )
    ticks.append("</g>")
    out.extend(ticks)

    legend = ['<g id="legend">']
    for i, (name, y) in enumerate(series.items()):
        color = COLORS.get(name, FALLBACK_COLORS[i % len(FALLBACK_COLORS)])
        sx, sy = frame.px(x, np.asarray(y, dtype=float))
        points = " ".join(f"{_num(a)},{_num(b)}" for a, b in zip(sx, sy))
        out.append(
            f'<polyline id="series-{escape(name)}" fill="none" stroke="{color}" '
            f'stroke-width="1.5" points="{points}"/>'
        )
        ly = frame.top + 12 + 16 * i
        lx = frame.right + 10
        legend.append(
            f'<line x1="{_num(lx)}" y1="{_num(ly)}" x2="{_num(lx + 18)}" y2="{_num(ly)}" '
            f'stroke="{color}" stroke-width="2"/>'
            f'<text x="{_num(lx + 24)}" y="{_num(ly + 4)}">{escape(name)}</text>'
        )
    legend.append("</g>")
    out.extend(legend)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def parse_polyline(svg: str, name: str) -> np.ndarray:
    """Pixel coordinates of the named series, as an ``(n, 2)`` array."""
    marker = f'id="series-{name}"'
    start = svg.index(marker)
    pts = svg.index('points="', start) + len('points="')
    end = svg.index('"', pts)
    pairs = [p.split(",") for p in svg[pts:end].split()]
    return np.array([[float(a), float(b)] for a, b in pairs])

