"""Static SVG line charts, byte-identical for identical input.

No timestamps, no generated ids, fixed-precision coordinates: the same
series always render to the same bytes.
"""

from __future__ import annotations

from collections.abc import Sequence

__all__ = ["render_line_chart"]

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)

_WIDTH, _HEIGHT = 720, 480
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 64, 168, 40, 48


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_line_chart(
    series: Sequence[tuple[str, Sequence[tuple[float, float]]]],
    title: str = "",
    x_label: str = "",
    y_label: str = "",
) -> str:
    """Render named (x, y) polylines with axes, ticks, and a legend."""
    if not series or any(not points for _, points in series):
        raise ValueError("every series needs at least one point")
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(ys), max(ys)
    if x_max == x_min:
        x_min, x_max = x_min - 0.5, x_max + 0.5
    if y_max == y_min:
        y_min, y_max = y_min - 0.5, y_max + 0.5
    pad = 0.05 * (y_max - y_min)
    y_min, y_max = y_min - pad, y_max + pad

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def px(x: float) -> float:
        return _MARGIN_L + (x - x_min) / (x_max - x_min) * plot_w

    def py(y: float) -> float:
        return _MARGIN_T + (y_max - y) / (y_max - y_min) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{_WIDTH // 2}" y="22" text-anchor="middle" font-size="15">{_escape(title)}</text>'
        )

    axis_y = _MARGIN_T + plot_h
    out.append(
        f'<line x1="{_MARGIN_L}" y1="{axis_y}" x2="{_MARGIN_L + plot_w}" y2="{axis_y}" stroke="black"/>'
    )
    out.append(
        f'<line x1="{_MARGIN_L}" y1="{_MARGIN_T}" x2="{_MARGIN_L}" y2="{axis_y}" stroke="black"/>'
    )

    x_ticks = sorted(set(xs))
    if len(x_ticks) > 12:
        step = (x_max - x_min) / 8
        x_ticks = [x_min + i * step for i in range(9)]
    for xt in x_ticks:
        xp = px(xt)
        out.append(f'<line x1="{_fmt(xp)}" y1="{axis_y}" x2="{_fmt(xp)}" y2="{axis_y + 5}" stroke="black"/>')
        out.append(
            f'<text x="{_fmt(xp)}" y="{axis_y + 18}" text-anchor="middle">{xt:g}</text>'
        )
    for i in range(5):
        yt = y_min + i * (y_max - y_min) / 4
        yp = py(yt)
        out.append(f'<line x1="{_MARGIN_L - 5}" y1="{_fmt(yp)}" x2="{_MARGIN_L}" y2="{_fmt(yp)}" stroke="black"/>')
        out.append(
            f'<line x1="{_MARGIN_L}" y1="{_fmt(yp)}" x2="{_MARGIN_L + plot_w}" y2="{_fmt(yp)}" '
            f'stroke="#dddddd" stroke-dasharray="3,3"/>'
        )
        out.append(
            f'<text x="{_MARGIN_L - 9}" y="{_fmt(yp + 4)}" text-anchor="end">{yt:.2f}</text>'
        )
    if x_label:
        out.append(
            f'<text x="{_MARGIN_L + plot_w / 2:.0f}" y="{_HEIGHT - 10}" text-anchor="middle">{_escape(x_label)}</text>'
        )
    if y_label:
        out.append(
            f'<text x="16" y="{_MARGIN_T + plot_h / 2:.0f}" text-anchor="middle" '
            f'transform="rotate(-90 16 {_MARGIN_T + plot_h / 2:.0f})">{_escape(y_label)}</text>'
        )

    legend_step = 14 if len(series) <= 28 else 11
    for i, (name, points) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        coords = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in sorted(points))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>')
        ly = _MARGIN_T + legend_step * i
        lx = _MARGIN_L + plot_w + 12
        out.append(f'<line x1="{lx}" y1="{ly + 6}" x2="{lx + 18}" y2="{ly + 6}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 24}" y="{ly + 10}" font-size="10">{_escape(name)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
