"""Static SVG 1.1 scatter plots of lattice point sets.

Output depends only on the inputs: points are sorted and every coordinate is
printed with a fixed number of decimals.
"""
from __future__ import annotations

from typing import Iterable
from xml.sax.saxutils import escape

__all__ = ["scatter_svg"]

_SIZE = 800
_MARGIN = 60


def _f(v: float) -> str:
    return f"{v:.3f}"


def scatter_svg(points: Iterable, extent: int, title: str = "", xlabel: str = "a", ylabel: str = "b") -> str:
    """One square mark per lattice point of ``[-extent, extent]^2``, with labelled axes."""
    if extent < 1:
        raise ValueError("extent must be >= 1")
    plot = _SIZE - 2 * _MARGIN
    scale = plot / (2 * extent + 1)
    mark = max(scale, 1.0)

    def px(a):
        return _MARGIN + (a + extent) * scale

    def py(b):
        return _MARGIN + (extent - b) * scale

    cx, cy = px(0) + scale / 2, py(0) + scale / 2
    lo, hi = _MARGIN, _SIZE - _MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<text x="{_SIZE // 2}" y="{_MARGIN // 2}" text-anchor="middle" font-size="16">{escape(title)}</text>',
        f'<rect x="{lo}" y="{lo}" width="{plot}" height="{plot}" fill="none" stroke="black" stroke-width="1"/>',
        f'<line x1="{lo}" y1="{_f(cy)}" x2="{hi}" y2="{_f(cy)}" stroke="#bbbbbb" stroke-width="0.5"/>',
        f'<line x1="{_f(cx)}" y1="{lo}" x2="{_f(cx)}" y2="{hi}" stroke="#bbbbbb" stroke-width="0.5"/>',
        f'<text x="{_SIZE // 2}" y="{_SIZE - 15}" text-anchor="middle" font-size="14">{escape(xlabel)}</text>',
        f'<text x="18" y="{_SIZE // 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 18 {_SIZE // 2})">{escape(ylabel)}</text>',
    ]
    for v in (-extent, 0, extent):
        out.append(f'<text x="{_f(px(v) + scale / 2)}" y="{hi + 18}" text-anchor="middle" font-size="11">{v}</text>')
        out.append(f'<text x="{lo - 6}" y="{_f(py(v) + scale / 2 + 4)}" text-anchor="end" font-size="11">{v}</text>')
    out.append('<g fill="black">')
    for a, b in sorted(set((int(p[0]), int(p[1])) for p in points)):
        if abs(a) <= extent and abs(b) <= extent:
            out.append(f'<rect x="{_f(px(a))}" y="{_f(py(b))}" width="{_f(mark)}" height="{_f(mark)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
