"""
Static SVG and TikZ drawings of configurations, walks and bead matchings.

Faces are unit squares with face (i, c) at [c, c+1] x [i, i+1]. Blue runs a
little left of and above the face center, red a little right of and below,
so doubled edges show both colors.
"""

from __future__ import annotations

from typing import Sequence

from .lattice import LatticeConfig
from .swap import BLUE, RED, TOP, BeadSequence, Matching, Walk

_OFFSET = {BLUE: (0.4, 0.6), RED: (0.6, 0.4)}
_NAME = {BLUE: "blue", RED: "red", 4: "green", 8: "orange"}
_SCALE = 40


def _path_segments(config: LatticeConfig) -> list[tuple[int, tuple[float, float, float, float]]]:
    # each occupied edge of a face becomes a spoke from the color's center point
    out = []
    for i in range(config.n):
        for c in range(config.ncols):
            I, J, K, L = config.face_masks(i, c)
            for color in (1 << j for j in range(config.k)):
                ox, oy = _OFFSET.get(color, (0.5, 0.5))
                cx, cy = c + ox, i + oy
                if I & color:
                    out.append((color, (cx, i, cx, cy)))
                if K & color:
                    out.append((color, (cx, cy, cx, i + 1)))
                if J & color:
                    out.append((color, (c, cy, cx, cy)))
                if L & color:
                    out.append((color, (cx, cy, c + 1, cy)))
    return out


def _walk_segments(config: LatticeConfig, walk: Walk) -> list[tuple[int, tuple[float, float, float, float]]]:
    out = []
    for (kind, a, b), color in walk.steps:
        ox, oy = _OFFSET[color]
        if kind == "up":
            y0 = max(a - 1 + oy, 0)
            y1 = min(a + oy, config.n)
            out.append((color, (b + ox, y0, b + ox, y1)))
        else:
            out.append((color, (b - 1 + ox, a + oy, b + ox, a + oy)))
    return out


def config_svg(config: LatticeConfig, walks: Sequence[Walk] = ()) -> str:
    w, h = config.ncols, config.n
    pad = 20
    width, height = w * _SCALE + 2 * pad, h * _SCALE + 2 * pad + 16

    def X(x):
        return pad + x * _SCALE

    def Y(y):
        return pad + (h - y) * _SCALE

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">',
             '<g stroke="#bbb" stroke-width="1">']
    for c in range(w + 1):
        lines.append(f'<line x1="{X(c)}" y1="{Y(0)}" x2="{X(c)}" y2="{Y(h)}"/>')
    for i in range(h + 1):
        lines.append(f'<line x1="{X(0)}" y1="{Y(i)}" x2="{X(w)}" y2="{Y(i)}"/>')
    lines.append("</g>")
    for c in range(w):
        lines.append(f'<text x="{X(c + 0.5)}" y="{Y(0) + 14}" font-size="11" '
                     f'text-anchor="middle">{config.r + c}</text>')

    def seg(color, s, width_):
        x0, y0, x1, y1 = s
        return (f'<line x1="{X(x0):.1f}" y1="{Y(y0):.1f}" x2="{X(x1):.1f}" y2="{Y(y1):.1f}" '
                f'stroke="{_NAME.get(color, "black")}" stroke-width="{width_}" stroke-linecap="round"/>')

    for color, s in _path_segments(config):
        lines.append(seg(color, s, 2))
    for walk in walks:
        for color, s in _walk_segments(config, walk):
            lines.append(seg(color, s, 5))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def config_tikz(config: LatticeConfig, walks: Sequence[Walk] = ()) -> str:
    lines = ["\\begin{tikzpicture}", f"\\draw[help lines] (0,0) grid ({config.ncols},{config.n});"]
    for color, (x0, y0, x1, y1) in _path_segments(config):
        lines.append(f"\\draw[{_NAME.get(color, 'black')}] ({x0:g},{y0:g})--({x1:g},{y1:g});")
    for walk in walks:
        for color, (x0, y0, x1, y1) in _walk_segments(config, walk):
            lines.append(f"\\draw[{_NAME[color]}, ultra thick] ({x0:g},{y0:g})--({x1:g},{y1:g});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _bead_positions(beads: BeadSequence) -> dict:
    cols = sorted({b.column for b in beads.top + beads.bottom})
    where = {c: k for k, c in enumerate(cols)}
    return {b: (where[b.column], 1 if b.boundary == TOP else 0) for b in beads.top + beads.bottom}


def beads_svg(beads: BeadSequence, matching: Matching | None = None) -> str:
    pos = _bead_positions(beads)
    span = max((x for x, _ in pos.values()), default=0)
    pad, gap = 30, 50
    width = span * gap + 2 * pad
    height = 2 * gap + 2 * pad

    def X(x):
        return pad + x * gap

    def Y(y):
        return pad + (1 - y) * 2 * gap

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">',
             f'<line x1="0" y1="{Y(1)}" x2="{width}" y2="{Y(1)}" stroke="#888" stroke-dasharray="4"/>',
             f'<line x1="0" y1="{Y(0)}" x2="{width}" y2="{Y(0)}" stroke="#888" stroke-dasharray="4"/>']
    if matching is not None:
        for a, b in matching.sorted_arcs():
            (xa, ya), (xb, yb) = pos[a], pos[b]
            if ya != yb:
                lines.append(f'<line x1="{X(xa)}" y1="{Y(ya)}" x2="{X(xb)}" y2="{Y(yb)}" '
                             f'stroke="black" stroke-width="2"/>')
            else:
                r = abs(xb - xa) * gap / 2
                x0, x1 = sorted((X(xa), X(xb)))
                sweep = 0 if ya == 1 else 1
                lines.append(f'<path d="M {x0} {Y(ya)} A {r} {r} 0 0 {sweep} {x1} {Y(ya)}" '
                             f'fill="none" stroke="black" stroke-width="2"/>')
    for b, (x, y) in pos.items():
        dy = -10 if y == 1 else 20
        lines.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="6" fill="{_NAME[b.color]}"/>')
        lines.append(f'<text x="{X(x)}" y="{Y(y) + dy}" font-size="12" text-anchor="middle">{b.label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def beads_tikz(beads: BeadSequence, matching: Matching | None = None) -> str:
    pos = _bead_positions(beads)
    span = max((x for x, _ in pos.values()), default=0)
    top_y = 2.2
    lines = ["\\begin{tikzpicture}",
             f"\\draw[dashed] (-0.2,{top_y})--({span + 0.2},{top_y}); \\draw[dashed] (-0.2,0)--({span + 0.2},0);"]
    for b, (x, y) in pos.items():
        yy = top_y if y else 0
        lines.append(f"\\draw[{_NAME[b.color]}, fill={_NAME[b.color]}] ({x},{yy}) circle (3pt);")
        lines.append(f"\\node[{'above' if y else 'below'}] at ({x},{yy}) {{{b.label}}};")
    if matching is not None:
        for a, b in matching.sorted_arcs():
            (xa, ya), (xb, yb) = pos[a], pos[b]
            if ya != yb:
                lines.append(f"\\draw[thick] ({xa},{top_y if ya else 0})--({xb},{top_y if yb else 0});")
            else:
                x0, x1 = sorted((xa, xb))
                r = (x1 - x0) / 2
                if ya:
                    lines.append(f"\\draw[thick] ({x0},{top_y}) arc(180:360:{r:g});")
                else:
                    lines.append(f"\\draw[thick] ({x1},0) arc(0:180:{r:g});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
