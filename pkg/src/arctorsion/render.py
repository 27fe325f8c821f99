"""Arc diagrams on a number line, as ASCII text or SVG."""

from __future__ import annotations

from .arcs import Window
from .ort import fountains
from .region import ArcRegion

MAX_ASCII_SPAN = 200

_CROSSINGS = {("-", "|"), ("|", "-"), ("-", ":"), (".", "|"), ("|", "."), (".", ":"), (":", "."), (":", "-")}


class _Canvas:
    def __init__(self, width: int, height: int):
        self.width = width
        self.rows = [[" "] * width for _ in range(height)]

    def put(self, row: int, col: int, ch: str) -> None:
        old = self.rows[row][col]
        if old == "+" or (old, ch) in _CROSSINGS:
            ch = "+"
        self.rows[row][col] = ch

    def text(self) -> list[str]:
        return ["".join(r).rstrip() for r in self.rows]


def _levels(arcs) -> list[int]:
    """Nesting height of each arc: one more than the tallest arc sharing its span."""
    order = sorted(range(len(arcs)), key=lambda i: (arcs[i].n - arcs[i].m, arcs[i].m))
    level = [0] * len(arcs)
    placed = []
    for i in order:
        a = arcs[i]
        below = [level[j] for j in placed if arcs[j].m <= a.n and a.m <= arcs[j].n]
        level[i] = 1 + max(below, default=0)
        placed.append(i)
    return level


def render_ascii(r: ArcRegion, w: Window) -> str:
    """Number line ``w.lo..w.hi`` with every arc of ``r`` inside ``w`` drawn above it.

    Fountains inside the window get an extra row each: a ``:`` leg and a
    ``.`` line escaping to the window edge, plus a text annotation.
    """
    if w.hi - w.lo + 1 > MAX_ASCII_SPAN:
        raise ValueError(f"window {w} spans more than {MAX_ASCII_SPAN} integers")
    labels = [str(i) for i in range(w.lo, w.hi + 1)]
    maxlen = max(len(s) for s in labels)
    step = maxlen + 2

    def x(i: int) -> int:
        return (i - w.lo) * step + maxlen

    width = x(w.hi) + 3
    arcs = r.enumerate_window(w)
    levels = _levels(arcs)
    arc_height = 2 * max(levels, default=0)
    prof = fountains(r)
    escapes = [("L", e) for e in range(w.lo, w.hi + 1) if e in prof.left]
    escapes += [("R", e) for e in range(w.lo, w.hi + 1) if e in prof.right]
    height = arc_height + len(escapes)
    canvas = _Canvas(width, height + 2)
    axis = height

    def row(h: int) -> int:
        return axis - h

    for a, lv in zip(arcs, levels):
        top = 2 * lv
        for h in range(1, top):
            canvas.put(row(h), x(a.m), "|")
            canvas.put(row(h), x(a.n), "|")
        for c in range(x(a.m) + 1, x(a.n)):
            canvas.put(row(top), c, "-")
        canvas.put(row(top), x(a.m), "+")
        canvas.put(row(top), x(a.n), "+")
    for k, (side, e) in enumerate(escapes):
        top = arc_height + k + 1
        for h in range(1, top):
            canvas.put(row(h), x(e), ":")
        span = range(0, x(e)) if side == "L" else range(x(e) + 1, width)
        for c in span:
            canvas.put(row(top), c, ".")
        canvas.put(row(top), x(e), "+")
    for c in range(width):
        canvas.put(axis, c, "-")
    for i in range(w.lo, w.hi + 1):
        canvas.rows[axis][x(i)] = "+"
        label = str(i)
        for k, ch in enumerate(label):
            canvas.rows[axis + 1][x(i) - len(label) + 1 + k] = ch
    lines = canvas.text()[: axis + 2]
    if not prof.left.is_empty():
        lines.append(f"left fountains: {prof.left}")
    if not prof.right.is_empty():
        lines.append(f"right fountains: {prof.right}")
    return "\n".join(lines) + "\n"


def render_svg(r: ArcRegion, w: Window) -> str:
    """Self-contained SVG drawing: semicircular arcs, dashed escapes for fountains."""
    unit = 40
    pad = 30
    span = w.hi - w.lo
    arcs = r.enumerate_window(w)
    radius = max([(a.n - a.m) * unit / 2 for a in arcs] + [unit])
    width = span * unit + 2 * pad
    base = radius + pad + 10
    height = base + 40

    def x(i: int) -> float:
        return pad + (i - w.lo) * unit

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        '<g fill="none" stroke="black" stroke-width="1.5">',
        f'<line x1="{x(w.lo) - pad / 2:g}" y1="{base:g}" x2="{x(w.hi) + pad / 2:g}" y2="{base:g}"/>',
    ]
    for a in arcs:
        rad = (a.n - a.m) * unit / 2
        out.append(f'<path d="M {x(a.m):g} {base:g} A {rad:g} {rad:g} 0 0 1 {x(a.n):g} {base:g}"/>')
    prof = fountains(r)
    for e in range(w.lo, w.hi + 1):
        if e in prof.left:
            out.append(
                f'<path d="M {x(e):g} {base:g} Q {x(e):g} {pad:g} {x(w.lo) - pad / 2:g} {pad:g}" '
                'stroke-dasharray="4 3"/>'
            )
        if e in prof.right:
            out.append(
                f'<path d="M {x(e):g} {base:g} Q {x(e):g} {pad:g} {x(w.hi) + pad / 2:g} {pad:g}" '
                'stroke-dasharray="4 3"/>'
            )
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" text-anchor="middle">')
    for i in range(w.lo, w.hi + 1):
        out.append(f'<line x1="{x(i):g}" y1="{base - 4:g}" x2="{x(i):g}" y2="{base + 4:g}" stroke="black"/>')
        out.append(f'<text x="{x(i):g}" y="{base + 20:g}">{i}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(r: ArcRegion, w: Window, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(r, w)
    if fmt == "svg":
        return render_svg(r, w)
    raise ValueError(f"unknown render format {fmt!r}")
