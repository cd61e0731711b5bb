"""Pictures of a four-line arrangement in the positive plane.

The SVG writer is hand-rolled so the bytes depend only on the exact input;
all styling lives in the constants below.  A matplotlib version is offered
for interactive reports and is not used by the golden tests.
"""
from __future__ import annotations

from fractions import Fraction

CANVAS = 400          # square canvas, px
MARGIN = Fraction(1, 5)  # added on every side, relative to the data span
DIGITS = 3
LINE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")
POLY_FILL = "#f2c14e"
POLY_OPACITY = "0.35"
STROKE = "1.5"


def _viewport(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    pad = span * MARGIN
    # square box so both axes share one scale
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = span / 2 + pad
    return cx - half, cx + half, cy - half, cy + half


def clip_line(hyp, box):
    """Segment of {a.x = b} inside box, or None.  Exact."""
    (a1, a2), b = hyp.normal, hyp.offset
    x0, x1, y0, y1 = box
    pts = []
    if a2 != 0:
        for x in (x0, x1):
            y = (b - a1 * x) / a2
            if y0 <= y <= y1:
                pts.append((x, y))
    if a1 != 0:
        for y in (y0, y1):
            x = (b - a2 * y) / a1
            if x0 <= x <= x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if not pts:
        return None
    return pts[0], pts[-1]


def _dedupe_cyclic(vertices):
    out = []
    for v in vertices:
        if not out or out[-1] != v:
            out.append(v)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _fmt(x) -> str:
    s = f"{float(x):.{DIGITS}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def emit_svg(lines, vertices, origin=(0, 0)) -> str:
    """SVG 1.1 document: clipped lines, the vertex polygon, and the origin."""
    lines = list(lines)
    if len(lines) != 4:
        raise ValueError("emit_svg draws exactly four lines")
    origin = tuple(Fraction(v) for v in origin)
    verts = [tuple(Fraction(v) for v in p) for p in vertices]
    box = _viewport(verts + [origin])
    x0, x1, y0, y1 = box
    scale = Fraction(CANVAS) / (x1 - x0)

    def px(p):
        return _fmt((p[0] - x0) * scale), _fmt((y1 - p[1]) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white" stroke="none"/>',
    ]
    poly = _dedupe_cyclic(verts)
    if len(poly) >= 2:
        pts = " ".join(",".join(px(p)) for p in poly)
        out.append(f'<polygon points="{pts}" fill="{POLY_FILL}" fill-opacity="{POLY_OPACITY}" '
                   f'stroke="black" stroke-width="1"/>')
    for i, (h, color) in enumerate(zip(lines, LINE_COLORS), 1):
        seg = clip_line(h, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = px(seg[0]), px(seg[1])
        out.append(f'<line id="L{i}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" '
                   f'stroke="{color}" stroke-width="{STROKE}"/>')
        mx, my = px(((seg[0][0] + seg[1][0]) / 2, (seg[0][1] + seg[1][1]) / 2))
        out.append(f'<text x="{mx}" y="{my}" font-family="monospace" font-size="12" '
                   f'fill="{color}">L{i}</text>')
    for v in poly:
        vx, vy = px(v)
        out.append(f'<circle cx="{vx}" cy="{vy}" r="2.5" fill="black"/>')
    ox, oy = px(origin)
    out.append(f'<circle id="origin" cx="{ox}" cy="{oy}" r="4" fill="white" '
               f'stroke="black" stroke-width="1.5"/>')
    out.append(f'<text x="{ox}" y="{oy}" dx="6" dy="-6" font-family="monospace" '
               f'font-size="12">0</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_arrangement(lines, vertices, path, origin=(0, 0)):
    """Write a matplotlib rendering of the same picture to ``path``."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    verts = [tuple(Fraction(v) for v in p) for p in vertices]
    box = _viewport(verts + [tuple(Fraction(v) for v in origin)])
    fig, ax = plt.subplots(figsize=(5, 5))
    poly = _dedupe_cyclic(verts)
    if len(poly) >= 2:
        ax.fill([float(p[0]) for p in poly], [float(p[1]) for p in poly],
                color=POLY_FILL, alpha=float(POLY_OPACITY), edgecolor="black")
    for i, (h, color) in enumerate(zip(lines, LINE_COLORS), 1):
        seg = clip_line(h, box)
        if seg is not None:
            ax.plot([float(seg[0][0]), float(seg[1][0])], [float(seg[0][1]), float(seg[1][1])],
                    color=color, label=f"L{i}")
    ax.plot([float(origin[0])], [float(origin[1])], "ko", mfc="white")
    ax.set_xlim(float(box[0]), float(box[1]))
    ax.set_ylim(float(box[2]), float(box[3]))
    ax.set_aspect("equal")
    ax.legend(loc="upper right")
    fig.savefig(path, dpi=120)
    plt.close(fig)
