"""SVG rendering of drawings. Lossy on purpose.

The JSON drawing is the artifact of record; the SVG is a picture. Points
are mapped into a fixed viewBox with one uniform scale factor computed in
exact integer arithmetic (milli-pixel resolution), so arbitrarily large
coordinates render without overflow. When any coordinate magnitude exceeds
2^53 the document carries a comment noting that positions are approximate.
"""

from __future__ import annotations

from .mmst import GeomTree

_APPROX_LIMIT = 1 << 53


def _scaler(lo: int, span: int, out_lo: float, out_span: int, flip: bool):
    def to_px(v: int) -> float:
        if span == 0:
            px = out_span / 2
        else:
            # exact big-int scaling at milli-pixel resolution
            px = ((v - lo) * out_span * 1000 // span) / 1000
        if flip:
            px = out_span - px
        return out_lo + px

    return to_px


def emit_svg(
    G: GeomTree,
    *,
    width: int = 800,
    height: int = 600,
    margin: int = 30,
    vertex_radius: float = 4.0,
) -> str:
    """Render vertices as circles and edges as segments, root highlighted."""
    pts = G.pointset.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    span_x = max(xs) - min(xs)
    span_y = max(ys) - min(ys)
    usable_w = width - 2 * margin
    usable_h = height - 2 * margin
    # One scale for both axes: the tighter of the two fits, compared exactly.
    if span_x * usable_h >= span_y * usable_w:
        out_w, out_h = usable_w, (span_y * usable_w // span_x if span_x else 0)
    else:
        out_h, out_w = usable_h, (span_x * usable_h // span_y if span_y else 0)
    pad_x = margin + (usable_w - out_w) / 2
    pad_y = margin + (usable_h - out_h) / 2
    to_px_x = _scaler(min(xs), span_x, pad_x, max(out_w, 1), flip=False)
    to_px_y = _scaler(min(ys), span_y, pad_y, max(out_h, 1), flip=True)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">'
    ]
    if any(abs(v) > _APPROX_LIMIT for v in xs + ys):
        parts.append(
            "<!-- coordinate magnitudes exceed 2^53; rendered positions are "
            "approximate, consult the drawing JSON for exact values -->"
        )
    for v, p in sorted(G.parent.items()):
        x1, y1 = to_px_x(pts[v].x), to_px_y(pts[v].y)
        x2, y2 = to_px_x(pts[p].x), to_px_y(pts[p].y)
        parts.append(
            f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            f'stroke="#555" stroke-width="1.5"/>'
        )
    for i, p in enumerate(pts):
        cx, cy = to_px_x(p.x), to_px_y(p.y)
        if i == G.root:
            parts.append(
                f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{vertex_radius * 1.6:.3f}" '
                f'fill="#c0392b" stroke="#7b241c" stroke-width="1.5"/>'
            )
        else:
            parts.append(
                f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{vertex_radius:.3f}" '
                f'fill="#2e86c1" stroke="#1b4f72" stroke-width="1"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
