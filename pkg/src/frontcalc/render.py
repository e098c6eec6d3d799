"""Deterministic SVG drawings of fronts, patterns and trace frames.

Each event occupies one column.  Strands are cubic arcs between columns,
cusps are drawn as two arcs leaving a fold point horizontally, and at a
crossing the strand of lesser slope (the one going down to the right) is
drawn unbroken while the other is split around it.
"""

from __future__ import annotations

from .front import FrontDiagram, OrientedFront, strand_counts
from .ops import Pattern

__all__ = ["render_svg"]

DX = 40.0
DY = 24.0
MARGIN = 20.0
BREAK = 0.22  # fraction of a crossing arc left out around the over strand


def _f(v: float) -> str:
    s = f"{v:.1f}"
    return s[:-2] if s.endswith(".0") else s


def _arc(x0, y0, x1, y1) -> str:
    xm = (x0 + x1) / 2
    return f"M {_f(x0)} {_f(y0)} C {_f(xm)} {_f(y0)} {_f(xm)} {_f(y1)} {_f(x1)} {_f(y1)}"


def _split(x0, y0, x1, y1, t0, t1) -> str:
    # sub-curve of _arc between parameters t0 < t1 (de Casteljau)
    xm = (x0 + x1) / 2
    pts = [(x0, y0), (xm, y0), (xm, y1), (x1, y1)]

    def at(t):
        a = pts
        while len(a) > 1:
            a = [((1 - t) * p[0] + t * q[0], (1 - t) * p[1] + t * q[1]) for p, q in zip(a, a[1:])]
        return a[0]

    def sub(t_lo, t_hi):
        # control points of the restriction, from derivatives at the ends
        p0, p3 = at(t_lo), at(t_hi)
        h = t_hi - t_lo

        def d(t):
            u = 1 - t
            return (
                3 * (u * u * (pts[1][0] - pts[0][0]) + 2 * u * t * (pts[2][0] - pts[1][0]) + t * t * (pts[3][0] - pts[2][0])),
                3 * (u * u * (pts[1][1] - pts[0][1]) + 2 * u * t * (pts[2][1] - pts[1][1]) + t * t * (pts[3][1] - pts[2][1])),
            )

        d0, d3 = d(t_lo), d(t_hi)
        p1 = (p0[0] + d0[0] * h / 3, p0[1] + d0[1] * h / 3)
        p2 = (p3[0] - d3[0] * h / 3, p3[1] - d3[1] * h / 3)
        return f"M {_f(p0[0])} {_f(p0[1])} C {_f(p1[0])} {_f(p1[1])} {_f(p2[0])} {_f(p2[1])} {_f(p3[0])} {_f(p3[1])}"

    return sub(t0, t1)


def _paths(events, start: int) -> tuple[list[tuple[str, str]], int]:
    counts = strand_counts(events, start)
    y = lambda p: MARGIN + p * DY  # noqa: E731
    x = lambda g: MARGIN + g * DX  # noqa: E731
    out: list[tuple[str, str]] = []
    for k, (kind, i) in enumerate(events):
        s = counts[k]
        x0, x1 = x(k), x(k + 1)
        if kind == "L":
            keep = [(p, p if p < i else p + 2) for p in range(1, s + 1)]
            fold = (x0 + x1) / 2
            ym = (y(i) + y(i + 1)) / 2
            out.append(("cusp", _arc(fold, ym, x1, y(i)) + " " + _arc(fold, ym, x1, y(i + 1))))
        elif kind == "R":
            keep = [(p, p if p < i else p - 2) for p in range(1, s + 1) if p not in (i, i + 1)]
            fold = (x0 + x1) / 2
            ym = (y(i) + y(i + 1)) / 2
            out.append(("cusp", _arc(x0, y(i), fold, ym) + " " + _arc(x0, y(i + 1), fold, ym)))
        else:
            keep = [(p, p) for p in range(1, s + 1) if p not in (i, i + 1)]
            out.append(("over", _arc(x0, y(i), x1, y(i + 1))))
            a, b = 0.5 - BREAK, 0.5 + BREAK
            under = _split(x0, y(i + 1), x1, y(i), 0, a) + " " + _split(x0, y(i + 1), x1, y(i), b, 1)
            out.append(("under", under))
        for p, q in keep:
            out.append(("strand", _arc(x0, y(p), x1, y(q))))
    return out, max(counts) if counts else 0


def render_svg(item, title: str | None = None) -> str:
    """SVG text for a front, oriented front, pattern or trace frame."""
    if isinstance(item, OrientedFront):
        item = item.front
    if isinstance(item, FrontDiagram):
        events, start, name = item.events, 0, item.name
    elif isinstance(item, Pattern):
        events, start, name = item.events, item.arity, item.name
    else:
        raise TypeError(f"cannot render {type(item).__name__}")
    paths, height = _paths(events, start)
    width = 2 * MARGIN + max(len(events), 1) * DX
    h = 2 * MARGIN + (height + 1) * DY
    label = title or name or ""
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(h)}" viewBox="0 0 {_f(width)} {_f(h)}">',
        f"<title>{label}</title>",
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    for cls, d in paths:
        lines.append(f'<path class="{cls}" d="{d}"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"
