"""Render tree-set lines from an analysis report as SVG or a PGM mask."""
from __future__ import annotations

from .io import format_pgm


def _crossing_edges(width: int, height: int, side: int):
    """Grid edges with exactly one endpoint inside the side bitmask."""
    for r in range(height):
        for c in range(width):
            p = r * width + c
            if c + 1 < width and (side >> p ^ side >> (p + 1)) & 1:
                yield (r, c, "h")
            if r + 1 < height and (side >> p ^ side >> (p + width)) & 1:
                yield (r, c, "v")


def _segments(width: int, height: int, side: int):
    """Unit segments of the pixel-grid dual separating the two sides."""
    for r, c, kind in _crossing_edges(width, height, side):
        if kind == "h":    # between (r,c) and (r,c+1): vertical segment
            yield ((c + 1, r), (c + 1, r + 1))
        else:              # between (r,c) and (r+1,c): horizontal segment
            yield ((c, r + 1), (c + 1, r + 1))


def _stitch(segments) -> list[list[tuple[int, int]]]:
    """Join unit segments into maximal polylines, deterministically."""
    unused = sorted(set(segments))
    incident: dict[tuple[int, int], list[tuple]] = {}
    for seg in unused:
        for end in seg:
            incident.setdefault(end, []).append(seg)
    remaining = set(unused)
    polylines = []
    while remaining:
        # prefer an endpoint of odd degree so open curves become one line
        odd = sorted(p for p, segs in incident.items()
                     if sum(s in remaining for s in segs) % 2 == 1)
        start = odd[0] if odd else min(p for p, segs in incident.items()
                                       if any(s in remaining for s in segs))
        path = [start]
        current = start
        while True:
            nxt = next((s for s in incident[current] if s in remaining), None)
            if nxt is None:
                break
            remaining.discard(nxt)
            current = nxt[1] if nxt[0] == current else nxt[0]
            path.append(current)
        polylines.append(path)
    return polylines


def render_svg(report: dict) -> str:
    """SVG polylines along each tree-set line, thicker for lower order."""
    meta = report["picture"]
    width, height = meta["width"], meta["height"]
    max_order = report["max_order"]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="-0.5 -0.5 {width + 1} {height + 1}" '
        f'width="{40 * (width + 1)}" height="{40 * (height + 1)}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" '
        f'fill="white" stroke="#ccc" stroke-width="0.02"/>',
    ]
    scale = 0.25 / (max_order + 1)
    for entry in report["tree_set"]:
        side = int(entry["side"], 16)
        stroke = scale * (max_order + 1 - entry["order"])
        for path in _stitch(_segments(width, height, side)):
            points = " ".join(f"{x},{y}" for x, y in path)
            parts.append(
                f'<polyline points="{points}" fill="none" stroke="black" '
                f'stroke-width="{stroke:.4f}" stroke-linecap="round"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_mask(report: dict) -> bytes:
    """PGM mask counting, per pixel, the tree-set lines touching it."""
    meta = report["picture"]
    width, height = meta["width"], meta["height"]
    counts = [0] * (width * height)
    for entry in report["tree_set"]:
        side = int(entry["side"], 16)
        touched = set()
        for r, c, kind in _crossing_edges(width, height, side):
            p = r * width + c
            touched.add(p)
            touched.add(p + (1 if kind == "h" else width))
        for p in touched:
            counts[p] += 1
    return format_pgm(counts, width, height,
                      maxval=max(1, len(report["tree_set"])))
