"""Deterministic SVG scatter plots of planar spaces with optional overlays."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .branches import Branch
from .closure import TrackDecomposition
from .dbscan import NOISE, DbscanResult
from .errors import PreconditionError
from .space import TypedSpace, sort_ids

SCALE = 40
MARGIN = 30
RADIUS = 6
TRACK_COLORS = ("#d62728", "#1f77b4")  # red, blue alternating
DARK = "#333333"
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


class _Canvas:
    def __init__(self, space: TypedSpace):
        if space.coords is None:
            raise PreconditionError("plotting needs planar coordinates")
        self.space = space
        xs = [c.x for c in space.coords.values()]
        ys = [c.y for c in space.coords.values()]
        self.x0, self.y1 = min(xs), max(ys)
        self.width = float(max(xs) - self.x0) * SCALE + 2 * MARGIN
        self.height = float(self.y1 - min(ys)) * SCALE + 2 * MARGIN

    def pos(self, y):
        c = self.space.coords[y]
        return (float(c.x - self.x0) * SCALE + MARGIN, float(self.y1 - c.y) * SCALE + MARGIN)

    def dot(self, y, fill):
        cx, cy = self.pos(y)
        return (f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{RADIUS}" fill="{fill}">'
                f"<title>{escape(str(y))}</title></circle>")


def emit_svg(space: TypedSpace, overlay=None) -> str:
    """SVG text for the points of ``space``.

    ``overlay`` may be a TrackDecomposition (tracks alternately red and blue,
    points outside the cluster dark), a list of Branch (one polyline per
    branch through its level centroids) or a DbscanResult (one color per
    cluster, noise dark).  Element order follows point ids, so equal input
    gives byte-identical output.
    """
    cv = _Canvas(space)
    body = []
    if overlay is None:
        body.append('<g class="points">')
        body += [cv.dot(y, DARK) for y in space.points]
        body.append("</g>")
    elif isinstance(overlay, TrackDecomposition):
        inside = overlay.members
        for i, layer in enumerate(overlay.tracks):
            color = TRACK_COLORS[i % 2]
            body.append(f'<g class="track" data-track="{i}">')
            body += [cv.dot(y, color) for y in sort_ids(layer)]
            body.append("</g>")
        body.append('<g class="excluded">')
        body += [cv.dot(y, DARK) for y in space.points if y not in inside]
        body.append("</g>")
    elif isinstance(overlay, DbscanResult):
        for k, cluster in enumerate(overlay.clusters):
            body.append(f'<g class="cluster" data-cluster="{k}">')
            body += [cv.dot(y, PALETTE[k % len(PALETTE)]) for y in sort_ids(cluster)]
            body.append("</g>")
        body.append('<g class="noise">')
        body += [cv.dot(y, DARK) for y in space.points if overlay.labels.get(y) is NOISE]
        body.append("</g>")
    elif isinstance(overlay, (list, tuple)) and all(isinstance(b, Branch) for b in overlay):
        body.append('<g class="points">')
        body += [cv.dot(y, DARK) for y in space.points]
        body.append("</g>")
        for k, br in enumerate(overlay):
            pts = []
            for level in br.levels:
                xy = [cv.pos(y) for y in level]
                pts.append((sum(a for a, _ in xy) / len(xy), sum(b for _, b in xy) / len(xy)))
            path = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in pts)
            body.append(f'<polyline class="branch" data-branch="{k}" points="{path}" '
                        f'fill="none" stroke="{PALETTE[k % len(PALETTE)]}" stroke-width="2"/>')
    else:
        raise PreconditionError(f"unsupported overlay {type(overlay).__name__}")
    w, h = _fmt(cv.width), _fmt(cv.height)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">')
    return "\n".join([head, f'<rect width="{w}" height="{h}" fill="white"/>', *body, "</svg>"]) + "\n"
