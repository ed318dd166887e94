"""Reference DBSCAN and its correspondence with transitive closures of
open-disk types."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .closure import tr
from .errors import PreconditionError
from .space import Coord2, TypedSpace, as_fraction, point_key, smallest_id, sort_ids

NOISE = None


@dataclass
class DbscanResult:
    labels: dict      # id -> cluster number or NOISE
    roles: dict       # id -> "core" | "border" | "noise"
    eps: float
    min_pts: int
    clusters: list = field(default_factory=list)  # frozensets, numbered by position

    def cluster_of(self, y) -> frozenset:
        k = self.labels[y]
        return frozenset({y}) if k is NOISE else self.clusters[k]

    def to_json(self) -> dict:
        return {"eps": self.eps, "minPts": self.min_pts,
                "labels": {str(y): self.labels[y] for y in sort_ids(self.labels)},
                "roles": {str(y): self.roles[y] for y in sort_ids(self.roles)},
                "clusters": [sort_ids(c) for c in self.clusters]}


def _planar(points):
    if isinstance(points, TypedSpace):
        if points.coords is None:
            raise PreconditionError("DBSCAN needs planar coordinates")
        return dict(points.coords)
    return {pid: Coord2.of(xy) for pid, xy in points}


def _neighbors(coords, eps2):
    # uniform grid with cell size eps so only adjacent cells need checking
    ids = sort_ids(coords)
    cell = {}
    size = eps2 ** 0.5
    for y in ids:
        c = coords[y]
        cell.setdefault((int(c.x // size), int(c.y // size)), []).append(y)
    out = {}
    for y in ids:
        c = coords[y]
        cx, cy = int(c.x // size), int(c.y // size)
        out[y] = [z for dx in (-1, 0, 1) for dy in (-1, 0, 1)
                  for z in cell.get((cx + dx, cy + dy), ()) if c.sqdist(coords[z]) < eps2]
    return out


def dbscan_classify(points, eps, min_pts: int) -> DbscanResult:
    """Standard DBSCAN with open eps-disks (d < eps); the neighbor count
    includes the point itself.  Clusters grow only through core points and
    are numbered in order of their smallest member."""
    e = as_fraction(eps)
    if e <= 0:
        raise PreconditionError("eps must be positive")
    if min_pts < 1:
        raise PreconditionError("minPts must be >= 1")
    coords = _planar(points)
    nbrs = _neighbors(coords, e * e)
    core = {y for y, ns in nbrs.items() if len(ns) >= min_pts}
    # core points density-connected to each other, found in id order
    groups = []
    seen = set()
    for y in sort_ids(core):
        if y in seen:
            continue
        comp = {y}
        queue = deque([y])
        while queue:
            a = queue.popleft()
            for b in nbrs[a]:
                if b in core and b not in comp:
                    comp.add(b)
                    queue.append(b)
        seen |= comp
        groups.append(comp)
    # a border point reachable from several groups joins the earliest one
    for y in sort_ids(set(coords) - core):
        for g in groups:
            if any(z in g and z in core for z in nbrs[y]):
                g.add(y)
                break
    clusters = sorted((frozenset(g) for g in groups), key=lambda g: point_key(smallest_id(g)))
    labels = {y: NOISE for y in coords}
    for k, g in enumerate(clusters):
        for y in g:
            labels[y] = k
    roles = {y: "core" if y in core else ("noise" if labels[y] is NOISE else "border")
             for y in coords}
    return DbscanResult(labels, roles, float(e), min_pts, clusters)


@dataclass
class ComparisonReport:
    origin: object
    type: str
    min_pts: int
    closure: frozenset
    free_mode: frozenset        # DBSCAN with minPts = 1
    standard_mode: frozenset    # DBSCAN with the given minPts (or {x} when x is noise)

    @property
    def free_equal(self) -> bool:
        return self.free_mode == self.closure

    @property
    def strict_containment(self) -> bool:
        return self.standard_mode < self.closure

    @property
    def missing(self) -> frozenset:
        return self.closure - self.standard_mode

    def to_json(self) -> dict:
        return {"origin": self.origin, "type": self.type, "minPts": self.min_pts,
                "closure": sort_ids(self.closure),
                "modeA": {"cluster": sort_ids(self.free_mode), "equal": self.free_equal},
                "modeB": {"cluster": sort_ids(self.standard_mode),
                          "strictSubset": self.strict_containment,
                          "missing": sort_ids(self.missing)}}


def compare_with_tr(space: TypedSpace, p, min_pts: int, x) -> ComparisonReport:
    """Compare the DBSCAN cluster of x (eps = radius of p) with tr_p(x)."""
    space.check_type(p)
    t = space.types[p]
    if t.shape != "disk":
        raise PreconditionError(f"type {p!r} is not a radius type")
    space.check_point(x)
    closure = tr(space, x, p)
    free = dbscan_classify(space, t.r, 1).cluster_of(x)
    standard = dbscan_classify(space, t.r, min_pts).cluster_of(x)
    return ComparisonReport(x, p, min_pts, closure, free, standard)
