"""Constructors for typed spaces: metric disks, binary relations, and the
directed half/quarter disks of planar data, plus two geometric constants
used with the directed types."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import PreconditionError, SpaceBuildError
from .space import Coord2, TypedSpace, TypeLabel, as_fraction, validate_space

DIRECTED_SHAPES = ("left", "right", "up-left", "up-right")


def fmt_number(value) -> str:
    """Short decimal rendering of an exact number (1.01, 2, 0.5)."""
    f = as_fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    d = f.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d == 1:
        s = f"{float(f):.15f}".rstrip("0")
        if as_fraction(s) == f:
            return s
    return repr(float(f))


def _coords(points) -> dict:
    out = {}
    seen = {}
    for pid, xy in points:
        if pid in out:
            raise SpaceBuildError(f"duplicate point id {pid!r}")
        c = Coord2.of(xy)
        if c in seen:
            raise SpaceBuildError(
                f"duplicate coordinates {c.as_floats()} for {seen[c]!r} and {pid!r}")
        seen[c] = pid
        out[pid] = c
    if not out:
        raise SpaceBuildError("empty point set")
    return out


def build_metric_space(points: Iterable, radii: Sequence) -> TypedSpace:
    """Open Euclidean disks, one linearly ordered type per radius.

    ``points`` is a sequence of ``(id, (x, y))``.  The type label of radius r
    is its decimal rendering, e.g. ``"1.01"``.
    """
    coords = _coords(points)
    rs = [as_fraction(r) for r in radii]
    if not rs:
        raise SpaceBuildError("at least one radius is required")
    for a, b in zip(rs, rs[1:]):
        if not a < b:
            raise SpaceBuildError("radii must be strictly ascending")
    if rs[0] <= 0:
        raise SpaceBuildError("radii must be positive")
    types = [TypeLabel(fmt_number(r), "disk", r) for r in rs]
    order = [(a.label, b.label) for a, b in zip(types, types[1:])]
    ids = list(coords)
    umin = {}
    for t in types:
        r2 = t.r * t.r
        umin[t.label] = {
            x: {y for y in ids if coords[x].sqdist(coords[y]) < r2} | {x}
            for x in ids
        }
    return TypedSpace(ids, types, umin, order, coords)


def build_relation_space(points: Iterable, relations: Mapping, order=(), coords=None) -> TypedSpace:
    """Neighborhoods from binary relations: umin(x, p) = {y : (x, y) in p} + {x}.

    A supplied ``order`` must respect neighborhood inclusion, otherwise the
    build is rejected with a witness.  ``coords`` optionally places the
    points in the plane (for plotting and coordinate lookup).
    """
    ids = list(points)
    known = set(ids)
    if len(known) != len(ids):
        raise SpaceBuildError("duplicate point ids")
    umin = {}
    for label, pairs in relations.items():
        rows = {x: {x} for x in ids}
        for a, b in pairs:
            if a not in known or b not in known:
                raise SpaceBuildError(f"relation {label!r} references unknown point in {(a, b)!r}")
            rows[a].add(b)
        umin[label] = rows
    types = [TypeLabel(label, "relation") for label in relations]
    if coords is not None:
        coords = {k: Coord2.of(v) for k, v in coords.items()}
    space = TypedSpace(ids, types, umin, order, coords)
    report = validate_space(space)
    if not report.ok:
        v = report.violations[0]
        raise SpaceBuildError(
            f"order {v.types[0]!r} <= {v.types[1]!r} violates neighborhood inclusion: "
            f"{v.offending!r} in umin({v.point!r}, {v.types[0]!r}) "
            f"but not in umin({v.point!r}, {v.types[1]!r})")
    return space


def directed_member(shape: str, center: Coord2, other: Coord2, r2: Fraction) -> bool:
    """Closed half/quarter disk test with the boundary included."""
    if center.sqdist(other) > r2:
        return False
    if shape == "left":
        return other.x <= center.x
    if shape == "right":
        return other.x >= center.x
    if shape == "up-left":
        return other.x <= center.x and other.y >= center.y
    if shape == "up-right":
        return other.x >= center.x and other.y >= center.y
    raise SpaceBuildError(f"unknown shape tag {shape!r}")


def build_directed_2d_space(points: Iterable, specs: Iterable) -> TypedSpace:
    """Directed neighborhoods ``left-r``, ``right-r``, ``up-left-r`` and
    ``up-right-r`` on planar points.

    Types of one shape are ordered by radius; different shapes are
    incomparable.
    """
    coords = _coords(points)
    by_shape: dict[str, list] = {}
    types = []
    for shape, r in specs:
        if shape not in DIRECTED_SHAPES:
            raise SpaceBuildError(f"unknown shape tag {shape!r}")
        rf = as_fraction(r)
        if rf <= 0:
            raise SpaceBuildError("radius must be positive")
        prev = by_shape.setdefault(shape, [])
        if prev and not prev[-1].r < rf:
            raise SpaceBuildError(f"radii for shape {shape!r} must be strictly ascending")
        t = TypeLabel(f"{shape}-{fmt_number(rf)}", shape, rf)
        prev.append(t)
        types.append(t)
    if not types:
        raise SpaceBuildError("at least one type spec is required")
    order = [(a.label, b.label) for ts in by_shape.values() for a, b in zip(ts, ts[1:])]
    ids = list(coords)
    umin = {}
    for t in types:
        r2 = t.r * t.r
        umin[t.label] = {
            x: {y for y in ids if directed_member(t.shape, coords[x], coords[y], r2)}
            for x in ids
        }
    return TypedSpace(ids, types, umin, order, coords)


def _plain(points) -> list[Coord2]:
    return [Coord2.of(p) for p in points]


def boundary_epsilon(points: Sequence, r) -> float:
    """Positive slack so that the closed half disks equal their open forms.

    With eps = min(r1, r2), where r1 is the smallest excess d(x, y) - r over
    pairs farther apart than r and r2 the smallest positive x-gap, every
    closed ``L(r, x)`` equals ``{y : d(x, y) < r + eps and c < a + eps}`` (and
    symmetrically for ``R``).  An empty minimum is skipped.
    """
    pts = _plain(points)
    if len(pts) < 2:
        raise PreconditionError("boundary_epsilon needs at least 2 points")
    rf = as_fraction(r)
    if rf <= 0:
        raise PreconditionError("r must be positive")
    r2 = rf * rf
    far = [math.sqrt(a.sqdist(b)) - float(rf)
           for a in pts for b in pts if a.sqdist(b) > r2]
    gaps = [float(b.x - a.x) for a in pts for b in pts if a.x < b.x]
    candidates = [min(v) for v in (far, gaps) if v]
    if not candidates:
        raise PreconditionError("epsilon undefined (degenerate)")
    return min(candidates)


def min_pairwise_gamma(points: Sequence) -> float:
    """Smallest distance between two distinct points."""
    pts = _plain(points)
    if len(pts) < 2:
        raise PreconditionError("gamma needs at least 2 points")
    best = None
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            d2 = a.sqdist(b)
            if d2 == 0:
                raise PreconditionError(f"duplicate coordinates {a.as_floats()}")
            if best is None or d2 < best:
                best = d2
    return math.sqrt(best)


def parse_type_label(label: str) -> tuple[str, Fraction]:
    """``"left-1"`` -> ("left", 1); a bare number such as ``"1.01"`` is an
    open disk of that radius."""
    label = str(label).strip()
    for shape in sorted(DIRECTED_SHAPES, key=len, reverse=True):
        if label.startswith(shape + "-"):
            return shape, as_fraction(label[len(shape) + 1:])
    if label.startswith("disk-"):
        label = label[5:]
    return "disk", as_fraction(label)


def geometric_umin(shape: str, r, coords: Mapping) -> dict:
    """Least neighborhoods of one geometric type over planar points."""
    rf = as_fraction(r)
    r2 = rf * rf
    ids = list(coords)
    if shape == "disk":
        return {x: {y for y in ids if coords[x].sqdist(coords[y]) < r2} | {x} for x in ids}
    return {x: {y for y in ids if directed_member(shape, coords[x], coords[y], r2)} for x in ids}


def build_planar_space(points: Iterable, labels: Sequence[str]) -> TypedSpace:
    """Planar space from type labels such as ``"1.01"`` or ``"up-left-2"``.

    Labels of one shape are ordered by radius; shapes are incomparable.
    """
    coords = _coords(points)
    if not labels:
        raise SpaceBuildError("at least one type is required")
    types = []
    for label in labels:
        shape, r = parse_type_label(label)
        if r <= 0:
            raise SpaceBuildError(f"radius must be positive in {label!r}")
        name = fmt_number(r) if shape == "disk" else f"{shape}-{fmt_number(r)}"
        types.append(TypeLabel(name, shape, r))
    if len({t.label for t in types}) != len(types):
        raise SpaceBuildError("duplicate type labels")
    order = []
    for shape in {t.shape for t in types}:
        fam = sorted((t for t in types if t.shape == shape), key=lambda t: t.r)
        order += [(a.label, b.label) for a, b in zip(fam, fam[1:])]
    umin = {t.label: geometric_umin(t.shape, t.r, coords) for t in types}
    return TypedSpace(list(coords), types, umin, order, coords)
