"""Finite typed topological spaces stored as least neighborhoods.

A space is a finite set of points, a poset of type labels, and for every
(point, type) pair the least neighborhood of that point.  All algorithms in
this package read nothing else.  Spaces are immutable; edits return new
values that share unchanged per-type tables with the original.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, NamedTuple

from .errors import SpaceBuildError, UnknownElementError

PointId = Hashable

SHAPES = ("disk", "left", "right", "up-left", "up-right", "relation")

_CHUNK = re.compile(r"(\d+)")


def point_key(pid):
    """Natural sort key: ints first, then strings with embedded numbers
    compared numerically, so "(9,10)" sorts before "(10,3)"."""
    if isinstance(pid, int):
        return (0, pid, ())
    parts = _CHUNK.split(str(pid))
    return (1, 0, tuple((0, int(s), "") if s.isdigit() else (1, 0, s) for s in parts))


def sort_ids(ids: Iterable) -> list:
    return sorted(ids, key=point_key)


def smallest_id(ids: Iterable):
    return min(ids, key=point_key)


def as_fraction(value) -> Fraction:
    """Exact value of a coordinate or radius.

    Floats go through their shortest decimal repr so that 1.01 means 101/100.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise SpaceBuildError(f"not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise SpaceBuildError(f"non-finite value: {value!r}")
        return Fraction(repr(value))
    try:
        f = Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SpaceBuildError(f"not a finite number: {value!r}") from exc
    return f


class Coord2(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, xy) -> "Coord2":
        x, y = xy
        return cls(as_fraction(x), as_fraction(y))

    def sqdist(self, other: "Coord2") -> Fraction:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


@dataclass(frozen=True)
class TypeLabel:
    label: str
    shape: str = "relation"
    r: Fraction | None = None

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise SpaceBuildError(f"unknown shape tag {self.shape!r}")
        if self.r is not None and self.r <= 0:
            raise SpaceBuildError(f"radius must be positive, got {self.r}")


class Violation(NamedTuple):
    kind: str  # "center" | "membership" | "monotonicity"
    point: PointId
    types: tuple
    offending: PointId


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _transitive_closure(labels, pairs):
    leq = {p: {p} for p in labels}
    for p, q in pairs:
        leq[p].add(q)
    changed = True
    while changed:
        changed = False
        for p in labels:
            extra = set().union(*(leq[q] for q in leq[p])) - leq[p]
            if extra:
                leq[p] |= extra
                changed = True
    return {p: frozenset(s) for p, s in leq.items()}


def _transitive_reduction(labels, leq):
    pairs = set()
    for p in labels:
        above = leq[p] - {p}
        for q in above:
            if not any(q in leq[m] and m != q for m in above):
                pairs.add((p, q))
    return frozenset(pairs)


class TypedSpace:
    """Immutable finite typed space given by least neighborhoods.

    ``umin`` maps type label -> point id -> iterable of point ids.  ``order``
    holds pairs ``(p, q)`` meaning p <= q; it is closed on construction and
    stored as its transitive reduction.  Construction does not validate the
    neighborhood invariants (use :func:`validate_space`), but it does reject
    unknown ids and a cyclic order.
    """

    __slots__ = ("_points", "_pointset", "_coords", "_types", "_order", "_leq",
                 "_umin", "_reverse", "modified_types", "_hash")

    def __init__(self, points, types, umin, order=(), coords=None,
                 modified_types=frozenset()):
        pts = list(points)
        if len(set(pts)) != len(pts):
            raise SpaceBuildError("duplicate point ids")
        self._points = tuple(sort_ids(pts))
        self._pointset = frozenset(pts)

        tl = {}
        for t in types:
            if isinstance(t, str):
                t = TypeLabel(t)
            if t.label in tl:
                raise SpaceBuildError(f"duplicate type label {t.label!r}")
            tl[t.label] = t
        self._types = MappingProxyType(tl)

        pairs = [tuple(pq) for pq in order]
        for p, q in pairs:
            for lab in (p, q):
                if lab not in tl:
                    raise SpaceBuildError(f"order references unknown type {lab!r}")
        leq = _transitive_closure(list(tl), pairs)
        for p in tl:
            for q in leq[p]:
                if q != p and p in leq[q]:
                    raise SpaceBuildError(f"order is not antisymmetric: {p!r} and {q!r}")
        self._leq = leq
        self._order = _transitive_reduction(list(tl), leq)

        table = {}
        for lab in tl:
            given = umin.get(lab, {}) if umin else {}
            if isinstance(given, _FrozenTable):
                table[lab] = given
                continue
            rows = {}
            for x in self._points:
                members = given.get(x, (x,))
                rows[x] = frozenset(members)
            for x in given:
                if x not in self._pointset:
                    raise SpaceBuildError(f"neighborhood given for unknown point {x!r}")
            table[lab] = _FrozenTable(rows)
        if umin:
            for lab in umin:
                if lab not in tl:
                    raise SpaceBuildError(f"neighborhoods given for unknown type {lab!r}")
        self._umin = MappingProxyType(table)

        if coords is not None:
            cmap = {}
            for pid, xy in coords.items():
                if pid not in self._pointset:
                    raise SpaceBuildError(f"coordinates for unknown point {pid!r}")
                cmap[pid] = Coord2.of(xy)
            self._coords = MappingProxyType(cmap)
        else:
            self._coords = None
        self.modified_types = frozenset(modified_types)
        self._reverse = {}
        self._hash = None

    # -- read access ---------------------------------------------------
    @property
    def points(self) -> tuple:
        return self._points

    @property
    def types(self) -> Mapping[str, TypeLabel]:
        return self._types

    @property
    def order(self) -> frozenset:
        return self._order

    @property
    def coords(self) -> Mapping | None:
        return self._coords

    def __len__(self):
        return len(self._points)

    def __contains__(self, x):
        return x in self._pointset

    def __iter__(self):
        return iter(self._points)

    def check_point(self, x):
        if x not in self._pointset:
            raise UnknownElementError(f"unknown point {x!r}")

    def check_points(self, ids) -> frozenset:
        ids = frozenset(ids)
        bad = ids - self._pointset
        if bad:
            raise UnknownElementError(f"unknown points {sort_ids(bad)!r}")
        return ids

    def check_type(self, p):
        if p not in self._types:
            raise UnknownElementError(f"unknown type {p!r}")

    def u_min(self, x, p) -> frozenset:
        self.check_type(p)
        try:
            return self._umin[p][x]
        except KeyError:
            raise UnknownElementError(f"unknown point {x!r}") from None

    def table(self, p) -> Mapping:
        """Read-only map point -> least p-neighborhood."""
        self.check_type(p)
        return self._umin[p]

    def reverse(self, p) -> Mapping:
        """Map a -> {x : a in umin(x, p)}, i.e. the points a pulls into a
        direct closure.  Cached per type."""
        rev = self._reverse.get(p)
        if rev is None:
            acc = {x: set() for x in self._points}
            for x, members in self.table(p).items():
                for a in members:
                    acc[a].add(x)
            rev = {a: frozenset(s) for a, s in acc.items()}
            self._reverse[p] = rev
        return rev

    def leq(self, p, q) -> bool:
        self.check_type(p)
        self.check_type(q)
        return q in self._leq[p]

    def comparable_pairs(self):
        for p in self._types:
            for q in self._leq[p]:
                if q != p:
                    yield p, q

    # -- persistent edits ---------------------------------------------
    def with_neighborhoods(self, p, updates: Mapping) -> "TypedSpace":
        """New space where umin(x, p) is replaced for each x in ``updates``.

        Only the p-table is copied; every other type table is shared.
        """
        self.check_type(p)
        rows = dict(self._umin[p])
        for x, members in updates.items():
            self.check_point(x)
            rows[x] = frozenset(members)
        new = TypedSpace.__new__(TypedSpace)
        new._points = self._points
        new._pointset = self._pointset
        new._types = self._types
        new._order = self._order
        new._leq = self._leq
        table = dict(self._umin)
        table[p] = _FrozenTable(rows)
        new._umin = MappingProxyType(table)
        new._coords = self._coords
        new.modified_types = self.modified_types | {p}
        new._reverse = {k: v for k, v in self._reverse.items() if k != p}
        new._hash = None
        return new

    def restricted_to(self, points) -> "TypedSpace":
        """Subspace on ``points``: every neighborhood intersected with it."""
        keep = self.check_points(points)
        umin = {lab: {x: self._umin[lab][x] & keep for x in keep} for lab in self._types}
        coords = None
        if self._coords is not None:
            coords = {x: self._coords[x] for x in keep}
        return TypedSpace(keep, self._types.values(), umin, self._order, coords,
                          self.modified_types)

    # -- identity ------------------------------------------------------
    def _canonical(self):
        types = [[t.label, t.shape, None if t.r is None else str(t.r)]
                 for t in self._types.values()]
        order = sorted([list(pq) for pq in self._order])
        umin = {lab: [[str(x), sorted(map(str, self._umin[lab][x]))]
                      for x in self._points] for lab in self._types}
        coords = None
        if self._coords is not None:
            coords = [[str(x), str(self._coords[x].x), str(self._coords[x].y)]
                      for x in self._points if x in self._coords]
        return [[str(x) for x in self._points], types, order, umin, coords]

    def digest(self) -> str:
        """SHA-256 over a canonical rendering; equal spaces hash equal."""
        blob = json.dumps(self._canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def __eq__(self, other):
        if not isinstance(other, TypedSpace):
            return NotImplemented
        if self is other:
            return True
        return (self._points == other._points
                and dict(self._types) == dict(other._types)
                and self._order == other._order
                and all(dict(self._umin[p]) == dict(other._umin[p]) for p in self._types)
                and (dict(self._coords) if self._coords is not None else None)
                == (dict(other._coords) if other._coords is not None else None))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.digest())
        return self._hash

    def __repr__(self):
        return (f"TypedSpace({len(self._points)} points, "
                f"types={list(self._types)})")


class _FrozenTable(Mapping):
    """Read-only point -> frozenset mapping."""

    __slots__ = ("_d",)

    def __init__(self, d):
        self._d = d

    def __getitem__(self, k):
        return self._d[k]

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        if isinstance(other, _FrozenTable):
            return self._d == other._d
        return dict(self) == other

    __hash__ = None


def u_min(space: TypedSpace, x, p) -> frozenset:
    """Least p-neighborhood of ``x``; always contains ``x`` in a valid space."""
    return space.u_min(x, p)


def validate_space(space: TypedSpace, only=None) -> ValidationReport:
    """Check center membership, closedness of neighborhoods, and poset
    monotonicity.  ``only`` restricts the check to one type label (or a
    collection of labels); monotonicity is then checked only between pairs
    inside that set."""
    if only is None:
        labels = list(space.types)
    elif isinstance(only, str):
        labels = [only]
    else:
        labels = list(only)
    for lab in labels:
        space.check_type(lab)
    report = ValidationReport()
    pts = frozenset(space.points)
    for lab in labels:
        tab = space.table(lab)
        for x in space.points:
            members = tab[x]
            if x not in members:
                report.violations.append(Violation("center", x, (lab,), x))
            for y in sort_ids(members - pts):
                report.violations.append(Violation("membership", x, (lab,), y))
    chosen = set(labels)
    for p, q in sorted(space.comparable_pairs()):
        if p not in chosen or q not in chosen:
            continue
        tp, tq = space.table(p), space.table(q)
        for x in space.points:
            for y in sort_ids(tp[x] - tq[x]):
                report.violations.append(Violation("monotonicity", x, (p, q), y))
    return report


def is_symmetrically_typed(space: TypedSpace, p):
    """Return ``(True, None)`` if y in umin(x) <=> x in umin(y) for all
    x != y, else ``(False, (x, y))`` with y in umin(x) and x not in umin(y)."""
    tab = space.table(p)
    for x in space.points:
        for y in sort_ids(tab[x]):
            if y != x and x not in tab[y]:
                return False, (x, y)
    return True, None
