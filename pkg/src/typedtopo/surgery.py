"""Cuts, surgeries, separation surgeries, straightening and surrounding trees.

Every operation takes a space and returns a new one together with records
that are enough to replay the change on the original value.  Only the
neighborhoods of the given type are touched, so a result may break poset
monotonicity with other types; such spaces list the edited labels in
``space.modified_types``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .closure import _seed, tr, tracks
from .connectivity import is_closure_connected
from .errors import InvariantError, PreconditionError, SpaceBuildError
from .space import TypedSpace, sort_ids


@dataclass(frozen=True)
class CutRecord:
    """umin(z, type) loses y."""

    z: object
    y: object
    type: str

    def to_json(self):
        return {"op": "cut", "args": [self.z, self.y, self.type]}


@dataclass(frozen=True)
class SurgeryRecord:
    """Surgery keeping y's cluster and pruning z's.

    ``affected`` is tr(y) & tr(z) and ``removed`` is tr(z) - tr(y), both taken
    at application time; every w in ``affected`` loses ``removed``.
    """

    z: object
    y: object
    type: str
    affected: frozenset
    removed: frozenset

    def to_json(self):
        return {"op": "surgery",
                "args": [self.z, self.y, self.type,
                         sort_ids(self.affected), sort_ids(self.removed)]}


@dataclass(frozen=True)
class RemovalRecord:
    """A repeated point dropped from a surgery sequence; no space change."""

    point: object
    position: int
    type: str

    def to_json(self):
        return {"op": "remove", "args": [self.point, self.position, self.type]}


Record = Union[CutRecord, SurgeryRecord, RemovalRecord]


@dataclass
class SurgeryLog:
    records: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def extend(self, other: "SurgeryLog"):
        self.records.extend(other.records)
        self.notes.extend(other.notes)

    def surgeries(self) -> list[SurgeryRecord]:
        return [r for r in self.records if isinstance(r, SurgeryRecord)]

    def to_json(self) -> list:
        return [r.to_json() for r in self.records]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data) -> "SurgeryLog":
        log = cls()
        for item in data:
            op, args = item["op"], item["args"]
            if op == "cut":
                log.records.append(CutRecord(*args))
            elif op == "surgery":
                z, y, t, affected, removed = args
                log.records.append(SurgeryRecord(z, y, t, frozenset(affected), frozenset(removed)))
            elif op == "remove":
                log.records.append(RemovalRecord(*args))
            else:
                raise SpaceBuildError(f"unknown log op {op!r}")
        return log

    def replay(self, space: TypedSpace) -> TypedSpace:
        """Apply the recorded edits verbatim to ``space``."""
        for rec in self.records:
            if isinstance(rec, CutRecord):
                cur = space.u_min(rec.z, rec.type)
                if rec.y in cur:
                    space = space.with_neighborhoods(rec.type, {rec.z: cur - {rec.y}})
            elif isinstance(rec, SurgeryRecord):
                space = _prune(space, rec.type, rec.affected, rec.removed)
        return space


def _prune(space, p, affected, removed):
    updates = {}
    for w in affected:
        cur = space.u_min(w, p)
        if cur & removed:
            updates[w] = cur - removed
    if not updates:
        return space
    return space.with_neighborhoods(p, updates)


def cut(space: TypedSpace, z, y, p):
    """Remove y from umin(z, p); afterwards z is not in cl1({y})."""
    space.check_point(z)
    space.check_point(y)
    space.check_type(p)
    if z == y:
        raise PreconditionError("cut needs two distinct points")
    rec = CutRecord(z, y, p)
    cur = space.u_min(z, p)
    if y not in cur:
        return space, rec
    return space.with_neighborhoods(p, {z: cur - {y}}), rec


def surgery_eligible(space: TypedSpace, z, y, p) -> bool:
    return z != y and z not in tr(space, y, p) and y not in tr(space, z, p)


def surgery(space: TypedSpace, z, y, p, check: bool = True):
    """Separate tr(z) from tr(y), keeping tr(y) unchanged.

    Requires z not in tr(y) and y not in tr(z).  With ``check`` the three
    after-surgery identities are verified and :class:`InvariantError` is
    raised with the offending sets if one fails.
    """
    space.check_point(z)
    space.check_point(y)
    if z == y:
        raise PreconditionError("surgery needs two distinct points")
    try_, trz = tr(space, y, p), tr(space, z, p)
    if z in try_ or y in trz:
        raise PreconditionError(f"not surgery-eligible: ({z!r}, {y!r})")
    rec = SurgeryRecord(z, y, p, trz & try_, trz - try_)
    out = _prune(space, p, rec.affected, rec.removed)
    if check:
        ny, nz = tr(out, y, p), tr(out, z, p)
        if ny != try_:
            raise InvariantError(f"surgery changed tr({y!r}): {sort_ids(ny ^ try_)}")
        if ny & nz:
            raise InvariantError(f"clusters still meet at {sort_ids(ny & nz)}")
        if ny | nz != try_ | trz:
            raise InvariantError(f"union changed by {sort_ids((ny | nz) ^ (try_ | trz))}")
    return out, rec


def separation_surgeries(space: TypedSpace, seq, p, check: bool = True):
    """Surgeries (y2, y1), ..., (yn, y1), (y3, y2), ..., (yn, y_{n-1}).

    A later repeat of an earlier point is dropped from the sequence.  Pairs
    that are not surgery-eligible when reached are skipped and noted.
    """
    seq = list(seq)
    if not seq:
        raise PreconditionError("separation surgeries need a nonempty sequence")
    space.check_points(seq)
    log = SurgeryLog()
    live = list(seq)
    i = 0
    while i < len(live):
        j = i + 1
        while j < len(live):
            yi, yj = live[i], live[j]
            if yi == yj:
                log.records.append(RemovalRecord(yj, j, p))
                del live[j]
                continue
            if surgery_eligible(space, yj, yi, p):
                space, rec = surgery(space, yj, yi, p, check=check)
                log.records.append(rec)
            else:
                log.notes.append(f"skipped ineligible pair ({yj!r}, {yi!r})")
            j += 1
        i += 1
    return space, log


def straighten(space: TypedSpace, x, p):
    """Cut every asymmetric link from a point to a later track.

    For y in Track_i, Check(y) holds the z in umin(y) outside CL_i(x) with
    y not in umin(z); each such pair is cut from umin(y).  All Check sets are
    taken from the input space, then the cuts run in point-id order.
    """
    dec = tracks(space, x, p)
    tab = space.table(p)
    pending = []
    for i, layer in enumerate(dec.tracks):
        inside = dec.closure(i)
        for y in sort_ids(layer):
            for z in sort_ids(tab[y] - inside):
                if y not in tab[z]:
                    pending.append((y, z))
    cuts = []
    for y, z in pending:
        space, rec = cut(space, y, z, p)
        cuts.append(rec)
    return space, cuts


@dataclass
class SurroundingTree:
    root: object
    levels: list = field(default_factory=list)
    children: dict = field(default_factory=dict)
    parent: dict = field(default_factory=dict)
    raw_children: dict = field(default_factory=dict)
    level_surgeries: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def nodes(self) -> list:
        return [d for level in self.levels for d in level]

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def level_of(self) -> dict:
        return {d: i for i, level in enumerate(self.levels) for d in level}


def surrounding_tree(space: TypedSpace, D, d0, p, check: bool = True):
    """Breadth-first tree of overlapping clusters rooted at d0, plus the
    per-level surgeries that make all clusters of D pairwise disjoint.

    The tree is laid out from the clusters of the input space.  Children of
    a level-i node d are the unplaced members of D whose cluster meets tr(d);
    a point claimed by several parents stays with the first.  Level i then
    runs the surgeries (e, d) for each raw child e of each d, followed by
    separation surgeries on the raw sequence of level i+1.
    """
    D = _seed(space, D)
    if d0 not in D:
        raise PreconditionError(f"root {d0!r} is not in D")
    if not is_closure_connected(space, D, p):
        raise PreconditionError("D is not p-closure connected")
    before = {d: tr(space, d, p) for d in D}
    tree = SurroundingTree(d0, [[d0]])
    placed = {d0}
    raw_levels = [[d0]]
    while True:
        current = tree.levels[-1]
        seq = []
        for d in current:
            kids = sort_ids(e for e in D - placed if before[e] & before[d])
            tree.raw_children[d] = kids
            seq.extend(kids)
        if not seq:
            for d in current:
                tree.children[d] = []
            break
        level = []
        for d in current:
            tree.children[d] = []
            for e in tree.raw_children[d]:
                if e not in tree.parent:
                    tree.parent[e] = d
                    tree.children[d].append(e)
                    level.append(e)
        placed |= set(level)
        tree.levels.append(level)
        raw_levels.append(seq)

    log = SurgeryLog()
    for i, level in enumerate(tree.levels):
        batch = SurgeryLog()
        for d in level:
            for e in tree.raw_children.get(d, []):
                if surgery_eligible(space, e, d, p):
                    space, rec = surgery(space, e, d, p, check=check)
                    batch.records.append(rec)
                else:
                    batch.notes.append(f"skipped ineligible pair ({e!r}, {d!r})")
                    tree.skipped.append((e, d))
        if i + 1 < len(raw_levels):
            space, ss = separation_surgeries(space, raw_levels[i + 1], p, check=check)
            batch.extend(ss)
            tree.skipped.extend(ss.notes)
        tree.level_surgeries.append(batch)
        log.extend(batch)

    if check:
        _check_tree(space, D, tree, before, p)
    return tree, space, log


def _check_tree(space, D, tree, before, p):
    nodes = tree.nodes
    if len(nodes) != len(set(nodes)) or set(nodes) != set(D):
        raise InvariantError("tree does not place every point of D exactly once")
    after = {d: tr(space, d, p) for d in D}
    union_before = frozenset().union(*before.values())
    union_after = frozenset().union(*after.values())
    if union_before != union_after:
        raise InvariantError(f"tr(D) changed by {sort_ids(union_before ^ union_after)}")
    if tree.skipped:
        return
    ds = sort_ids(D)
    for a, d in enumerate(ds):
        for e in ds[a + 1:]:
            if after[d] & after[e]:
                raise InvariantError(f"clusters of {d!r} and {e!r} still meet")
