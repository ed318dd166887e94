"""Type-p-connectedness, closure connectedness, ports and straightness.

Connectedness of a subset A is decided on its overlap graph: y and z are
adjacent when their least neighborhoods share a point of A.  Two covering
families with disjoint unions exist exactly when that graph falls apart, and
least neighborhoods are the best choice for each family member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .closure import _seed, tr, tracks
from .errors import PreconditionError
from .space import TypedSpace, point_key, smallest_id, sort_ids


class _DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> list[frozenset]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return sorted((frozenset(g) for g in out.values()),
                      key=lambda g: point_key(smallest_id(g)))


def _merge_by_witness(items, witness_sets) -> list[frozenset]:
    """Group ``items`` so that all items whose witness set contains a common
    element end up together."""
    ds = _DisjointSet(items)
    first = {}
    for it in items:
        for w in witness_sets[it]:
            if w in first:
                ds.union(first[w], it)
            else:
                first[w] = it
    return ds.groups()


def overlap_components(space: TypedSpace, A, p) -> list[frozenset]:
    """Connected components of the overlap graph on A, ordered by smallest id."""
    A = _seed(space, A)
    tab = space.table(p)
    return _merge_by_witness(list(A), {y: tab[y] & A for y in A})


@dataclass(frozen=True)
class Bipartition:
    left: frozenset
    right: frozenset


def is_type_p_connected(space: TypedSpace, A, p):
    """``(True, None)`` or ``(False, Bipartition)`` witnessing a separation."""
    A = _seed(space, A)
    if not A:
        raise PreconditionError("connectedness of the empty set is undefined")
    comps = overlap_components(space, A, p)
    if len(comps) == 1:
        return True, None
    return False, Bipartition(comps[0], A - comps[0])


def component(space: TypedSpace, x, p) -> frozenset:
    """Largest type-p-connected set containing x."""
    space.check_point(x)
    for comp in overlap_components(space, space.points, p):
        if x in comp:
            return comp
    raise AssertionError("unreachable")


def _closures(space, D, p) -> dict:
    return {d: tr(space, d, p) for d in D}


def closure_decomposition(space: TypedSpace, D, p) -> list[frozenset]:
    """Partition of D into p-closure connected parts (components of the graph
    where z and w are adjacent when their transitive closures meet)."""
    D = _seed(space, D)
    if not D:
        raise PreconditionError("closure decomposition of the empty set")
    return _merge_by_witness(list(D), _closures(space, D, p))


def is_closure_connected(space: TypedSpace, D, p) -> bool:
    return len(closure_decomposition(space, D, p)) == 1


@dataclass(frozen=True)
class Port:
    members: frozenset
    parent: frozenset
    type: str
    classes: tuple = field(default=(), compare=False)

    def __iter__(self):
        return iter(sort_ids(self.members))

    def __len__(self):
        return len(self.members)


def port(space: TypedSpace, D, p) -> Port:
    """Entrance points of D: one representative (smallest id) from each
    minimal class of mutual reachability."""
    D = _seed(space, D)
    if not D:
        raise PreconditionError("port of the empty set")
    cl = _closures(space, D, p)
    classes = []
    placed = set()
    for y in sort_ids(D):
        if y in placed:
            continue
        cls = frozenset(z for z in D if z in cl[y] and y in cl[z])
        placed |= cls
        classes.append(cls)
    minimal = []
    for cls in classes:
        y = next(iter(cls))
        if not any(y in cl[z] for z in D - cls):
            minimal.append(cls)
    members = frozenset(smallest_id(c) for c in minimal)
    return Port(members, D, p, tuple(minimal))


class StraightViolation(NamedTuple):
    y: object
    z: object
    i: int
    j: int


@dataclass
class StraightnessReport:
    origin: object
    type: str
    violations: list[StraightViolation] = field(default_factory=list)
    locality_violations: list[tuple] = field(default_factory=list)

    @property
    def straight(self) -> bool:
        return not self.violations

    @property
    def track_local(self) -> bool:
        """Every direct-closure successor of a Track_i point lies in tracks
        i-1, i or i+1, or is the origin (holds in straight clusters)."""
        return not self.locality_violations


def is_straight(space: TypedSpace, x, p) -> StraightnessReport:
    """Scan y in Track_i, z in Track_j (j > i > 0) for z in umin(y) with
    y not in umin(z)."""
    space.check_point(x)
    dec = tracks(space, x, p)
    level = dec.level()
    tab = space.table(p)
    rev = space.reverse(p)
    report = StraightnessReport(x, p)
    for i, layer in enumerate(dec.tracks):
        for y in sort_ids(layer):
            if i > 0:
                for z in sort_ids(tab[y]):
                    j = level.get(z)
                    if j is not None and j > i and y not in tab[z]:
                        report.violations.append(StraightViolation(y, z, i, j))
            for v in sort_ids(rev[y]):
                # the origin track is exempt: straightness says nothing about i = 0
                if 0 < level[v] < i - 1:
                    report.locality_violations.append((y, v, i, level[v]))
    return report
