"""Per-track connected components and branch enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .closure import cl1, tracks
from .connectivity import overlap_components
from .space import TypedSpace, point_key, sort_ids


@dataclass(frozen=True)
class TrackComponents:
    origin: object
    type: str
    parts: tuple  # parts[i] = (C_i^1, C_i^2, ...)

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)

    def as_lists(self) -> list:
        return [[sort_ids(c) for c in row] for row in self.parts]


def track_components(space: TypedSpace, x, p) -> TrackComponents:
    """Split every track of tr(x) into its type-p-connected pieces."""
    dec = tracks(space, x, p)
    return TrackComponents(x, p, tuple(tuple(overlap_components(space, t, p)) for t in dec.tracks))


@dataclass(frozen=True)
class Branch:
    levels: tuple

    def __len__(self):
        return len(self.levels)

    def as_lists(self) -> list:
        return [sort_ids(a) for a in self.levels]

    def key(self):
        return tuple(tuple(point_key(y) for y in sort_ids(a)) for a in self.levels)


def is_branch(space: TypedSpace, comps: TrackComponents, levels) -> bool:
    """Re-check the three branch conditions for a level list starting at Track_0."""
    if not levels or len(levels) > len(comps):
        return False
    for i, a in enumerate(levels):
        if frozenset(a) not in comps[i]:
            return False
        if i and not frozenset(a) & cl1(space, levels[i - 1], comps.type):
            return False
    return True


def enumerate_branches(space: TypedSpace, x, p, maximal: bool = True,
                       limit: int | None = None) -> list[Branch]:
    """Depth-first walk over component choices linked by direct closure.

    With ``maximal`` only chains that cannot be extended are returned;
    otherwise every branch, prefixes included.  ``limit`` caps the number of
    branches collected.
    """
    comps = track_components(space, x, p)
    out: list[Branch] = []
    stack = [(comps[0][0],)]
    while stack:
        path = stack.pop()
        depth = len(path)
        nxt = []
        if depth < len(comps):
            reach = cl1(space, path[-1], p)
            nxt = [c for c in comps[depth] if c & reach]
        if not maximal or not nxt:
            out.append(Branch(path))
            if limit is not None and len(out) >= limit:
                break
        for c in reversed(nxt):
            stack.append(path + (c,))
    return sorted(out, key=Branch.key)


def diff_branches(computed, expected) -> dict:
    """Set-wise comparison of two branch lists.

    Each branch is read as a sequence of level sets, so order inside a
    level is ignored.  Returns ``{"missing": [...], "extra": [...]}``, the
    expected branches not computed and the computed ones not expected, as
    level lists; both empty means the lists agree.
    """
    def norm(b):
        levels = b.levels if isinstance(b, Branch) else b
        return tuple(frozenset(a) for a in levels)

    got = {norm(b) for b in computed}
    want = {norm(b) for b in expected}

    def render(keys):
        rows = [[sort_ids(a) for a in b] for b in keys]
        return sorted(rows, key=lambda r: [[point_key(y) for y in a] for a in r])

    return {"missing": render(want - got), "extra": render(got - want)}
