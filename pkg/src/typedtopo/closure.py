"""Direct, iterated and transitive p-closures and track decompositions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .space import TypedSpace, sort_ids


def _seed(space: TypedSpace, A) -> frozenset:
    # a bare id (str or int) stands for the singleton {id}
    if isinstance(A, (str, int)):
        return space.check_points([A])
    return space.check_points(A)


def cl1(space: TypedSpace, A, p) -> frozenset:
    """A together with every point whose least p-neighborhood meets A."""
    A = _seed(space, A)
    rev = space.reverse(p)
    out = set(A)
    for a in A:
        out |= rev[a]
    return frozenset(out)


def cln(space: TypedSpace, A, p, n: int) -> frozenset:
    """n-fold direct closure; ``cln(A, 0) == A``."""
    if n < 0:
        raise PreconditionError("n must be >= 0")
    cur = _seed(space, A)
    space.check_type(p)
    for _ in range(n):
        nxt = cl1(space, cur, p)
        if nxt == cur:
            break
        cur = nxt
    return cur


def tr(space: TypedSpace, A, p) -> frozenset:
    """Transitive p-closure: the smallest cl1-fixed set containing A.

    Worklist over the reverse neighborhood index, linear in the number of
    (point, neighborhood member) pairs touched.
    """
    A = _seed(space, A)
    rev = space.reverse(p)
    seen = set(A)
    stack = list(A)
    while stack:
        a = stack.pop()
        for x in rev[a]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return frozenset(seen)


@dataclass(frozen=True)
class ClusterSet:
    members: frozenset
    origin: frozenset
    type: str

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sort_ids(self.members))


def cluster(space: TypedSpace, A, p) -> ClusterSet:
    A = _seed(space, A)
    return ClusterSet(tr(space, A, p), A, p)


@dataclass(frozen=True)
class TrackDecomposition:
    """Tracks T_0 = A, T_i = CL_i \\ CL_{i-1}, up to the last nonempty one."""

    origin: frozenset
    type: str
    tracks: tuple

    @property
    def count(self) -> int:
        """Index of the first empty track."""
        return len(self.tracks)

    @property
    def members(self) -> frozenset:
        return frozenset().union(*self.tracks)

    def level(self) -> dict:
        """point -> track number, for every member of the cluster."""
        return {y: i for i, t in enumerate(self.tracks) for y in t}

    def __getitem__(self, i) -> frozenset:
        if 0 <= i < len(self.tracks):
            return self.tracks[i]
        return frozenset()

    def closure(self, i) -> frozenset:
        """CL_i(A) recovered from the tracks (saturates past the end)."""
        return frozenset().union(*self.tracks[: max(i, 0) + 1])

    def as_lists(self) -> list[list]:
        return [sort_ids(t) for t in self.tracks]


def tracks(space: TypedSpace, A, p) -> TrackDecomposition:
    """Breadth-first layering of the transitive closure of A."""
    A = _seed(space, A)
    rev = space.reverse(p)
    seen = set(A)
    layers = [A]
    frontier = A
    while True:
        new = set()
        for a in frontier:
            for x in rev[a]:
                if x not in seen:
                    new.add(x)
        if not new:
            break
        seen |= new
        frontier = frozenset(new)
        layers.append(frontier)
    return TrackDecomposition(A, p, tuple(layers))


def track_count(space: TypedSpace, x, p) -> int:
    return tracks(space, x, p).count


def is_accumulation_point(space: TypedSpace, x, A, p) -> bool:
    A = _seed(space, A)
    return bool(space.u_min(x, p) & A)


def closure_levels(space: TypedSpace, A, p) -> list[frozenset]:
    """[CL_0, CL_1, ...] up to stabilization (inclusive)."""
    t = tracks(space, A, p)
    return [t.closure(i) for i in range(t.count)]
