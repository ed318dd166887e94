"""Local horizontal axis: base index, combined (p, q) index and its
extension over q-clusters through reference points and surrounding trees.

Index values are integer pairs rendered ``major.minor``; "1.10" and "1.1"
are different ticks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .closure import _seed, tr, tracks
from .connectivity import closure_decomposition, port
from .errors import InvariantError, PreconditionError
from .space import TypedSpace, point_key, smallest_id, sort_ids
from .surgery import SurgeryLog, surrounding_tree


class IndexValue(NamedTuple):
    major: int
    minor: int = 0

    def __str__(self):
        return f"{self.major}.{self.minor}"

    def offset(self, k: int) -> "IndexValue":
        """Shift along the axis by k whole ticks; the minor part resets."""
        return IndexValue(self.major + k, 0)

    @classmethod
    def parse(cls, text: str) -> "IndexValue":
        major, _, minor = str(text).partition(".")
        return cls(int(major), int(minor or 0))


@dataclass
class IndexMap:
    p: str
    q: str | None
    origin: object
    entries: dict = field(default_factory=dict)

    def __getitem__(self, y) -> IndexValue:
        return self.entries[y]

    def __contains__(self, y):
        return y in self.entries

    def __len__(self):
        return len(self.entries)

    def claim(self, y, value: IndexValue) -> bool:
        """Assign ``value`` unless y already has an index; report success."""
        if y in self.entries:
            return False
        self.entries[y] = IndexValue(*value)
        return True

    def rendered(self) -> dict:
        return {y: str(self.entries[y]) for y in sort_ids(self.entries)}

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "origin": self.origin,
                "entries": {str(y): list(self.entries[y]) for y in sort_ids(self.entries)}}


def base_index(space: TypedSpace, x, p) -> IndexMap:
    """Track number of every point of tr(x)."""
    dec = tracks(space, x, p)
    return IndexMap(p, None, x, {y: IndexValue(i, 0) for y, i in dec.level().items()})


@dataclass
class UniformityReport:
    origin: object
    p: str
    q: str
    violations: list = field(default_factory=list)

    @property
    def uniform(self) -> bool:
        return not self.violations


def _check_order(space, p, q):
    if not space.leq(p, q):
        raise PreconditionError(f"types {p!r} and {q!r} are not ordered p <= q")


def is_uniformly_typed(space: TypedSpace, x, p, q) -> UniformityReport:
    """Every p-track that meets a q-track must lie inside it.

    Violations are the pairs (i, k) where Track_i^p meets Track_k^q without
    being contained in it.
    """
    _check_order(space, p, q)
    pdec, qdec = tracks(space, x, p), tracks(space, x, q)
    report = UniformityReport(x, p, q)
    qlevel = qdec.level()
    for i, layer in enumerate(pdec.tracks):
        hit = sorted({qlevel[y] for y in layer if y in qlevel})
        if len(hit) > 1 or any(y not in qlevel for y in layer):
            report.violations.extend((i, k) for k in hit)
    return report


@dataclass
class PqStage:
    """One stage of the combined axis.

    ``levels`` are the q-levels (from the origin) covered by the i-sequence:
    ``iseq[j]`` is the largest i with CL_i^p(reference) inside
    CL^q_{levels[j]}(origin).
    """

    t: int
    reference: object
    k: int
    iseq: tuple
    levels: tuple
    A: frozenset
    B: frozenset
    C: frozenset
    K: frozenset
    r: int | None = None
    anchor: IndexValue = IndexValue(0, 0)

    @property
    def tail(self) -> int:
        """Last i-sequence entry, 0 for an empty sequence."""
        return self.iseq[-1] if self.iseq else 0


def _iseq(space, ref, p, qdec, levels):
    pdec = tracks(space, ref, p)
    out = []
    for lv in levels:
        ceiling = qdec.closure(lv)
        best = 0
        for i in range(1, pdec.count + 1):
            if pdec.closure(i) <= ceiling:
                best = i
            else:
                break
        out.append(best)
    return tuple(out)


def pq_decomposition(space: TypedSpace, x, p, q) -> PqStage:
    """First stage: k_1, the i-sequence, and the sets A_1, B_1, C_1, K_1."""
    report = is_uniformly_typed(space, x, p, q)
    if not report.uniform:
        raise PreconditionError(
            f"decomposition undefined: not ({p}, {q})-uniformly typed at {x!r}, "
            f"violations {report.violations}")
    trp = tr(space, x, p)
    qdec = tracks(space, x, q)
    k1 = next(k for k in range(qdec.count) if trp <= qdec.closure(k))
    levels = tuple(range(1, k1 + 1))
    A = qdec.closure(k1)
    C = A - trp
    return PqStage(1, x, k1, _iseq(space, x, p, qdec, levels), levels,
                   A, qdec.members - A, C, tr(space, C, p) if C else frozenset())


def index_roundtrip(k: int, iseq: Sequence[int]) -> IndexValue:
    """Combined index of the p-track number k: major t with
    iseq[t-1] <= k < iseq[t] (iseq[-1] read as 0), minor k - iseq[t-1]."""
    bounds = (0, *iseq)
    if k < 0 or (iseq and k >= iseq[-1]) or (not iseq and k != 0):
        raise PreconditionError(f"track number {k} outside the realized range of {list(iseq)}")
    if not iseq:
        return IndexValue(0, 0)
    for t in range(len(bounds) - 1):
        if bounds[t] <= k < bounds[t + 1]:
            return IndexValue(t, k - bounds[t])
    raise PreconditionError(f"i-sequence {list(iseq)} is not non-decreasing")


def index_inverse(value, iseq: Sequence[int]) -> int:
    """Track number k with index_roundtrip(k, iseq) == value."""
    major, minor = value
    bounds = (0, *iseq)
    if not iseq and (major, minor) == (0, 0):
        return 0
    if not 0 <= major < len(iseq) or minor < 0:
        raise PreconditionError(f"index {major}.{minor} outside the realized range")
    k = bounds[major] + minor
    if k >= bounds[major + 1]:
        raise PreconditionError(f"index {major}.{minor} outside the realized range")
    return k


def combined_index(space: TypedSpace, x, p, q) -> IndexMap:
    """(p, q) index of every point of tr_p(x)."""
    stage = pq_decomposition(space, x, p, q)
    dec = tracks(space, x, p)
    return IndexMap(p, q, x, {y: index_roundtrip(k, stage.iseq)
                              for y, k in dec.level().items()})


class JointIndexing(NamedTuple):
    index: IndexMap
    log: SurgeryLog
    space: TypedSpace


def _first_meeting(dec, targets):
    for k, layer in enumerate(dec.tracks):
        if layer & targets:
            return k
    return None


def index_closure_connected_set(space: TypedSpace, D, d0, base, p, q=None) -> JointIndexing:
    """Index the clusters of a p-closure connected set D from its reference d0.

    A child e of d is placed at index(d) + m1 - m2, where m1 is the first
    track of d that tr(e) meets and m2 the first track of e meeting that
    track (both read in the input space).  After the tree surgeries each
    point of Track_j of a node n gets index(n) + j.
    """
    D = _seed(space, D)
    base = IndexValue(*base)
    tree, after, log = surrounding_tree(space, D, d0, p)
    anchor = {d0: base}
    for level in tree.levels:
        for d in level:
            dd = tracks(space, d, p)
            for e in tree.children[d]:
                m1 = _first_meeting(dd, tr(space, e, p))
                m2 = _first_meeting(tracks(space, e, p), dd[m1])
                anchor[e] = anchor[d].offset(m1 - m2)
    out = IndexMap(p, q, d0)
    for n in tree.nodes:
        for j, layer in enumerate(tracks(after, n, p).tracks):
            for w in layer:
                if not out.claim(w, anchor[n].offset(j)) and not tree.skipped:
                    raise InvariantError(f"{w!r} reached from two nodes after surgery")
    out.entries[d0] = base
    return JointIndexing(out, log, after)


def _extend_stage(space, stage: PqStage, index: IndexMap, p, q, parallel_base):
    """Index tr(port(A)) component by component; existing entries win."""
    log = SurgeryLog()
    ref = stage.reference
    members = port(space, stage.A, p).members
    for part in closure_decomposition(space, members, p):
        hits = [d for d in sort_ids(part) if ref in tr(space, d, p)]
        if hits:
            root = hits[0]
            k = tracks(space, root, p).level()[ref]
            base = index[ref].offset(-k) if ref in index else IndexValue(-k, 0)
        else:
            root = smallest_id(part)
            base = parallel_base
        sub, sublog, space = index_closure_connected_set(space, part, root, base, p, q)
        log.extend(sublog)
        for y in sort_ids(sub.entries):
            index.claim(y, sub.entries[y])
    return index, log, space


def extend_index_A1(space: TypedSpace, stage: PqStage, p, q) -> JointIndexing:
    """Combined index of tr_p(x) extended over A_1 and K_1."""
    x = stage.reference
    index = combined_index(space, x, p, q)
    index, log, space = _extend_stage(space, stage, index, p, q, IndexValue(0, 0))
    return JointIndexing(index, log, space)


class PqStraightViolation(NamedTuple):
    y: object
    z: object
    w: object


@dataclass
class PqStraightnessReport:
    origin: object
    p: str
    q: str
    violations: list = field(default_factory=list)

    @property
    def straight(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.straight


def is_pq_straight(space: TypedSpace, x, p, q, first_only: bool = False) -> PqStraightnessReport:
    """For y in tr_q(x) and z, w in tr_p(y): a p-index order z <= w must
    carry over to the q-indices measured from y.

    Equivalently the q-index from y is constant on each p-track of y and
    non-decreasing across p-tracks.  One witness (y, z, w) is reported per
    offending y, with index_p(z) <= index_p(w) and index_q(z) > index_q(w).
    """
    report = PqStraightnessReport(x, p, q)
    for y in sort_ids(tr(space, x, q)):
        plev = tracks(space, y, p).tracks
        qlev = tracks(space, y, q).level()
        prev_max = None
        for layer in plev:
            ordered = sorted(layer, key=lambda v: (qlev[v], point_key(v)))
            lo, hi = ordered[0], ordered[-1]
            if qlev[hi] > qlev[lo]:
                report.violations.append(PqStraightViolation(y, hi, lo))
                break
            if prev_max is not None and qlev[prev_max] > qlev[lo]:
                report.violations.append(PqStraightViolation(y, prev_max, lo))
                break
            prev_max = hi
        if first_only and report.violations:
            break
    return report


def pick_reference(space: TypedSpace, D, p):
    """Port member of D with the most p-tracks; smallest id on ties.
    ``None`` when D is empty."""
    D = frozenset(D)
    if not D:
        return None
    members = sort_ids(port(space, D, p).members)
    counts = {d: tracks(space, d, p).count for d in members}
    best = max(counts.values())
    return next(d for d in members if counts[d] == best)


def reference_point(space: TypedSpace, x, p, q, stage: PqStage):
    """Reference point of the next stage, chosen in q-Track_{k+1}(x).

    Returns ``None`` when that track is empty (no further stage).
    """
    qdec = tracks(space, x, q)
    return pick_reference(space, qdec[stage.k + 1], p)


@dataclass
class Extension:
    index: IndexMap
    log: SurgeryLog
    stages: list
    space: TypedSpace

    def __iter__(self):
        return iter((self.index, self.log, self.stages))


def full_extension(space: TypedSpace, x, p, q) -> Extension:
    """Extend the combined axis of x over all of tr_q(x).

    Stage 1 is the combined index plus its extension over A_1 and K_1.  Each
    later stage picks a reference point x_t among the unindexed points of
    the lowest q-level still open, anchors it at r_t + (last i-sequence
    entry of stage t-1), where r_t is the first p-track of x_{t-1} holding
    a y with y in umin_q(x_t), and indexes A_t and K_t the same way as
    stage 1.
    """
    report = is_pq_straight(space, x, p, q, first_only=True)
    if not report.straight:
        raise PreconditionError(
            f"cluster is not ({p}, {q})-straight at {x!r}: witness {report.violations[0]}")
    stage = pq_decomposition(space, x, p, q)
    qdec = tracks(space, x, q)
    qlevel = qdec.level()
    trq = qdec.members

    index, log, space = extend_index_A1(space, stage, p, q)
    stages = [stage]
    claimed = stage.A | stage.K
    claimed_A = set(stage.A)
    claimed_K = set(stage.K)
    while True:
        open_points = trq - index.entries.keys()
        if not open_points:
            break
        prev = stages[-1]
        start = min(qlevel[y] for y in open_points)
        D = qdec[start] & open_points
        ref = pick_reference(space, D, p)
        umin_q = space.u_min(ref, q)
        r = _first_meeting(tracks(space, prev.reference, p), umin_q)
        if r is None:
            # no p-track of x_{t-1} touches umin_q(x_t): measure from its indexed q-neighbors
            r = min(index[y].major for y in umin_q if y in index) - index[prev.reference].major
        anchor = IndexValue(r + prev.tail, 0)
        trp_ref = tr(space, ref, p)
        kt = next(k for k in range(start, qdec.count) if trp_ref <= qdec.closure(k))
        levels = tuple(range(start, kt + 1))
        A = qdec.closure(kt) - claimed
        claimed_A |= A
        B = trq - (claimed_A | claimed_K)
        C = A - trp_ref
        K = tr(space, C, p) if C else frozenset()
        new = PqStage(len(stages) + 1, ref, kt, _iseq(space, ref, p, qdec, levels), levels,
                      A, B, C, K, r, anchor)
        before = len(index)
        index.claim(ref, anchor)
        index, stage_log, space = _extend_stage(space, new, index, p, q, anchor)
        log.extend(stage_log)
        if len(index) == before:
            raise InvariantError(f"stage {new.t} indexed no new point (reference {ref!r})")
        claimed = claimed | A | K
        claimed_K |= K
        stages.append(new)
    extra = index.entries.keys() - trq
    if extra:
        raise InvariantError(f"indexed points outside tr_q(x): {sort_ids(extra)}")
    return Extension(index, log, stages, space)
