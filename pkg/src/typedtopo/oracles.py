"""Brute-force reference computations for small inputs.

These follow the definitions literally and share no code with the fast
algorithms, so the two can cross-check each other.  Everything here is
exponential or at least quadratic; keep inputs small.
"""

from __future__ import annotations

from itertools import combinations

from .space import TypedSpace


def cl1(space: TypedSpace, A, p) -> frozenset:
    A = frozenset(A)
    return A | frozenset(x for x in space.points if space.u_min(x, p) & A)


def closure_levels(space: TypedSpace, A, p) -> list[frozenset]:
    levels = [frozenset(A)]
    while True:
        nxt = cl1(space, levels[-1], p)
        if nxt == levels[-1]:
            return levels
        levels.append(nxt)


def tr(space: TypedSpace, A, p) -> frozenset:
    return closure_levels(space, A, p)[-1]


def tracks(space: TypedSpace, A, p) -> list[frozenset]:
    levels = closure_levels(space, A, p)
    return [levels[0]] + [b - a for a, b in zip(levels, levels[1:])]


def is_type_p_connected(space: TypedSpace, A, p) -> bool:
    """No split of A into two nonempty parts whose neighborhood unions,
    taken inside A, are disjoint."""
    A = sorted(A, key=str)
    nbhd = {y: space.u_min(y, p) & frozenset(A) for y in A}
    first, rest = A[0], A[1:]
    for k in range(len(rest)):
        for extra in combinations(rest, k):
            left = {first, *extra}
            right = [y for y in A if y not in left]
            u = frozenset().union(*(nbhd[y] for y in left))
            v = frozenset().union(*(nbhd[y] for y in right))
            if not u & v:
                return False
    return True


def uniformity_violations(space: TypedSpace, x, p, q) -> list[tuple]:
    """Pairs (i, k) where p-Track_i meets q-Track_k without lying inside it."""
    pt, qt = tracks(space, {x}, p), tracks(space, {x}, q)
    out = []
    for i, a in enumerate(pt):
        for k, b in enumerate(qt):
            if a & b and not a <= b:
                out.append((i, k))
    return out


def dbscan_clusters(coords: dict, eps2, min_pts: int) -> set[frozenset]:
    """Clusters as sets: points density-reachable from a core point, grouped
    by density-connection of their cores."""
    ids = list(coords)
    near = {a: {b for b in ids if coords[a].sqdist(coords[b]) < eps2} for a in ids}
    core = {a for a in ids if len(near[a]) >= min_pts}
    reach = {}
    for c in core:
        seen, todo = {c}, [c]
        while todo:
            a = todo.pop()
            if a not in core:
                continue
            for b in near[a]:
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
        reach[c] = frozenset(seen)
    out = set()
    for c in core:
        cores = frozenset(d for d in reach[c] if d in core)
        out.add(frozenset().union(*(reach[d] for d in cores)))
    return out
