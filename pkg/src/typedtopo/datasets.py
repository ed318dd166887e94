"""Reference data sets and hand-built fixtures.

Planar points use ids of the form ``"(a,b)"``.  Fixtures whose adjacency is
only partly printed in the source figures are reconstructions; each builder
says which printed facts it honors.
"""

from __future__ import annotations

from .builders import build_directed_2d_space, build_metric_space, build_relation_space

X48_COORDS = [
    (0, 4), (0, 7), (1, 4), (1, 5), (1, 7), (1, 8),
    (2, 3), (2, 5), (2, 8), (3, 3), (3, 4), (3, 5), (3, 8),
    (3, 11),
    (4, 2),
    (4, 3), (4, 5), (4, 6), (4, 8),
    (4, 11), (5, 2), (5, 6), (5, 7), (5, 8), (5, 9), (5, 10), (5, 11),
    (6, 2), (6, 6), (6, 7), (6, 8), (7, 6),
    (7, 8), (7, 9), (8, 6), (8, 9), (8, 10), (9, 6), (9, 10), (10, 6),
    (10, 10),
    (11, 6), (11, 9), (11, 10),
    (12, 6), (12, 7), (12, 8), (12, 9),
]

X4_COORDS = [(0, 0), (0, 1), (1, 1), (1, 0)]
X5_COORDS = [(0, 0), (0, 1), (1, 1), (1, 0), (2, 0)]
NONUNIFORM_COORDS = [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (1, 2), (0, 2)]


def pid(a, b) -> str:
    """Point id of the planar point (a, b)."""
    return f"({a},{b})"


def labelled(coords) -> list:
    return [(pid(a, b), (a, b)) for a, b in coords]


def x48(specs=(("left", 1), ("left", 2), ("up-left", 1), ("up-left", 2))):
    """The 48-point planar set with directed left and up-left types."""
    return build_directed_2d_space(labelled(X48_COORDS), specs)


def x4(radii=(1, "1.2")):
    return build_metric_space(labelled(X4_COORDS), radii)


def x5(radii=("1.2", "1.414213562373095")):
    """Five points.  The second default radius sits just below sqrt(2); every
    r in (1, sqrt(2)] gives the same open disks, so it stands for sqrt(2)."""
    return build_metric_space(labelled(X5_COORDS), radii)


def nonuniform8(radii=("1.01", "3.01")):
    return build_metric_space(labelled(NONUNIFORM_COORDS), radii)


def straightness_fixture():
    """Non-straight cluster: z sits in Track_3 of x with x4 (Track_4) in
    umin(z) but z not in umin(x4).  w1, w2 lie outside the cluster."""
    links = {
        "y1": {"x"}, "y2": {"y1"}, "z": {"y2", "x4"},
        "x1": {"x"}, "x2": {"x1"}, "x3": {"x2"}, "x4": {"x3"},
        "w2": {"w1"},
    }
    ids = ["x", "y1", "y2", "z", "x1", "x2", "x3", "x4", "w1", "w2"]
    return build_relation_space(ids, {"p": _pairs(links)})


def surgery_fixture():
    """Two overlapping clusters tr(x) and tr(y) sharing {z, z', z'1, z'2, z'3}.

    z is in Track_2 of both; z' is in Track_5 of y and Track_8 of x.
    Surgery keeping x cuts y1 -> z and w3 -> z'.
    """
    arrows = [
        ("x", "x1"), ("x1", "z"), ("x1", "x'1"), ("x'1", "x'2"), ("x'2", "x'3"),
        ("x'3", "x'4"), ("x'4", "x'5"), ("x'5", "x'6"), ("x'6", "z'"), ("x'6", "x'7"),
        ("y", "y1"), ("y1", "z"), ("y", "w1"), ("w1", "w2"), ("w2", "w'1"),
        ("w'1", "w3"), ("w'1", "w'2"), ("w3", "z'"),
        ("z'", "z'1"), ("z'1", "z'2"), ("z'2", "z'3"),
    ]
    ids = ["x", "x1", "z", *[f"x'{i}" for i in range(1, 8)], "y", "y1", "w1", "w2",
           "w3", "w'1", "w'2", "z'", "z'1", "z'2", "z'3"]
    # an arrow a -> b puts a in umin(b)
    return build_relation_space(ids, {"p": [(b, a) for a, b in arrows]})


def two_cluster_fixture():
    """tr(d1) first meets tr(d0) at Track_3 of d0, through d1's own Track_1."""
    arrows = [("d0", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4"),
              ("d1", "a3"), ("d1", "b1"), ("b1", "b2")]
    ids = ["d0", "a1", "a2", "a3", "a4", "d1", "b1", "b2"]
    return build_relation_space(ids, {"p": [(b, a) for a, b in arrows]})


def _pairs(links):
    return [(a, b) for a, bs in links.items() for b in bs]


def _disk_rows(coords: dict, r2) -> dict:
    return {a: {b for b in coords
                if (coords[a][0] - coords[b][0]) ** 2 + (coords[a][1] - coords[b][1]) ** 2 <= r2}
            for a in coords}


def _pq_example(coords, p_arrows, q_extra, q_override=None):
    coords = {pid(*c): c for c in coords}
    p_rows = {a: {a} for a in coords}
    for a, b in p_arrows:
        p_rows[pid(*b)].add(pid(*a))
    q_rows = _disk_rows(coords, 4)
    for a, b in q_extra:
        q_rows[pid(*b)].add(pid(*a))
    for b, row in (q_override or {}).items():
        q_rows[pid(*b)] = {pid(*b), *(pid(*a) for a in row)}
    for a in coords:
        q_rows[a] |= p_rows[a]
    rel = {"1.01": [(a, b) for a, row in p_rows.items() for b in row],
           "2.01": [(a, b) for a, row in q_rows.items() for b in row]}
    return build_relation_space(list(coords), rel, [("1.01", "2.01")], coords)


def _chain(*pts):
    return list(zip(pts, pts[1:]))


def pq_nonstraight_example():
    """Reconstruction of the non-(p, q)-straight example, x = (5,6).

    An arrow a -> b puts b in CL_1^p(a); q joins points at distance <= 2 plus
    the links (7,6) -> (8,8) and (1,6) -> (6,6).  The printed sets list (2,3)
    in both A_1 and B_1 and (5,4) in both C_1 and tr_p(x); this fixture keeps
    (2,3) in B_1 and (5,4) in tr_p(x), and matches every other printed set.
    The long q-link from (1,6) breaks (p, q)-straightness: seen from (1,6),
    (6,6) is one p-track after (5,6) but one q-track before it.
    """
    coords = [(1, 6), (2, 3), (2, 6), (3, 4), (3, 6), (4, 6), (5, 2), (5, 3), (5, 4),
              (5, 5), (5, 6), (5, 8), (5, 9), (5, 10), (6, 6), (7, 6), (8, 6), (8, 8),
              (9, 6), (9, 8), (9, 10), (10, 8), (10, 9), (10, 10)]
    arrows = (_chain((1, 6), (2, 6), (3, 6), (4, 6), (5, 6), (6, 6), (7, 6), (8, 6), (9, 6))
              + _chain((5, 6), (5, 5), (5, 4)) + _chain((5, 2), (5, 3), (5, 4))
              + _chain((5, 10), (5, 9), (5, 8))
              + _chain((9, 8), (10, 8), (10, 9), (10, 10)) + _chain((9, 10), (10, 10)))
    extra = [((7, 6), (8, 8)), ((8, 8), (7, 6)), ((1, 6), (6, 6))]
    return _pq_example(coords, arrows, extra)


def pq_straight_example():
    """Reconstruction of the (p, q)-straight example, x = (5,6).

    p arrows run outward from x along the row and down the column, plus the
    lines (5,8) -> (5,10), (9,10) -> (11,11), (10,3) -> (13,4) and
    (13,1) -> (10,2).  q joins points at distance <= 2, plus the links
    (9,6) -> (10,3) and (5,10) -> (9,10); (2,3) is reached only from (10,1).
    Reproduces tr_p(x), k_1 = 2, A_1, port_p(A_1), B_1, C_1 and
    D = q-Track_3(x) = {(9,10), (10,3)} with p-track counts 4 and 5.
    """
    coords = [(1, 6), (2, 6), (3, 6), (4, 6), (5, 2), (5, 3), (5, 4), (5, 5), (5, 6),
              (6, 6), (7, 6), (8, 6), (9, 6), (3, 4), (5, 8), (5, 9), (5, 10),
              (2, 3), (9, 10), (10, 10), (11, 10), (11, 11), (12, 11), (13, 1), (12, 1),
              (11, 1), (10, 1), (10, 2), (10, 3), (11, 3), (12, 3), (12, 4), (13, 4)]
    arrows = (_chain((5, 6), (4, 6), (3, 6), (2, 6), (1, 6))
              + _chain((5, 6), (6, 6), (7, 6), (8, 6), (9, 6))
              + _chain((5, 6), (5, 5), (5, 4), (5, 3), (5, 2))
              + _chain((5, 8), (5, 9), (5, 10))
              + _chain((9, 10), (10, 10), (11, 10), (11, 11))
              + _chain((10, 3), (11, 3), (12, 3), (12, 4), (13, 4))
              + _chain((13, 1), (12, 1), (11, 1), (10, 1), (10, 2)))
    extra = [((9, 6), (10, 3)), ((5, 10), (9, 10))]
    return _pq_example(coords, arrows, extra, {(2, 3): [(10, 1)]})
