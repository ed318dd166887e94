"""Acceptance criteria, one check per criterion.

Each check records PASS or FAIL with a short detail line; the lines are
printed at the end of the pytest run (see conftest.py) and also when this
file is run directly with ``python3 tests/test_acceptance.py``.
"""

import json
import random
import sys
import time
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from typedtopo import (cl1, cln, compare_with_tr, component, diff_branches, enumerate_branches,
                       full_extension, index_inverse, index_roundtrip, is_closure_connected,
                       is_straight, is_type_p_connected, is_uniformly_typed, separation_surgeries,
                       straighten, surgery, surgery_eligible, surrounding_tree, tr,
                       track_components, tracks)
from typedtopo import oracles
from typedtopo.datasets import nonuniform8, straightness_fixture, x4, x5, x48
from typedtopo.io import dumps, space_to_json

from conftest import random_metric_space, random_relation_space

PAPER = HERE.parent / "fixtures" / "paper"
REGRESSIONS = HERE / "regressions"
O = "(0,4)"
P_OUT = {"(2,3)", "(0,7)", "(1,7)", "(1,8)", "(2,8)", "(3,8)", "(3,11)", "(4,8)", "(4,11)"}
Q_OUT = {"(0,7)", "(3,11)", "(4,11)"}

RESULTS = {}
TITLES = {
    1: "track table reproduction",
    2: "track component partitions",
    3: "cluster membership",
    4: "branch enumeration",
    5: "uniform-typing findings",
    6: "straightness",
    7: "small-example connectedness",
    8: "property suites",
    9: "indexing",
}


def _golden(name):
    return json.loads((PAPER / name).read_text())


def _record(n, ok, detail):
    RESULTS[n] = (ok, detail)
    return ok


def summary_lines():
    out = []
    for n in sorted(TITLES):
        if n not in RESULTS:
            continue
        ok, detail = RESULTS[n]
        out.append(f"criterion {n} ({TITLES[n]}): {'PASS' if ok else 'FAIL'} - {detail}")
    return out


def _archive(name, space, **extra):
    REGRESSIONS.mkdir(exist_ok=True)
    data = {"space": space_to_json(space), **extra}
    (REGRESSIONS / f"{name}.json").write_text(dumps(data))


# -- checks ---------------------------------------------------------------

def check_1():
    t0 = time.perf_counter()
    X = x48()
    problems = []
    for p, nonempty in (("left-1", 18), ("left-2", 9)):
        got = [set(t) for t in tracks(X, O, p).as_lists()]
        want = [set(t) for t in _golden(f"x48_{p}.tracks.json")["tracks"]]
        if len(got) - 1 != nonempty:
            problems.append(f"{p}: {len(got) - 1} nonempty tracks")
        for i, (a, b) in enumerate(zip(got, want)):
            if a != b:
                problems.append(f"{p} row {i}: extra {sorted(a - b)} missing {sorted(b - a)}")
        if len(got) != len(want):
            problems.append(f"{p}: {len(got)} rows vs {len(want)} printed")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1:
        problems.append(f"took {elapsed:.3f} s")
    return _record(1, not problems, "; ".join(problems) or f"18 + 9 tracks set-equal in {elapsed:.3f} s")


def check_2():
    X = x48()
    problems = []
    for p in ("left-1", "left-2"):
        got = track_components(X, O, p)
        want = _golden(f"x48_{p}.components.json")["components"]
        for i, (a, b) in enumerate(zip(got.as_lists(), want)):
            if {frozenset(c) for c in a} != {frozenset(c) for c in b}:
                problems.append(f"{p} row {i}: {a} vs printed {b}")
    p9 = track_components(X, O, "left-1")[9]
    q6 = track_components(X, O, "left-2")[6]
    if not (len(p9) == 4 and all(len(c) == 1 for c in p9)):
        problems.append("p row 9 is not four singletons")
    if not (len(q6) == 3 and all(len(c) == 2 for c in q6)):
        problems.append("q row 6 is not three pairs")
    return _record(2, not problems, "; ".join(problems) or "every printed split reproduced")


def check_3():
    X = x48()
    pts = set(X.points)
    a, b = pts - tr(X, O, "left-1"), pts - tr(X, O, "left-2")
    ok = a == P_OUT and b == Q_OUT
    return _record(3, ok, "exclusion lists exact" if ok else f"left-1 excludes {sorted(a)}, left-2 {sorted(b)}")


def check_4():
    X = x48()
    problems = []
    counts = []
    for p, n in (("left-1", 6), ("left-2", 7)):
        found = enumerate_branches(X, O, p)
        counts.append(len(found))
        if len(found) != n:
            problems.append(f"{p}: {len(found)} branches, expected {n}")
        diff = diff_branches(found, _golden(f"branches_{p}.json")["branches"])
        if diff["missing"] or diff["extra"]:
            problems.append(f"{p} diff {json.dumps(diff)}")
    return _record(4, not problems, "; ".join(problems) or
                   f"{counts[0]} and {counts[1]} branches, level sets equal to the printed lists")


def check_5():
    X = x48()
    problems = []
    left = is_uniformly_typed(X, O, "left-1", "left-2").violations
    if left != [(5, 2), (5, 3), (7, 3), (7, 4), (9, 4), (9, 5)]:
        problems.append(f"left pair violations {left}")
    if not is_uniformly_typed(X, O, "up-left-1", "up-left-2").uniform:
        problems.append("up-left pair not uniform")
    s = nonuniform8()
    rep = is_uniformly_typed(s, "(0,0)", "1.01", "3.01")
    q = tracks(s, "(0,0)", "3.01").level()
    p4 = tracks(s, "(0,0)", "1.01")[4]
    if rep.uniform or p4 != {"(0,2)", "(4,0)"} or (q["(0,2)"], q["(4,0)"]) != (1, 2):
        problems.append(f"8-point set: {rep.violations}")
    return _record(5, not problems, "; ".join(problems) or
                   "left pair (5,2/3),(7,3/4),(9,4/5); up-left uniform; 8-point witness (0,2)/(4,0)")


def check_6():
    problems = []
    rep = is_straight(x48(), O, "left-1")
    if not rep.straight:
        problems.append("X48 left-1 has violations " +
                        ", ".join(f"({v.y} in Track_{v.i}, {v.z} in Track_{v.j})" for v in rep.violations))
    f = straightness_fixture()
    rep = is_straight(f, "x", "p")
    if rep.straight or [(v.y, v.z) for v in rep.violations] != [("z", "x4")]:
        problems.append(f"F1a violations {rep.violations}")
    f2, _ = straighten(f, "x", "p")
    if not is_straight(f2, "x", "p").straight:
        problems.append("F1a still not straight after straighten")
    return _record(6, not problems, "; ".join(problems) or
                   "X48 left-1 straight; F1a witness (z, x4); straight after straighten")


def check_7():
    s = x4(radii=("1", "1.2"))
    s5 = x5()
    got = (is_type_p_connected(s, s.points, "1.2")[0], is_type_p_connected(s, s.points, "1")[0],
           is_type_p_connected(s5, s5.points, "1.414213562373095")[0])
    ok = got == (True, False, True)
    return _record(7, ok, f"X4@1.2={got[0]}, X4@1.0={got[1]}, X5@sqrt2={got[2]}")


def _suite_tr(rng):
    for t in range(1000):
        s = random_relation_space(rng, types=("p", "q"))
        pts = list(s.points)
        A = set(rng.sample(pts, rng.randint(1, min(3, len(pts)))))
        T = tr(s, A, "p")
        if tr(s, T, "p") != T or T != oracles.tr(s, A, "p"):
            return s, {"A": sorted(A, key=str)}
        if is_type_p_connected(s, A, "p")[0]:
            for B in (cl1(s, A, "p"), cln(s, A, "p", 2), T):
                if not is_type_p_connected(s, B, "p")[0]:
                    return s, {"A": sorted(A, key=str)}
        x = rng.choice(pts)
        c = component(s, x, "p")
        if cl1(s, c, "p") != c or tr(s, c, "p") != c or not is_type_p_connected(s, c, "p")[0]:
            return s, {"x": x}
    return None


def _suite_symmetric(rng):
    for _ in range(1000):
        s = random_metric_space(rng, radii=(rng.choice(["1.1", "1.5", "2.3"]),))
        p = next(iter(s.types))
        x = rng.choice(list(s.points))
        T = tr(s, x, p)
        if any(x not in cl1(s, {y}, p) for y in cl1(s, {x}, p)):
            return s, {"x": x, "part": 1}
        if component(s, x, p) != T:
            return s, {"x": x, "part": 2}
        if any(tr(s, y, p) != T for y in T):
            return s, {"x": x, "part": 3}
        rep = compare_with_tr(s, p, 1, x)
        if not rep.free_equal:
            return s, {"x": x, "part": "dbscan"}
    for s in (x4(radii=("1", "1.2")), x5()):
        for p in s.types:
            for x in s.points:
                if component(s, x, p) != tr(s, x, p):
                    return s, {"x": x, "p": p}
    return None


def _suite_surgery(rng):
    done = 0
    while done < 1000:
        s = random_relation_space(rng, n=rng.randint(2, 12))
        z, y = rng.sample(list(s.points), 2)
        if not surgery_eligible(s, z, y, "p"):
            continue
        done += 1
        s2, _ = surgery(s, z, y, "p", check=False)
        ty, tz = tr(s, y, "p"), tr(s, z, "p")
        ny, nz = tr(s2, y, "p"), tr(s2, z, "p")
        if ny != ty or ny & nz or ny | nz != ty | tz:
            return s, {"z": z, "y": y}
    return None


def _suite_ss(rng):
    done = 0
    while done < 1000:
        s = random_relation_space(rng, n=rng.randint(3, 12))
        seq = [rng.choice(list(s.points)) for _ in range(3)]
        s2, log = separation_surgeries(s, seq, "p", check=False)
        if log.notes:
            continue
        done += 1
        live = list(dict.fromkeys(seq))
        for a in live:
            for b in live:
                if a != b and tr(s2, a, "p") & tr(s2, b, "p"):
                    return s, {"seq": seq}
    return None


def _suite_tree(rng):
    done = 0
    while done < 1000:
        s = random_relation_space(rng, n=rng.randint(2, 12))
        pts = list(s.points)
        D = set(rng.sample(pts, rng.randint(2, min(5, len(pts)))))
        D = {d for d in D if not any(d in tr(s, e, "p") for e in D - {d})}
        if len(D) < 2 or not is_closure_connected(s, D, "p"):
            continue
        done += 1
        d0 = sorted(D, key=str)[0]
        tree, s2, _ = surrounding_tree(s, D, d0, "p", check=False)
        before = tr(s, D, "p")
        after = {d: tr(s2, d, "p") for d in D}
        if (sorted(tree.nodes, key=str) != sorted(D, key=str)
                or frozenset().union(*after.values()) != before
                or any(after[a] & after[b] for a in D for b in D if a != b)):
            return s, {"D": sorted(D, key=str), "root": d0}
    return None


def _suite_bipartition(rng):
    for _ in range(1000):
        s = random_relation_space(rng, n=rng.randint(1, 8))
        A = rng.sample(list(s.points), rng.randint(1, len(s.points)))
        if is_type_p_connected(s, A, "p")[0] != oracles.is_type_p_connected(s, A, "p"):
            return s, {"A": sorted(A, key=str)}
    return None


SUITES = {
    "closure": _suite_tr, "symmetric": _suite_symmetric, "surgery": _suite_surgery,
    "separation": _suite_ss, "tree": _suite_tree, "bipartition": _suite_bipartition,
}


def check_8():
    failed = []
    for k, (name, suite) in enumerate(SUITES.items()):
        hit = suite(random.Random(1000 + k))
        if hit is not None:
            space, extra = hit
            _archive(f"counterexample-{name}", space, **{str(a): b for a, b in extra.items()})
            failed.append(name)
    return _record(8, not failed, f"counterexamples in {failed} (archived under tests/regressions)"
                   if failed else f"{len(SUITES)} suites x 1000 random spaces, zero counterexamples")


def check_9():
    t0 = time.perf_counter()
    rng = random.Random(9)
    bad = 0
    for _ in range(100_000):
        iseq = sorted(rng.randint(0, 40) for _ in range(rng.randint(1, 6)))
        if iseq[-1] == 0:
            iseq[-1] = 1
        k = rng.randrange(iseq[-1])
        if index_inverse(index_roundtrip(k, iseq), iseq) != k:
            bad += 1
    X = x48()
    ext = full_extension(X, O, "up-left-1", "up-left-2")
    trq = tr(X, O, "up-left-2")
    covered = set(ext.index.entries) == trq and len(ext.index) == len(trq)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and covered and elapsed < 5
    return _record(9, ok, f"{bad} round-trip failures in 1e5; coverage {len(ext.index)}/{len(trq)} "
                   f"in {len(ext.stages)} stages; {elapsed:.2f} s")


CHECKS = {n: globals()[f"check_{n}"] for n in TITLES}


@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n):
    assert CHECKS[n](), RESULTS[n][1]


def test_archived_regressions_stay_fixed():
    from typedtopo.io import space_from_json
    for path in sorted(REGRESSIONS.glob("*.json")) if REGRESSIONS.exists() else []:
        data = json.loads(path.read_text())
        space = space_from_json(data["space"])
        assert len(space) >= 1


if __name__ == "__main__":
    for n in sorted(CHECKS):
        try:
            CHECKS[n]()
        except Exception as exc:  # report and move on
            _record(n, False, f"{type(exc).__name__}: {exc}")
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
