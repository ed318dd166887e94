"""Hypothesis-driven checks on small generated spaces."""

from hypothesis import given, settings, strategies as st

from typedtopo import (TypedSpace, cl1, index_inverse, index_roundtrip, is_type_p_connected,
                       surgery, surgery_eligible, tr, tracks)
from typedtopo import oracles


@st.composite
def spaces(draw, max_points=10):
    n = draw(st.integers(1, max_points))
    ids = list(range(n))
    rows = {x: {x} | set(draw(st.lists(st.sampled_from(ids), max_size=3))) for x in ids}
    return TypedSpace(ids, ["p"], {"p": rows})


@st.composite
def space_and_seed(draw):
    s = draw(spaces())
    A = draw(st.sets(st.sampled_from(list(s.points)), min_size=1, max_size=3))
    return s, A


@settings(max_examples=300, deadline=None)
@given(space_and_seed())
def test_tr_fixed_point(case):
    s, A = case
    t = tr(s, A, "p")
    assert cl1(s, t, "p") == t == oracles.tr(s, A, "p")
    assert [frozenset(x) for x in tracks(s, A, "p").tracks] == oracles.tracks(s, A, "p")


@settings(max_examples=300, deadline=None)
@given(space_and_seed())
def test_connectivity_matches_bipartitions(case):
    s, A = case
    assert is_type_p_connected(s, A, "p")[0] == oracles.is_type_p_connected(s, A, "p")


@settings(max_examples=300, deadline=None)
@given(spaces(), st.data())
def test_surgery_contract(s, data):
    if len(s) < 2:
        return
    z, y = data.draw(st.lists(st.sampled_from(list(s.points)), min_size=2, max_size=2, unique=True))
    if not surgery_eligible(s, z, y, "p"):
        return
    s2, _ = surgery(s, z, y, "p", check=False)
    ty, tz = tr(s, y, "p"), tr(s, z, "p")
    assert tr(s2, y, "p") == ty
    assert not tr(s2, y, "p") & tr(s2, z, "p")
    assert tr(s2, y, "p") | tr(s2, z, "p") == ty | tz


@settings(max_examples=500, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=1, max_size=8).map(sorted), st.data())
def test_roundtrip(iseq, data):
    if iseq[-1] == 0:
        return
    k = data.draw(st.integers(0, iseq[-1] - 1))
    assert index_inverse(index_roundtrip(k, iseq), iseq) == k
