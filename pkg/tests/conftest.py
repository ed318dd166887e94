import random

import pytest

from typedtopo import TypedSpace, build_metric_space
from typedtopo.datasets import labelled


def random_relation_space(rng, n=None, density=None, types=("p",)):
    """Random least neighborhoods over ids 0..n-1; a later type contains the
    earlier one so the declared chain order holds."""
    n = n or rng.randint(1, 12)
    density = rng.uniform(0.05, 0.45) if density is None else density
    ids = list(range(n))
    umin, prev = {}, None
    for t in types:
        rows = {}
        for x in ids:
            row = {x} | {y for y in ids if rng.random() < density}
            if prev is not None:
                row |= prev[x]
            rows[x] = row
        umin[t] = rows
        prev = rows
    order = list(zip(types, types[1:]))
    return TypedSpace(ids, list(types), umin, order)


def random_metric_space(rng, n=None, radii=("1.5",)):
    n = n or rng.randint(1, 12)
    pts = set()
    while len(pts) < n:
        pts.add((rng.randint(0, 6), rng.randint(0, 6)))
    return build_metric_space(labelled(sorted(pts)), radii)


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
