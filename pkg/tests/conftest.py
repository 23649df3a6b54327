import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from klein import ALL_SPACES, Classification, Multivector, classify, line, point

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SIGNATURES = [sp.signature.sigma for sp in ALL_SPACES]

coefficient = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)
multivectors = st.lists(coefficient, min_size=8, max_size=8).map(Multivector)
spaces = st.sampled_from(ALL_SPACES)


def graded(k):
    masks = {0: [0], 1: [1, 2, 3], 2: [4, 5, 6], 3: [7]}

    def build(values):
        c = [0.0] * 8
        for idx, v in zip(masks[k], values):
            c[idx] = v
        return Multivector(c)

    return st.lists(coefficient, min_size=len(masks[k]), max_size=len(masks[k])).map(build)


vectors = graded(1)
bivectors = graded(2)


def random_proper_point(rng, space, box=2.0):
    while True:
        p = point(*rng.uniform(-box, box, 2))
        if classify(p, space) is Classification.PROPER:
            return p


def random_proper_line(rng, space, box=2.0):
    while True:
        a = line(*rng.uniform(-box, box, 3))
        if classify(a, space) is Classification.PROPER:
            return a


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# acceptance reporting: test_acceptance stores one line per criterion here
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
