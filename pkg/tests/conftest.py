import random

import pytest
from hypothesis import strategies as st

from skeinlab.extalg import Fermion


@pytest.fixture
def rng():
    return random.Random(1234)


@st.composite
def fermions_st(draw, n, max_terms=4, max_degree=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        bits = draw(st.sets(st.integers(0, 2 * n - 1), max_size=min(max_degree, 2 * n)))
        key = sum(1 << b for b in bits)
        terms[key] = terms.get(key, 0) + draw(st.integers(-3, 3))
    return Fermion(n, terms)


@st.composite
def perms_st(draw, n):
    return tuple(draw(st.permutations(range(1, n + 1))))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
