import pytest
from hypothesis import strategies as st

from bihochster.complex import face, from_facets

GLUED_TRIANGLES_FACETS = [{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}]
RP2_FACETS = [[1, 2, 5], [1, 2, 6], [1, 3, 4], [1, 3, 6], [1, 4, 5],
              [2, 3, 4], [2, 3, 5], [2, 4, 6], [3, 5, 6], [4, 5, 6]]


@pytest.fixture
def glued_triangles():
    return from_facets(4, GLUED_TRIANGLES_FACETS)


@pytest.fixture
def rp2():
    return from_facets(6, RP2_FACETS)


@st.composite
def complexes(draw, min_m=1, max_m=5):
    m = draw(st.integers(min_m, max_m))
    facets = draw(st.lists(st.integers(0, (1 << m) - 1), max_size=6))
    return from_facets(m, facets)


# acceptance criteria lines, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["face", "complexes", "ACCEPTANCE_LINES", "GLUED_TRIANGLES_FACETS", "RP2_FACETS"]
