import hypothesis.strategies as st
from hypothesis import settings

from prenichols.braiding import BraidMatrix
from prenichols.freealg import NCPoly
from prenichols.scalar import Cyc, root

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

CONDUCTORS = (1, 2, 3, 4, 5, 6, 8, 12)


@st.composite
def cyc(draw, conductors=CONDUCTORS, nonzero=False):
    n = draw(st.sampled_from(conductors))
    k = draw(st.integers(0, 3))
    total = Cyc(0)
    for _ in range(k + 1):
        c = draw(st.integers(-3, 3))
        total = total + root(n, draw(st.integers(0, n - 1))) * c
    if nonzero and total.is_zero():
        total = root(n, 1)
    return total


@st.composite
def roots(draw, conductors=(2, 3, 4, 5, 6, 8, 12)):
    n = draw(st.sampled_from(conductors))
    return root(n, draw(st.integers(0, n - 1)))


@st.composite
def braidings(draw, theta=None, conductors=(2, 3, 4, 5, 6, 8)):
    t = theta or draw(st.integers(1, 3))
    rows = [[draw(roots(conductors)) for _ in range(t)] for _ in range(t)]
    return BraidMatrix.from_rows(rows)


@st.composite
def polys(draw, theta, max_len=3, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        w = tuple(draw(st.lists(st.integers(1, theta), min_size=0, max_size=max_len)))
        terms[w] = draw(st.integers(-2, 2))
    return NCPoly(theta, terms)


# acceptance criteria report their verdicts here; printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
