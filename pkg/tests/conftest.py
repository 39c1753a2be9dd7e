import pytest
from hypothesis import strategies as st

from thins.rel import Carrier, Per, Rel, TypeSig, sig

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def relations(draw, src=None, tgt=None, max_size=3):
    a = src if src is not None else draw(st.integers(1, max_size))
    b = tgt if tgt is not None else draw(st.integers(1, max_size))
    s = sig(a) if a == b else sig(a, b)
    rows = draw(st.lists(st.integers(0, (1 << b) - 1), min_size=a, max_size=a))
    return Rel(s, rows)


@st.composite
def pers(draw, n=None, max_size=4):
    n = n if n is not None else draw(st.integers(0, max_size))
    c = Carrier("A", n)
    labels = draw(st.lists(st.integers(-1, n - 1), min_size=n, max_size=n)) if n else []
    # element a belongs to class labels[a]; -1 leaves it outside the domain
    rows = [sum(1 << b for b in range(n) if labels[b] == labels[a]) if labels[a] >= 0 else 0
            for a in range(n)]
    return Per(TypeSig(c, c), rows)


@pytest.fixture
def s22():
    return sig(2)
