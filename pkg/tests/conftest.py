from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from partplan.graph import build_graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def instances(draw, max_n: int = 7, max_m: int | None = None):
    """A random simple graph with a random F subset."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m or len(pairs))) if pairs else []
    flags = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    return build_graph(n, edges, flags)


@pytest.fixture
def acceptance_line():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
