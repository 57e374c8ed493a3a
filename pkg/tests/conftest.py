import os
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hchromatic.graphs import Graph

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=15, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=5, loops=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    looped = []
    if loops:
        looped = [v for v, b in enumerate(draw(st.lists(st.booleans(), min_size=n, max_size=n))) if b]
    return Graph.from_edges(n, [e for e, b in zip(pairs, mask) if b], looped)


@pytest.fixture
def data_dir():
    return DATA


# acceptance criteria report one line each at the end of the run
CRITERIA: dict[int, tuple[str, str]] = {}


def record_criterion(number: int, passed: bool, detail: str):
    CRITERIA[number] = ("PASS" if passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        status, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")
