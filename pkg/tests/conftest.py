from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from p5hom.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    nbits = n * (n - 1) // 2
    code = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1))
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def random_graphs(count: int, max_n: int, seed: int, min_n: int = 1):
    """Deterministic stream of random graphs for oracle-equivalence runs."""
    rng = random.Random(f"testcorpus:{count}:{max_n}:{seed}")
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice([0.1, 0.25, 0.5, 0.75, 0.9])
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        out.append(Graph(n, rows))
    return out


@pytest.fixture(scope="session")
def small_random_graphs():
    return random_graphs(300, 9, seed=7)
