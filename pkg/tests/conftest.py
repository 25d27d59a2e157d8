from __future__ import annotations

import pytest
from hypothesis import strategies as st

from genladder.formats import RunConfig, random_instance
from genladder.ladder import GeneralizedLadder, new_ladder
from genladder.rng import SplitMix64

SAMPLE_EDGES = [
    (1, 5), (2, 6), (3, 3), (3, 4), (4, 2), (5, 9), (5, 7), (6, 10), (6, 11), (7, 1),
    (8, 3), (8, 5), (9, 11), (9, 13), (10, 12), (11, 12), (12, 6), (13, 7), (14, 10), (15, 8),
]  # fmt: skip

FIX = {
    "LADDER": new_ladder(3, 3, [(1, 1), (2, 2), (3, 3)]),
    "FAN": new_ladder(3, 3, [(1, 3), (2, 2), (3, 1)]),
    "K4": new_ladder(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)]),
    "K33": new_ladder(3, 3, [(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)]),
    "SAMPLE": new_ladder(15, 13, SAMPLE_EDGES),
}


@pytest.fixture
def fix() -> dict[str, GeneralizedLadder]:
    return FIX


def seeded_instances(seed: int, count: int, max_m: int, max_n: int, max_k: int):
    """Deterministic stream of random ladders with sizes drawn uniformly."""
    rng = SplitMix64(seed)
    for _ in range(count):
        m, n = rng.between(1, max_m), rng.between(1, max_n)
        k = rng.between(0, min(max_k, m * n))
        yield random_instance(RunConfig(seed=rng.next_u64()), m, n, k)


@st.composite
def ladders(draw, max_m: int = 8, max_n: int = 8, max_k: int = 16) -> GeneralizedLadder:
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    cells = draw(st.sets(st.tuples(st.integers(1, m), st.integers(1, n)), max_size=max_k))
    return new_ladder(m, n, cells)


# ---------------------------------------------------------------------------
# Acceptance summary: one line per criterion at the end of the run
# ---------------------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
