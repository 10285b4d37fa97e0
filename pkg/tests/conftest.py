from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weakchordal import Graph  # noqa: E402


def one_based(*pairs):
    return [(a - 1, b - 1) for a, b in pairs]


# Arbitrary graph whose triangulation needs exactly one fill edge {3, 4};
# vertices 1 and 5 tie at minimum degree.
SINGLE_FILL_EDGES = [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5)]

# C5 on v1..v5 plus v6 joined to v1, v4, v5 (stored 0-based).
HOLE_EXAMPLE_EDGES = one_based((1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 4), (6, 5))

# Triangular prism: triangles v1v2v3 and v4v5v6, matched v1-v6, v2-v5, v3-v4.
PRISM_EXAMPLE_EDGES = one_based((1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (4, 6), (5, 6))
PRISM_EXAMPLE_QUEUE = one_based((1, 5), (2, 4), (1, 4))


@pytest.fixture
def single_fill_graph() -> Graph:
    return Graph(6, SINGLE_FILL_EDGES)


@pytest.fixture
def hole_example() -> Graph:
    return Graph(6, HOLE_EXAMPLE_EDGES)


@pytest.fixture
def prism_example() -> tuple[Graph, list[tuple[int, int]]]:
    h = Graph(6, PRISM_EXAMPLE_EDGES)
    for e in PRISM_EXAMPLE_QUEUE:
        h.add_edge(*e)
    return h, list(PRISM_EXAMPLE_QUEUE)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
