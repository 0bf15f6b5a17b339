import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from powergraph.catalog import default_catalog  # noqa: E402
from powergraph.graphs import Graph  # noqa: E402
from powergraph.groups import make_group  # noqa: E402

# Figure: power graph of the dihedral group of order 12, vertices v1..v12 (here 0..11)
FIGURE_EDGES = [(1, j) for j in range(2, 13)] + [
    (9, 10), (9, 11), (10, 12), (11, 12), (10, 11), (9, 12), (8, 11), (8, 12),
]
FIGURE_DOTTED = [(8, 9), (8, 10)]
# element index in make_group(dihedral 6) for each figure vertex v1..v12:
# e, the six reflections, r^3, r^2, r^4, r, r^5
FIGURE_TO_D6 = [0, 6, 7, 8, 9, 10, 11, 3, 2, 4, 1, 5]


def figure_graph():
    return Graph.from_edges(12, [(a - 1, b - 1) for a, b in FIGURE_EDGES])


@pytest.fixture(scope="session")
def catalog():
    return default_catalog(48)


@pytest.fixture(scope="session")
def catalog_groups(catalog):
    return [(entry, make_group(entry.spec)) for entry in catalog]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    verdicts = getattr(module, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.write_line(line)
